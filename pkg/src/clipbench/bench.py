"""Deterministic clipping benchmark harness and report rendering.

The same seeded segment stream is replayed for every algorithm and every
repetition, so everything in a report except the wall-clock ``seconds``
is bit-identical across runs and platforms.  Timing covers the clip
calls only: segments are materialized into a buffer before the timer
starts and results are folded into a checksum after it stops.
One warm-up repetition runs first and is discarded.
"""

from __future__ import annotations

import json
import struct
import time
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, ROUND_HALF_UP, Decimal
from hashlib import blake2b

from .clippers import KERNELS, REPORT_COLUMN_ORDER, AlgorithmId
from .geom import ClipWindow, Point2, Segment

__all__ = [
    "MASK64",
    "next_u64",
    "gen_segment",
    "BenchConfig",
    "RunTiming",
    "BenchReport",
    "run_bench",
    "build_report",
    "mean_seconds",
    "speedup_percent",
    "render_report",
    "parse_report",
    "CHUNK_SIZE",
]

MASK64 = (1 << 64) - 1
_TWO64 = float(2**64)

# Buffers are capped so a ten-million-line run never holds more than one
# chunk of segments at a time; the timer accumulates across chunks.
CHUNK_SIZE = 1_000_000


def next_u64(state: int) -> tuple[int, int]:
    """One splitmix64 step: returns (output, new state).

    Fixed published constants, so streams are bit-identical across
    languages and platforms for the same seed.
    """
    state = (state + 0x9E3779B97F4A7C15) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31), state


def gen_segment(state: int, space: ClipWindow) -> tuple[Segment, int]:
    """Draw one segment: four u64 values in order (x1, y1, x2, y2), each
    mapped as coordinate = lo + (u / 2^64) * (hi - lo) in double arithmetic."""
    u, state = next_u64(state)
    x1 = space.xmin + (u / _TWO64) * (space.xmax - space.xmin)
    u, state = next_u64(state)
    y1 = space.ymin + (u / _TWO64) * (space.ymax - space.ymin)
    u, state = next_u64(state)
    x2 = space.xmin + (u / _TWO64) * (space.xmax - space.xmin)
    u, state = next_u64(state)
    y2 = space.ymin + (u / _TWO64) * (space.ymax - space.ymin)
    return Segment(Point2(x1, y1), Point2(x2, y2)), state


def _materialize(state: int, space: ClipWindow, count: int):
    """Buffer of ``count`` coordinate tuples, same stream as gen_segment."""
    xlo = space.xmin
    ylo = space.ymin
    xspan = space.xmax - space.xmin
    yspan = space.ymax - space.ymin
    nxt = next_u64
    buf = []
    append = buf.append
    for _ in range(count):
        u, state = nxt(state)
        ax = xlo + (u / _TWO64) * xspan
        u, state = nxt(state)
        ay = ylo + (u / _TWO64) * yspan
        u, state = nxt(state)
        bx = xlo + (u / _TWO64) * xspan
        u, state = nxt(state)
        by = ylo + (u / _TWO64) * yspan
        append((ax, ay, bx, by))
    return buf, state


_DEFAULT_SPACE = ClipWindow(-960.0, -720.0, 960.0, 720.0)
_DEFAULT_WINDOW = ClipWindow(-100.0, -75.0, 100.0, 75.0)


@dataclass(frozen=True)
class BenchConfig:
    """Benchmark protocol parameters.

    Defaults reproduce the reference protocol: segments drawn uniformly
    over a 1920x1440 space centered on a 200x150 window, one million
    lines per run, ten recorded repetitions.
    """

    space: ClipWindow = _DEFAULT_SPACE
    window: ClipWindow = _DEFAULT_WINDOW
    lines_per_run: int = 1_000_000
    repetitions: int = 10
    seed: int = 1
    algorithms: tuple[AlgorithmId, ...] = REPORT_COLUMN_ORDER

    def __post_init__(self) -> None:
        if self.lines_per_run < 1:
            raise ValueError("lines_per_run must be >= 1")
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")
        if not (0 <= self.seed <= MASK64):
            raise ValueError("seed must fit in 64 bits")
        w, s = self.window, self.space
        if not (s.xmin <= w.xmin and w.xmax <= s.xmax and s.ymin <= w.ymin and w.ymax <= s.ymax):
            raise ValueError("window must be contained in the generation space")
        if not self.algorithms:
            raise ValueError("at least one algorithm is required")
        if len(set(self.algorithms)) != len(self.algorithms):
            raise ValueError("duplicate algorithms in config")


@dataclass(frozen=True)
class RunTiming:
    """One timed pass of one algorithm over the full segment stream."""

    algorithm: AlgorithmId
    run_index: int
    seconds: float
    accepted_count: int
    checksum: int


@dataclass(frozen=True)
class BenchReport:
    config: BenchConfig
    timings: tuple[RunTiming, ...]
    averages: dict[str, float]
    speedups_vs_proposed: dict[str, float]


_PACK_INDEX = struct.Struct("<Q")
_PACK_COORDS = struct.Struct("<4d")


class _ResultFold:
    """Order-sensitive 64-bit digest over a stream of clip results.

    Accepts contribute their stream index and endpoint bit patterns;
    rejects contribute through the indices and the final length, so any
    accept/reject flip changes the digest.
    """

    __slots__ = ("_h", "_count", "accepted")

    def __init__(self) -> None:
        self._h = blake2b(digest_size=8)
        self._count = 0
        self.accepted = 0

    def update(self, results) -> None:
        h = self._h
        pack_index = _PACK_INDEX.pack
        pack_coords = _PACK_COORDS.pack
        base = self._count
        accepted = 0
        for i, r in enumerate(results):
            if r is not None:
                accepted += 1
                h.update(pack_index(base + i))
                h.update(pack_coords(*r))
        self._count = base + len(results)
        self.accepted += accepted

    def digest(self) -> int:
        h = self._h.copy()
        h.update(_PACK_INDEX.pack(self._count))
        return int.from_bytes(h.digest(), "little")


def mean_seconds(values) -> float:
    """Arithmetic mean at full precision; rounding is display-only."""
    values = list(values)
    if not values:
        raise ValueError("mean of an empty sequence")
    return sum(values) / len(values)


def speedup_percent(proposed_avg: float, other_avg: float) -> float:
    """|other - proposed| / proposed * 100, the reference algorithm's
    average always in the denominator."""
    if proposed_avg <= 0:
        raise ValueError("reference average must be positive")
    return abs(other_avg - proposed_avg) / proposed_avg * 100.0


def build_report(config: BenchConfig, timings) -> BenchReport:
    timings = tuple(timings)
    expected = len(config.algorithms) * config.repetitions
    if len(timings) != expected:
        raise ValueError(f"expected {expected} timings, got {len(timings)}")
    averages = {
        algo.value: mean_seconds(t.seconds for t in timings if t.algorithm is algo)
        for algo in config.algorithms
    }
    speedups: dict[str, float] = {}
    if AlgorithmId.PROPOSED in config.algorithms:
        ref = averages[AlgorithmId.PROPOSED.value]
        speedups = {
            algo.value: speedup_percent(ref, averages[algo.value])
            for algo in config.algorithms
            if algo is not AlgorithmId.PROPOSED
        }
    return BenchReport(config, timings, averages, speedups)


def run_bench(config: BenchConfig) -> BenchReport:
    """Run the timed protocol: identical pre-materialized segment stream
    for every algorithm and repetition, one discarded warm-up first."""
    wx0, wy0, wx1, wy1 = config.window.bounds()
    kernels = [(algo, KERNELS[algo]) for algo in config.algorithms]
    n = config.lines_per_run
    single_chunk = n <= CHUNK_SIZE
    cached = _materialize(config.seed, config.space, n)[0] if single_chunk else None

    timings: list[RunTiming] = []
    perf = time.perf_counter
    for rep in range(config.repetitions + 1):  # rep 0 is the warm-up
        elapsed = {algo: 0.0 for algo in config.algorithms}
        folds = {algo: _ResultFold() for algo in config.algorithms}
        state = config.seed
        remaining = n
        while remaining:
            count = min(remaining, CHUNK_SIZE)
            if single_chunk:
                buf = cached
            else:
                buf, state = _materialize(state, config.space, count)
            for algo, kernel in kernels:
                t0 = perf()
                results = [
                    kernel(ax, ay, bx, by, wx0, wy0, wx1, wy1)
                    for ax, ay, bx, by in buf
                ]
                elapsed[algo] += perf() - t0
                folds[algo].update(results)
            remaining -= count
        if rep > 0:
            for algo in config.algorithms:
                fold = folds[algo]
                timings.append(
                    RunTiming(algo, rep, elapsed[algo], fold.accepted, fold.digest())
                )
    return build_report(config, timings)


# ---------------------------------------------------------------------------
# Rendering


def _fmt_seconds(value: float) -> str:
    # Run tables carry millisecond precision, so their means have at most
    # four meaningful decimals; quantizing there first drops binary
    # summation noise before the half-up display rounding.
    q = Decimal(repr(value)).quantize(Decimal("0.0001"), rounding=ROUND_HALF_EVEN)
    return str(q.quantize(Decimal("0.001"), rounding=ROUND_HALF_UP))


def render_report(report: BenchReport, fmt: str) -> str:
    """Serialize a report as csv, markdown or json."""
    fmt = fmt.lower()
    if fmt == "csv":
        return _render_csv(report)
    if fmt in ("md", "markdown"):
        return _render_markdown(report)
    if fmt == "json":
        return _render_json(report)
    raise ValueError(f"unknown report format: {fmt!r}")


def _render_csv(report: BenchReport) -> str:
    lines = ["algorithm,run,seconds,accepted,checksum"]
    for t in report.timings:
        lines.append(
            f"{t.algorithm.value},{t.run_index},{t.seconds!r},"
            f"{t.accepted_count},{t.checksum:016x}"
        )
    return "\n".join(lines) + "\n"


def _render_markdown(report: BenchReport) -> str:
    cfg = report.config
    # The markdown layout always uses the fixed column order, whatever
    # order the algorithms were requested in.
    algos = [a for a in REPORT_COLUMN_ORDER if a in cfg.algorithms]
    names = [a.value for a in algos]
    out = [
        "# Line clipping benchmark",
        "",
        "- timing covers the clip calls only; segment generation and any drawing are excluded",
        "- every repetition replays the identical seeded segment stream; all algorithms clip the same buffer",
        f"- lines per run: {cfg.lines_per_run}, repetitions: {cfg.repetitions}, seed: {cfg.seed}",
        f"- space: {cfg.space.bounds()}, window: {cfg.window.bounds()}",
        "",
        "| Exec. | " + " | ".join(names) + " |",
        "|" + "---|" * (len(names) + 1),
    ]
    by_algo_run = {(t.algorithm, t.run_index): t for t in report.timings}
    for run in range(1, cfg.repetitions + 1):
        cells = [_fmt_seconds(by_algo_run[(a, run)].seconds) for a in algos]
        out.append(f"| {run} | " + " | ".join(cells) + " |")
    avg_cells = [_fmt_seconds(report.averages[n]) for n in names]
    out.append("| Avg | " + " | ".join(avg_cells) + " |")
    if report.speedups_vs_proposed:
        speed_cells = [
            f"{report.speedups_vs_proposed[n]:.2f}" if n in report.speedups_vs_proposed else "-"
            for n in names
        ]
        out.append("| Speedup vs Proposed (%) | " + " | ".join(speed_cells) + " |")
    out.append("")
    out.append("| Algorithm | Accepted | Checksum |")
    out.append("|---|---|---|")
    for a in algos:
        t = by_algo_run[(a, 1)]
        out.append(f"| {a.value} | {t.accepted_count} | {t.checksum:016x} |")
    out.append("")
    return "\n".join(out)


def _render_json(report: BenchReport) -> str:
    cfg = report.config
    doc = {
        "config": {
            "space": list(cfg.space.bounds()),
            "window": list(cfg.window.bounds()),
            "lines_per_run": cfg.lines_per_run,
            "repetitions": cfg.repetitions,
            "seed": cfg.seed,
            "algorithms": [a.value for a in cfg.algorithms],
        },
        "timings": [
            {
                "algorithm": t.algorithm.value,
                "run": t.run_index,
                "seconds": t.seconds,
                "accepted": t.accepted_count,
                "checksum": t.checksum,
            }
            for t in report.timings
        ],
        "averages": report.averages,
        "speedups_vs_proposed": report.speedups_vs_proposed,
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_report(text: str) -> BenchReport:
    """Inverse of the json rendering; parse(render(r)) == r."""
    doc = json.loads(text)
    c = doc["config"]
    config = BenchConfig(
        space=ClipWindow(*c["space"]),
        window=ClipWindow(*c["window"]),
        lines_per_run=c["lines_per_run"],
        repetitions=c["repetitions"],
        seed=c["seed"],
        algorithms=tuple(AlgorithmId(v) for v in c["algorithms"]),
    )
    timings = tuple(
        RunTiming(
            AlgorithmId(t["algorithm"]),
            t["run"],
            t["seconds"],
            t["accepted"],
            t["checksum"],
        )
        for t in doc["timings"]
    )
    return BenchReport(config, timings, doc["averages"], doc["speedups_vs_proposed"])
