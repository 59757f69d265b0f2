"""Cross-checks of the seven clippers against the exact rational clipper
on a seeded random stream plus the adversarial suite, including pairwise
agreement and the corner-mask witness validation."""

import pytest

from clipbench.bench import _materialize
from clipbench.clippers import EDGE_TABLE, KERNELS, AlgorithmId
from clipbench.clippers.skala import clip_coords as skala_clip
from clipbench.geom import ClipWindow
from clipbench.oracle import clip_exact
from clipbench.verify import adversarial_segments, run_verification

SPACE = ClipWindow(-960.0, -720.0, 960.0, 720.0)
WINDOW = ClipWindow(-100.0, -75.0, 100.0, 75.0)


def test_random_sweep_and_adversarial_suite_have_no_mismatches():
    report = run_verification(5000, 1, SPACE, WINDOW)
    assert report.ok, [
        (c.algorithm.value, c.failures) for c in report.checks if c.mismatches
    ]
    for check in report.checks:
        assert check.matches + check.grazing_exempt == 5000 + report.adversarial_cases


def test_adversarial_suite_covers_the_stress_families():
    suite = adversarial_segments(WINDOW)
    assert len(suite) >= 40
    degenerate = [s for s in suite if s[0] == s[2] and s[1] == s[3]]
    vertical = [s for s in suite if s[0] == s[2] and s[1] != s[3]]
    horizontal = [s for s in suite if s[1] == s[3] and s[0] != s[2]]
    diagonal = [s for s in suite if s[0] != s[2] and s[1] != s[3]]
    assert degenerate and vertical and horizontal and diagonal
    on_boundary = [
        s
        for s in vertical + horizontal
        if s[0] in (WINDOW.xmin, WINDOW.xmax) or s[1] in (WINDOW.ymin, WINDOW.ymax)
    ]
    assert on_boundary  # boundary-collinear segments present


def test_pairwise_agreement_on_non_grazing_cases():
    buf, _ = _materialize(123, SPACE, 2000)
    cases = buf + adversarial_segments(WINDOW)
    bounds = WINDOW.bounds()
    disagreements = []
    for seg in cases:
        exact = clip_exact(seg, bounds)
        if exact.grazing:
            continue
        results = {a: KERNELS[a](*seg, *bounds) for a in AlgorithmId}
        flags = {r is not None for r in results.values()}
        if len(flags) != 1:
            disagreements.append((seg, results))
            continue
        accepted = [r for r in results.values() if r is not None]
        if accepted:
            first = accepted[0]
            for other in accepted[1:]:
                if any(abs(a - b) > 2e-9 for a, b in zip(first, other)):
                    disagreements.append((seg, results))
                    break
    assert not disagreements, disagreements[:3]


# ---------------------------------------------------------------------------
# Corner-sign mask witnesses

def _corner_mask(a, b, c, window):
    x0, y0, x1, y1 = window.bounds()
    mask = 0
    if a * x0 + b * y0 + c >= 0:
        mask |= 1
    if a * x1 + b * y0 + c >= 0:
        mask |= 2
    if a * x1 + b * y1 + c >= 0:
        mask |= 4
    if a * x0 + b * y1 + c >= 0:
        mask |= 8
    return mask


def _line_coeffs(seg):
    x1, y1, x2, y2 = seg
    return (y1 - y2, x2 - x1, x1 * y2 - x2 * y1)


def witness_segments(window):
    """Long segments whose supporting lines realize every achievable
    corner-sign mask, keyed by the mask they produce."""
    x0, y0, x1, y1 = window.bounds()
    w = x1 - x0
    h = y1 - y0
    cx = x0 + w / 2
    cy = y0 + h / 2
    candidates = []
    # Far-away lines at every orientation: masks 0000 and 1111.
    candidates.append((x0 - 3 * w, y0 - 2 * h, x1 + 3 * w, y0 - 2 * h))
    candidates.append((x1 + 3 * w, y0 - 2 * h, x0 - 3 * w, y0 - 2 * h))
    # Mid lines crossing opposite edges: single-sign-pair masks.
    candidates.append((x0 - w, cy, x1 + w, cy))
    candidates.append((x1 + w, cy, x0 - w, cy))
    candidates.append((cx, y0 - h, cx, y1 + h))
    candidates.append((cx, y1 + h, cx, y0 - h))
    # Corner cut-off chords in both orientations: one corner separated
    # from the other three.
    for (px, py), (ex, ey) in (
        ((x0, y0), (x0 + w / 3, y0 + h / 3)),
        ((x1, y0), (x1 - w / 3, y0 + h / 3)),
        ((x1, y1), (x1 - w / 3, y1 - h / 3)),
        ((x0, y1), (x0 + w / 3, y1 - h / 3)),
    ):
        mid_x = (px + ex) / 2
        mid_y = (py + ey) / 2
        # A chord through the midpoint between the corner and the window
        # center, perpendicular to that direction, extended far out.
        dx = ex - px
        dy = ey - py
        candidates.append((mid_x - 4 * dy, mid_y + 4 * dx, mid_x + 4 * dy, mid_y - 4 * dx))
        candidates.append((mid_x + 4 * dy, mid_y - 4 * dx, mid_x - 4 * dy, mid_y + 4 * dx))
    found = {}
    for seg in candidates:
        a, b, c = _line_coeffs(seg)
        mask = _corner_mask(a, b, c, window)
        found.setdefault(mask, seg)
    return found


REALIZABLE_MASKS = {
    m for m in range(16) if m not in (0b0101, 0b1010)
}


def test_witnesses_cover_all_realizable_masks():
    found = witness_segments(WINDOW)
    assert set(found) == REALIZABLE_MASKS


def test_skala_agrees_with_oracle_on_every_mask_witness():
    bounds = WINDOW.bounds()
    for mask, seg in witness_segments(WINDOW).items():
        exact = clip_exact(seg, bounds)
        got = skala_clip(*seg, *bounds)
        if exact.grazing:
            continue
        if exact.accepted:
            assert got is not None, (mask, seg)
            expected = tuple(float(v) for v in (*exact.p1, *exact.p2))
            assert got == pytest.approx(expected, abs=1e-9), (mask, seg)
        else:
            assert got is None, (mask, seg)


def test_alternating_masks_are_unreachable_and_map_to_empty():
    # f(c0) + f(c2) == f(c1) + f(c3) for affine f on rectangle corners,
    # so strictly alternating corner signs are impossible.
    assert EDGE_TABLE[0b0101] == ()
    assert EDGE_TABLE[0b1010] == ()
    found = witness_segments(WINDOW)
    assert 0b0101 not in found
    assert 0b1010 not in found
