"""Geometric primitives shared by every clipping algorithm.

Coordinates are IEEE-754 doubles.  Containment against the clip window is
boundary-inclusive everywhere so that all clippers share one semantics:
a point exactly on an edge or corner counts as inside.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "Point2",
    "Segment",
    "ClipWindow",
    "LineEquation",
    "ClipResult",
    "REJECTED",
    "y_at",
    "x_at",
    "contains",
]


def _require_finite(name: str, value: float) -> None:
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True, slots=True)
class Point2:
    """A point in the plane. Both coordinates must be finite."""

    x: float
    y: float

    def __post_init__(self) -> None:
        _require_finite("x", self.x)
        _require_finite("y", self.y)


@dataclass(frozen=True, slots=True)
class Segment:
    """Directed segment from p1 to p2. Degenerate segments (p1 == p2) are legal."""

    p1: Point2
    p2: Point2

    @classmethod
    def of(cls, x1: float, y1: float, x2: float, y2: float) -> "Segment":
        return cls(Point2(x1, y1), Point2(x2, y2))

    def coords(self) -> tuple[float, float, float, float]:
        return (self.p1.x, self.p1.y, self.p2.x, self.p2.y)


@dataclass(frozen=True, slots=True)
class ClipWindow:
    """Axis-aligned clip rectangle with strictly ordered, finite bounds.

    Callers must pass bounds in ascending order; nothing is swapped
    silently because that tends to hide caller bugs.
    """

    xmin: float
    ymin: float
    xmax: float
    ymax: float

    def __post_init__(self) -> None:
        for name in ("xmin", "ymin", "xmax", "ymax"):
            _require_finite(name, getattr(self, name))
        if not (self.xmin < self.xmax):
            raise ValueError(f"xmin must be < xmax, got {self.xmin} >= {self.xmax}")
        if not (self.ymin < self.ymax):
            raise ValueError(f"ymin must be < ymax, got {self.ymin} >= {self.ymax}")

    def bounds(self) -> tuple[float, float, float, float]:
        return (self.xmin, self.ymin, self.xmax, self.ymax)


@dataclass(frozen=True, slots=True)
class LineEquation:
    """A line through ``origin`` with direction (dx, dy).

    The slope dy/dx is never materialized at construction so vertical
    lines (dx == 0) carry no manufactured infinities; evaluation
    functions divide only after the caller has guarded the axis.
    """

    origin: Point2
    dx: float
    dy: float

    def __post_init__(self) -> None:
        _require_finite("dx", self.dx)
        _require_finite("dy", self.dy)

    @classmethod
    def from_segment(cls, seg: Segment) -> "LineEquation":
        return cls(seg.p1, seg.p2.x - seg.p1.x, seg.p2.y - seg.p1.y)


@dataclass(frozen=True, slots=True)
class ClipResult:
    """Outcome of clipping a segment: the retained part, or rejection."""

    segment: Segment | None = None

    @property
    def accepted(self) -> bool:
        return self.segment is not None


REJECTED = ClipResult(None)


def y_at(line: LineEquation, x: float) -> float:
    """y-coordinate of the line at the given x.

    Requires dx != 0; the slope ratio is evaluated lazily right here and
    nowhere else.
    """
    if line.dx == 0:
        raise ValueError("y_at is undefined for a vertical line (dx == 0)")
    return line.dy / line.dx * (x - line.origin.x) + line.origin.y


def x_at(line: LineEquation, y: float) -> float:
    """x-coordinate of the line at the given y. Requires dy != 0."""
    if line.dy == 0:
        raise ValueError("x_at is undefined for a horizontal line (dy == 0)")
    return line.dx / line.dy * (y - line.origin.y) + line.origin.x


def contains(window: ClipWindow, p: Point2) -> bool:
    """Boundary-inclusive point containment."""
    return window.xmin <= p.x <= window.xmax and window.ymin <= p.y <= window.ymax
