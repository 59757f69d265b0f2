"""Exact rational reference clipper used as ground truth in tests.

Inputs are lifted losslessly to rationals (every double is exactly
representable), scaled to a common integer grid, and clipped with the
parametric interval method over arbitrary-precision integers.  The
method is deliberately different from all seven production clippers so
its failure modes are independent of the code under test.

A ``grazing`` flag marks the measure-zero inputs where floating-point
clippers may legitimately disagree with each other: results that
degenerate to a single point, segments lying exactly on a boundary edge
line, segment endpoints lying exactly on the boundary, and supporting
lines that touch the closed window in exactly one point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional

from .geom import REJECTED, ClipResult, ClipWindow, Point2, Segment

__all__ = ["ExactClipOutcome", "clip_exact", "to_double_outcome"]

RationalPoint = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class ExactClipOutcome:
    """Accept with exact rational endpoints, or reject; plus the grazing flag."""

    accepted: bool
    grazing: bool
    p1: Optional[RationalPoint] = None
    p2: Optional[RationalPoint] = None


def _ratio(value) -> tuple[int, int]:
    # Exact (numerator, denominator) for float, int, Fraction or Decimal.
    if isinstance(value, float):
        return value.as_integer_ratio()
    if isinstance(value, int):
        return value, 1
    f = Fraction(value)
    return f.numerator, f.denominator


def _lift(obj, kind) -> tuple[tuple[int, int], ...]:
    if isinstance(obj, Segment):
        vals = obj.coords()
    elif isinstance(obj, ClipWindow):
        vals = obj.bounds()
    else:
        vals = tuple(obj)
    if len(vals) != 4:
        raise ValueError(f"{kind} must provide exactly 4 coordinates")
    return tuple(_ratio(v) for v in vals)


def _interval_ints(X1, Y1, DX, DY, XMIN, YMIN, XMAX, YMAX):
    """[0,1] intersected with the four half-plane constraints.

    Returns (t0n, t0d, t1n, t1d) with positive denominators, or None.
    """
    t0n, t0d = 0, 1
    t1n, t1d = 1, 1
    for p, q in (
        (DX, XMAX - X1),
        (-DX, X1 - XMIN),
        (DY, YMAX - Y1),
        (-DY, Y1 - YMIN),
    ):
        # Constraint: p * t <= q.
        if p == 0:
            if q < 0:
                return None
        elif p > 0:
            if q * t1d < t1n * p:
                t1n, t1d = q, p
        else:
            pn, qn = -p, -q  # t >= qn / pn with pn > 0
            if qn * t0d > t0n * pn:
                t0n, t0d = qn, pn
        if t1n * t0d < t0n * t1d:
            return None
    return t0n, t0d, t1n, t1d


def _on_boundary(X, Y, XMIN, YMIN, XMAX, YMAX) -> bool:
    if not (XMIN <= X <= XMAX and YMIN <= Y <= YMAX):
        return False
    return X == XMIN or X == XMAX or Y == YMIN or Y == YMAX


def _line_touches_single_point(X1, Y1, DX, DY, XMIN, YMIN, XMAX, YMAX) -> bool:
    # A line touches the closed rectangle in exactly one point iff it
    # passes through exactly one corner with the other three corners
    # strictly on one side.
    zeros = 0
    pos = 0
    neg = 0
    for CX, CY in ((XMIN, YMIN), (XMAX, YMIN), (XMAX, YMAX), (XMIN, YMAX)):
        s = DX * (CY - Y1) - DY * (CX - X1)
        if s == 0:
            zeros += 1
        elif s > 0:
            pos += 1
        else:
            neg += 1
    return zeros == 1 and (pos == 3 or neg == 3)


def clip_exact(seg, window) -> ExactClipOutcome:
    """Exact parametric clip of a segment against a window.

    ``seg`` is a Segment or any 4-sequence (x1, y1, x2, y2); ``window``
    is a ClipWindow or any 4-sequence (xmin, ymin, xmax, ymax).
    Coordinates may be floats, ints or Fractions.
    """
    (x1n, x1d), (y1n, y1d), (x2n, x2d), (y2n, y2d) = _lift(seg, "segment")
    (wx0n, wx0d), (wy0n, wy0d), (wx1n, wx1d), (wy1n, wy1d) = _lift(window, "window")
    L = lcm(x1d, y1d, x2d, y2d, wx0d, wy0d, wx1d, wy1d)
    X1 = x1n * (L // x1d)
    Y1 = y1n * (L // y1d)
    X2 = x2n * (L // x2d)
    Y2 = y2n * (L // y2d)
    XMIN = wx0n * (L // wx0d)
    YMIN = wy0n * (L // wy0d)
    XMAX = wx1n * (L // wx1d)
    YMAX = wy1n * (L // wy1d)
    if not (XMIN < XMAX and YMIN < YMAX):
        raise ValueError("window bounds must satisfy xmin < xmax and ymin < ymax")

    DX = X2 - X1
    DY = Y2 - Y1
    if DX == 0 and DY == 0:
        # Point segment: a single-point result whenever it is inside.
        if XMIN <= X1 <= XMAX and YMIN <= Y1 <= YMAX:
            p = (Fraction(X1, L), Fraction(Y1, L))
            return ExactClipOutcome(True, True, p, p)
        return ExactClipOutcome(False, False)

    iv = _interval_ints(X1, Y1, DX, DY, XMIN, YMIN, XMAX, YMAX)
    if iv is None:
        grazing = _line_touches_single_point(X1, Y1, DX, DY, XMIN, YMIN, XMAX, YMAX)
        return ExactClipOutcome(False, grazing)

    t0n, t0d, t1n, t1d = iv
    p1 = (Fraction(X1 * t0d + t0n * DX, t0d * L), Fraction(Y1 * t0d + t0n * DY, t0d * L))
    p2 = (Fraction(X1 * t1d + t1n * DX, t1d * L), Fraction(Y1 * t1d + t1n * DY, t1d * L))
    grazing = (
        t0n * t1d == t1n * t0d
        or (DX == 0 and (X1 == XMIN or X1 == XMAX))
        or (DY == 0 and (Y1 == YMIN or Y1 == YMAX))
        or (t0n == 0 and _on_boundary(X1, Y1, XMIN, YMIN, XMAX, YMAX))
        or (t1n == t1d and _on_boundary(X2, Y2, XMIN, YMIN, XMAX, YMAX))
    )
    return ExactClipOutcome(True, grazing, p1, p2)


def to_double_outcome(outcome: ExactClipOutcome) -> ClipResult:
    """Round exact endpoints to nearest doubles, preserving accept/reject."""
    if not outcome.accepted:
        return REJECTED
    (ax, ay), (bx, by) = outcome.p1, outcome.p2
    return ClipResult(
        Segment(Point2(float(ax), float(ay)), Point2(float(bx), float(by)))
    )
