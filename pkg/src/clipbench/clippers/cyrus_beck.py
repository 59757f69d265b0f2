"""General convex-polygon clipper specialized to the rectangle.

The window is treated as a 4-vertex convex polygon: every edge carries
an anchor vertex and an inward unit normal, and the parameter interval
is accumulated from dot products of the normal with the segment
direction and with the offset of p1 from the anchor.  Deliberately kept
in polygon-versus-line form rather than reduced to coordinate
comparisons, which is what distinguishes it from the parametric
rectangle clipper.
"""

from __future__ import annotations

__all__ = ["clip_coords"]


def clip_coords(x1, y1, x2, y2, xmin, ymin, xmax, ymax):
    dx = x2 - x1
    dy = y2 - y1
    t0 = 0.0
    t1 = 1.0
    # (anchor x, anchor y, inward normal) per edge: left, right, bottom, top.
    for ax, ay, nx, ny in (
        (xmin, ymin, 1.0, 0.0),
        (xmax, ymax, -1.0, 0.0),
        (xmin, ymin, 0.0, 1.0),
        (xmax, ymax, 0.0, -1.0),
    ):
        denom = nx * dx + ny * dy
        num = nx * (x1 - ax) + ny * (y1 - ay)
        if denom == 0.0:
            # Edge-parallel line: inside/outside decided by the numerator.
            if num < 0.0:
                return None
        else:
            t = -num / denom
            if denom > 0.0:
                if t > t1:
                    return None
                if t > t0:
                    t0 = t
            else:
                if t < t0:
                    return None
                if t < t1:
                    t1 = t
    if t0 > t1:
        return None
    if t0 > 0.0:
        nx1 = x1 + t0 * dx
        ny1 = y1 + t0 * dy
    else:
        nx1, ny1 = x1, y1
    if t1 < 1.0:
        nx2 = x1 + t1 * dx
        ny2 = y1 + t1 * dy
    else:
        nx2, ny2 = x2, y2
    return (nx1, ny1, nx2, ny2)
