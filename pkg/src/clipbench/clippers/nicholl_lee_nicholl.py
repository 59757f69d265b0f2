"""Region-based clipper that classifies the start point.

The nine regions of p1 reduce to three canonical cases (inside, left
edge strip, top-left corner region) through axis reflections and an
axis swap; the case analysis compares the segment slope against window
corners before any division so each boundary intersection is computed
at most once.  The result is mapped back through the inverse
transforms, which are exact in IEEE arithmetic.
"""

from __future__ import annotations

__all__ = ["clip_coords"]


def _from_inside(x1, y1, x2, y2, xmin, ymin, xmax, ymax):
    # p1 inside (boundary-inclusive).
    if xmin <= x2 <= xmax and ymin <= y2 <= ymax:
        return (x1, y1, x2, y2)
    dx = x2 - x1
    dy = y2 - y1
    if dx > 0.0:
        if dy > 0.0:
            if dy * (xmax - x1) > dx * (ymax - y1):  # leaves through the top
                ex, ey = x1 + dx * (ymax - y1) / dy, ymax
            else:
                ex, ey = xmax, y1 + dy * (xmax - x1) / dx
        elif dy < 0.0:
            if dy * (xmax - x1) < dx * (ymin - y1):  # leaves through the bottom
                ex, ey = x1 + dx * (ymin - y1) / dy, ymin
            else:
                ex, ey = xmax, y1 + dy * (xmax - x1) / dx
        else:
            ex, ey = xmax, y1
    elif dx < 0.0:
        if dy > 0.0:
            if dy * (xmin - x1) < dx * (ymax - y1):  # leaves through the top
                ex, ey = x1 + dx * (ymax - y1) / dy, ymax
            else:
                ex, ey = xmin, y1 + dy * (xmin - x1) / dx
        elif dy < 0.0:
            if dy * (xmin - x1) > dx * (ymin - y1):  # leaves through the bottom
                ex, ey = x1 + dx * (ymin - y1) / dy, ymin
            else:
                ex, ey = xmin, y1 + dy * (xmin - x1) / dx
        else:
            ex, ey = xmin, y1
    else:
        ex, ey = x1, (ymax if dy > 0.0 else ymin)
    return (x1, y1, ex, ey)


def _from_left(x1, y1, x2, y2, xmin, ymin, xmax, ymax):
    # p1 in the left strip: x1 < xmin, ymin <= y1 <= ymax.
    if x2 < xmin:
        return None
    dx = x2 - x1  # > 0 because x2 >= xmin > x1
    dy = y2 - y1
    a = dy * (xmin - x1)
    if dy > 0.0:
        if a > dx * (ymax - y1):  # crosses x = xmin above the window
            return None
        ey1 = y1 + a / dx
        if dy * (xmax - x1) > dx * (ymax - y1):  # leaves through the top
            if y2 > ymax:
                ex2, ey2 = x1 + dx * (ymax - y1) / dy, ymax
            else:
                ex2, ey2 = x2, y2
        else:
            if x2 > xmax:
                ex2, ey2 = xmax, y1 + dy * (xmax - x1) / dx
            else:
                ex2, ey2 = x2, y2
    elif dy < 0.0:
        if a < dx * (ymin - y1):  # crosses x = xmin below the window
            return None
        ey1 = y1 + a / dx
        if dy * (xmax - x1) < dx * (ymin - y1):  # leaves through the bottom
            if y2 < ymin:
                ex2, ey2 = x1 + dx * (ymin - y1) / dy, ymin
            else:
                ex2, ey2 = x2, y2
        else:
            if x2 > xmax:
                ex2, ey2 = xmax, y1 + dy * (xmax - x1) / dx
            else:
                ex2, ey2 = x2, y2
    else:
        ey1 = y1
        if x2 > xmax:
            ex2, ey2 = xmax, y1
        else:
            ex2, ey2 = x2, y2
    return (xmin, ey1, ex2, ey2)


def _from_top_left(x1, y1, x2, y2, xmin, ymin, xmax, ymax):
    # p1 in the top-left corner region: x1 < xmin, y1 > ymax.
    if x2 < xmin or y2 > ymax:
        return None
    dx = x2 - x1  # > 0
    dy = y2 - y1  # < 0
    a_near = dy * (xmin - x1)
    if a_near < dx * (ymin - y1):  # passes below the bottom-left corner
        return None
    a_far = dy * (xmax - x1)
    if a_far > dx * (ymax - y1):  # passes above the top-right corner
        return None
    if a_near > dx * (ymax - y1):  # enters through the top
        ex1, ey1 = x1 + dx * (ymax - y1) / dy, ymax
    else:  # enters through the left
        ex1, ey1 = xmin, y1 + a_near / dx
    if a_far < dx * (ymin - y1):  # leaves through the bottom
        if y2 < ymin:
            ex2, ey2 = x1 + dx * (ymin - y1) / dy, ymin
        else:
            ex2, ey2 = x2, y2
    else:  # leaves through the right
        if x2 > xmax:
            ex2, ey2 = xmax, y1 + a_far / dx
        else:
            ex2, ey2 = x2, y2
    return (ex1, ey1, ex2, ey2)


def clip_coords(x1, y1, x2, y2, xmin, ymin, xmax, ymax):
    if x1 == x2 and y1 == y2:
        if xmin <= x1 <= xmax and ymin <= y1 <= ymax:
            return (x1, y1, x2, y2)
        return None

    fx = fy = swap = False
    if x1 < xmin:
        if y1 > ymax:
            case = _from_top_left
        elif y1 < ymin:
            case = _from_top_left
            fy = True
        else:
            case = _from_left
    elif x1 > xmax:
        fx = True
        if y1 > ymax:
            case = _from_top_left
        elif y1 < ymin:
            case = _from_top_left
            fy = True
        else:
            case = _from_left
    elif y1 > ymax:
        case = _from_left
        fy = True
        swap = True
    elif y1 < ymin:
        case = _from_left
        swap = True
    else:
        case = _from_inside

    if fx:
        x1, x2, xmin, xmax = -x1, -x2, -xmax, -xmin
    if fy:
        y1, y2, ymin, ymax = -y1, -y2, -ymax, -ymin
    if swap:
        x1, y1, x2, y2 = y1, x1, y2, x2
        xmin, ymin, xmax, ymax = ymin, xmin, ymax, xmax

    res = case(x1, y1, x2, y2, xmin, ymin, xmax, ymax)
    if res is None:
        return None
    ax, ay, bx, by = res
    if swap:
        ax, ay, bx, by = ay, ax, by, bx
    if fy:
        ay, by = -ay, -by
    if fx:
        ax, bx = -ax, -bx
    return (ax, ay, bx, by)
