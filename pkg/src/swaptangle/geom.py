"""Exact integer geometry predicates on grid points.

A point is a plain ``(x, y)`` tuple of Python ints on a square grid.
With the default grid of 2**16 the largest intermediate value (the
in-circle determinant) fits in 128 signed bits, so every predicate here
is exact; floating point never appears.
"""

from __future__ import annotations

from math import isqrt

GRID_SIZE = 1 << 16

LEFT = 1
COLLINEAR = 0
RIGHT = -1

INSIDE = 1
ON = 0
OUTSIDE = -1


class DegenerateTriangleError(ValueError):
    """A predicate needed a proper triangle but was given a collinear one."""


def orient(a, b, c):
    """Sign of the cross product (b - a) x (c - a).

    LEFT (+1) when a->b->c turns left, RIGHT (-1) when it turns right,
    COLLINEAR (0) when the three points share a line.
    """
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    if d > 0:
        return LEFT
    if d < 0:
        return RIGHT
    return COLLINEAR


def dist2(a, b):
    """Squared euclidean distance between two grid points."""
    dx = a[0] - b[0]
    dy = a[1] - b[1]
    return dx * dx + dy * dy


def _on_segment(a, b, p):
    # assumes p collinear with a, b; true iff p lies on the closed segment ab
    return (
        min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def segments_cross(a, b, c, d):
    """True iff closed segments ab and cd intersect in more than a shared endpoint.

    A shared endpoint alone does not count. Everything else does: proper
    crossings, an endpoint in the other segment's interior, and collinear
    overlap (including overlap extending beyond a shared endpoint).
    Requires a != b and c != d.
    """
    shared = None
    if a == c or a == d:
        shared = a
    if b == c or b == d:
        if shared is not None:
            return True  # identical segments overlap fully
        shared = b
    if shared is not None:
        # one common endpoint: only a collinear overlap reaches past it
        q = b if shared == a else a
        r = d if shared == c else c
        if orient(shared, q, r) != COLLINEAR:
            return False
        dot = (q[0] - shared[0]) * (r[0] - shared[0]) + (q[1] - shared[1]) * (
            r[1] - shared[1]
        )
        return dot > 0

    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    if o1 == COLLINEAR and _on_segment(a, b, c):
        return True
    if o2 == COLLINEAR and _on_segment(a, b, d):
        return True
    if o3 == COLLINEAR and _on_segment(c, d, a):
        return True
    if o4 == COLLINEAR and _on_segment(c, d, b):
        return True
    return False


def in_circle(a, b, c, d):
    """Position of d relative to the circumcircle of triangle abc.

    The result is normalized for the orientation of (a, b, c), so any
    permutation of the triangle gives the same answer. Raises
    DegenerateTriangleError when a, b, c are collinear.
    """
    o = orient(a, b, c)
    if o == COLLINEAR:
        raise DegenerateTriangleError(f"collinear triangle {a}, {b}, {c}")
    adx = a[0] - d[0]
    ady = a[1] - d[1]
    bdx = b[0] - d[0]
    bdy = b[1] - d[1]
    cdx = c[0] - d[0]
    cdy = c[1] - d[1]
    det = (
        (adx * adx + ady * ady) * (bdx * cdy - cdx * bdy)
        + (bdx * bdx + bdy * bdy) * (cdx * ady - adx * cdy)
        + (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady)
    )
    det *= o
    if det > 0:
        return INSIDE
    if det < 0:
        return OUTSIDE
    return ON


def delta_ok(p, q, r, delta):
    """True iff r is at distance >= delta from the line through p and q.

    Compared exactly: cross(q-p, r-p)^2 >= delta^2 * |q-p|^2. Requires
    p != q.
    """
    cx = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return cx * cx >= delta * delta * dist2(p, q)


def forbidden_region_violated(p, q, candidate, delta):
    """True iff the triple {p, q, candidate} breaks delta-general position.

    Equivalent to one of the three point-to-line distances of the triple
    falling below delta. A candidate coinciding with p or q always
    violates. Requires p != q.
    """
    if candidate == p or candidate == q:
        return True
    return not (
        delta_ok(p, q, candidate, delta)
        and delta_ok(p, candidate, q, delta)
        and delta_ok(q, candidate, p, delta)
    )


def convex_hull(points):
    """Indices of the convex hull of `points` in counter-clockwise order.

    Points lying on a hull edge are kept on the hull. Needs at least one
    point; all points must be distinct.
    """
    n = len(points)
    if n == 1:
        return [0]
    idx = sorted(range(n), key=lambda i: points[i])
    if n == 2:
        return idx

    p0, p1 = points[idx[0]], points[idx[1]]
    if all(orient(p0, p1, points[i]) == COLLINEAR for i in idx[2:]):
        return idx  # degenerate: every point lies on one line

    def chain(seq):
        hull = []
        for i in seq:
            while (
                len(hull) >= 2
                and orient(points[hull[-2]], points[hull[-1]], points[i]) == RIGHT
            ):
                hull.pop()
            hull.append(i)
        return hull

    lower = chain(idx)
    upper = chain(reversed(idx))
    return lower[:-1] + upper[:-1]


def max_general_position_delta(points):
    """Largest integer delta for which `points` is in delta-general position.

    0 when the set contains a collinear triple or duplicates.
    """
    n = len(points)
    best = None
    for i in range(n):
        for j in range(i + 1, n):
            if points[i] == points[j]:
                return 0
            for k in range(n):
                if k == i or k == j:
                    continue
                p, q, r = points[i], points[j], points[k]
                cx = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
                # floor(|cx| / |q-p|), exact via integer sqrt
                d = isqrt((cx * cx) // dist2(p, q))
                if best is None or d < best:
                    best = d
    return best if best is not None else 0
