"""Delaunay triangulation and randomized Lawson flips.

The triangulation is built by a lexicographic scan (each new point is
fanned to the visible part of the running hull) and then legalized with
Lawson flips until every internal edge passes the exact in-circle test.
Desk-scale point counts keep the O(n^2) construction comfortable; the
tests audit the empty-circumcircle property independently of how the
triangulation was produced.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from collections import deque

from .geom import COLLINEAR, INSIDE, LEFT, RIGHT, in_circle, orient


@dataclass
class Triangulation:
    points: list
    edges: set  # (u, v) vertex index pairs, u < v
    triangles: list  # sorted (i, j, k) triples


def _edge(u, v):
    return (u, v) if u < v else (v, u)


class _Mesh:
    """Triangle soup with an edge -> triangles map, enough for flips."""

    def __init__(self, triangles=()):
        self.triangles = set()
        self.edge_tris = {}
        for t in triangles:
            self.add(t)

    def add(self, tri):
        tri = tuple(sorted(tri))
        self.triangles.add(tri)
        i, j, k = tri
        for e in ((i, j), (i, k), (j, k)):
            self.edge_tris.setdefault(e, []).append(tri)

    def remove(self, tri):
        self.triangles.remove(tri)
        i, j, k = tri
        for e in ((i, j), (i, k), (j, k)):
            lst = self.edge_tris[e]
            lst.remove(tri)
            if not lst:
                del self.edge_tris[e]

    def internal_edges(self):
        return [e for e, ts in self.edge_tris.items() if len(ts) == 2]

    def opposite_vertices(self, e):
        t1, t2 = self.edge_tris[e]
        c = next(v for v in t1 if v not in e)
        d = next(v for v in t2 if v not in e)
        return c, d

    def flip(self, e):
        """Replace edge e by the opposite diagonal of its quadrilateral."""
        c, d = self.opposite_vertices(e)
        t1, t2 = list(self.edge_tris[e])
        a, b = e
        self.remove(t1)
        self.remove(t2)
        self.add((c, d, a))
        self.add((c, d, b))
        return _edge(c, d)

    def quad_is_strictly_convex(self, points, e):
        a, b = e
        c, d = self.opposite_vertices(e)
        o1 = orient(points[c], points[d], points[a])
        o2 = orient(points[c], points[d], points[b])
        return o1 != COLLINEAR and o2 != COLLINEAR and o1 != o2

    def to_triangulation(self, points):
        return Triangulation(
            points=points,
            edges=set(self.edge_tris),
            triangles=sorted(self.triangles),
        )


def _scan_triangulation(points):
    """Full triangulation of the point set by lexicographic insertion."""
    n = len(points)
    order = sorted(range(n), key=lambda i: points[i])
    for i in range(n - 1):
        if points[order[i]] == points[order[i + 1]]:
            raise ValueError("duplicate points")

    k = 2
    while k < n and orient(points[order[0]], points[order[1]], points[order[k]]) == COLLINEAR:
        k += 1
    if k == n:
        raise ValueError("all points are collinear")

    mesh = _Mesh()
    chain = order[:k]
    w = order[k]
    for i in range(len(chain) - 1):
        mesh.add((chain[i], chain[i + 1], w))
    if orient(points[chain[0]], points[chain[-1]], points[w]) == LEFT:
        hull = chain + [w]
    else:
        hull = list(reversed(chain)) + [w]

    for q in order[k + 1:]:
        size = len(hull)
        visible = [
            i
            for i in range(size)
            if orient(points[hull[i]], points[hull[(i + 1) % size]], points[q]) == RIGHT
        ]
        if not visible:
            raise ValueError("scan invariant broken: new point sees no hull edge")
        vis = set(visible)
        start = next(i for i in visible if (i - 1) % size not in vis)
        for t in range(len(visible)):
            i = (start + t) % size
            mesh.add((hull[i], hull[(i + 1) % size], q))
        # drop the vertices strictly inside the visible arc, splice q in
        end = (start + len(visible)) % size  # first kept vertex after the arc
        kept = [hull[(end + t) % size] for t in range(size - len(visible))]
        hull = kept + [hull[start], q]
    return mesh


def _legalize(points, mesh):
    """Lawson-flip until every internal edge passes the in-circle test."""
    queue = deque(mesh.internal_edges())
    queued = set(queue)
    while queue:
        e = queue.popleft()
        queued.discard(e)
        tris = mesh.edge_tris.get(e)
        if tris is None or len(tris) != 2:
            continue
        a, b = e
        c, d = mesh.opposite_vertices(e)
        if in_circle(points[a], points[b], points[c], points[d]) != INSIDE:
            continue
        if not mesh.quad_is_strictly_convex(points, e):
            # a strictly illegal edge always sits in a strictly convex quad
            raise AssertionError(f"illegal edge {e} in non-convex quad")
        new_e = mesh.flip(e)
        c, d = new_e
        for nb in (_edge(c, a), _edge(c, b), _edge(d, a), _edge(d, b)):
            if nb not in queued:
                queue.append(nb)
                queued.add(nb)


def delaunay(points):
    """Delaunay triangulation of the points.

    Exact cocircular ties are kept as-is (either diagonal is valid).
    Requires n >= 3 distinct points, not all collinear.
    """
    if len(points) < 3:
        raise ValueError("triangulation needs at least 3 points")
    mesh = _scan_triangulation(points)
    _legalize(points, mesh)
    return mesh.to_triangulation(list(points))


def flip_edge(t: Triangulation, edge):
    """Flip one internal edge, returning the new triangulation.

    The edge must be internal and its quadrilateral strictly convex.
    """
    mesh = _Mesh(t.triangles)
    e = _edge(*edge)
    ts = mesh.edge_tris.get(e)
    if ts is None or len(ts) != 2:
        raise ValueError(f"edge {edge} is not an internal edge")
    if not mesh.quad_is_strictly_convex(t.points, e):
        raise ValueError(f"edge {edge} is not flippable")
    mesh.flip(e)
    return mesh.to_triangulation(t.points)


def lawson_flips(t: Triangulation, count, seed):
    """Perform `count` random Lawson flips on a copy of t.

    Picks a uniformly random internal edge each time; picks whose
    quadrilateral is not strictly convex are skipped without counting.
    Gives up after 100 * |edges| consecutive skips and returns what it
    achieved. Returns (triangulation, flips_performed).
    """
    mesh = _Mesh(t.triangles)
    rng = random.Random(seed)
    performed = 0
    skips = 0
    skip_limit = 100 * max(1, len(t.edges))
    while performed < count and skips < skip_limit:
        internal = sorted(mesh.internal_edges())
        if not internal:
            break
        e = internal[rng.randrange(len(internal))]
        if mesh.quad_is_strictly_convex(t.points, e):
            mesh.flip(e)
            performed += 1
            skips = 0
        else:
            skips += 1
    return mesh.to_triangulation(t.points), performed
