"""Swap-equivalence of puzzle instances.

Two connected, non-star instances are swap-equivalent exactly when one
vertex matching simultaneously preserves every point-triple orientation
(same order type) and the edge relation (graph isomorphism). The
matching candidates are pinned down by mapping a hull vertex and its
hull successor, extending by radial order, and verifying every triple.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass

from .geom import convex_hull, orient, segments_cross
from .puzzle import PuzzleInstance, SwapMove, apply_swap
from .solve import _CrossingEngine, route_to_assignment

EQUIVALENT = "EQUIVALENT"
NOT_EQUIVALENT = "NOT_EQUIVALENT"
INAPPLICABLE = "INAPPLICABLE"


@dataclass
class EquivalenceCertificate:
    verdict: str
    matching: tuple | None = None  # vertex of a -> vertex of b
    reason: str = ""
    refuting_quadruple: tuple | None = None  # vertices of a, when known

    def to_payload(self):
        return {
            "verdict": self.verdict,
            "matching": None if self.matching is None else list(self.matching),
            "reason": self.reason,
            "refuting_quadruple": None
            if self.refuting_quadruple is None
            else list(self.refuting_quadruple),
        }


def vertex_positions(inst: PuzzleInstance):
    """Drawn position of each vertex, indexed by vertex."""
    return [inst.points[p] for p in inst.assignment]


def _radial_order(points, center_idx, ref_idx):
    """Indices != center sorted counter-clockwise from the ray center->ref.

    Points sharing a ray with the center are ordered near-to-far; such
    ties only arise for collinear triples, which the final verification
    re-checks anyway.
    """
    c = points[center_idx]
    d = (points[ref_idx][0] - c[0], points[ref_idx][1] - c[1])

    def half(v):
        cr = d[0] * v[1] - d[1] * v[0]
        if cr > 0:
            return 0
        if cr < 0:
            return 1
        return 0 if d[0] * v[0] + d[1] * v[1] > 0 else 1

    def cmp(i, j):
        vi = (points[i][0] - c[0], points[i][1] - c[1])
        vj = (points[j][0] - c[0], points[j][1] - c[1])
        hi, hj = half(vi), half(vj)
        if hi != hj:
            return -1 if hi < hj else 1
        cr = vi[0] * vj[1] - vi[1] * vj[0]
        if cr != 0:
            return -1 if cr > 0 else 1
        li = vi[0] * vi[0] + vi[1] * vi[1]
        lj = vj[0] * vj[0] + vj[1] * vj[1]
        if li != lj:
            return -1 if li < lj else 1
        return 0

    rest = [i for i in range(len(points)) if i != center_idx]
    return sorted(rest, key=functools.cmp_to_key(cmp))


def _preserves_all_triples(p1, p2, mu):
    n = len(p1)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if orient(p1[i], p1[j], p1[k]) != orient(
                    p2[mu[i]], p2[mu[j]], p2[mu[k]]
                ):
                    return False
    return True


def same_order_type(p1, p2):
    """All orientation-preserving bijections from p1 onto p2.

    Empty when the order types differ. At most n matchings exist for
    point sets free of collinear triples.
    """
    n = len(p1)
    if len(p2) != n:
        return []
    if n <= 2:
        import itertools

        return [tuple(per) for per in itertools.permutations(range(n))]
    hull1 = convex_hull(p1)
    hull2 = convex_hull(p2)
    if len(hull1) != len(hull2):
        return []
    k = len(hull1)
    start = min(range(k), key=lambda i: p1[hull1[i]])
    a1 = hull1[start]
    b1 = hull1[(start + 1) % k]
    order1 = _radial_order(p1, a1, b1)
    out = []
    for j in range(k):
        a2 = hull2[j]
        b2 = hull2[(j + 1) % k]
        order2 = _radial_order(p2, a2, b2)
        mu = [0] * n
        mu[a1] = a2
        for src, dst in zip(order1, order2):
            mu[src] = dst
        mu = tuple(mu)
        if _preserves_all_triples(p1, p2, mu):
            out.append(mu)
    return out


def _is_connected(inst):
    n = inst.n
    adj = [[] for _ in range(n)]
    for u, v in inst.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def _is_star(inst):
    # a star has some vertex incident to every edge
    if not inst.edges:
        return False
    for hub in inst.edges[0]:
        if all(hub in e for e in inst.edges):
            return True
    return False


def _quad_convex(pts4):
    return len(convex_hull(list(pts4))) == 4


def refuting_quadruple(a: PuzzleInstance, b: PuzzleInstance, mu):
    """Four vertices of `a` whose convex-position status differs in `b`
    under the matching, or None."""
    pa = vertex_positions(a)
    pb = vertex_positions(b)
    n = a.n
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                for l in range(k + 1, n):
                    quad = (i, j, k, l)
                    ca = _quad_convex([pa[v] for v in quad])
                    cb = _quad_convex([pb[mu[v]] for v in quad])
                    if ca != cb:
                        return quad
    return None


def swap_equivalent(a: PuzzleInstance, b: PuzzleInstance) -> EquivalenceCertificate:
    """Decide swap-equivalence of two instances.

    INAPPLICABLE when either graph is disconnected or a star: the
    characterization is only established for connected non-star graphs.
    """
    if a.n != b.n or a.m != b.m:
        return EquivalenceCertificate(
            NOT_EQUIVALENT,
            reason=f"size mismatch: {a.n} vertices / {a.m} edges "
            f"vs {b.n} / {b.m}",
        )
    failed = []
    for name, inst in (("first", a), ("second", b)):
        if not _is_connected(inst):
            failed.append(f"{name} graph is disconnected")
        if _is_star(inst):
            failed.append(f"{name} graph is a star")
    if failed:
        return EquivalenceCertificate(INAPPLICABLE, reason="; ".join(failed))

    p1 = vertex_positions(a)
    p2 = vertex_positions(b)
    matchings = same_order_type(p1, p2)
    edges_b = set(b.edges)
    for mu in matchings:
        missing = None
        for u, v in a.edges:
            e = (mu[u], mu[v]) if mu[u] < mu[v] else (mu[v], mu[u])
            if e not in edges_b:
                missing = (u, v)
                break
        if missing is None:
            return EquivalenceCertificate(EQUIVALENT, matching=mu)
    if matchings:
        u, v = missing
        cert = EquivalenceCertificate(
            NOT_EQUIVALENT,
            reason=f"order types match but no matching is a graph isomorphism; "
            f"last candidate lacks the image of edge ({u}, {v})",
        )
    else:
        cert = EquivalenceCertificate(
            NOT_EQUIVALENT, reason="point sets have different order types"
        )
    if set(a.edges) == set(b.edges):
        # identity is a graph isomorphism; report its geometric refutation
        cert.refuting_quadruple = refuting_quadruple(a, b, tuple(range(a.n)))
    return cert


def _matched_edge_map(a, b, mu):
    index_b = {e: i for i, e in enumerate(b.edges)}
    mapping = []
    for u, v in a.edges:
        e = (mu[u], mu[v]) if mu[u] < mu[v] else (mu[v], mu[u])
        if e not in index_b:
            raise ValueError("matching does not preserve the edge relation")
        mapping.append(index_b[e])
    return mapping


def definition_oracle(a, b, mu, walk_length=8, trials=1000, seed=0):
    """Randomized falsification of swap-equivalence under a matching.

    Runs `trials` random walks of matched swaps on both instances and
    compares the full crossing-pair sets after every step (and before
    the first). False on the first discrepancy, True if none is found.
    mu must preserve the edge relation.
    """
    edge_map = _matched_edge_map(a, b, mu)
    eng_a = _CrossingEngine(a)
    eng_b = _CrossingEngine(b)
    m = a.m
    rng = random.Random(seed)

    def mismatch(sig_a, sig_b):
        pairs_a = eng_a.pairs(tuple(sig_a))
        pairs_b = eng_b.pairs(tuple(sig_b))
        mapped = set()
        for i, j in pairs_a:
            mi, mj = edge_map[i], edge_map[j]
            mapped.add((mi, mj) if mi < mj else (mj, mi))
        return mapped != pairs_b

    if mismatch(a.assignment, b.assignment):
        return False
    for _ in range(trials):
        sig_a = list(a.assignment)
        sig_b = list(b.assignment)
        last = -1
        for _ in range(walk_length):
            e = rng.randrange(m)
            if e == last:
                continue  # walks have length <= walk_length
            last = e
            u, v = a.edges[e]
            sig_a[u], sig_a[v] = sig_a[v], sig_a[u]
            w, x = b.edges[edge_map[e]]
            sig_b[w], sig_b[x] = sig_b[x], sig_b[w]
            if mismatch(sig_a, sig_b):
                return False
    return True


def discrepancy_walk(a, b, mu):
    """Deterministic walk exposing a crossing discrepancy, or None.

    Finds a vertex quadruple whose convex-position status differs under
    the matching, picks two disjoint edges, and routes them onto the
    quadruple's crossing diagonals: at the end of the walk the two edges
    cross in one drawing but not the other. Requires a connected
    non-star graph and an edge-preserving matching.
    """
    _matched_edge_map(a, b, mu)  # validates mu
    quad = refuting_quadruple(a, b, mu)
    if quad is None:
        return None
    pa = vertex_positions(a)
    pb = vertex_positions(b)
    convex_in_a = _quad_convex([pa[v] for v in quad])

    def pt(v):
        # coordinates in whichever drawing has the quadruple convex
        return pa[v] if convex_in_a else pb[mu[v]]

    pairings = [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))]
    diag = None
    for (i1, j1), (i2, j2) in pairings:
        if segments_cross(pt(quad[i1]), pt(quad[j1]), pt(quad[i2]), pt(quad[j2])):
            diag = ((quad[i1], quad[j1]), (quad[i2], quad[j2]))
            break
    if diag is None:
        return None
    (u, v), (w, x) = diag
    # two disjoint edges of a
    e1 = e2 = None
    for i in range(a.m):
        for j in range(i + 1, a.m):
            s = set(a.edges[i]) | set(a.edges[j])
            if len(s) == 4:
                e1, e2 = a.edges[i], a.edges[j]
                break
        if e1:
            break
    if e1 is None:
        return None
    target = [None] * a.n
    target[e1[0]] = a.assignment[u]
    target[e1[1]] = a.assignment[v]
    target[e2[0]] = a.assignment[w]
    target[e2[1]] = a.assignment[x]
    used = {p for p in target if p is not None}
    free = sorted(set(range(a.n)) - used)
    it = iter(free)
    for i in range(a.n):
        if target[i] is None:
            target[i] = next(it)
    return route_to_assignment(a, tuple(target))


def walk_reveals_discrepancy(a, b, mu, walk):
    """Apply matched moves of the walk to both instances; True when some
    step shows differing crossing-pair sets."""
    edge_map = _matched_edge_map(a, b, mu)
    eng_a = _CrossingEngine(a)
    eng_b = _CrossingEngine(b)
    inst_a, inst_b = a, b

    def mismatch():
        pairs_a = eng_a.pairs(tuple(inst_a.assignment))
        pairs_b = eng_b.pairs(tuple(inst_b.assignment))
        mapped = set()
        for i, j in pairs_a:
            mi, mj = edge_map[i], edge_map[j]
            mapped.add((mi, mj) if mi < mj else (mj, mi))
        return mapped != pairs_b

    if mismatch():
        return True
    for move in walk:
        inst_a = apply_swap(inst_a, move)
        inst_b = apply_swap(inst_b, SwapMove(edge_map[move.edge]))
        if mismatch():
            return True
    return False
