"""Exact bounded search for minimum swap sequences and related analyses.

min_swaps runs a breadth-first search over assignment permutations with
visited-state deduplication; because a swap is an involution, skipping
the edge just swapped never hides a shorter solution. Crossing counts
are maintained incrementally: a swap only disturbs pairs involving the
edges incident to its two endpoints.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from math import factorial

from .geom import orient, segments_cross
from .puzzle import PuzzleInstance, SwapMove

SOLUTION_CAP = 64


class SearchResourceError(RuntimeError):
    """The search exceeded its state budget (distinct from 'not found')."""


class UnreachableTargetError(ValueError):
    """Target assignment moves points across connected components."""


class EnumerationGuardError(RuntimeError):
    """exhaustive_solvable would enumerate too many assignments."""


@dataclass
class SolveReport:
    min_swaps: int | None  # None: no plane state within max_depth
    max_depth: int
    solution_count: int = 0
    solutions: list = field(default_factory=list)  # lists of edge indices
    nodes_expanded: int = 0
    independent_pairs: list = field(default_factory=list)

    @property
    def found(self):
        return self.min_swaps is not None

    def to_payload(self, include_solutions=False):
        payload = {
            "min_swaps": self.min_swaps,
            "max_depth": self.max_depth,
            "solution_count": self.solution_count,
            "nodes_expanded": self.nodes_expanded,
            "independent_pairs": [list(p) for p in self.independent_pairs],
        }
        if include_solutions:
            payload["solutions"] = [list(s) for s in self.solutions]
        return payload


class _CrossingEngine:
    """Crossing tests for one instance, specialized for permutation states.

    When the point set has no collinear triple (every pipeline instance),
    orientations of all point triples are memoized in a flat table and a
    pair test is a few list lookups. Otherwise each test falls back to
    the exact segment predicate on coordinates.
    """

    def __init__(self, inst: PuzzleInstance):
        self.points = inst.points
        self.edges = inst.edges
        self.n = len(inst.points)
        self.m = len(inst.edges)
        self.table = self._build_table()
        # vertex tuples of the edge pairs that can cross; edges sharing a
        # vertex share a point under any assignment and never cross on a
        # collinear-free point set
        probes = []
        index = []
        for i in range(self.m):
            u, v = self.edges[i]
            for j in range(i + 1, self.m):
                w, x = self.edges[j]
                if u == w or u == x or v == w or v == x:
                    continue
                probes.append((u, v, w, x))
                index.append((i, j))
        self.pair_probes = probes
        self.pair_index = index

    def _build_table(self):
        n = self.n
        pts = self.points
        table = [0] * (n * n * n)
        for a in range(n):
            pa = pts[a]
            for b in range(n):
                if b == a:
                    continue
                pb = pts[b]
                base = (a * n + b) * n
                for c in range(n):
                    if c == a or c == b:
                        continue
                    o = orient(pa, pb, pts[c])
                    if o == 0:
                        return None  # collinear triple: use coordinates
                    table[base + c] = o
        return table

    def _slow_pair(self, sig, i, j):
        pts = self.points
        u, v = self.edges[i]
        w, x = self.edges[j]
        return segments_cross(pts[sig[u]], pts[sig[v]], pts[sig[w]], pts[sig[x]])

    def count(self, sig):
        """Total crossing pairs for the assignment."""
        T = self.table
        if T is None:
            m = self.m
            return sum(
                1
                for i in range(m)
                for j in range(i + 1, m)
                if self._slow_pair(sig, i, j)
            )
        n = self.n
        c = 0
        for u, v, w, x in self.pair_probes:
            a = sig[u]
            b = sig[v]
            cc = sig[w]
            dd = sig[x]
            ab = (a * n + b) * n
            if T[ab + cc] == T[ab + dd]:
                continue
            cd = (cc * n + dd) * n
            if T[cd + a] != T[cd + b]:
                c += 1
        return c

    def is_plane(self, sig):
        """True iff the assignment has no crossing; exits on the first one."""
        T = self.table
        if T is None:
            m = self.m
            for i in range(m):
                for j in range(i + 1, m):
                    if self._slow_pair(sig, i, j):
                        return False
            return True
        n = self.n
        for u, v, w, x in self.pair_probes:
            a = sig[u]
            b = sig[v]
            cc = sig[w]
            dd = sig[x]
            ab = (a * n + b) * n
            if T[ab + cc] == T[ab + dd]:
                continue
            cd = (cc * n + dd) * n
            if T[cd + a] != T[cd + b]:
                return False
        return True

    def pairs(self, sig):
        """Set of crossing edge-index pairs (i, j), i < j."""
        T = self.table
        if T is None:
            m = self.m
            return {
                (i, j)
                for i in range(m)
                for j in range(i + 1, m)
                if self._slow_pair(sig, i, j)
            }
        n = self.n
        out = set()
        for (u, v, w, x), ij in zip(self.pair_probes, self.pair_index):
            a = sig[u]
            b = sig[v]
            cc = sig[w]
            dd = sig[x]
            ab = (a * n + b) * n
            if T[ab + cc] == T[ab + dd]:
                continue
            cd = (cc * n + dd) * n
            if T[cd + a] != T[cd + b]:
                out.add(ij)
        return out


def enumeration_size(m_edges: int, depth: int) -> int:
    """Raw swap sequences of the given length, immediate repeats excluded."""
    if m_edges < 1 or depth < 1:
        raise ValueError("need m_edges >= 1 and depth >= 1")
    return m_edges * (m_edges - 1) ** (depth - 1)


def min_swaps(
    inst: PuzzleInstance,
    max_depth: int,
    *,
    count_solutions: bool = True,
    max_states: int = 2_000_000,
    solution_cap: int = SOLUTION_CAP,
) -> SolveReport:
    """Breadth-first search for the minimum number of swaps to a plane state.

    Returns min_swaps=None when no plane state exists within max_depth.
    With count_solutions the exact number of distinct minimal move
    sequences is reported, plus up to `solution_cap` representative
    sequences (one per reachable plane state, lexicographically smallest
    first). Raises SearchResourceError beyond max_states stored states.
    """
    if max_depth < 0:
        raise ValueError("max_depth must be >= 0")
    edges = inst.edges
    m = len(edges)
    eng = _CrossingEngine(inst)
    sig0 = tuple(inst.assignment)
    if eng.is_plane(sig0):
        return SolveReport(
            min_swaps=0, max_depth=max_depth, solution_count=1, solutions=[[]]
        )

    nodes = 0
    visited = {sig0}
    frontier = [(sig0, -1)]
    found_depth = None
    depth = 0
    while frontier and depth < max_depth and found_depth is None:
        depth += 1
        nxt = []
        for sig, last in frontier:
            nodes += 1
            lsig = list(sig)
            for e in range(m):
                if e == last:
                    continue
                u, v = edges[e]
                lsig[u], lsig[v] = lsig[v], lsig[u]
                child = tuple(lsig)
                lsig[u], lsig[v] = lsig[v], lsig[u]
                if child in visited:
                    continue
                if eng.is_plane(child):
                    found_depth = depth
                    break
                visited.add(child)
                if len(visited) > max_states:
                    raise SearchResourceError(
                        f"more than {max_states} states at depth {depth}"
                    )
                nxt.append((child, e))
            if found_depth is not None:
                break
        frontier = nxt

    if found_depth is None:
        return SolveReport(min_swaps=None, max_depth=max_depth, nodes_expanded=nodes)
    if not count_solutions:
        return SolveReport(
            min_swaps=found_depth, max_depth=max_depth, nodes_expanded=nodes
        )

    count, solutions = _count_minimal_sequences(
        eng, sig0, found_depth, max_states, solution_cap
    )
    report = SolveReport(
        min_swaps=found_depth,
        max_depth=max_depth,
        solution_count=count,
        solutions=solutions,
        nodes_expanded=nodes,
    )
    if solutions:
        first = solutions[0]
        report.independent_pairs = [
            (i, j)
            for i in range(len(first))
            for j in range(i + 1, len(first))
            if independent(inst, SwapMove(first[i]), SwapMove(first[j]))
        ]
    return report


def _count_minimal_sequences(eng, sig0, depth, max_states, cap):
    """Exact count of distinct minimal sequences via a layered DP.

    Layer states are (assignment, last edge) pairs carrying the number of
    distinct sequences reaching them and the lexicographically smallest
    one. Minimal sequences cannot pass through a plane state early, so
    only the final layer is tested for planarity.
    """
    edges = eng.edges
    m = eng.m
    layer = {(sig0, -1): (1, ())}
    for _ in range(depth):
        nxt = {}
        for (sig, last), (cnt, seq) in layer.items():
            lsig = list(sig)
            for e in range(m):
                if e == last:
                    continue
                u, v = edges[e]
                lsig[u], lsig[v] = lsig[v], lsig[u]
                child = tuple(lsig)
                lsig[u], lsig[v] = lsig[v], lsig[u]
                key = (child, e)
                nseq = seq + (e,)
                cur = nxt.get(key)
                if cur is None:
                    nxt[key] = (cnt, nseq)
                    if len(nxt) > max_states:
                        raise SearchResourceError(
                            f"more than {max_states} sequence states"
                        )
                else:
                    nxt[key] = (cur[0] + cnt, min(cur[1], nseq))
        layer = nxt
    total = 0
    reps = []
    plane_cache = {}
    for (sig, last), (cnt, seq) in layer.items():
        plane = plane_cache.get(sig)
        if plane is None:
            plane = eng.is_plane(sig)
            plane_cache[sig] = plane
        if plane:
            total += cnt
            reps.append(seq)
    reps.sort()
    return total, [list(s) for s in reps[:cap]]


def independent(inst: PuzzleInstance, move_a: SwapMove, move_b: SwapMove) -> bool:
    """True iff the two swaps touch four distinct vertices with no other
    edge among them."""
    ea = inst.edges[move_a.edge]
    eb = inst.edges[move_b.edge]
    four = {ea[0], ea[1], eb[0], eb[1]}
    if len(four) != 4:
        return False
    for idx, (u, v) in enumerate(inst.edges):
        if idx in (move_a.edge, move_b.edge):
            continue
        if u in four and v in four:
            return False
    return True


# ---------------------------------------------------------------------------
# constructive routing (place vertices one by one along graph paths)

@dataclass
class RoutePlan:
    moves: list  # SwapMove, in order
    phases: list  # (vertex placed, swaps spent on it)


def _adjacency(inst):
    adj = [[] for _ in range(inst.n)]
    edge_index = {}
    for i, (u, v) in enumerate(inst.edges):
        adj[u].append(v)
        adj[v].append(u)
        edge_index[(u, v)] = i
        edge_index[(v, u)] = i
    for lst in adj:
        lst.sort()
    return adj, edge_index


def _components(n, adj):
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        comp = []
        queue = deque([s])
        seen[s] = True
        while queue:
            x = queue.popleft()
            comp.append(x)
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def _spanning_leaf(remaining, adj):
    """A vertex whose removal keeps the remaining graph connected."""
    root = min(remaining)
    parent = {root: None}
    order = [root]
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y in remaining and y not in parent:
                parent[y] = x
                order.append(y)
                queue.append(y)
    parents = {p for p in parent.values() if p is not None}
    leaves = [v for v in order if v not in parents]
    return min(leaves)


def _bfs_path(src, dst, remaining, adj):
    parent = {src: None}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        if x == dst:
            path = []
            while x is not None:
                path.append(x)
                x = parent[x]
            return path[::-1]
        for y in adj[x]:
            if y in remaining and y not in parent:
                parent[y] = x
                queue.append(y)
    raise AssertionError("no path inside a connected component")


def route_plan(inst: PuzzleInstance, target) -> RoutePlan:
    """Swap sequence transforming the current assignment into `target`.

    Works per connected component: repeatedly pick a spanning-tree leaf,
    walk the vertex currently sitting on its target point to it along a
    graph path (one swap per path edge), then retire the leaf. Each
    placement costs at most n-1 swaps, the whole plan at most n(n-1).
    """
    n = inst.n
    target = tuple(target)
    if sorted(target) != list(range(n)):
        raise ValueError("target is not a permutation of point indices")
    adj, edge_index = _adjacency(inst)
    comps = _components(n, adj)
    cur = list(inst.assignment)
    for comp in comps:
        if sorted(cur[v] for v in comp) != sorted(target[v] for v in comp):
            raise UnreachableTargetError(
                f"target moves points in or out of component {comp}"
            )
    vertex_at = {cur[v]: v for v in range(n)}
    moves = []
    phases = []
    for comp in comps:
        remaining = set(comp)
        while len(remaining) > 1:
            vj = _spanning_leaf(remaining, adj)
            pj = target[vj]
            vk = vertex_at[pj]
            spent = 0
            if vk != vj:
                path = _bfs_path(vk, vj, remaining, adj)
                for w1, w2 in zip(path, path[1:]):
                    moves.append(SwapMove(edge_index[(w1, w2)]))
                    cur[w1], cur[w2] = cur[w2], cur[w1]
                    vertex_at[cur[w1]] = w1
                    vertex_at[cur[w2]] = w2
                    spent += 1
            phases.append((vj, spent))
            remaining.remove(vj)
    if cur != list(target):
        raise AssertionError("routing failed to reach the target assignment")
    return RoutePlan(moves=moves, phases=phases)


def route_to_assignment(inst: PuzzleInstance, target):
    """Moves only; see route_plan."""
    return route_plan(inst, target).moves


def exhaustive_solvable(inst: PuzzleInstance, max_assignments: int = 10_000_000):
    """Ground truth for tiny instances: does any reachable assignment have
    zero crossings?

    Reachable means every connected component keeps its point set.
    Returns (solvable, witness assignment or None). Raises
    EnumerationGuardError when the candidate count exceeds the guard.
    """
    n = inst.n
    adj, _ = _adjacency(inst)
    comps = _components(n, adj)
    total = 1
    for comp in comps:
        total *= factorial(len(comp))
        if total > max_assignments:
            raise EnumerationGuardError(
                f"would enumerate more than {max_assignments} assignments"
            )
    eng = _CrossingEngine(inst)
    comp_points = [sorted(inst.assignment[v] for v in comp) for comp in comps]
    for combo in itertools.product(
        *[itertools.permutations(cp) for cp in comp_points]
    ):
        sigma = [0] * n
        for comp, perm in zip(comps, combo):
            for v, p in zip(comp, perm):
                sigma[v] = p
        if eng.is_plane(tuple(sigma)):
            return True, tuple(sigma)
    return False, None
