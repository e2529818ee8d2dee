"""Puzzle state: fixed points, graph edges, a vertex-to-point assignment.

The only move is swapping the two endpoints of an edge; positions never
change, only the assignment permutation does. Instances are immutable
values, and the canonical JSON form defined here is the single persisted
artifact of the whole toolkit.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace

from .geom import GRID_SIZE, segments_cross
from .pointgen import validate_delta_general_position


@dataclass(frozen=True)
class RenderMetrics:
    rho: int  # vertex disc radius, grid units
    lam: int  # edge width, grid units ("lambda" in the JSON form)
    delta: int  # general-position separation, grid units


@dataclass(frozen=True)
class GenerationMeta:
    n: int
    m: int
    s: int
    flips: int
    removed: int
    seed: int


@dataclass(frozen=True)
class SwapMove:
    edge: int  # index into the instance's edge list


@dataclass(frozen=True)
class PuzzleInstance:
    points: tuple  # ((x, y), ...)
    edges: tuple  # ((u, v), ...) with u < v, sorted
    assignment: tuple  # vertex index -> point index
    metrics: RenderMetrics
    meta: GenerationMeta
    grid_size: int = GRID_SIZE
    solution_assignment: tuple | None = None

    @property
    def n(self):
        return len(self.points)

    @property
    def m(self):
        return len(self.edges)

    def vertex_point(self, v):
        """Grid point the vertex is currently drawn at."""
        return self.points[self.assignment[v]]


class InstanceFormatError(ValueError):
    """An instance file violates the canonical schema or an invariant."""

    def __init__(self, violations):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


def normalize_edges(edges):
    """Sorted tuple of (u, v) pairs with u < v."""
    return tuple(sorted((u, v) if u < v else (v, u) for u, v in edges))


def make_instance(points, edges, assignment, metrics, meta,
                  grid_size=GRID_SIZE, solution_assignment=None):
    return PuzzleInstance(
        points=tuple(tuple(p) for p in points),
        edges=normalize_edges(edges),
        assignment=tuple(assignment),
        metrics=metrics,
        meta=meta,
        grid_size=grid_size,
        solution_assignment=None if solution_assignment is None
        else tuple(solution_assignment),
    )


def apply_swap(inst: PuzzleInstance, move: SwapMove) -> PuzzleInstance:
    """Exchange the positions of the endpoints of the given edge."""
    if not 0 <= move.edge < inst.m:
        raise IndexError(f"edge index {move.edge} out of range")
    u, v = inst.edges[move.edge]
    sigma = list(inst.assignment)
    sigma[u], sigma[v] = sigma[v], sigma[u]
    return replace(inst, assignment=tuple(sigma))


def crossing_pairs(inst: PuzzleInstance):
    """Edge-index pairs (i, j), i < j, whose drawn segments cross."""
    pts = inst.points
    sigma = inst.assignment
    segs = [(pts[sigma[u]], pts[sigma[v]]) for u, v in inst.edges]
    out = []
    for i in range(len(segs)):
        a, b = segs[i]
        for j in range(i + 1, len(segs)):
            c, d = segs[j]
            if segments_cross(a, b, c, d):
                out.append((i, j))
    return out


def crossing_count(inst: PuzzleInstance) -> int:
    return len(crossing_pairs(inst))


def is_solved(inst: PuzzleInstance) -> bool:
    return crossing_count(inst) == 0


def validate(inst: PuzzleInstance):
    """All invariant violations of the instance, empty when valid."""
    v = []
    n = inst.n
    g = inst.grid_size
    if g < 2 or g > GRID_SIZE or g & (g - 1):
        v.append(f"grid_size {g} is not a power of two <= 2**16")
    if n < 2:
        v.append("instance needs at least 2 points")
    if len(set(inst.points)) != n:
        v.append("points are not distinct")
    for p in inst.points:
        if not (0 <= p[0] < g and 0 <= p[1] < g):
            v.append(f"point {p} outside the grid")
            break
    if sorted(inst.assignment) != list(range(n)):
        v.append("assignment is not a permutation of point indices")
    if inst.solution_assignment is not None and sorted(
        inst.solution_assignment
    ) != list(range(n)):
        v.append("solution_assignment is not a permutation of point indices")
    if not inst.edges:
        v.append("edge list is empty")
    seen = set()
    degree = [0] * n
    for u, w in inst.edges:
        if u == w:
            v.append(f"self loop at vertex {u}")
            continue
        if not (0 <= u < n and 0 <= w < n):
            v.append(f"edge ({u}, {w}) references a missing vertex")
            continue
        key = (min(u, w), max(u, w))
        if key in seen:
            v.append(f"duplicate edge {key}")
        seen.add(key)
        degree[u] += 1
        degree[w] += 1
    if n >= 2 and inst.edges:
        isolated = [i for i, d in enumerate(degree) if d == 0]
        if isolated:
            v.append(f"isolated vertices {isolated}")
    mt = inst.metrics
    if not (0 < mt.lam < 2 * mt.rho):
        v.append("metrics must satisfy 0 < lambda < 2*rho")
    if not mt.delta > 2 * mt.rho:
        v.append("metrics must satisfy delta > 2*rho")
    if inst.meta.n != n:
        v.append(f"meta.n {inst.meta.n} != point count {n}")
    if inst.meta.m != inst.m:
        v.append(f"meta.m {inst.meta.m} != edge count {inst.m}")
    if not v and not validate_delta_general_position(inst.points, mt.delta):
        v.append(f"points are not in delta-general position for delta={mt.delta}")
    return v


# ---------------------------------------------------------------------------
# canonical JSON form

def instance_to_payload(inst: PuzzleInstance) -> dict:
    return {
        "version": 1,
        "grid_size": inst.grid_size,
        "points": [list(p) for p in inst.points],
        "edges": [list(e) for e in inst.edges],
        "assignment": list(inst.assignment),
        "solution_assignment": None
        if inst.solution_assignment is None
        else list(inst.solution_assignment),
        "metrics": {
            "rho": inst.metrics.rho,
            "lambda": inst.metrics.lam,
            "delta": inst.metrics.delta,
        },
        "meta": {
            "n": inst.meta.n,
            "m": inst.meta.m,
            "s": inst.meta.s,
            "flips": inst.meta.flips,
            "removed": inst.meta.removed,
            "seed": inst.meta.seed,
        },
    }


def dumps_instance(inst: PuzzleInstance) -> str:
    """Canonical serialization: fixed field order, sorted edges, LF ending."""
    return json.dumps(instance_to_payload(inst), separators=(",", ":")) + "\n"


def _payload_error(msg):
    raise InstanceFormatError([msg])


def instance_from_payload(payload) -> PuzzleInstance:
    if not isinstance(payload, dict):
        _payload_error("top level is not an object")
    if payload.get("version") != 1:
        _payload_error(f"unsupported version {payload.get('version')!r}")
    try:
        points = tuple((int(x), int(y)) for x, y in payload["points"])
        edges_raw = [(int(u), int(v)) for u, v in payload["edges"]]
        assignment = tuple(int(a) for a in payload["assignment"])
        sol = payload["solution_assignment"]
        solution = None if sol is None else tuple(int(a) for a in sol)
        mt = payload["metrics"]
        metrics = RenderMetrics(int(mt["rho"]), int(mt["lambda"]), int(mt["delta"]))
        me = payload["meta"]
        meta = GenerationMeta(
            int(me["n"]), int(me["m"]), int(me["s"]),
            int(me["flips"]), int(me["removed"]), int(me["seed"]),
        )
        grid_size = int(payload["grid_size"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InstanceFormatError([f"malformed instance payload: {exc}"]) from exc
    inst = PuzzleInstance(
        points=points,
        edges=normalize_edges(edges_raw),
        assignment=assignment,
        metrics=metrics,
        meta=meta,
        grid_size=grid_size,
        solution_assignment=solution,
    )
    violations = validate(inst)
    if violations:
        raise InstanceFormatError(violations)
    return inst


def loads_instance(text: str) -> PuzzleInstance:
    return instance_from_payload(json.loads(text))


def save_instance(inst: PuzzleInstance, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_instance(inst))


def load_instance(path) -> PuzzleInstance:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_instance(fh.read())


# ---------------------------------------------------------------------------
# fixtures

def _fixture_metrics(points, cap=2000):
    from .geom import max_general_position_delta

    delta = min(cap, max_general_position_delta(points))
    if delta < 3:
        raise AssertionError("fixture points leave no room for delta > 2*rho")
    rho = delta // 3
    return RenderMetrics(rho=rho, lam=rho, delta=delta)


def make_cycle_fixture(n: int = 8, grid_size: int = GRID_SIZE) -> PuzzleInstance:
    """An n-cycle on a convex n-gon drawn with exactly one crossing.

    Positions sit clockwise on a circle; the identity assignment is the
    plane solution, while the start assignment reverses the second half
    of the cycle so that exactly two chords cross. Untangling it takes
    C(n/2, 2) swaps.
    """
    if n < 4 or n % 2:
        raise ValueError("cycle fixture needs an even n >= 4")
    cx = cy = grid_size // 2
    r = (grid_size * 7) // 16
    pts = []
    for k in range(n):
        theta = math.pi / (2 * n) - 2 * math.pi * k / n  # clockwise
        pts.append((cx + round(r * math.cos(theta)), cy + round(r * math.sin(theta))))
    if len(set(pts)) != n:
        raise AssertionError("cycle fixture produced duplicate points")
    half = n // 2
    sigma = [j if j < half else 3 * half - 1 - j for j in range(n)]
    edges = [(i, (i + 1) % n) for i in range(n)]
    s = half * (half - 1) // 2
    inst = make_instance(
        points=pts,
        edges=edges,
        assignment=sigma,
        metrics=_fixture_metrics(pts),
        meta=GenerationMeta(n=n, m=n, s=s, flips=0, removed=0, seed=0),
        grid_size=grid_size,
        solution_assignment=range(n),
    )
    if validate(inst):
        raise AssertionError(f"cycle fixture invalid: {validate(inst)}")
    if crossing_count(inst) != 1:
        raise AssertionError("cycle fixture does not have exactly one crossing")
    return inst


def make_eight_cycle_fixture() -> PuzzleInstance:
    return make_cycle_fixture(8)


def make_basic_construction_fixture(grid_size: int = GRID_SIZE) -> PuzzleInstance:
    """Seven-vertex path gadget solvable by exactly one swap.

    The first two and last two vertices sit on square corners, the middle
    three inside; only the second and second-to-last edges cross. Swapping
    either the first or the last path edge yields a plane drawing.
    """
    unit = grid_size // 16
    off = 2 * unit
    raw = [(0, 0), (0, 10), (8, 6), (5, 4), (2, 6), (10, 10), (10, 0)]
    pts = [(off + x * unit, off + y * unit) for x, y in raw]
    edges = [(i, i + 1) for i in range(6)]
    solution = [0, 1, 2, 3, 4, 6, 5]  # last edge swapped
    inst = make_instance(
        points=pts,
        edges=edges,
        assignment=range(7),
        metrics=_fixture_metrics(pts),
        meta=GenerationMeta(n=7, m=6, s=1, flips=0, removed=0, seed=0),
        grid_size=grid_size,
        solution_assignment=solution,
    )
    if validate(inst):
        raise AssertionError(f"basic construction invalid: {validate(inst)}")
    pairs = crossing_pairs(inst)
    if pairs != [(1, 4)]:
        raise AssertionError(f"basic construction crossings wrong: {pairs}")
    return inst
