"""Level generation: points -> Delaunay -> flips -> edge removal -> shuffle.

The generator first builds a plane graph (the solution), then walks it
away from planarity with random swaps until the solver certifies that
the minimum distance back to any plane state is exactly the requested
difficulty.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace

from .geom import GRID_SIZE
from .pointgen import PointGenParams, PointGenStats, generate_points
from .puzzle import (
    GenerationMeta,
    PuzzleInstance,
    RenderMetrics,
    SwapMove,
    apply_swap,
    crossing_count,
    make_instance,
    validate,
)
from .solve import SolveReport, min_swaps
from .triangulate import Triangulation, delaunay, lawson_flips


class GenerationError(RuntimeError):
    pass


class ShuffleBudgetError(GenerationError):
    """Shuffling could not reach the requested minimum swap count."""

    def __init__(self, wanted, achieved, rounds):
        super().__init__(
            f"could not reach difficulty {wanted} after {rounds} extra rounds "
            f"(last verified minimum: {achieved})"
        )
        self.wanted = wanted
        self.achieved = achieved
        self.rounds = rounds


@dataclass(frozen=True)
class GenerationParams:
    n: int
    s: int
    delta: int
    m: int | None = None  # target edge count, or
    removed: int | None = None  # edges to remove from the flipped triangulation
    rho: int | None = None  # default delta // 3
    lam: int | None = None  # default delta // 3
    flips: int = 3
    seed: int = 0
    grid_size: int = GRID_SIZE
    threshold: int = 1000
    max_restarts: int = 1000
    max_shuffle_rounds: int = 50
    solver_max_states: int = 2_000_000

    def metrics(self) -> RenderMetrics:
        rho = self.delta // 3 if self.rho is None else self.rho
        lam = rho if self.lam is None else self.lam
        return RenderMetrics(rho=rho, lam=lam, delta=self.delta)

    def validate(self):
        if self.n < 3:
            raise ValueError("n must be >= 3")
        if self.s < 1:
            raise ValueError("s must be >= 1")
        if (self.m is None) == (self.removed is None):
            raise ValueError("give exactly one of m or removed")
        if self.m is not None and self.m > 3 * self.n - 6:
            raise ValueError(f"m={self.m} exceeds 3n-6={3 * self.n - 6}")
        if self.m is not None and self.m < 1:
            raise ValueError("m must be >= 1")
        if self.removed is not None and self.removed < 0:
            raise ValueError("removed must be >= 0")
        mt = self.metrics()
        if not (0 < mt.lam < 2 * mt.rho and 2 * mt.rho < mt.delta):
            raise ValueError("need lambda < 2*rho < delta (all positive)")


@dataclass
class GenerationResult:
    instance: PuzzleInstance
    pointgen_stats: PointGenStats
    report: SolveReport
    shuffle_moves: list = field(default_factory=list)  # SwapMove, in order
    removed: int = 0
    flips_performed: int = 0


def remove_edges(t: Triangulation, m: int, seed):
    """Randomly remove edges until m remain, never isolating a vertex.

    Edges with a degree-1 endpoint are not removal candidates. Returns
    (edge list, stuck): stuck is True when fewer than the requested
    removals were possible.
    """
    if m > len(t.edges):
        raise ValueError(f"cannot keep {m} of {len(t.edges)} edges")
    rng = random.Random(seed)
    edges = sorted(t.edges)
    degree = {}
    for u, v in edges:
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
    while len(edges) > m:
        eligible = [
            i for i, (u, v) in enumerate(edges) if degree[u] > 1 and degree[v] > 1
        ]
        if not eligible:
            return edges, True
        u, v = edges.pop(eligible[rng.randrange(len(eligible))])
        degree[u] -= 1
        degree[v] -= 1
    return edges, False


def shuffle(solution: PuzzleInstance, s: int, seed, *,
            max_rounds: int = 50, solver_max_states: int = 2_000_000):
    """Swap-walk the plane solution until its verified minimum is exactly s.

    Never swaps the same edge twice in a row (that would undo the step).
    When the solver finds a shorter way back, one more random swap is
    added and the instance re-verified, up to max_rounds extra swaps.
    Returns (instance, moves); the instance records the solution
    assignment. Raises ShuffleBudgetError when the budget runs out.
    """
    if crossing_count(solution) != 0:
        raise ValueError("shuffle needs a plane instance")
    if s < 1:
        raise ValueError("s must be >= 1")
    if solution.m < 2 and s > 1:
        raise GenerationError("need at least 2 edges to shuffle further than 1")
    rng = random.Random(seed)
    inst = solution
    moves = []
    last = -1

    def swap_once():
        nonlocal inst, last
        if inst.m == 1:
            e = 0  # a repeat merely undoes; the round budget still applies
        else:
            while True:
                e = rng.randrange(inst.m)
                if e != last:
                    break
        inst = apply_swap(inst, SwapMove(e))
        moves.append(SwapMove(e))
        last = e

    for _ in range(s):
        swap_once()
    rounds = 0
    while True:
        report = min_swaps(
            inst, max_depth=s, count_solutions=False, max_states=solver_max_states
        )
        if report.min_swaps == s:
            final = replace(inst, solution_assignment=tuple(solution.assignment))
            return final, moves
        if rounds >= max_rounds:
            achieved = report.min_swaps if report.found else f">{s}"
            raise ShuffleBudgetError(s, achieved, rounds)
        rounds += 1
        swap_once()


def generate_level(params: GenerationParams) -> GenerationResult:
    """Run the five-step pipeline; deterministic for a given seed."""
    params.validate()
    seeder = random.Random(params.seed)
    seed_points, seed_flips, seed_remove, seed_shuffle = (
        seeder.getrandbits(64) for _ in range(4)
    )

    points, stats = generate_points(
        PointGenParams(
            n=params.n,
            delta=params.delta,
            grid_size=params.grid_size,
            threshold=params.threshold,
            seed=seed_points,
            max_restarts=params.max_restarts,
        )
    )
    tri = delaunay(points)
    tri, flips_performed = lawson_flips(tri, params.flips, seed_flips)

    if params.m is not None:
        m = params.m
    else:
        m = len(tri.edges) - params.removed
        if m < 1:
            raise GenerationError(
                f"removing {params.removed} of {len(tri.edges)} edges leaves no graph"
            )
    if m > len(tri.edges):
        raise GenerationError(
            f"target m={m} exceeds the {len(tri.edges)} triangulation edges"
        )
    removed = len(tri.edges) - m
    edges, stuck = remove_edges(tri, m, seed_remove)
    if stuck:
        raise GenerationError(
            f"edge removal stuck at {len(edges)} edges (wanted {m}): "
            "every remaining edge has a degree-1 endpoint"
        )

    meta = GenerationMeta(
        n=params.n, m=m, s=params.s, flips=params.flips,
        removed=removed, seed=params.seed,
    )
    solution = make_instance(
        points=points,
        edges=edges,
        assignment=range(params.n),
        metrics=params.metrics(),
        meta=meta,
        grid_size=params.grid_size,
        solution_assignment=range(params.n),
    )
    problems = validate(solution)
    if problems:
        raise GenerationError(f"pipeline produced an invalid solution: {problems}")
    if crossing_count(solution) != 0:
        raise GenerationError("pipeline solution graph is not plane")

    inst, moves = shuffle(
        solution,
        params.s,
        seed_shuffle,
        max_rounds=params.max_shuffle_rounds,
        solver_max_states=params.solver_max_states,
    )
    report = min_swaps(
        inst, max_depth=params.s, max_states=params.solver_max_states
    )
    return GenerationResult(
        instance=inst,
        pointgen_stats=stats,
        report=report,
        shuffle_moves=moves,
        removed=removed,
        flips_performed=flips_performed,
    )
