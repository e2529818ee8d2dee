"""Rejection sampling of point sets in delta-general position.

Points are added one at a time, uniformly over the grid square. A
candidate is kept only if it keeps the whole set in delta-general
position, which is tested against every pair of already accepted points.
Each round gets `threshold` candidate draws; when they are used up the
set is discarded and generation restarts, up to `max_restarts` times.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .geom import GRID_SIZE, convex_hull, delta_ok, forbidden_region_violated


@dataclass(frozen=True)
class PointGenParams:
    n: int
    delta: int
    grid_size: int = GRID_SIZE
    threshold: int = 500
    seed: int = 0
    max_restarts: int = 1000

    def validate(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.delta < 1:
            raise ValueError("delta must be >= 1")
        g = self.grid_size
        if g < 2 or g > GRID_SIZE or g & (g - 1):
            raise ValueError("grid_size must be a power of two <= 2**16")
        if self.threshold < 1:
            raise ValueError("threshold must be >= 1")
        # threshold < n can never finish a round; allowed so that sweeps
        # can record such runs as censored failures


@dataclass
class PointGenStats:
    total_attempts: int
    restarts: int
    interior_count: int


class PointGenError(RuntimeError):
    """Generation gave up after exhausting max_restarts rounds."""

    def __init__(self, params: PointGenParams, total_attempts: int, restarts: int):
        super().__init__(
            f"no {params.n}-point set in delta-general position found "
            f"(delta={params.delta}) after {restarts} restarts "
            f"({total_attempts} attempts)"
        )
        self.params = params
        self.total_attempts = total_attempts
        self.restarts = restarts


def _acceptable(accepted, accepted_set, candidate, delta):
    if candidate in accepted_set:
        return False
    m = len(accepted)
    for i in range(m):
        p = accepted[i]
        for j in range(i + 1, m):
            if forbidden_region_violated(p, accepted[j], candidate, delta):
                return False
    return True


def generate_points(params: PointGenParams):
    """Sample params.n grid points in delta-general position.

    Returns (points, stats). Deterministic for a given seed: the RNG
    stream continues across restarts. Raises PointGenError when
    max_restarts rounds all fail.
    """
    params.validate()
    rng = random.Random(params.seed)
    g = params.grid_size
    accepted: list = []
    accepted_set: set = set()
    total = 0
    restarts = 0
    round_attempts = 0
    while len(accepted) < params.n:
        if round_attempts >= params.threshold:
            restarts += 1
            if restarts > params.max_restarts:
                raise PointGenError(params, total, restarts - 1)
            accepted.clear()
            accepted_set.clear()
            round_attempts = 0
        candidate = (rng.randrange(g), rng.randrange(g))
        total += 1
        round_attempts += 1
        if _acceptable(accepted, accepted_set, candidate, params.delta):
            accepted.append(candidate)
            accepted_set.add(candidate)
    interior = params.n - len(convex_hull(accepted))
    return accepted, PointGenStats(total, restarts, interior)


def validate_delta_general_position(points, delta):
    """Exhaustive triple check; the independent oracle for generate_points."""
    n = len(points)
    for i in range(n):
        p = points[i]
        for j in range(i + 1, n):
            q = points[j]
            if p == q:
                return False
            for k in range(j + 1, n):
                r = points[k]
                if p == r or q == r:
                    return False
                if not (
                    delta_ok(p, q, r, delta)
                    and delta_ok(p, r, q, delta)
                    and delta_ok(q, r, p, delta)
                ):
                    return False
    return True
