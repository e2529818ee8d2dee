import random

import pytest

from swaptangle.generate import GenerationParams, generate_level
from swaptangle.geom import GRID_SIZE
from swaptangle.pointgen import PointGenParams, generate_points
from swaptangle.puzzle import GenerationMeta, RenderMetrics, make_instance
from swaptangle.triangulate import delaunay

DELTA_EASY = round(0.01 * GRID_SIZE)  # comfortable separation for tests


def general_points(n, seed, delta=DELTA_EASY, threshold=5000):
    """Seeded delta-general point set."""
    pts, _ = generate_points(
        PointGenParams(n=n, delta=delta, threshold=threshold, seed=seed)
    )
    return pts


def connected_edges(points, seed, extra=2):
    """Connected plane subgraph of the Delaunay triangulation."""
    rng = random.Random(seed)
    tri = delaunay(points)
    edges = sorted(tri.edges)
    rng.shuffle(edges)
    n = len(points)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen = []
    rest = []
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            chosen.append((u, v))
        else:
            rest.append((u, v))
    chosen.extend(rest[:extra])
    return chosen


def plain_instance(points, edges, delta=DELTA_EASY, s=1, assignment=None):
    """Instance with identity (or given) assignment and consistent meta."""
    n = len(points)
    rho = max(1, delta // 3)
    return make_instance(
        points=points,
        edges=edges,
        assignment=assignment if assignment is not None else range(n),
        metrics=RenderMetrics(rho=rho, lam=rho, delta=delta),
        meta=GenerationMeta(n=n, m=len(set(map(tuple, map(sorted, edges)))), s=s,
                            flips=0, removed=0, seed=0),
    )


def random_connected_instance(n, seed, extra=2, delta=DELTA_EASY):
    pts = general_points(n, seed, delta=delta)
    edges = connected_edges(pts, seed * 31 + 7, extra=extra)
    return plain_instance(pts, edges, delta=delta)


@pytest.fixture
def small_level():
    """A small generated level shared by a few tests."""
    return generate_level(
        GenerationParams(
            n=9, s=2, delta=DELTA_EASY, removed=2, flips=2, seed=5, threshold=2000
        )
    )
