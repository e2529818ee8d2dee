import pytest

from swaptangle.generate import (
    GenerationError,
    GenerationParams,
    ShuffleBudgetError,
    generate_level,
    remove_edges,
    shuffle,
)
from swaptangle.geom import GRID_SIZE
from swaptangle.puzzle import apply_swap, crossing_count, dumps_instance, validate
from swaptangle.solve import min_swaps
from swaptangle.triangulate import Triangulation, delaunay

from conftest import DELTA_EASY, general_points, plain_instance


class TestRemoveEdges:
    def test_identity_when_m_equals_edges(self):
        tri = delaunay(general_points(8, seed=2))
        edges, stuck = remove_edges(tri, len(tri.edges), seed=0)
        assert not stuck
        assert set(edges) == tri.edges

    def test_star_is_stuck(self):
        # K_{1,3}: every edge has a degree-1 endpoint
        pts = [(30000, 30000), (1000, 1000), (60000, 2000), (31000, 61000)]
        star = Triangulation(points=pts, edges={(0, 1), (0, 2), (0, 3)}, triangles=[])
        edges, stuck = remove_edges(star, 2, seed=1)
        assert stuck
        assert len(edges) == 3

    def test_never_isolates(self):
        for seed in range(6):
            tri = delaunay(general_points(9, seed=seed + 10))
            m = 9  # keep roughly half
            edges, stuck = remove_edges(tri, m, seed=seed)
            degree = {}
            for u, v in edges:
                degree[u] = degree.get(u, 0) + 1
                degree[v] = degree.get(v, 0) + 1
            if not stuck:
                assert len(edges) == m
            assert all(degree.get(v, 0) >= 1 for v in range(9))

    def test_m_too_large(self):
        tri = delaunay(general_points(6, seed=3))
        with pytest.raises(ValueError):
            remove_edges(tri, len(tri.edges) + 1, seed=0)


class TestShuffle:
    def _solution(self, n=8, seed=4):
        pts = general_points(n, seed=seed)
        tri = delaunay(pts)
        edges, _ = remove_edges(tri, len(tri.edges) - 2, seed=seed)
        return plain_instance(pts, edges, s=1)

    def test_one_swap_difficulty(self):
        inst, moves = shuffle(self._solution(), 1, seed=5)
        assert len(moves) >= 1
        assert crossing_count(inst) > 0
        assert min_swaps(inst, 1).min_swaps == 1

    def test_two_swap_difficulty(self):
        inst, moves = shuffle(self._solution(seed=6), 2, seed=6)
        assert min_swaps(inst, 2).min_swaps == 2

    def test_requires_plane_input(self):
        inst, _ = shuffle(self._solution(), 1, seed=7)
        with pytest.raises(ValueError):
            shuffle(inst, 1, seed=8)

    def test_no_immediate_repeat(self):
        _, moves = shuffle(self._solution(seed=9), 3, seed=9)
        for a, b in zip(moves, moves[1:]):
            assert a.edge != b.edge

    def test_records_solution_assignment(self):
        solution = self._solution(seed=12)
        inst, _ = shuffle(solution, 2, seed=12)
        assert inst.solution_assignment == solution.assignment

    def test_budget_error_reports_achieved(self):
        # an isolated edge instance: swapping its only edge never changes
        # the drawing, so difficulty 1 is unreachable
        pts = [(1000, 1000), (50000, 2000)]
        inst = plain_instance(pts, [(0, 1)], delta=100)
        with pytest.raises((ShuffleBudgetError, GenerationError)):
            shuffle(inst, 1, seed=1, max_rounds=3)


class TestGenerateLevel:
    def test_minimal_pipeline(self):
        # smallest run that can need a swap: on 3 points every pair of
        # triangle edges shares an endpoint, so nothing ever crosses there
        res = generate_level(
            GenerationParams(n=4, s=1, delta=3000, m=4, flips=0, seed=8,
                             threshold=500)
        )
        inst = res.instance
        assert inst.n == 4 and inst.m == 4
        assert validate(inst) == []
        assert res.report.min_swaps == 1

    def test_three_point_triangle_always_plane(self):
        from swaptangle.puzzle import SwapMove

        pts = general_points(3, seed=1, delta=3000)
        inst = plain_instance(pts, [(0, 1), (1, 2), (0, 2)], delta=3000)
        import itertools

        for seq in itertools.product(range(3), repeat=3):
            cur = inst
            for e in seq:
                cur = apply_swap(cur, SwapMove(e))
            assert crossing_count(cur) == 0

    def test_screenshot_parameters(self):
        # n=11, delta 3% of the playing area, 3 flips, 4 removed, 2 swaps
        res = generate_level(
            GenerationParams(
                n=11,
                s=2,
                delta=round(0.03 * GRID_SIZE),
                removed=4,
                flips=3,
                seed=2024,
                threshold=2000,
            )
        )
        inst = res.instance
        assert validate(inst) == []
        assert res.report.min_swaps == 2
        assert inst.meta.removed == 4
        assert inst.meta.flips == 3

    def test_determinism_same_seed_identical_bytes(self):
        params = GenerationParams(n=8, s=2, delta=DELTA_EASY, removed=2, flips=2,
                                  seed=99, threshold=2000)
        a = generate_level(params)
        b = generate_level(params)
        assert dumps_instance(a.instance) == dumps_instance(b.instance)
        assert [m.edge for m in a.shuffle_moves] == [m.edge for m in b.shuffle_moves]

    def test_different_seeds_differ(self):
        base = dict(n=8, s=2, delta=DELTA_EASY, removed=2, flips=2, threshold=2000)
        a = generate_level(GenerationParams(seed=1, **base))
        b = generate_level(GenerationParams(seed=2, **base))
        assert dumps_instance(a.instance) != dumps_instance(b.instance)

    def test_output_not_solved_and_undo_restores(self):
        res = generate_level(
            GenerationParams(n=9, s=3, delta=DELTA_EASY, removed=3, flips=2,
                             seed=55, threshold=2000)
        )
        inst = res.instance
        assert crossing_count(inst) >= 1
        cur = inst
        for mv in reversed(res.shuffle_moves):
            cur = apply_swap(cur, mv)
        assert crossing_count(cur) == 0
        assert cur.assignment == inst.solution_assignment

    def test_pre_shuffle_graph_is_plane(self):
        from dataclasses import replace

        res = generate_level(
            GenerationParams(n=8, s=2, delta=DELTA_EASY, removed=1, flips=1,
                             seed=77, threshold=2000)
        )
        plane = replace(res.instance, assignment=res.instance.solution_assignment)
        assert crossing_count(plane) == 0

    def test_m_and_removed_exclusive(self):
        with pytest.raises(ValueError):
            GenerationParams(n=8, s=1, delta=500, m=5, removed=2).validate()
        with pytest.raises(ValueError):
            GenerationParams(n=8, s=1, delta=500).validate()

    def test_m_exceeding_bound_rejected(self):
        with pytest.raises(ValueError):
            GenerationParams(n=5, s=1, delta=500, m=10).validate()

    def test_meta_matches_params(self):
        res = generate_level(
            GenerationParams(n=8, s=2, delta=DELTA_EASY, m=10, flips=2, seed=3,
                             threshold=2000)
        )
        meta = res.instance.meta
        assert meta.n == 8 and meta.m == 10 and meta.s == 2 and meta.seed == 3
        assert meta.removed == res.removed
