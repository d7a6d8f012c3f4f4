"""Exact DP solvers over nice decompositions, and the pattern-search driver."""

import random

import pytest

from conftest import (complete_graph, cycle_graph, embed_outerplanar,
                      path_graph, star_graph)
from shallowtd.decomp import heuristic_td, make_nice
from shallowtd.dp import (dp_ds, dp_mis, dp_subiso, dp_vc, subiso_driver,
                          verify_subiso)
from shallowtd.generators import grid, wall
from shallowtd.graph import GraphInputError, build_graph
from shallowtd.oracles import oracle_solve, subiso_backtracking


def nice(g):
    return make_nice(heuristic_td(g))


class TestMisVc:
    def test_p4(self):
        g = path_graph(4)
        assert len(dp_mis(nice(g), g)) == 2
        cover = dp_vc(nice(g), g)
        assert len(cover) == 2
        assert all(u in cover or v in cover for u, v in g.edges)

    def test_c6(self):
        g = cycle_graph(6)
        assert len(dp_mis(nice(g), g)) == 3

    def test_triangle_cover(self, triangle):
        assert len(dp_vc(nice(triangle), triangle)) == 2

    def test_grid33(self):
        g = grid(3, 3).graph
        assert len(dp_mis(nice(g), g)) == 5
        assert len(dp_vc(nice(g), g)) == 4

    def test_random_vs_oracle(self):
        rng = random.Random(23)
        for _ in range(30):
            n = rng.randint(3, 14)
            edges = [(a, b) for a in range(n) for b in range(a + 1, n)
                     if rng.random() < 0.25]
            g = build_graph(n, edges)
            nd = nice(g)
            mis = dp_mis(nd, g)
            vc = dp_vc(nd, g)
            assert len(mis) == oracle_solve("mis", g)[0]
            assert len(vc) == oracle_solve("vc", g)[0]
            assert len(mis) + len(vc) == n


class TestDs:
    def test_star(self):
        g = star_graph(5)
        assert dp_ds(nice(g), g, set(range(6))) == {0}

    def test_c6(self):
        g = cycle_graph(6)
        assert len(dp_ds(nice(g), g, set(range(6)))) == 2

    def test_empty_required(self):
        g = cycle_graph(5)
        assert dp_ds(nice(g), g, set()) == set()

    def test_required_subset(self):
        g = path_graph(7)
        s = dp_ds(nice(g), g, {0, 1})
        assert len(s) == 1 and s <= {0, 1}

    def test_random_vs_oracle(self):
        rng = random.Random(41)
        for _ in range(20):
            n = rng.randint(3, 12)
            edges = [(a, b) for a in range(n) for b in range(a + 1, n)
                     if rng.random() < 0.3]
            g = build_graph(n, edges)
            s = dp_ds(nice(g), g, set(range(n)))
            assert len(s) == oracle_solve("ds", g)[0]


class TestSubisoDp:
    def test_p3_in_triangle(self, triangle):
        nd = nice(triangle)
        found = dp_subiso(nd, triangle, path_graph(3))
        assert found is not None
        assert dp_subiso(nd, triangle, path_graph(3), induced=True) is None

    def test_k4_in_grid_absent(self):
        g = grid(5, 5).graph
        assert dp_subiso(nice(g), g, complete_graph(4)) is None

    def test_c6_in_wall2(self):
        g = wall(2)[1].graph
        found = dp_subiso(nice(g), g, cycle_graph(6))
        assert found is not None
        assert verify_subiso(g, cycle_graph(6), found, False)

    def test_agrees_with_oracle_random(self):
        rng = random.Random(3)
        patterns = [path_graph(3), path_graph(4), cycle_graph(4),
                    complete_graph(3)]
        for _ in range(15):
            n = rng.randint(4, 12)
            edges = [(a, b) for a in range(n) for b in range(a + 1, n)
                     if rng.random() < 0.3]
            g = build_graph(n, edges)
            nd = nice(g)
            for h in patterns:
                for induced in (False, True):
                    mine = dp_subiso(nd, g, h, induced)
                    ref = subiso_backtracking(g, h, induced).mapping
                    assert (mine is None) == (ref is None)
                    if mine is not None:
                        assert verify_subiso(g, h, mine, induced)

    def test_pattern_too_big(self):
        g = grid(4, 4).graph
        with pytest.raises(GraphInputError):
            dp_subiso(nice(g), g, path_graph(9))


class TestSubisoDriver:
    def test_c4_in_grid(self):
        e = grid(4, 4)
        found = subiso_driver(e, cycle_graph(4))
        assert found is not None
        assert verify_subiso(e.graph, cycle_graph(4), found, False)

    def test_p5_in_p3_absent(self):
        e = embed_outerplanar(path_graph(3))
        assert subiso_driver(e, path_graph(5)) is None

    def test_c6_in_wall3(self):
        e = wall(3)[1]
        assert subiso_driver(e, cycle_graph(6)) is not None

    def test_disconnected_pattern_rejected(self):
        e = grid(3, 3)
        with pytest.raises(GraphInputError):
            subiso_driver(e, build_graph(3, [(0, 1)]))

    def test_induced_agrees_with_oracle(self):
        e = grid(5, 5)
        for h, induced, expect in [
            (cycle_graph(4), True, True),     # a grid face is induced C4
            (cycle_graph(6), True, False),    # every grid 6-cycle has a chord
            (complete_graph(3), False, False),
            (path_graph(5), True, True),
        ]:
            found = subiso_driver(e, h, induced=induced)
            ref = subiso_backtracking(e.graph, h, induced).mapping
            assert (found is not None) == expect == (ref is not None)
