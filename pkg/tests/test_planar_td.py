"""BFS-tree planar decompositions, level-band slices, tree-cotree partition."""

import pytest

from conftest import cycle_graph, embed_outerplanar
from shallowtd.decomp import validate
from shallowtd.generators import grid, random_planar_triangulation, wall
from shallowtd.graph import (GraphInputError, bfs_layering, build_graph,
                             embed, triangulate)
from shallowtd.planar_td import (min_eccentricity_root, planar_bfs_td,
                                 slice_td, tree_cotree)


class TestTreeCotree:
    def test_partition_on_planar(self):
        e = triangulate(grid(3, 3))
        pair = tree_cotree(e, 0)
        tree_edges = {lay_e for lay_e in pair.layering.parent_edge
                      if lay_e is not None}
        crossed = {eid for eid in pair.dual_parent_edge if eid >= 0}
        leftover = set(pair.leftover_edges)
        assert not leftover
        assert tree_edges | crossed == set(range(e.graph.m))
        assert not (tree_edges & crossed)


class TestPlanarBfsTd:
    def test_single_vertex(self):
        e = embed(build_graph(1, []), [[]])
        td = planar_bfs_td(e, 0)
        assert td.width == 0 and validate(td, e.graph).valid

    def test_c6_any_root(self):
        e = embed_outerplanar(cycle_graph(6))
        for root in range(6):
            td = planar_bfs_td(e, root)
            assert validate(td, e.graph).valid
            assert td.width <= 9

    def test_grid44_bounds(self):
        e = grid(4, 4)
        td = planar_bfs_td(e, 0)
        lay = bfs_layering(e.graph, 0)
        assert lay.depth == 6
        assert validate(td, e.graph).valid
        assert td.width <= 3 * lay.depth
        # the 4x4 grid has treewidth 4, so no decomposition can be narrower
        assert td.width >= 4

    def test_width_bound_over_corpus(self):
        cases = [grid(3, 5), grid(5, 5), wall(2)[1], wall(3)[1],
                 random_planar_triangulation(40, 1),
                 random_planar_triangulation(60, 2)]
        for e in cases:
            for root in {0, e.graph.n // 2, e.graph.n - 1}:
                td = planar_bfs_td(e, root)
                depth = bfs_layering(e.graph, root).depth
                assert validate(td, e.graph).valid
                assert td.width <= 3 * max(depth, 1)

    def test_bag_is_three_root_paths(self):
        e = grid(5, 5)
        td = planar_bfs_td(e, 0)
        depth = bfs_layering(e.graph, 0).depth
        assert all(len(b) <= 3 * depth + 1 for b in td.bags)

    def test_nonplanar_rejected(self):
        from shallowtd.generators import toroidal_grid
        from shallowtd.graph import EmbeddingError
        with pytest.raises(EmbeddingError):
            planar_bfs_td(toroidal_grid(3, 3), 0)


class TestSliceTd:
    def test_full_range(self):
        e = grid(4, 4)
        lay = bfs_layering(e.graph, 0)
        sd = slice_td(e, lay, 0, lay.depth)
        assert sd.graph.n == e.graph.n
        assert validate(sd.td, sd.graph).valid
        assert sd.td.width <= 3 * (lay.depth + 2)

    def test_middle_band(self):
        e = grid(6, 6)
        lay = bfs_layering(e.graph, 0)
        sd = slice_td(e, lay, 2, 4)
        assert validate(sd.td, sd.graph).valid
        assert sd.td.width <= 15
        assert all(2 <= lay.level[sd.back_map[v]] <= 4
                   for v in range(sd.graph.n))

    def test_outermost_level(self):
        e = grid(6, 6)
        lay = bfs_layering(e.graph, 0)
        sd = slice_td(e, lay, lay.depth, lay.depth)
        assert validate(sd.td, sd.graph).valid
        assert sd.td.width <= 9

    def test_bad_range(self):
        e = grid(3, 3)
        lay = bfs_layering(e.graph, 0)
        with pytest.raises(GraphInputError):
            slice_td(e, lay, 2, 1)
        with pytest.raises(GraphInputError):
            slice_td(e, lay, 0, lay.depth + 1)

    def test_slice_edges_covered(self):
        e = random_planar_triangulation(50, 9)
        lay = bfs_layering(e.graph, 0)
        for lo, hi in [(0, 1), (1, 2), (1, lay.depth)]:
            if hi > lay.depth:
                continue
            sd = slice_td(e, lay, lo, hi)
            assert validate(sd.td, sd.graph).valid


class TestRootSelection:
    def test_min_eccentricity_root_deterministic(self):
        g = grid(5, 5).graph
        assert min_eccentricity_root(g) == min_eccentricity_root(g)

    def test_center_beats_corner(self):
        g = grid(5, 5).graph
        root = min_eccentricity_root(g, samples=25)
        ecc = bfs_layering(g, root).depth
        assert ecc <= bfs_layering(g, 0).depth
