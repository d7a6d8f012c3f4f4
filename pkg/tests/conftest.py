"""Shared fixtures: small named graphs and embedded variants."""

from __future__ import annotations

import pytest

from shallowtd.graph import Graph, build_graph, embed


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


def star_graph(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def embed_outerplanar(g: Graph):
    """Embedding with darts at each vertex in edge-id order; planar for
    paths, cycles, stars, and trees (any rotation of a tree is planar)."""
    rot = [[2 * e + (0 if g.edges[e][0] == v else 1) for e in g.adj[v]]
           for v in range(g.n)]
    return embed(g, rot)


@pytest.fixture
def triangle():
    return cycle_graph(3)
