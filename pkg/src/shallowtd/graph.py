"""Undirected multigraphs, combinatorial embeddings, and BFS layerings.

Edges carry stable integer ids (their position in the edge list).  A *dart*
is a directed half of edge ``e``: dart ``2*e`` points from ``edges[e][0]`` to
``edges[e][1]``, dart ``2*e + 1`` the other way.  An embedding is a rotation
system: the cyclic sequence of outgoing darts around each vertex.  Faces are
the orbits of ``d -> rotation-successor of reverse(d)``, and the Euler genus
follows from ``n - m + f = 2 - 2g`` on each connected component.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels


class GraphInputError(ValueError):
    """Malformed construction input (bad endpoint, bad rotation, ...)."""


class EmbeddingError(ValueError):
    """A rotation system inconsistent with the edge set, or a genus failure."""


@dataclass
class Graph:
    """Undirected multigraph.  Loops appear twice in their vertex's adjacency."""

    n: int
    edges: list[tuple[int, int]]
    adj: list[list[int]]
    _nbr_sets: list[set[int]] | None = field(default=None, repr=False, compare=False)
    _csr: tuple[np.ndarray, np.ndarray] | None = field(default=None, repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def other_end(self, eid: int, v: int) -> int:
        u, w = self.edges[eid]
        return w if v == u else u

    def neighbors(self, v: int) -> list[int]:
        return [self.other_end(e, v) for e in self.adj[v]]

    def neighbor_sets(self) -> list[set[int]]:
        if self._nbr_sets is None:
            self._nbr_sets = [set(self.neighbors(v)) - {v} for v in range(self.n)]
        return self._nbr_sets

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets()[u]

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        if self._csr is None:
            indptr = np.zeros(self.n + 1, dtype=np.int64)
            for v in range(self.n):
                indptr[v + 1] = indptr[v] + len(self.adj[v])
            indices = np.empty(indptr[-1], dtype=np.int64)
            pos = indptr[:-1].copy()
            for v in range(self.n):
                for e in self.adj[v]:
                    indices[pos[v]] = self.other_end(e, v)
                    pos[v] += 1
            self._csr = (indptr, indices)
        return self._csr


def build_graph(n: int, edges) -> Graph:
    """Build a multigraph from an edge list; edge ids follow input order."""
    if n < 0:
        raise GraphInputError("vertex count must be nonnegative")
    edge_list: list[tuple[int, int]] = []
    adj: list[list[int]] = [[] for _ in range(n)]
    for eid, (u, v) in enumerate(edges):
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u}, {v}) has an endpoint out of range [0, {n})")
        edge_list.append((u, v))
        adj[u].append(eid)
        adj[v].append(eid)
    return Graph(n=n, edges=edge_list, adj=adj)


# ---------------------------------------------------------------------------
# BFS layering

@dataclass
class Layering:
    """BFS tree: levels are graph distances from the root.

    Vertices outside the root's component have level -1 and no parent.
    """

    root: int
    level: list[int]
    parent: list[int | None]
    parent_edge: list[int | None]
    depth: int

    @property
    def complete(self) -> bool:
        return all(l >= 0 for l in self.level)

    def reached(self) -> list[int]:
        return [v for v, l in enumerate(self.level) if l >= 0]

    def path_to_root(self, v: int) -> list[int]:
        path = [v]
        while self.parent[path[-1]] is not None:
            path.append(self.parent[path[-1]])
        return path


def bfs_layering(g: Graph, root: int) -> Layering:
    """BFS from `root`; the parent of a vertex is its lowest-numbered
    neighbor in the preceding level."""
    if not (0 <= root < g.n):
        raise GraphInputError(f"root {root} out of range [0, {g.n})")
    indptr, indices = g.csr()
    level_arr, parent_arr = _kernels.bfs_levels(indptr, indices, root)
    level = [int(x) for x in level_arr]
    parent: list[int | None] = [int(p) if p >= 0 else None for p in parent_arr]
    parent_edge: list[int | None] = [None] * g.n
    for v in range(g.n):
        p = parent[v]
        if p is not None:
            parent_edge[v] = min(e for e in g.adj[v] if g.other_end(e, v) == p)
    depth = max((l for l in level if l >= 0), default=0)
    return Layering(root=root, level=level, parent=parent, parent_edge=parent_edge, depth=depth)


def eccentricity(g: Graph, v: int) -> float:
    lay = bfs_layering(g, v)
    if not lay.complete:
        return math.inf
    return lay.depth


def diameter(g: Graph) -> float:
    """Max eccentricity over all vertices; infinite when disconnected."""
    if g.n == 0:
        return 0
    best = 0
    for v in range(g.n):
        ecc = eccentricity(g, v)
        if ecc == math.inf:
            return math.inf
        best = max(best, ecc)
    return best


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


# ---------------------------------------------------------------------------
# Embeddings

def dart_tail(g: Graph, d: int) -> int:
    return g.edges[d >> 1][d & 1]


def dart_head(g: Graph, d: int) -> int:
    return g.edges[d >> 1][1 - (d & 1)]


@dataclass
class EmbeddedGraph:
    """A multigraph with an orientable rotation system and its derived faces."""

    graph: Graph
    rotation: list[list[int]]
    faces: list[list[int]]
    euler_genus: int
    _face_of: dict[int, int] | None = field(default=None, repr=False, compare=False)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    def face_of(self, d: int) -> int:
        if self._face_of is None:
            self._face_of = {}
            for i, cyc in enumerate(self.faces):
                for d2 in cyc:
                    self._face_of[d2] = i
        return self._face_of[d]


def _trace_faces(g: Graph, rotation: list[list[int]]) -> list[list[int]]:
    # successor of dart d in the rotation at its tail
    succ: dict[int, int] = {}
    for v in range(g.n):
        cyc = rotation[v]
        for i, d in enumerate(cyc):
            succ[d] = cyc[(i + 1) % len(cyc)]
    faces = []
    visited: set[int] = set()
    for d0 in range(2 * g.m):
        if d0 in visited:
            continue
        cyc = []
        d = d0
        while d not in visited:
            visited.add(d)
            cyc.append(d)
            d = succ[d ^ 1]
        faces.append(cyc)
    return faces


def embed(g: Graph, rotation: list[list[int]]) -> EmbeddedGraph:
    """Attach a rotation system and compute faces and Euler genus.

    Raises EmbeddingError if the rotation does not cover each dart exactly
    once with the correct tail, or if the genus comes out negative or
    non-integral on some component.
    """
    seen: set[int] = set()
    for v in range(g.n):
        for d in rotation[v]:
            if not (0 <= d < 2 * g.m):
                raise EmbeddingError(f"dart {d} out of range at vertex {v}")
            if dart_tail(g, d) != v:
                raise EmbeddingError(f"dart {d} listed at vertex {v} but its tail is {dart_tail(g, d)}")
            if d in seen:
                raise EmbeddingError(f"dart {d} appears more than once in the rotation")
            seen.add(d)
    if len(seen) != 2 * g.m:
        raise EmbeddingError(f"rotation covers {len(seen)} darts, expected {2 * g.m}")

    faces = _trace_faces(g, rotation)
    face_comp: dict[int, int] = {}

    comps = connected_components(g)
    genus = 0
    vertex_comp = [0] * g.n
    for ci, comp in enumerate(comps):
        for v in comp:
            vertex_comp[v] = ci
    m_per = [0] * len(comps)
    for u, v in g.edges:
        m_per[vertex_comp[u]] += 1
    f_per = [0] * len(comps)
    for cyc in faces:
        f_per[vertex_comp[dart_tail(g, cyc[0])]] += 1
    for ci, comp in enumerate(comps):
        if m_per[ci] == 0:
            continue
        chi = len(comp) - m_per[ci] + f_per[ci]
        if (2 - chi) % 2 != 0 or chi > 2:
            raise EmbeddingError(
                f"component has Euler characteristic {chi}: non-orientable or invalid rotation")
        genus += (2 - chi) // 2
    return EmbeddedGraph(graph=g, rotation=rotation, faces=faces, euler_genus=genus)


@dataclass
class EmbeddingReport:
    faces: list[list[int]]
    face_count: int
    euler_genus: int
    planar: bool


def validate_embedding(e: EmbeddedGraph) -> EmbeddingReport:
    """Re-derive faces and genus from the rotation system."""
    checked = embed(e.graph, e.rotation)
    return EmbeddingReport(
        faces=checked.faces,
        face_count=len(checked.faces),
        euler_genus=checked.euler_genus,
        planar=checked.euler_genus == 0,
    )


# ---------------------------------------------------------------------------
# Minor operations

def delete_vertices(g: Graph, vertices) -> tuple[Graph, list[int]]:
    """Induced subgraph on the complement of `vertices`.

    Returns (subgraph, back_map) where back_map[new_id] = old_id.
    """
    drop = set(vertices)
    keep = [v for v in range(g.n) if v not in drop]
    return induced_subgraph(g, keep)


def induced_subgraph(g: Graph, keep: list[int]) -> tuple[Graph, list[int]]:
    keep = sorted(set(keep))
    new_id = {v: i for i, v in enumerate(keep)}
    edges = [(new_id[u], new_id[v]) for (u, v) in g.edges if u in new_id and v in new_id]
    return build_graph(len(keep), edges), keep


def induced_embedded_subgraph(e: EmbeddedGraph, keep) -> tuple[EmbeddedGraph, list[int]]:
    """Induced embedded subgraph: surviving darts keep their cyclic order."""
    keep = sorted(set(keep))
    new_id = {v: i for i, v in enumerate(keep)}
    g = e.graph
    edge_map: dict[int, int] = {}
    edges = []
    for eid, (u, v) in enumerate(g.edges):
        if u in new_id and v in new_id:
            edge_map[eid] = len(edges)
            edges.append((new_id[u], new_id[v]))
    sub = build_graph(len(keep), edges)
    rotation = []
    for v in keep:
        cyc = []
        for d in e.rotation[v]:
            eid = d >> 1
            if eid in edge_map:
                cyc.append(2 * edge_map[eid] + (d & 1))
        rotation.append(cyc)
    return embed(sub, rotation), keep


def contract_connected_set(e: EmbeddedGraph, vertices,
                           cleanup: bool = True) -> tuple[EmbeddedGraph, list[int]]:
    """Contract a connected vertex set to a single vertex, splicing rotations.

    Loops created by the contraction are deleted and parallel edges merged
    (lowest edge id kept) unless ``cleanup`` is False.  Returns
    (contracted embedding, old_to_new map).  The Euler genus of the result
    is recomputed from the surviving rotation.
    """
    g = e.graph
    sset = sorted(set(vertices))
    if not sset:
        raise GraphInputError("cannot contract an empty set")
    for v in sset:
        if not (0 <= v < g.n):
            raise GraphInputError(f"vertex {v} out of range")

    # spanning tree of the induced subgraph on sset, by BFS
    in_set = set(sset)
    tree_edges: list[int] = []
    seen = {sset[0]}
    queue = [sset[0]]
    while queue:
        v = queue.pop(0)
        for eid in g.adj[v]:
            w = g.other_end(eid, v)
            if w in in_set and w not in seen:
                seen.add(w)
                tree_edges.append(eid)
                queue.append(w)
    if len(seen) != len(sset):
        raise GraphInputError("vertex set does not induce a connected subgraph")

    # mutable working copies
    rot = [list(c) for c in e.rotation]
    ends = [list(uv) for uv in g.edges]
    alive = [True] * g.m
    merged_into = list(range(g.n))  # union-find with path compression

    def find(v: int) -> int:
        while merged_into[v] != v:
            merged_into[v] = merged_into[merged_into[v]]
            v = merged_into[v]
        return v

    def remove_edge(eid: int) -> None:
        alive[eid] = False
        for d in (2 * eid, 2 * eid + 1):
            t = find(ends[eid][d & 1])
            rot[t].remove(d)

    for eid in tree_edges:
        u, v = find(ends[eid][0]), find(ends[eid][1])
        du, dv = 2 * eid, 2 * eid + 1
        iu = rot[u].index(du)
        iv = rot[v].index(dv)
        # splice rot[v] (minus dv) into rot[u] at du's position
        spliced = rot[v][iv + 1:] + rot[v][:iv]
        rot[u] = rot[u][:iu] + spliced + rot[u][iu + 1:]
        rot[v] = []
        merged_into[v] = u
        alive[eid] = False
        # re-tail v's darts: endpoint arrays are canonicalized via find()

    # canonicalize endpoints
    for eid in range(g.m):
        if alive[eid]:
            ends[eid][0] = find(ends[eid][0])
            ends[eid][1] = find(ends[eid][1])

    if cleanup:
        # Delete loops and merge parallel classes down to their lowest edge id.
        # Deleting an edge whose two sides lie on the same face merges no
        # faces and drops the genus; deleting one with distinct side faces is
        # genus-neutral.  Preferring same-face deletions lets the inherited
        # rotation shed the handles the contraction crushed (e.g. contracting
        # a cut graph of a torus must land at genus 0).
        def removable_edges() -> list[int]:
            out = []
            lowest: dict[tuple[int, int], int] = {}
            for eid in range(g.m):
                if not alive[eid]:
                    continue
                if ends[eid][0] == ends[eid][1]:
                    out.append(eid)
                    continue
                key = (min(ends[eid]), max(ends[eid]))
                if key in lowest:
                    out.append(max(eid, lowest[key]))
                    lowest[key] = min(eid, lowest[key])
                else:
                    lowest[key] = eid
            return sorted(set(out))

        def face_ids() -> dict[int, int]:
            succ: dict[int, int] = {}
            for v in range(g.n):
                cyc = rot[v]
                for i, d in enumerate(cyc):
                    succ[d] = cyc[(i + 1) % len(cyc)]
            fid: dict[int, int] = {}
            nf = 0
            for d0 in succ:
                if d0 in fid:
                    continue
                d = d0
                while d not in fid:
                    fid[d] = nf
                    d = succ[d ^ 1]
                nf += 1
            return fid

        while True:
            rem = removable_edges()
            if not rem:
                break
            fid = face_ids()
            pick = next((eid for eid in rem if fid[2 * eid] == fid[2 * eid + 1]),
                        rem[0])
            remove_edge(pick)

    # compact
    survivors = sorted(v for v in range(g.n) if find(v) == v)
    new_vid = {v: i for i, v in enumerate(survivors)}
    new_eid: dict[int, int] = {}
    new_edges = []
    for eid in range(g.m):
        if alive[eid]:
            new_eid[eid] = len(new_edges)
            new_edges.append((new_vid[ends[eid][0]], new_vid[ends[eid][1]]))
    new_g = build_graph(len(survivors), new_edges)
    new_rot = [[2 * new_eid[d >> 1] + (d & 1) for d in rot[v]] for v in survivors]
    result = embed(new_g, new_rot)
    old_to_new = [new_vid[find(v)] for v in range(g.n)]
    return result, old_to_new


# ---------------------------------------------------------------------------
# Triangulation

def triangulate(e: EmbeddedGraph) -> EmbeddedGraph:
    """Add chords until every face has exactly three darts (planar only).

    Original edges keep their ids; added chords may duplicate existing edges
    (the result is a multigraph) but never create loops.  Genus stays 0.
    """
    if e.euler_genus != 0:
        raise EmbeddingError("triangulate requires a planar embedding")
    if not is_connected(e.graph):
        raise GraphInputError("triangulate requires a connected graph")
    if e.n < 3:
        raise GraphInputError("triangulate requires at least 3 vertices")

    g = e.graph
    edges = list(g.edges)
    rot = [list(c) for c in e.rotation]
    tails: dict[int, int] = {}
    for eid, (u, v) in enumerate(edges):
        tails[2 * eid] = u
        tails[2 * eid + 1] = v
    simple_pairs = {(min(u, v), max(u, v)) for u, v in edges}

    def add_chord(face: list[int], i: int, j: int) -> tuple[int, int]:
        # chord between the corners at positions i and j of the face cycle;
        # returns the new darts (p at corner i, q at corner j)
        a = tails[face[i]]
        b = tails[face[j]]
        eid = len(edges)
        edges.append((a, b))
        p, q = 2 * eid, 2 * eid + 1
        tails[p] = a
        tails[q] = b
        rot[a].insert(rot[a].index(face[i]), p)
        rot[b].insert(rot[b].index(face[j]), q)
        simple_pairs.add((min(a, b), max(a, b)))
        return p, q

    for face in _trace_faces(g, e.rotation):
        face = list(face)
        if len(face) < 3:
            raise EmbeddingError("cannot triangulate a face with fewer than 3 darts")
        # anchor the scan at the lowest-id corner for determinism
        corners = [tails[d] for d in face]
        start = corners.index(min(corners))
        face = face[start:] + face[:start]
        while len(face) > 3:
            corners = [tails[d] for d in face]
            L = len(face)
            candidates = [i for i in range(L) if corners[i] != corners[(i + 2) % L]]
            if not candidates:
                raise EmbeddingError("no valid ear in face; embedding is degenerate")
            fresh = [i for i in candidates
                     if (min(corners[i], corners[(i + 2) % L]),
                         max(corners[i], corners[(i + 2) % L])) not in simple_pairs]
            i = (fresh or candidates)[0]
            j = (i + 2) % L
            p, _q = add_chord(face, i, j)
            # ear (q, face[i], face[i+1]) is cut off; continue on the rest
            rest = [face[(j + t) % L] for t in range(L - 2)]
            face = [p] + rest

    new_g = build_graph(g.n, edges)
    return embed(new_g, rot)


# ---------------------------------------------------------------------------
# Text interchange format

def emit_graph(obj: Graph | EmbeddedGraph) -> str:
    """Emit the `v/e/rot` line format.  Rotation lines only for embeddings."""
    if isinstance(obj, EmbeddedGraph):
        g, rot = obj.graph, obj.rotation
    else:
        g, rot = obj, None
    lines = [f"v {g.n}"]
    for u, v in g.edges:
        lines.append(f"e {u} {v}")
    if rot is not None:
        for v in range(g.n):
            lines.append("rot " + str(v) + "".join(f" {d}" for d in rot[v]))
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph | EmbeddedGraph:
    """Parse the `v/e/rot` format; returns an EmbeddedGraph when rotation
    lines are present."""
    n = None
    edges: list[tuple[int, int]] = []
    rot: dict[int, list[int]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "v" and len(parts) == 2:
            if n is not None:
                raise GraphInputError(f"line {lineno}: duplicate v line")
            n = int(parts[1])
        elif parts[0] == "e" and len(parts) == 3:
            edges.append((int(parts[1]), int(parts[2])))
        elif parts[0] == "rot" and len(parts) >= 2:
            rot[int(parts[1])] = [int(x) for x in parts[2:]]
        else:
            raise GraphInputError(f"line {lineno}: cannot parse {raw!r}")
    if n is None:
        raise GraphInputError("missing v line")
    g = build_graph(n, edges)
    if not rot:
        return g
    rotation = [rot.get(v, []) for v in range(n)]
    return embed(g, rotation)
