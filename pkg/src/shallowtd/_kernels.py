"""Hot numeric kernels: BFS layering and three-path bag assembly.

Both kernels exist in two flavours: a numba ``@njit``-compiled version and a
pure Python/numpy fallback.  The fallback is selected when numba is missing
or when the environment variable ``SHALLOWTD_NO_NUMBA`` is set to a truthy
value ("1", "true", "yes").  Both flavours run the identical algorithm, so
results are byte-for-byte equal; `shallowtd bench` compares their speed.
"""

from __future__ import annotations

import os

import numpy as np


def _numba_requested() -> bool:
    flag = os.environ.get("SHALLOWTD_NO_NUMBA", "").strip().lower()
    return flag not in ("1", "true", "yes")


def _bfs_levels_impl(indptr, indices, root):
    # Level-synchronous BFS.  Frontiers are kept sorted ascending so that the
    # first discoverer of a vertex is its lowest-numbered neighbor in the
    # preceding level (the deterministic parent rule).
    n = indptr.shape[0] - 1
    level = np.full(n, -1, dtype=np.int64)
    parent = np.full(n, -1, dtype=np.int64)
    frontier = np.empty(n, dtype=np.int64)
    nxt = np.empty(n, dtype=np.int64)
    level[root] = 0
    frontier[0] = root
    fsize = 1
    depth = 0
    while fsize > 0:
        nsize = 0
        for i in range(fsize):
            v = frontier[i]
            for j in range(indptr[v], indptr[v + 1]):
                w = indices[j]
                if level[w] < 0:
                    level[w] = depth + 1
                    parent[w] = v
                    nxt[nsize] = w
                    nsize += 1
        if nsize > 0:
            nxt[:nsize] = np.sort(nxt[:nsize])
        frontier, nxt = nxt, frontier
        fsize = nsize
        depth += 1
    return level, parent


def _three_path_bags_impl(parent, corners):
    # For each face (row of `corners`) collect the union of the BFS-tree
    # root paths of its corners.  A per-vertex stamp deduplicates: once the
    # walk from a corner reaches a vertex already stamped for this face, the
    # remainder of its root path is stamped too.
    n = parent.shape[0]
    nfaces = corners.shape[0]
    stamp = np.full(n, -1, dtype=np.int64)
    sizes = np.zeros(nfaces, dtype=np.int64)
    for f in range(nfaces):
        cnt = 0
        for c in range(corners.shape[1]):
            v = corners[f, c]
            while v >= 0 and stamp[v] != f:
                stamp[v] = f
                cnt += 1
                v = parent[v]
        sizes[f] = cnt
    indptr = np.zeros(nfaces + 1, dtype=np.int64)
    indptr[1:] = np.cumsum(sizes)
    data = np.empty(indptr[nfaces], dtype=np.int64)
    stamp[:] = -1
    for f in range(nfaces):
        pos = indptr[f]
        for c in range(corners.shape[1]):
            v = corners[f, c]
            while v >= 0 and stamp[v] != f:
                stamp[v] = f
                data[pos] = v
                pos += 1
                v = parent[v]
        data[indptr[f]:indptr[f + 1]] = np.sort(data[indptr[f]:indptr[f + 1]])
    return indptr, data


USING_NUMBA = False
if _numba_requested():
    try:
        from numba import njit

        _bfs_levels_jit = njit(cache=True)(_bfs_levels_impl)
        _three_path_bags_jit = njit(cache=True)(_three_path_bags_impl)
        USING_NUMBA = True
    except ImportError:  # pragma: no cover - numba is an optional extra
        pass

if USING_NUMBA:
    bfs_levels = _bfs_levels_jit
    three_path_bags = _three_path_bags_jit
else:
    bfs_levels = _bfs_levels_impl
    three_path_bags = _three_path_bags_impl


def bfs_levels_python(indptr, indices, root):
    """Fallback-path BFS, callable regardless of the env flag (for bench)."""
    return _bfs_levels_impl(indptr, indices, root)


def three_path_bags_python(parent, corners):
    """Fallback-path bag assembly, callable regardless of the env flag."""
    return _three_path_bags_impl(parent, corners)
