"""Hot loops: facial adjacency matrix and the DSATUR colouring search.

Each kernel exists twice: a plain Python/numpy version and a numba-compiled
one. ``FACIAL_CHROMA_NUMBA=0`` in the environment (or a missing numba)
selects the plain versions; both must return identical results.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None


def _use_numba() -> bool:
    flag = os.environ.get("FACIAL_CHROMA_NUMBA", "1").strip().lower()
    return numba is not None and flag not in ("0", "false", "no", "off")


USE_NUMBA = _use_numba()


def facial_matrix_py(ptr, flat, n, l):
    adj = np.zeros((n, n), dtype=np.uint8)
    for f in range(len(ptr) - 1):
        verts = flat[ptr[f]:ptr[f + 1]]
        s = len(verts)
        for j in range(1, min(l, s - 1) + 1):
            other = np.roll(verts, -j)
            adj[verts, other] = 1
            adj[other, verts] = 1
    np.fill_diagonal(adj, 0)
    return adj


def _facial_matrix_loops(ptr, flat, n, l):
    adj = np.zeros((n, n), dtype=np.uint8)
    for f in range(ptr.shape[0] - 1):
        lo = ptr[f]
        s = ptr[f + 1] - lo
        reach = min(l, s - 1)
        for i in range(s):
            a = flat[lo + i]
            for j in range(1, reach + 1):
                b = flat[lo + (i + j) % s]
                if a != b:
                    adj[a, b] = 1
                    adj[b, a] = 1
    return adj


def dsatur_decide_py(adj, k, colors, budget):
    """Try to extend ``colors`` to a proper colouring with colours 1..k.

    ``colors[v] == 0`` marks an uncoloured vertex; precoloured vertices are
    assumed consistent. ``colors`` is updated in place. Returns
    ``(status, nodes)`` with status 1 (found), 0 (none exists) or -1 (node
    budget exhausted).
    """
    n = adj.shape[0]
    cnt = np.zeros((n, k + 2), dtype=np.int64)
    sat = np.zeros(n, dtype=np.int64)
    deg = np.zeros(n, dtype=np.int64)
    for v in range(n):
        for u in range(n):
            if adj[v, u]:
                deg[v] += 1
    maxused = 0
    uncolored = 0
    for v in range(n):
        c = colors[v]
        if c == 0:
            uncolored += 1
            continue
        if c > maxused:
            maxused = c
        for u in range(n):
            if adj[v, u]:
                if cnt[u, c] == 0:
                    sat[u] += 1
                cnt[u, c] += 1
    if uncolored == 0:
        return 1, 0
    stack_v = np.zeros(uncolored, dtype=np.int64)
    stack_c = np.zeros(uncolored, dtype=np.int64)
    stack_max = np.zeros(uncolored, dtype=np.int64)
    nodes = 0
    depth = 0
    select = True
    while True:
        if select:
            if depth == uncolored:
                return 1, nodes
            best = -1
            for v in range(n):
                if colors[v] == 0:
                    if best < 0 or sat[v] > sat[best] or (sat[v] == sat[best] and deg[v] > deg[best]):
                        best = v
            stack_v[depth] = best
            stack_c[depth] = 0
            stack_max[depth] = maxused
            select = False
        v = stack_v[depth]
        c = stack_c[depth]
        if c > 0:
            colors[v] = 0
            for u in range(n):
                if adj[v, u]:
                    cnt[u, c] -= 1
                    if cnt[u, c] == 0:
                        sat[u] -= 1
        maxused = stack_max[depth]
        limit = min(k, maxused + 1)
        c += 1
        while c <= limit and cnt[v, c] > 0:
            c += 1
        if c <= limit:
            nodes += 1
            if nodes > budget:
                return -1, nodes
            colors[v] = c
            for u in range(n):
                if adj[v, u]:
                    if cnt[u, c] == 0:
                        sat[u] += 1
                    cnt[u, c] += 1
            stack_c[depth] = c
            if c > maxused:
                maxused = c
            depth += 1
            select = True
        else:
            stack_c[depth] = 0
            depth -= 1
            if depth < 0:
                return 0, nodes


if numba is not None:
    facial_matrix_jit = numba.njit(cache=True, nogil=True)(_facial_matrix_loops)
    dsatur_decide_jit = numba.njit(cache=True, nogil=True)(dsatur_decide_py)
else:  # pragma: no cover
    facial_matrix_jit = None
    dsatur_decide_jit = None


def facial_matrix(ptr, flat, n, l):
    if USE_NUMBA:
        return facial_matrix_jit(ptr, flat, n, l)
    return facial_matrix_py(ptr, flat, n, l)


def dsatur_decide(adj, k, colors, budget):
    adj = np.ascontiguousarray(adj, dtype=np.uint8)
    if USE_NUMBA:
        status, nodes = dsatur_decide_jit(adj, np.int64(k), colors, np.int64(budget))
    else:
        status, nodes = dsatur_decide_py(adj, k, colors, budget)
    return int(status), int(nodes)
