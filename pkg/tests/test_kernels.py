"""The numba kernels and their plain fallbacks must agree bit for bit."""

import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _corpus import named_graphs, random_corpus
from facialchroma import _kernels
from facialchroma.coloring import greedy_clique
from facialchroma.facial import facial_adjacency_graph, facial_adjacency_matrix

pytestmark = pytest.mark.skipif(_kernels.facial_matrix_jit is None, reason="numba missing")


def face_arrays(g):
    sizes = [f.size for f in g.faces]
    ptr = np.concatenate([[0], np.cumsum(sizes)]).astype(np.int64)
    flat = np.array([v - 1 for f in g.faces for v in f.vertices], dtype=np.int64)
    return ptr, flat


GRAPHS = [g for _, g in named_graphs()] + list(random_corpus(1000)[:120])


@pytest.mark.parametrize("l", [1, 2, 3, 5])
def test_facial_matrix_paths_agree(l):
    for g in GRAPHS:
        ptr, flat = face_arrays(g)
        a = _kernels.facial_matrix_py(ptr, flat, g.n, l)
        b = _kernels.facial_matrix_jit(ptr, flat, g.n, l)
        assert np.array_equal(a, b)
        assert np.array_equal(a, facial_adjacency_graph(g, l).matrix())
        assert np.array_equal(a, facial_adjacency_matrix(g, l))


def decide_both(adj, k, pre, budget):
    results = []
    for fn in (_kernels.dsatur_decide_py, _kernels.dsatur_decide_jit):
        colors = pre.copy()
        status, nodes = fn(adj, np.int64(k), colors, np.int64(budget))
        results.append((int(status), int(nodes), colors))
    return results


@settings(max_examples=60, deadline=None)
@given(n=st.integers(1, 14), p=st.floats(0.1, 0.9), seed=st.integers(0, 2**32 - 1),
       k=st.integers(1, 6), budget=st.sampled_from([5, 50, 10_000]))
def test_dsatur_paths_agree(n, p, seed, k, budget):
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.random((n, n)) < p, 1)
    adj = (upper | upper.T).astype(np.uint8)
    pre = np.zeros(n, dtype=np.int64)
    clique = greedy_clique(adj)
    if len(clique) <= k:
        for i, v in enumerate(clique):
            pre[v] = i + 1
    (s1, n1, c1), (s2, n2, c2) = decide_both(adj, k, pre, budget)
    assert (s1, n1) == (s2, n2) and np.array_equal(c1, c2)
    if s1 == 1:
        assert all(1 <= c <= k for c in c1)
        assert not np.any(adj & (c1[:, None] == c1[None, :]))


def test_dsatur_on_facial_graphs_agrees():
    for g in GRAPHS[:60]:
        adj = facial_adjacency_graph(g, 3).matrix()
        for k in (3, 5):
            (s1, n1, c1), (s2, n2, c2) = decide_both(adj, k, np.zeros(g.n, np.int64), 10**6)
            assert (s1, n1) == (s2, n2) and np.array_equal(c1, c2)


def test_env_flag_selects_fallback():
    code = "import facialchroma._kernels as k; print(k.USE_NUMBA)"
    for flag, expect in (("0", "False"), ("off", "False"), ("1", "True")):
        out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                             env={"FACIAL_CHROMA_NUMBA": flag, "PATH": ""}, check=True)
        assert out.stdout.strip() == expect
