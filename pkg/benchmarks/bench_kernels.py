"""Compare the numba kernels against the plain numpy/Python fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Compilation happens once before timing (and is cached on disk afterwards),
so the numbers are steady-state.
"""

import argparse
import time

import numpy as np

from facialchroma import _kernels
from facialchroma.coloring import chromatic_number_matrix, greedy_clique
from facialchroma.facial import facial_adjacency_graph
from facialchroma.generators import random_plane_graph


def face_arrays(g):
    sizes = [f.size for f in g.faces]
    ptr = np.concatenate([[0], np.cumsum(sizes)]).astype(np.int64)
    flat = np.array([v - 1 for f in g.faces for v in f.vertices], dtype=np.int64)
    return ptr, flat


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def precolored(adj, k):
    colors = np.zeros(adj.shape[0], dtype=np.int64)
    for i, v in enumerate(greedy_clique(adj)[:k]):
        colors[v] = i + 1
    return colors


def gnp(n, p, seed):
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.random((n, n)) < p, 1)
    return (upper | upper.T).astype(np.uint8)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    graphs = [random_plane_graph(n, seed=s, keep_prob=p)
              for n, s, p in ((200, 1, 1.0), (400, 2, 0.5), (800, 3, 0.7))]
    print(f"{'kernel':<34}{'numpy/python':>14}{'numba':>12}{'speedup':>10}")

    for g in graphs:
        ptr, flat = face_arrays(g)
        _kernels.facial_matrix_jit(ptr, flat, g.n, 3)
        py = best_of(lambda: _kernels.facial_matrix_py(ptr, flat, g.n, 3), args.repeat)
        jit = best_of(lambda: _kernels.facial_matrix_jit(ptr, flat, g.n, 3), args.repeat)
        print(f"{'facial matrix n=' + str(g.n):<34}{py * 1e3:>12.2f}ms{jit * 1e3:>10.2f}ms"
              f"{py / jit:>9.1f}x")

    cases = []
    for n, seed in ((30, 11), (60, 12)):
        adj = facial_adjacency_graph(random_plane_graph(n, seed=seed, keep_prob=0.6), 3).matrix()
        chi, _ = chromatic_number_matrix(adj)
        cases.append((f"facial n={n}, k={chi} (find)", adj, chi, args.repeat))
    for n in (50, 60):
        adj = gnp(n, 0.5, 7)
        chi, _ = chromatic_number_matrix(adj)
        cases.append((f"G({n}, 1/2), k={chi - 1} (refute)", adj, chi - 1, 1))
    for label, adj, k, repeat in cases:
        pre = precolored(adj, k)
        _, nodes = _kernels.dsatur_decide_jit(adj, np.int64(k), pre.copy(), np.int64(10**9))
        py = best_of(lambda: _kernels.dsatur_decide_py(adj, k, pre.copy(), 10**9), repeat)
        jit = best_of(lambda: _kernels.dsatur_decide_jit(adj, np.int64(k), pre.copy(),
                                                         np.int64(10**9)), args.repeat)
        print(f"{'dsatur ' + label:<34}{py * 1e3:>12.2f}ms{jit * 1e3:>10.2f}ms"
              f"{py / jit:>9.1f}x   ({nodes} nodes)")


if __name__ == "__main__":
    main()
