"""Shared corpus and independent oracles for the test-suite."""

from __future__ import annotations

import functools
import itertools
from pathlib import Path

import networkx as nx

from facialchroma.embedding import build_from_rotation
from facialchroma.generators import named, random_plane_graph

FIXTURES = Path(__file__).parent / "fixtures"

SOLIDS = ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron")
KEEPS = (1.0, 0.8, 0.6, 0.4)


def corpus_params(count: int):
    """Deterministic (n, seed, keep) triples with 3 <= n <= 14."""
    for i in range(count):
        yield 3 + i % 12, i, KEEPS[(i // 12) % len(KEEPS)]


@functools.lru_cache(maxsize=None)
def random_corpus(count: int = 1000):
    return tuple(random_plane_graph(n, seed=s, keep_prob=p) for n, s, p in corpus_params(count))


@functools.lru_cache(maxsize=None)
def named_graphs():
    extra = ("C9", "C12", "W5", "W6", "W9")
    return tuple((name, named(name)) for name in SOLIDS + extra)


def full_corpus(count: int = 1000):
    return tuple(g for _, g in named_graphs()) + random_corpus(count)


def simple_graph(g) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(g.vertices)
    G.add_edges_from((g.origin(d), g.head(d)) for d, _ in g.edges())
    return G


def count_independent_sets(adj: dict[int, set[int]], vertices: list[int]) -> list[int]:
    """i(S) for every subset S (bitmask over ``vertices``), empty set included."""
    n = len(vertices)
    index = {v: i for i, v in enumerate(vertices)}
    closed = [1 << i for i in range(n)]
    for v in vertices:
        for u in adj[v]:
            if u in index:
                closed[index[v]] |= 1 << index[u]
    counts = [0] * (1 << n)
    counts[0] = 1
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length() - 1
        counts[mask] = counts[mask & ~(1 << low)] + counts[mask & ~closed[low]]
    return counts


def chromatic_number_ie(adj: dict[int, set[int]]) -> int:
    """Chromatic number by inclusion-exclusion over all vertex subsets.

    The number of ways to cover V by k independent sets is
    sum over S of (-1)^(n-|S|) i(S)^k; the graph is k-colourable iff it is
    positive.
    """
    vertices = sorted(adj)
    n = len(vertices)
    if n == 0:
        return 0
    counts = count_independent_sets(adj, vertices)
    for k in range(1, n + 1):
        total = sum((-1) ** (n - bin(m).count("1")) * c ** k for m, c in enumerate(counts))
        if total > 0:
            return k
    raise AssertionError("unreachable")


def chromatic_number_brute(adj: dict[int, set[int]]) -> int:
    """Plain enumeration of colour assignments; only for tiny graphs."""
    vertices = sorted(adj)
    for k in range(1, len(vertices) + 1):
        for colors in itertools.product(range(k), repeat=len(vertices)):
            col = dict(zip(vertices, colors))
            if all(col[u] != col[w] for u in vertices for w in adj[u]):
                return k
    return 0


def connected_graphs(max_n: int):
    """All connected simple graphs on 1..max_n vertices up to isomorphism."""
    for n in range(1, max_n + 1):
        seen: list[nx.Graph] = []
        pairs = list(itertools.combinations(range(n), 2))
        for bits in range(1 << len(pairs)):
            G = nx.Graph()
            G.add_nodes_from(range(n))
            G.add_edges_from(p for i, p in enumerate(pairs) if bits >> i & 1)
            if not nx.is_connected(G):
                continue
            if any(nx.is_isomorphic(G, H) for H in seen):
                continue
            seen.append(G)
        yield from seen


def dual_components_without(g, cycle_edges: set[frozenset[int]]):
    """Face groups of the dual graph once the given edges are removed."""
    D = nx.Graph()
    D.add_nodes_from(f.id for f in g.faces)
    for d, t in g.edges():
        key = frozenset((g.origin(d), g.head(d)))
        if key not in cycle_edges:
            D.add_edge(g.face_of(d).id, g.face_of(t).id)
    return list(nx.connected_components(D))


def separating_oracle(g, cycle: list[int]) -> bool:
    """True iff both sides of the cycle hold a vertex off the cycle.

    Works on the underlying simple graph: removing the cycle edges from the
    dual leaves two face groups, one per side.
    """
    on = set(cycle)
    edges = {frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle))}
    groups = dual_components_without(g, edges)
    assert len(groups) == 2, groups
    return all(any(v not in on for f in grp for v in g.faces[f].vertices) for grp in groups)


def embed(G: nx.Graph):
    """Plane graph from an abstract planar graph on vertices 1..n (networkx embedding)."""
    ok, emb = nx.check_planarity(G)
    assert ok, "graph is not planar"
    return build_from_rotation({v: list(emb.neighbors_cw_order(v)) for v in sorted(G)})


def pentagon_ring(subdivisions):
    """Pentagon 1..5, each corner joined to an outer cycle whose i-th edge is
    subdivided ``subdivisions[i]`` times; sector i then has size 4 + s_i."""
    G = nx.cycle_graph(range(1, 6))
    nxt = 6
    outer = []
    for i in range(1, 6):
        G.add_edge(i, nxt)
        outer.append(nxt)
        nxt += 1
    for i, s in enumerate(subdivisions):
        a, b = outer[i], outer[(i + 1) % 5]
        chain = [a] + list(range(nxt, nxt + s)) + [b]
        nxt += s
        nx.add_path(G, chain)
    return embed(G)
