"""Verification and construction of l-facial colourings, and list colouring.

Colours are the integers 1..k. An l-facial colouring of a plane graph is an
ordinary proper colouring of its l-facial adjacency graph, so the exact
solver works on that derived graph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import networkx as nx
import numpy as np

from . import _kernels
from .embedding import PlaneGraph
from .facial import FacialAdjacency, facial_adjacency_graph

DEFAULT_NODE_BUDGET = 20_000_000


class SearchBudgetExceeded(RuntimeError):
    """An exhaustive search hit its node or instance budget."""


@dataclass
class Coloring:
    """Partial or total map from vertices to colours 1..k."""

    assignments: dict[int, int] = field(default_factory=dict)
    k: int | None = None

    def __post_init__(self):
        self.assignments = {int(v): int(c) for v, c in self.assignments.items()}
        top = max(self.assignments.values(), default=0)
        if self.k is None:
            self.k = max(top, 1)
        for v, c in self.assignments.items():
            if not 1 <= c <= self.k:
                raise ValueError(f"colour {c} of vertex {v} outside 1..{self.k}")

    def __getitem__(self, v: int) -> int:
        return self.assignments[v]

    def get(self, v: int, default=None):
        return self.assignments.get(v, default)

    def __contains__(self, v: int) -> bool:
        return v in self.assignments

    def __len__(self) -> int:
        return len(self.assignments)

    def colors_used(self) -> int:
        return len(set(self.assignments.values()))

    def is_total(self, g: PlaneGraph) -> bool:
        return all(v in self.assignments for v in g.vertices)


@dataclass
class GreedyResult:
    coloring: Coloring
    stuck_at: int | None = None
    position: int | None = None

    @property
    def ok(self) -> bool:
        return self.stuck_at is None


def _as_coloring(c: Coloring | Mapping[int, int]) -> Coloring:
    return c if isinstance(c, Coloring) else Coloring(dict(c))


def verify(g: PlaneGraph, l: int, coloring: Coloring | Mapping[int, int]) -> list[tuple[int, int]]:
    """Return every l-facially adjacent pair ``(u, v)``, u < v, sharing a colour."""
    coloring = _as_coloring(coloring)
    missing = [v for v in g.vertices if v not in coloring]
    if missing:
        raise ValueError(f"coloring is partial: vertices {missing[:5]} uncoloured")
    fa = facial_adjacency_graph(g, l)
    return [(u, w) for u, w in fa.edges() if coloring[u] == coloring[w]]


def greedy_color(g: PlaneGraph, l: int, k: int, order: Sequence[int] | None = None) -> GreedyResult:
    """Give each vertex in ``order`` the least colour free among coloured l-facial neighbours."""
    order = list(g.vertices) if order is None else list(order)
    if sorted(order) != list(g.vertices):
        raise ValueError("order must be a permutation of the vertices")
    fa = facial_adjacency_graph(g, l)
    colors: dict[int, int] = {}
    for i, v in enumerate(order):
        taken = {colors[u] for u in fa.neighbors[v] if u in colors}
        free = next((c for c in range(1, k + 1) if c not in taken), None)
        if free is None:
            return GreedyResult(Coloring(colors, k), stuck_at=v, position=i + 1)
        colors[v] = free
    return GreedyResult(Coloring(colors, k))


def greedy_clique(adj: np.ndarray) -> list[int]:
    """Large clique by greedy extension from every start vertex (0-based ids)."""
    n = adj.shape[0]
    deg = adj.sum(axis=1, dtype=np.int64)
    best: list[int] = []
    for start in sorted(range(n), key=lambda v: (-deg[v], v)):
        clique = [start]
        cand = set(np.flatnonzero(adj[start]).tolist())
        while cand:
            v = max(cand, key=lambda x: (len(cand & set(np.flatnonzero(adj[x]).tolist())), -x))
            clique.append(v)
            cand &= set(np.flatnonzero(adj[v]).tolist())
        if len(clique) > len(best):
            best = clique
    return best


def color_matrix(adj: np.ndarray, k: int, budget: int = DEFAULT_NODE_BUDGET,
                 clique: Sequence[int] | None = None) -> np.ndarray | None:
    """Proper colouring of a 0/1 matrix graph with colours 1..k, or None.

    The vertices of ``clique`` (0-based) are precoloured 1, 2, ... to break
    colour symmetry.
    """
    n = adj.shape[0]
    if clique is None:
        clique = greedy_clique(adj) if n else []
    if len(clique) > k:
        return None
    colors = np.zeros(n, dtype=np.int64)
    for i, v in enumerate(clique):
        colors[v] = i + 1
    status, _ = _kernels.dsatur_decide(adj, k, colors, budget)
    if status < 0:
        raise SearchBudgetExceeded(f"colouring search exceeded {budget} nodes")
    return colors if status == 1 else None


def chromatic_number_matrix(adj: np.ndarray, budget: int = DEFAULT_NODE_BUDGET) -> tuple[int, np.ndarray]:
    n = adj.shape[0]
    if n == 0:
        return 0, np.zeros(0, dtype=np.int64)
    clique = greedy_clique(adj)
    k = max(len(clique), 1)
    while True:
        colors = color_matrix(adj, k, budget, clique)
        if colors is not None:
            return k, colors
        k += 1


def exact_chromatic(g: PlaneGraph, l: int, budget: int = DEFAULT_NODE_BUDGET) -> tuple[int, Coloring]:
    """Minimum number of colours of an l-facial colouring, with a witness."""
    adj = facial_adjacency_graph(g, l).matrix()
    k, colors = chromatic_number_matrix(adj, budget)
    return k, Coloring({v: int(colors[v - 1]) for v in g.vertices}, k)


def facial_k_coloring(g: PlaneGraph, l: int, k: int,
                      budget: int = DEFAULT_NODE_BUDGET) -> Coloring | None:
    """Some l-facial colouring with at most k colours, or None."""
    adj = facial_adjacency_graph(g, l).matrix()
    colors = color_matrix(adj, k, budget)
    if colors is None:
        return None
    return Coloring({v: int(colors[v - 1]) for v in g.vertices}, k)


# -- list colouring ----------------------------------------------------------

def _adjacency_dict(graph) -> dict[int, set[int]]:
    if isinstance(graph, FacialAdjacency):
        return {v: set(nb) for v, nb in graph.neighbors.items()}
    if isinstance(graph, nx.Graph):
        return {v: set(graph[v]) - {v} for v in graph.nodes}
    return {v: set(nb) - {v} for v, nb in graph.items()}


def list_color_brute(graph, lists: Mapping[int, Iterable[int]]) -> dict[int, int] | None:
    """Proper colouring with ``c(v) in lists[v]``, or None if none exists.

    ``graph`` is a :class:`FacialAdjacency`, a networkx graph or a dict of
    neighbour sets. Search is exhaustive backtracking, most constrained
    vertex first.
    """
    adj = _adjacency_dict(graph)
    lists = {v: sorted(set(lists[v])) for v in adj}
    color: dict[int, int] = {}

    def options(v):
        used = {color[u] for u in adj[v] if u in color}
        return [c for c in lists[v] if c not in used]

    def search() -> bool:
        todo = [v for v in adj if v not in color]
        if not todo:
            return True
        v = min(todo, key=lambda x: (len(options(x)), x))
        for c in options(v):
            color[v] = c
            if search():
                return True
            del color[v]
        return False

    return dict(color) if search() else None


def is_gallai_tree(graph) -> bool:
    """True iff every block of the connected graph is complete or an odd cycle."""
    adj = _adjacency_dict(graph)
    G = nx.Graph()
    G.add_nodes_from(adj)
    G.add_edges_from((u, w) for u, nb in adj.items() for w in nb)
    if G.number_of_nodes() == 0 or not nx.is_connected(G):
        raise ValueError("graph must be connected and nonempty")
    if G.number_of_nodes() == 1:
        return True
    for block in nx.biconnected_components(G):
        H = G.subgraph(block)
        b, e = H.number_of_nodes(), H.number_of_edges()
        complete = e == b * (b - 1) // 2
        odd_cycle = b % 2 == 1 and e == b and all(d == 2 for _, d in H.degree())
        if not (complete or odd_cycle):
            return False
    return True


def canonical_list_assignments(sizes: Sequence[int], max_colors: int | None = None):
    """All assignments of lists with the given sizes, up to colour relabelling.

    Colours are introduced in order of first appearance: the list of vertex
    ``i`` reuses any subset of the colours seen so far and adds the next
    fresh labels. Yields tuples of frozensets.
    """
    sizes = list(sizes)
    cap = sum(sizes) if max_colors is None else max_colors

    def rec(i, used, acc):
        if i == len(sizes):
            yield tuple(acc)
            return
        need = sizes[i]
        for reuse in range(min(need, used), -1, -1):
            fresh = need - reuse
            if used + fresh > cap:
                continue
            new = tuple(range(used + 1, used + fresh + 1))
            for old in itertools.combinations(range(1, used + 1), reuse):
                acc.append(frozenset(old + new))
                yield from rec(i + 1, used + fresh, acc)
                acc.pop()

    yield from rec(0, 0, [])


def _closing_order(adj: dict[int, set[int]]) -> list[int]:
    """Vertex order that completes closed neighbourhoods early."""
    order: list[int] = []
    rest = set(adj)
    while rest:
        placed = set(order)
        v = max(rest, key=lambda x: (len(adj[x] & placed), len(adj[x]), -x))
        order.append(v)
        rest.remove(v)
    return order


def degree_choosable_oracle(graph, max_colors: int | None = None,
                            max_instances: int = 5_000_000, prune: bool = True) -> bool:
    """Brute force: is every degree-sized list assignment colourable?

    Lists draw from colours 1..max_colors (default: no cap beyond the total
    list length) and are enumerated up to relabelling. With ``prune`` a
    partial assignment is abandoned as soon as some vertex with all
    neighbour lists fixed owns a colour none of its neighbours can take:
    colouring that vertex first and then each component of the rest
    greedily towards it always succeeds.
    """
    adj = _adjacency_dict(graph)
    if len(adj) > 8:
        raise SearchBudgetExceeded("degree-choosability oracle is limited to 8 vertices")
    order = _closing_order(adj)
    pos = {v: i for i, v in enumerate(order)}
    closes: dict[int, list[int]] = {i: [] for i in range(len(order))}
    for v in order:
        closes[max(pos[u] for u in adj[v] | {v})].append(v)
    sizes = [len(adj[v]) for v in order]
    cap = sum(sizes) if max_colors is None else max_colors
    lists: dict[int, frozenset[int]] = {}
    leaves = 0

    def private(v) -> bool:
        shared = set().union(*(lists[u] for u in adj[v])) if adj[v] else set()
        return bool(lists[v] - shared)

    def rec(i: int, used: int) -> bool:
        nonlocal leaves
        if i == len(order):
            leaves += 1
            if leaves > max_instances:
                raise SearchBudgetExceeded(f"more than {max_instances} list patterns")
            return list_color_brute(adj, lists) is not None
        v = order[i]
        need = sizes[i]
        for reuse in range(min(need, used), -1, -1):
            fresh = need - reuse
            if used + fresh > cap:
                continue
            new = tuple(range(used + 1, used + fresh + 1))
            for old in itertools.combinations(range(1, used + 1), reuse):
                lists[v] = frozenset(old + new)
                if prune and any(private(w) for w in closes[i]):
                    continue
                if not rec(i + 1, used + fresh):
                    return False
        del lists[v]
        return True

    return rec(0, 0)
