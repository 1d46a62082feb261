import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _corpus import chromatic_number_brute, chromatic_number_ie, connected_graphs, random_corpus
from facialchroma.coloring import (
    Coloring,
    SearchBudgetExceeded,
    canonical_list_assignments,
    color_matrix,
    degree_choosable_oracle,
    exact_chromatic,
    facial_k_coloring,
    greedy_color,
    is_gallai_tree,
    list_color_brute,
    verify,
)
from facialchroma.facial import facial_adjacency_graph
from facialchroma.generators import cycle, named, path, random_plane_graph, tight_example


def facial_dict(g, l):
    return {v: set(nb) for v, nb in facial_adjacency_graph(g, l).neighbors.items()}


# -- verify and greedy ------------------------------------------------------

def test_verify_c9_good_colouring():
    colors = {i + 1: c + 1 for i, c in enumerate((0, 1, 2, 3, 0, 1, 2, 3, 4))}
    assert verify(cycle(9), 3, colors) == []


def test_verify_c9_mod_four_clashes_across_the_seam():
    colors = {i + 1: i % 4 + 1 for i in range(9)}
    assert verify(cycle(9), 3, colors) == [(1, 9)]


def test_verify_rejects_partial():
    with pytest.raises(ValueError, match="partial"):
        verify(cycle(4), 1, {1: 1})


def test_coloring_range_checked():
    with pytest.raises(ValueError):
        Coloring({1: 3}, k=2)


def test_tight_two_needs_seven():
    g = tight_example(2)
    rng = random.Random(0)
    for _ in range(50):
        colors = {v: rng.randint(1, 6) for v in g.vertices}
        assert verify(g, 2, colors)


def test_greedy_k4_is_proper():
    g = named("tetrahedron")
    for order in ([1, 2, 3, 4], [4, 3, 2, 1], [2, 4, 1, 3]):
        res = greedy_color(g, 1, 4, order)
        assert res.ok and verify(g, 1, res.coloring) == []


def test_greedy_tight_two():
    g = tight_example(2)
    res = greedy_color(g, 2, 7, list(reversed(g.vertices)))
    assert res.ok and res.coloring.colors_used() == 7
    stuck = greedy_color(g, 2, 6)
    assert not stuck.ok and stuck.position == 7


def test_greedy_rejects_bad_order():
    with pytest.raises(ValueError):
        greedy_color(cycle(4), 1, 2, [1, 2, 3])


# -- exact -------------------------------------------------------------------

def test_exact_c9():
    k, col = exact_chromatic(cycle(9), 3)
    assert k == 5 and verify(cycle(9), 3, col) == []


@pytest.mark.parametrize("l, chi", [(1, 4), (2, 7), (3, 10), (4, 13)])
def test_exact_tight(l, chi):
    assert exact_chromatic(tight_example(l), l)[0] == chi


def test_exact_tree_at_zero():
    assert exact_chromatic(path(6), 0)[0] == 1


def test_decision_and_budget():
    g = tight_example(3)
    assert facial_k_coloring(g, 3, 9) is None
    assert facial_k_coloring(g, 3, 10) is not None
    adj = facial_adjacency_graph(named("dodecahedron"), 3).matrix()
    with pytest.raises(SearchBudgetExceeded):
        color_matrix(adj, 5, budget=3, clique=[])


def test_exact_matches_inclusion_exclusion_on_corpus():
    for g in random_corpus(1000):
        if g.n > 10:
            continue
        for l in (1, 2, 3):
            k, col = exact_chromatic(g, l)
            assert verify(g, l, col) == []
            assert k == chromatic_number_ie(facial_dict(g, l))


def test_inclusion_exclusion_oracle_against_enumeration():
    for G in connected_graphs(5):
        adj = {v: set(G[v]) for v in G}
        assert chromatic_number_ie(adj) == chromatic_number_brute(adj)


@settings(max_examples=40, deadline=None)
@given(n=st.integers(3, 13), seed=st.integers(0, 10_000), keep=st.floats(0.2, 1.0),
       l=st.integers(1, 4))
def test_exact_witness_always_verifies(n, seed, keep, l):
    g = random_plane_graph(n, seed=seed, keep_prob=keep)
    k, col = exact_chromatic(g, l)
    assert verify(g, l, col) == []
    assert col.colors_used() == k


# -- list colouring ----------------------------------------------------------

def test_nested_lists_on_k5():
    K5 = nx.complete_graph(range(1, 6))
    lists = {i: set(range(1, i + 1)) for i in range(1, 6)}
    col = list_color_brute(K5, lists)
    assert col is not None and len(set(col.values())) == 5
    assert all(col[v] in lists[v] for v in lists)


def test_k2_same_singleton_fails():
    assert list_color_brute({1: {2}, 2: {1}}, {1: {1}, 2: {1}}) is None


def k4_minus_edge():
    G = nx.complete_graph(4)
    G.remove_edge(0, 1)
    return G


def test_k4_minus_edge_every_pattern():
    G = k4_minus_edge()
    order = [0, 1, 2, 3]
    sizes = [G.degree(v) for v in order]
    assert sizes == [2, 2, 3, 3]
    count = 0
    for lists in canonical_list_assignments(sizes):
        count += 1
        assert list_color_brute(G, dict(zip(order, lists))) is not None
    assert count > 100


@pytest.mark.parametrize("G, expect", [
    (nx.cycle_graph(5), True),
    (nx.cycle_graph(7), True),
    (nx.cycle_graph(4), False),
    (k4_minus_edge(), False),
    (nx.complete_graph(5), True),
    (nx.path_graph(4), True),
])
def test_gallai_trees(G, expect):
    assert is_gallai_tree(G) is expect


def test_gallai_rejects_disconnected():
    with pytest.raises(ValueError):
        is_gallai_tree(nx.empty_graph(2))


@pytest.mark.parametrize("G, expect", [
    (k4_minus_edge(), True),
    (nx.complete_graph(3), False),
    (nx.cycle_graph(5), False),
    (nx.cycle_graph(4), True),
])
def test_degree_choosable_examples(G, expect):
    assert degree_choosable_oracle(G) is expect


def test_oracle_pruning_matches_plain_search():
    for G in connected_graphs(4):
        assert degree_choosable_oracle(G, prune=True) == degree_choosable_oracle(G, prune=False)


def test_oracle_size_limit():
    with pytest.raises(SearchBudgetExceeded):
        degree_choosable_oracle(nx.cycle_graph(9))


def test_canonical_lists_are_relabelling_classes():
    # two 1-lists: either equal or different
    assert sorted(tuple(map(sorted, x)) for x in canonical_list_assignments([1, 1])) == [
        ([1], [1]), ([1], [2])]
    # capped palette
    assert all(max(max(s) for s in x) <= 3 for x in canonical_list_assignments([2, 2, 2], 3))


@settings(max_examples=60, deadline=None)
@given(n=st.integers(1, 7), data=st.data())
def test_greedy_guarantee_for_growing_lists(n, data):
    # on a clique, |L(u_i)| >= i always suffices
    palette = list(range(1, 2 * n + 1))
    lists = {}
    for i in range(1, n + 1):
        size = data.draw(st.integers(i, len(palette)))
        lists[i] = set(data.draw(st.permutations(palette))[:size])
    K = nx.complete_graph(range(1, n + 1))
    col = list_color_brute(K, lists)
    assert col is not None
    assert len(set(col.values())) == n and all(col[v] in lists[v] for v in lists)
