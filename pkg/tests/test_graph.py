"""Unlabelled graphs: the (V, E) fold, decomposition, and the variants."""

import random

import pytest

from oracles import induced_subgraph

from semigraph.graph import (
    Graph,
    bipartite,
    clique,
    g_connect,
    g_overlay,
    g_vertex,
    has_edge,
    induce,
    to_graph,
    to_variant_graph,
    undirected,
)
from semigraph.laws import LAWS, TreeGen, check_law, generate
from semigraph.semiring import BOOL
from semigraph.tree import Leaf, Node, leaf_set


def bool_gen(seed=9, max_leaves=10):
    return TreeGen(seed=seed, max_leaves=max_leaves, alphabet=4, labels=BOOL.label_pool)


def g(vertices, edges):
    return Graph(frozenset(vertices), frozenset(edges))


A, B, C = Leaf("a"), Leaf("b"), Leaf("c")
AB = Node(True, A, B)
CHAIN = Node(True, A, Node(True, B, C))  # a -> b -> c


def test_to_graph_examples():
    assert to_graph(AB) == g("ab", [("a", "b")])
    assert to_graph(CHAIN) == g("abc", [("a", "b"), ("a", "c"), ("b", "c")])
    assert to_graph(Node(True, Node(False, A, B), C)) == g("abc", [("a", "c"), ("b", "c")])


def test_clique():
    assert to_graph(clique(["a", "b"])).edges == {("a", "b")}
    assert to_graph(clique(["a", "b", "c"])).edges == {("a", "b"), ("a", "c"), ("b", "c")}
    assert to_graph(clique(["a"])) == g("a", [])
    with pytest.raises(ValueError):
        clique([])


def test_has_edge():
    assert has_edge("a", "b", AB)
    assert not has_edge("b", "a", AB)  # directed
    assert has_edge("a", "c", CHAIN)
    assert not has_edge("a", "z", CHAIN)


def test_has_edge_agrees_with_edge_set():
    names = "abcd"
    for t in generate(bool_gen(17), 100):
        edges = to_graph(t).edges
        for u in names:
            for v in names:
                assert has_edge(u, v, t) == ((u, v) in edges)


def test_induce():
    for t in generate(bool_gen(21), 150):
        full = induce(lambda a: True, t)
        assert full is not None and to_graph(full) == to_graph(t)
        kept = induce(lambda a: a in ("a", "c"), t)
        expected = induced_subgraph(to_graph(t), lambda v: v in ("a", "c"))
        if kept is None:
            assert expected.vertices == frozenset()
        else:
            assert to_graph(kept) == expected
        assert induce(lambda a: False, t) is None
    assert to_graph(induce(lambda a: a in ("a", "c"), CHAIN)).edges == {("a", "c")}


def test_decomposition_law_on_trees():
    result = check_law(LAWS["decomposition"], BOOL, "graph", 500, bool_gen())
    assert result.expectation == "must_hold" and result.failures == 0


def test_decomposition_identity_on_raw_graphs():
    rng = random.Random("graph-decomposition")
    names = "abcdef"

    def random_graph():
        vs = frozenset(rng.sample(names, rng.randint(1, 4)))
        es = frozenset(
            (u, v) for u in vs for v in vs if rng.random() < 0.4
        )
        return Graph(vs, es)

    for _ in range(300):
        g1, g2, g3 = random_graph(), random_graph(), random_graph()
        lhs = g_connect(g1, g_connect(g2, g3))
        rhs = g_overlay(g_overlay(g_connect(g1, g2), g_connect(g1, g3)), g_connect(g2, g3))
        assert lhs == rhs
        # vertex sets: union is idempotent
        assert lhs.vertices == g1.vertices | g2.vertices | g3.vertices
        # edge sets: original edges plus the three pairwise products
        products = {
            (u, v)
            for left, right in ((g1, g2), (g1, g3), (g2, g3))
            for u in left.vertices
            for v in right.vertices
        }
        assert lhs.edges == g1.edges | g2.edges | g3.edges | products


def test_vertex_set_is_leaf_set_and_edges_stay_inside():
    for t in generate(bool_gen(23), 200):
        interpreted = to_graph(t)
        assert interpreted.vertices == leaf_set(t)
        assert all(u in interpreted.vertices and v in interpreted.vertices for u, v in interpreted.edges)


def test_undirected_variant():
    assert to_variant_graph("undirected", Node(True, B, A)) == to_variant_graph("undirected", AB)
    assert to_variant_graph("undirected", AB).edges == {("a", "b")}


def test_reflexive_variant():
    assert to_variant_graph("reflexive", A) == g("a", [("a", "a")])
    assert to_variant_graph("reflexive", AB).edges == {("a", "b"), ("a", "a"), ("b", "b")}


def test_bipartite_variant():
    parts = {"a": "P", "b": "P", "c": "Q"}
    got = to_variant_graph("bipartite", clique(["a", "b", "c"]), parts)
    assert got.edges == {("a", "c"), ("b", "c")}
    with pytest.raises(ValueError):
        to_variant_graph("bipartite", clique(["a", "b", "c"]), {"a": "P"})
    with pytest.raises(ValueError):
        to_variant_graph("bipartite", AB)
    with pytest.raises(ValueError):
        to_variant_graph("sideways", AB)


def test_variant_postprocessors_compose_with_overlay():
    for t, u in zip(generate(bool_gen(31), 80), generate(bool_gen(32), 80)):
        both = Node(False, t, u)
        assert undirected(to_graph(both)) == g_overlay(
            undirected(to_graph(t)), undirected(to_graph(u))
        )


def test_empty_graph_is_overlay_and_connect_unit():
    empty = Graph(frozenset(), frozenset())
    for t in generate(bool_gen(33), 50):
        interpreted = to_graph(t)
        assert g_overlay(interpreted, empty) == interpreted
        assert g_connect(interpreted, empty) == interpreted
        assert g_connect(empty, interpreted) == interpreted
