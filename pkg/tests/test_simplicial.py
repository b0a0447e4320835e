"""Simplicial sets: the connect algebra, validity, and the law suite."""

import pytest

from oracles import all_nonempty_subsequences

from semigraph.laws import LAWS, TreeGen, check_law, generate
from semigraph.semiring import BOOL
from semigraph.simplicial import (
    edge,
    is_valid,
    simplex,
    ss_connect,
    to_simplicial_set,
    vertex,
)
from semigraph.tree import Leaf, Node


def bool_gen(seed=5, max_leaves=8):
    return TreeGen(seed=seed, max_leaves=max_leaves, alphabet=4, labels=BOOL.label_pool)


def ss(*simplices):
    return frozenset(tuple(s) for s in simplices)


def test_ss_connect_two_vertices():
    assert ss_connect(ss("a"), ss("b")) == ss("a", "b", "ab")


def test_ss_connect_vertex_with_edge():
    right = ss(("b",), ("c",), ("b", "c"))
    result = ss_connect(frozenset({("a",)}), right)
    assert result == frozenset(
        {("a",), ("b",), ("c",), ("a", "b"), ("a", "c"), ("b", "c"), ("a", "b", "c")}
    )
    assert len(result) == 7


def test_ss_connect_contains_both_arguments():
    for x, y in zip(generate(bool_gen(1), 60), generate(bool_gen(2), 60)):
        sx, sy = to_simplicial_set(x), to_simplicial_set(y)
        assert ss_connect(sx, sy) >= sx | sy


def test_to_simplicial_set_examples():
    assert to_simplicial_set(Leaf("a")) == ss("a")
    triangle = Node(True, Node(True, Leaf("a"), Leaf("b")), Leaf("c"))
    interpreted = to_simplicial_set(triangle)
    assert len(interpreted) == 7
    assert ("a", "b", "c") in interpreted
    broken = Node(True, Node(False, Leaf("a"), Leaf("b")), Leaf("c"))
    assert to_simplicial_set(broken) == ss("a", "b", "c", "ac", "bc")


def test_simplex_tree_shape_and_size():
    assert simplex(["a"]) == Leaf("a")
    t = simplex(["x", "y", "z"])
    assert t == Node(True, Leaf("x"), Node(True, Leaf("y"), Leaf("z")))
    # the two ways of building a triangle mean the same simplicial set
    lhs = Node(True, vertex("x"), edge("y", "z"))
    rhs = Node(True, edge("x", "y"), vertex("z"))
    assert to_simplicial_set(lhs) == to_simplicial_set(rhs) == to_simplicial_set(t)
    assert len(to_simplicial_set(simplex(["a", "b", "c", "d"]))) == 15
    with pytest.raises(ValueError):
        simplex([])


def test_duplicate_vertices_allowed():
    assert to_simplicial_set(Node(True, Leaf("a"), Leaf("a"))) == ss("a", "aa")
    assert is_valid(ss("a", "aa"))


def test_is_valid():
    assert not is_valid(ss("a", "ab"))  # the edge appears without vertex b
    assert is_valid(ss("a", "b", "ab"))
    assert is_valid(frozenset())


def test_interpretations_are_valid():
    for t in generate(bool_gen(3, max_leaves=8), 500):
        assert is_valid(to_simplicial_set(t))


def test_subsequence_closure_against_oracle():
    for t in generate(bool_gen(4, max_leaves=8), 300):
        interpreted = to_simplicial_set(t)
        for s in interpreted:
            assert all_nonempty_subsequences(s) <= interpreted


@pytest.mark.parametrize(
    "law",
    ["overlay_assoc", "connect_assoc", "overlay_comm", "overlay_idem", "containment",
     "distrib_left", "distrib_right"],
)
def test_law_suite_holds(law):
    result = check_law(LAWS[law], BOOL, "simplicial", 300, bool_gen())
    assert result.expectation == "must_hold"
    assert result.failures == 0


def test_decomposition_fails_with_seven_vs_six():
    chain = Node(True, Leaf("a"), Node(True, Leaf("b"), Leaf("c")))
    pairwise = Node(
        False,
        Node(False, edge("a", "b"), edge("a", "c")),
        edge("b", "c"),
    )
    lhs, rhs = to_simplicial_set(chain), to_simplicial_set(pairwise)
    assert len(lhs) == 7 and len(rhs) == 6
    assert lhs - rhs == {("a", "b", "c")}
    result = check_law(LAWS["decomposition"], BOOL, "simplicial", 300, bool_gen())
    assert result.expectation == "must_fail"
    assert result.failures > 0 and result.counterexample is not None
