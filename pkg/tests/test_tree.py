"""Tree combinators: fold, overlay/connect, leaves, map/bind, filter, JSON."""

import pytest

from semigraph.laws import TreeGen, generate
from semigraph.semiring import BOOL, SEMIRINGS, UNIT
from semigraph.tree import (
    Leaf,
    Node,
    bind,
    filter_leaves,
    fold,
    from_json_obj,
    has_leaf,
    leaf_set,
    leaves,
    map_leaves,
    overlay,
    size,
    to_json_obj,
    to_list,
)

A, B, C = Leaf("a"), Leaf("b"), Leaf("c")


def random_trees(sr, n=200, seed=7, max_leaves=10):
    return generate(TreeGen(seed=seed, max_leaves=max_leaves, alphabet=4, labels=sr.label_pool), n)


def test_fold_counts_leaves():
    t = Node(True, Node(False, A, B), C)  # ("a" + "b") -> "c"
    assert fold(lambda a: 1, lambda s, x, y: x + y, t) == 3


def test_fold_on_duplicate_leaves():
    t = overlay(UNIT, Leaf("b"), Leaf("b"))
    assert fold(lambda a: 1, lambda s, x, y: x + y, t) == 2
    assert fold(lambda a: {a}, lambda s, x, y: x | y, t) == {"b"}


def test_fold_identity_algebra():
    for t in random_trees(BOOL, 100):
        assert fold(Leaf, Node, t) == t


def test_overlay_is_syntactic():
    assert overlay(BOOL, A, B) == Node(False, A, B)
    left = overlay(BOOL, overlay(BOOL, A, B), C)
    right = overlay(BOOL, A, overlay(BOOL, B, C))
    assert left != right  # different trees; only interpretations identify them
    doubled = overlay(BOOL, A, A)
    assert size(doubled) == 2  # no deduplication at the syntax level


def test_connect_with_zero_label_equals_overlay():
    assert Node(BOOL.zero, A, B) == overlay(BOOL, A, B)
    assert Node(True, A, B) == Node(BOOL.one, A, B)


def test_leaves_shape():
    assert leaves(BOOL, ["a"]) == A
    assert leaves(BOOL, ["a", "b", "c"]) == Node(False, A, Node(False, B, C))
    assert leaf_set(leaves(BOOL, ["a", "b", "a"])) == {"a", "b"}
    with pytest.raises(ValueError):
        leaves(BOOL, [])


def test_map_leaves():
    t = Node(True, A, B)
    assert map_leaves(lambda a: a, t) == t
    assert map_leaves(str.upper, t) == Node(True, Leaf("A"), Leaf("B"))
    for x in random_trees(BOOL, 100):
        f = lambda a: a + "!"
        g = str.upper
        assert map_leaves(f, map_leaves(g, x)) == map_leaves(lambda a: f(g(a)), x)


def test_bind_monad_laws():
    grow = lambda a: Node(True, Leaf(a), Leaf(a))
    assert bind(A, grow) == grow("a")
    for t in random_trees(BOOL, 100):
        assert bind(t, Leaf) == t
    t = overlay(BOOL, A, B)
    assert bind(t, grow) == Node(False, Node(True, A, A), Node(True, B, B))


def test_leaf_queries():
    t = Node(True, Node(False, A, B), C)
    assert to_list(t) == ["a", "b", "c"]
    assert size(t) == 3
    assert not has_leaf("z", Node(True, A, B))
    for x in random_trees(BOOL, 150):
        listed = to_list(x)
        assert size(x) == len(listed)
        assert leaf_set(x) == set(listed)
        assert all(has_leaf(v, x) for v in listed)


def test_deeply_nested_trees_do_not_recurse():
    t = leaves(BOOL, [str(i) for i in range(50_000)])
    assert size(t) == 50_000


def test_filter_everything_and_nothing():
    for t in random_trees(BOOL, 100):
        assert filter_leaves(lambda a: False, t) is None
        assert filter_leaves(lambda a: True, t) == t


def test_filter_collapses_single_survivor():
    t = Node(True, Node(True, A, B), C)  # (a -> b) -> c
    assert filter_leaves(lambda a: a != "b", t) == Node(True, A, C)


def test_filter_leaf_set_property():
    for t in random_trees(BOOL, 150):
        kept = filter_leaves(lambda a: a in ("a", "b"), t)
        expected = {v for v in leaf_set(t) if v in ("a", "b")}
        if kept is None:
            assert expected == set()
        else:
            assert leaf_set(kept) == expected


@pytest.mark.parametrize("name", sorted(SEMIRINGS))
def test_json_round_trip(name):
    sr = SEMIRINGS[name]
    for t in random_trees(sr, 100):
        obj = to_json_obj(t, sr.label_to_json)
        assert from_json_obj(obj, sr.label_from_json) == t


def test_json_rejects_malformed():
    with pytest.raises(ValueError):
        from_json_obj({"nope": 1}, BOOL.label_from_json)
    with pytest.raises(ValueError):
        from_json_obj(["leaf"], BOOL.label_from_json)
