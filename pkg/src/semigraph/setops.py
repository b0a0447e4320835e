"""Set interpretation: trees over the unit semiring read as nonempty sets.

The meaning of a tree here is its leaf set, so two trees are equivalent
exactly when their leaf sets agree; all operations below are specified up
to that equivalence, never up to tree shape.
"""

from __future__ import annotations

from typing import Any, Callable

from . import tree as t
from .semiring import UNIT
from .tree import Leaf, OptionalTree, Tree


def singleton(a: Any) -> Tree:
    return Leaf(a)


def insert(a: Any, s: Tree) -> Tree:
    return t.overlay(UNIT, singleton(a), s)


def member(a: Any, s: Tree) -> bool:
    return t.has_leaf(a, s)


def union(s: Tree, u: Tree) -> Tree:
    return t.overlay(UNIT, s, u)


def delete(a: Any, s: Tree) -> OptionalTree:
    """Remove a; None when a was the only element."""
    return t.filter_leaves(lambda x: x != a, s)


def set_size(s: Tree) -> int:
    # tree.size counts duplicated leaves, so go through the leaf set
    return len(t.leaf_set(s))


def elements(s: Tree) -> frozenset:
    return t.leaf_set(s)


def filter_set(p: Callable[[Any], bool], s: Tree) -> OptionalTree:
    return t.filter_leaves(p, s)


def cartesian_product(s: Tree, u: Tree) -> Tree:
    """All pairs (a, b) with a in s, b in u."""
    return t.bind(s, lambda a: t.map_leaves(lambda b: (a, b), u))
