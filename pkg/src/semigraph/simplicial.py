"""Simplicial sets: the Boolean-semiring interpretation of trees.

A simplex is a nonempty tuple of vertices in connection order; a
simplicial set is a frozenset of simplices.  Connecting two simplicial
sets keeps both and adds every concatenation of a simplex from the first
with a simplex from the second, so an n-fold connection of vertices
produces all 2^n - 1 nonempty subsequences.  This representation is
deliberately naive: every sub-simplex is stored explicitly.
"""

from __future__ import annotations

from typing import Any, FrozenSet, Iterable, Tuple

from .semiring import BOOL
from .tree import Leaf, Node, Tree, fold

Simplex = Tuple[Any, ...]
SimplicialSet = FrozenSet[Simplex]


def ss_vertex(a: Any) -> SimplicialSet:
    return frozenset({(a,)})


def ss_overlay(x: SimplicialSet, y: SimplicialSet) -> SimplicialSet:
    return x | y


def ss_connect(x: SimplicialSet, y: SimplicialSet) -> SimplicialSet:
    """x, y, and the concatenation of every pair (p in x, q in y)."""
    return x | y | frozenset(p + q for p in x for q in y)


def to_simplicial_set(tree: Tree) -> SimplicialSet:
    """Fold a Boolean tree: True nodes connect, False nodes overlay."""
    return fold(ss_vertex, lambda s, x, y: ss_connect(x, y) if s else x | y, tree)


def vertex(a: Any) -> Tree:
    return Leaf(a)


def edge(x: Any, y: Any) -> Tree:
    return Node(True, Leaf(x), Leaf(y))


def simplex(vertices: Iterable[Any]) -> Tree:
    """Right-nested connection of the given vertices.  Input must be nonempty.

    Interpreting the result yields 2^n - 1 simplices for n distinct
    vertices, while the tree itself stays linear in n.
    """
    vs = list(vertices)
    if not vs:
        raise ValueError("simplex() requires at least one vertex")
    tree: Tree = Leaf(vs[-1])
    for v in reversed(vs[:-1]):
        tree = Node(True, Leaf(v), tree)
    return tree


def faces(s: Simplex) -> Iterable[Simplex]:
    """All delete-one-vertex faces of a simplex of length >= 2."""
    for i in range(len(s)):
        yield s[:i] + s[i + 1 :]


def is_valid(ss: SimplicialSet) -> bool:
    """Face closure: every face of every stored simplex is stored too.

    Length-1 simplices have no face requirement.  Outputs of
    to_simplicial_set are always valid (they are even closed under all
    nonempty subsequences, a strictly stronger property).
    """
    for s in ss:
        if len(s) < 2:
            continue
        for face in faces(s):
            if face not in ss:
                return False
    return True


def sorted_simplices(ss: SimplicialSet) -> list:
    """Simplices ordered by (dimension, lexicographic) for stable output."""
    return sorted(ss, key=lambda s: (len(s), s))
