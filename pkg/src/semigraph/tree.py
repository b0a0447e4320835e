"""Binary trees with semiring-labelled internal nodes.

This is the one expression type every interpreter folds over.  A tree is
a Leaf carrying a value or a Node carrying a semiring label and exactly
two subtrees; the type cannot express an empty structure, so operations
that can erase every leaf return None instead (the "optional tree").

Trees are plain immutable values: no simplification or normalisation ever
happens at this level, ``overlay(x, x)`` really has two copies of ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Iterable, Iterator, Optional, Union

from .semiring import Semiring


@dataclass(frozen=True)
class Leaf:
    value: Any


@dataclass(frozen=True)
class Node:
    label: Any
    left: "Tree"
    right: "Tree"


Tree = Union[Leaf, Node]
OptionalTree = Optional[Tree]  # None is the empty tree


def fold(leaf_fn: Callable[[Any], Any], node_fn: Callable[[Any, Any, Any], Any], tree: Tree) -> Any:
    """Structural fold: Leaf a -> leaf_fn(a), Node s x y -> node_fn(s, fx, fy).

    Caller obligation: node_fn(s, ., .) must be associative for every s,
    including the semiring zero.  Iterative so that deeply nested trees do
    not hit the interpreter recursion limit.
    """
    results: list[Any] = []
    todo: list[tuple[Tree, bool]] = [(tree, False)]
    while todo:
        t, ready = todo.pop()
        if isinstance(t, Leaf):
            results.append(leaf_fn(t.value))
        elif ready:
            right = results.pop()
            left = results.pop()
            results.append(node_fn(t.label, left, right))
        else:
            todo.append((t, True))
            todo.append((t.right, False))
            todo.append((t.left, False))
    return results[0]


def overlay(sr: Semiring, x: Tree, y: Tree) -> Tree:
    """Zero-labelled node: parallel composition, set/graph union when folded."""
    return Node(sr.zero, x, y)


def connect(label: Any, x: Tree, y: Tree) -> Tree:
    """Labelled node: sequential composition with the given connectivity."""
    return Node(label, x, y)


def leaves(sr: Semiring, values: Iterable[Any]) -> Tree:
    """Right-nested overlay of single leaves, in order.  Input must be nonempty."""
    vs = list(values)
    if not vs:
        raise ValueError("leaves() requires at least one value")
    tree: Tree = Leaf(vs[-1])
    for v in reversed(vs[:-1]):
        tree = Node(sr.zero, Leaf(v), tree)
    return tree


def iter_leaves(tree: Tree) -> Iterator[Any]:
    """Leaf values in left-to-right order."""
    todo = [tree]
    while todo:
        t = todo.pop()
        if isinstance(t, Leaf):
            yield t.value
        else:
            todo.append(t.right)
            todo.append(t.left)


def map_leaves(f: Callable[[Any], Any], tree: Tree) -> Tree:
    """Relabel every leaf with f; shape and node labels are unchanged."""
    return fold(lambda a: Leaf(f(a)), Node, tree)


def bind(tree: Tree, f: Callable[[Any], Tree]) -> Tree:
    """Graft the tree f(a) onto every leaf a."""
    return fold(f, Node, tree)


def size(tree: Tree) -> int:
    """Number of leaves (duplicates counted)."""
    return sum(1 for _ in iter_leaves(tree))


def to_list(tree: Tree) -> list:
    return list(iter_leaves(tree))


def leaf_set(tree: Tree) -> frozenset:
    return frozenset(iter_leaves(tree))


def has_leaf(a: Any, tree: Tree) -> bool:
    return any(v == a for v in iter_leaves(tree))


def filter_leaves(p: Callable[[Any], bool], tree: Tree) -> OptionalTree:
    """Drop every leaf that fails p.

    A node with one surviving child collapses to that child (the node
    label is dropped); a node with none is removed.  None when nothing
    survives.
    """

    def combine(label: Any, left: OptionalTree, right: OptionalTree) -> OptionalTree:
        if left is None:
            return right
        if right is None:
            return left
        return Node(label, left, right)

    return fold(lambda a: Leaf(a) if p(a) else None, combine, tree)


# --- canonical JSON encoding ------------------------------------------------
#
# {"leaf": "<name>"} | {"node": <label json>, "l": <tree>, "r": <tree>}


def to_json_obj(tree: Tree, label_to_json: Callable[[Any], Any]) -> dict:
    if isinstance(tree, Leaf):
        return {"leaf": str(tree.value)}
    return {
        "node": label_to_json(tree.label),
        "l": to_json_obj(tree.left, label_to_json),
        "r": to_json_obj(tree.right, label_to_json),
    }


def from_json_obj(obj: Any, label_from_json: Callable[[Any], Any]) -> Tree:
    if not isinstance(obj, dict):
        raise ValueError(f"invalid tree JSON: {obj!r}")
    if "leaf" in obj:
        if not isinstance(obj["leaf"], str):
            raise ValueError(f"invalid leaf JSON: {obj!r}")
        return Leaf(obj["leaf"])
    if "node" in obj and "l" in obj and "r" in obj:
        return Node(
            label_from_json(obj["node"]),
            from_json_obj(obj["l"], label_from_json),
            from_json_obj(obj["r"], label_from_json),
        )
    raise ValueError(f"invalid tree JSON: {obj!r}")
