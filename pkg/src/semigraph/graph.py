"""Unlabelled directed graphs: the pair (V, E) interpretation of Boolean trees.

Connecting two graphs adds the full Cartesian product of their vertex
sets to the union of their edges, which makes the fold respect the
decomposition of chained connections into pairwise ones; simplicial sets
distinguish those, graphs do not.

The undirected / reflexive / bipartite variants are post-processings of
the plain fold: each one realises the congruence its extra leaf law
generates (identifying commuted, self-connected, or same-part edges).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, FrozenSet, Iterable, Mapping, Optional, Tuple

from . import tree as t
from .tree import Leaf, Node, OptionalTree, Tree, fold

Edge = Tuple[Any, Any]


@dataclass(frozen=True)
class Graph:
    vertices: FrozenSet[Any]
    edges: FrozenSet[Edge]


EMPTY_GRAPH = Graph(frozenset(), frozenset())


def g_vertex(a: Any) -> Graph:
    return Graph(frozenset({a}), frozenset())


def g_overlay(g: Graph, h: Graph) -> Graph:
    return Graph(g.vertices | h.vertices, g.edges | h.edges)


def g_connect(g: Graph, h: Graph) -> Graph:
    block = frozenset((u, v) for u in g.vertices for v in h.vertices)
    return Graph(g.vertices | h.vertices, g.edges | h.edges | block)


def to_graph(tree: Tree) -> Graph:
    return fold(g_vertex, lambda s, x, y: g_connect(x, y) if s else g_overlay(x, y), tree)


def clique(vertices: Iterable[Any]) -> Tree:
    """Pairwise connected vertices; the same tree as a simplex."""
    vs = list(vertices)
    if not vs:
        raise ValueError("clique() requires at least one vertex")
    tree: Tree = Leaf(vs[-1])
    for v in reversed(vs[:-1]):
        tree = Node(True, Leaf(v), tree)
    return tree


def induce(p: Callable[[Any], bool], tree: Tree) -> OptionalTree:
    """Subgraph on the vertices satisfying p; None when none survive."""
    return t.filter_leaves(p, tree)


def has_edge(x: Any, y: Any, tree: Tree) -> bool:
    # Induce on {x, y} first: the small residual graph decides membership.
    sub = induce(lambda a: a == x or a == y, tree)
    if sub is None:
        return False
    return (x, y) in to_graph(sub).edges


def undirected(g: Graph) -> Graph:
    edges = frozenset((u, v) if u <= v else (v, u) for u, v in g.edges)
    return Graph(g.vertices, edges)


def reflexive(g: Graph) -> Graph:
    return Graph(g.vertices, g.edges | frozenset((v, v) for v in g.vertices))


def bipartite(g: Graph, parts: Mapping[Any, Any]) -> Graph:
    missing = [v for v in g.vertices if v not in parts]
    if missing:
        raise ValueError(f"part assignment is missing vertices: {sorted(missing)}")
    edges = frozenset((u, v) for u, v in g.edges if parts[u] != parts[v])
    return Graph(g.vertices, edges)


def to_variant_graph(mode: str, tree: Tree, parts: Optional[Mapping[Any, Any]] = None) -> Graph:
    g = to_graph(tree)
    if mode == "undirected":
        return undirected(g)
    if mode == "reflexive":
        return reflexive(g)
    if mode == "bipartite":
        if parts is None:
            raise ValueError("bipartite mode requires a part assignment")
        return bipartite(g, parts)
    raise ValueError(f"unknown graph variant {mode!r}")
