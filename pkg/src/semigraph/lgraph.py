"""Edge-labelled graphs as adjacency maps: vertex -> (vertex -> label).

Two invariants hold for every value produced here:

* sparsity -- no stored label equals the semiring zero; an absent entry
  *means* zero, which is why ``edge_label`` is total;
* key closure -- every edge target is also an outer key, so the outer key
  set is the vertex set.

Overlaying combines colliding edge labels with the semiring plus.
Connecting with a zero label is exactly overlaying (the zero filter);
any other label additionally lays a complete bipartite block from the
left vertices to the right ones.
"""

from __future__ import annotations

from typing import Any, Dict

from .semiring import Semiring
from .tree import Tree, fold

LGraph = Dict[Any, Dict[Any, Any]]


def lg_vertex(a: Any) -> LGraph:
    return {a: {}}


def _merge_edge(sr: Semiring, adjacency: Dict[Any, Any], v: Any, label: Any) -> None:
    merged = sr.plus(adjacency[v], label) if v in adjacency else label
    if sr.is_zero(merged):
        # plus of nonzeros is nonzero in the built-in semirings, but a
        # user-defined semiring may cancel; keep the map sparse either way
        adjacency.pop(v, None)
    else:
        adjacency[v] = merged


def lg_overlay(sr: Semiring, g: LGraph, h: LGraph) -> LGraph:
    out = {u: dict(adj) for u, adj in g.items()}
    for u, adj in h.items():
        if u not in out:
            out[u] = dict(adj)
            continue
        for v, label in adj.items():
            _merge_edge(sr, out[u], v, label)
    return out


def lg_connect(sr: Semiring, s: Any, g: LGraph, h: LGraph) -> LGraph:
    if sr.is_zero(s):
        return lg_overlay(sr, g, h)
    out = lg_overlay(sr, g, h)
    for u in g:
        adjacency = out[u]
        for v in h:
            _merge_edge(sr, adjacency, v, s)
    return out


def to_lgraph(sr: Semiring, tree: Tree) -> LGraph:
    return fold(lg_vertex, lambda s, x, y: lg_connect(sr, s, x, y), tree)


def edge_label(sr: Semiring, g: LGraph, u: Any, v: Any) -> Any:
    """Stored label, or the semiring zero when the edge is absent."""
    return g.get(u, {}).get(v, sr.zero)


def lg_vertices(g: LGraph) -> frozenset:
    return frozenset(g)


def lg_edges(g: LGraph) -> list:
    """Edges as (u, v, label), sorted by (u, v) for stable output."""
    return [(u, v, g[u][v]) for u in sorted(g) for v in sorted(g[u])]
