"""Reflexive and transitive closure of labelled graphs, and the order
interpretations built on top of it.

The transitive closure runs the Floyd-Warshall-Kleene triple loop

    d(i, j) <- d(i, j) plus d(i, k) times star(d(k, k)) times d(k, j)

eliminating vertices in sorted order (the fixpoint reached does not
depend on the order).  It needs a star operation, so it is available for
the bool, tropical and maxmin semirings only.

Strict partial orders reject cycles: a nonzero self-edge after transitive
closure (before any reflexive closure) marks the whole term as the cycle
error, a regular value that absorbs overlay and connect.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, FrozenSet, Iterable, Optional, Tuple, Union

from .lgraph import LGraph, to_lgraph
from .semiring import BOOL, Semiring
from .tree import Tree


@dataclass(frozen=True)
class CycleError:
    """The absorbing outcome of interpreting a cyclic term as a strict order."""


CYCLE_ERROR = CycleError()

Relation = FrozenSet[Tuple[Any, Any]]
OrderOutcome = Union[Relation, CycleError]


def reflexive_closure(sr: Semiring, g: LGraph) -> LGraph:
    """Fold the multiplicative unit into every self-label."""
    out = {u: dict(adj) for u, adj in g.items()}
    for u in out:
        merged = sr.plus(out[u].get(u, sr.zero), sr.one)
        if sr.is_zero(merged):
            out[u].pop(u, None)
        else:
            out[u][u] = merged
    return out


def transitive_closure(sr: Semiring, g: LGraph, order: Optional[Iterable[Any]] = None) -> LGraph:
    """All-pairs closure; the result label of (u, v) is the plus over all
    nonempty walks from u to v of the times-product of their edge labels."""
    if sr.star is None:
        raise ValueError(f"semiring {sr.name!r} has no star operation; closure is undefined")
    d = {u: dict(adj) for u, adj in g.items()}
    vertices = sorted(d) if order is None else list(order)
    for k in vertices:
        row_k = d[k]
        k_star = sr.star(row_k.get(k, sr.zero))
        snapshot = list(row_k.items())
        for i in vertices:
            d_ik = d[i].get(k, sr.zero)
            if sr.is_zero(d_ik):
                continue
            through = sr.times(d_ik, k_star)
            if sr.is_zero(through):
                continue
            row_i = d[i]
            for j, d_kj in snapshot:
                merged = sr.plus(row_i.get(j, sr.zero), sr.times(through, d_kj))
                if sr.is_zero(merged):
                    row_i.pop(j, None)
                else:
                    row_i[j] = merged
    return d


def closure(sr: Semiring, g: LGraph) -> LGraph:
    """Reflexive and transitive closure."""
    return reflexive_closure(sr, transitive_closure(sr, g))


def _true_pairs(g: LGraph) -> Relation:
    return frozenset((u, v) for u, adj in g.items() for v, label in adj.items() if label)


def to_preorder(tree: Tree) -> Relation:
    """Reflexive transitive relation described by a Boolean tree."""
    return _true_pairs(closure(BOOL, to_lgraph(BOOL, tree)))


def to_strict_partial_order(tree: Tree) -> OrderOutcome:
    """Irreflexive transitive relation, or CYCLE_ERROR for cyclic terms."""
    closed = transitive_closure(BOOL, to_lgraph(BOOL, tree))
    if any(u in closed[u] for u in closed):
        return CYCLE_ERROR
    return _true_pairs(closed)
