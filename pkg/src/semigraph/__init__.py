"""Semiring-labelled graph expressions.

One binary-tree language -- leaves are vertices or elements, internal
nodes carry semiring labels -- interpreted as sets, simplicial sets,
graphs, edge-labelled graphs, preorders, and strict partial orders, with
a law harness that checks which equations each interpretation satisfies.
"""

from .closure import (
    CYCLE_ERROR,
    CycleError,
    closure,
    reflexive_closure,
    to_preorder,
    to_strict_partial_order,
    transitive_closure,
)
from .expr import ParseError, parse_expr, pretty
from .graph import Graph, clique, has_edge, induce, to_graph, to_variant_graph
from .lgraph import LGraph, edge_label, lg_connect, lg_overlay, to_lgraph
from .semiring import BOOL, COUNT, INF, MAXMIN, SEMIRINGS, TROPICAL, UNIT, Semiring, is_zero, star
from .simplicial import SimplicialSet, is_valid, simplex, ss_connect, to_simplicial_set
from .tree import (
    Leaf,
    Node,
    OptionalTree,
    Tree,
    bind,
    connect,
    filter_leaves,
    fold,
    has_leaf,
    leaf_set,
    leaves,
    map_leaves,
    overlay,
    size,
    to_list,
)
from .united import (
    BoundedLattice,
    Duration,
    EmptyProgram,
    Par,
    Seq,
    UnitedMonoid,
    check_collapse,
    check_united_laws,
    eval_time,
)

__all__ = [name for name in dir() if not name.startswith("_")]
