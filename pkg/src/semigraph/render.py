"""Deterministic JSON and DOT renderers for interpretation results.

Everything is sorted (vertices, edges, simplices, object keys) so output
is byte-stable across runs and suitable for golden-file comparison.
"""

from __future__ import annotations

import json
from typing import Any, Iterable

from .graph import Graph
from .lgraph import LGraph
from .semiring import Semiring
from .simplicial import SimplicialSet, sorted_simplices


def render_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def set_to_obj(values: Iterable[Any]) -> dict:
    return {"elements": sorted(str(v) for v in values)}


def simplicial_to_obj(ss: SimplicialSet) -> dict:
    return {"simplices": [list(s) for s in sorted_simplices(ss)]}


def graph_to_obj(g: Graph) -> dict:
    return {
        "vertices": sorted(g.vertices),
        "edges": [list(e) for e in sorted(g.edges)],
    }


def lgraph_to_obj(sr: Semiring, g: LGraph) -> dict:
    return {
        "vertices": sorted(g),
        "edges": [
            {"from": u, "to": v, "label": sr.label_to_json(g[u][v])}
            for u in sorted(g)
            for v in sorted(g[u])
        ],
    }


def pairs_to_obj(pairs: Iterable[tuple]) -> dict:
    return {"pairs": [list(p) for p in sorted(pairs)]}


CYCLE_ERROR_OBJ = {"error": "cycle"}


# --- DOT ----------------------------------------------------------------------


def _quote(name: Any) -> str:
    s = str(name)
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _dot(kind: str, arrow: str, vertices: list, edge_lines: list) -> str:
    lines = [f"{kind} {{"]
    lines += [f"  {_quote(v)};" for v in vertices]
    lines += edge_lines
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_dot(g: Graph, directed: bool = True) -> str:
    kind, arrow = ("digraph", "->") if directed else ("graph", "--")
    edges = [f"  {_quote(u)} {arrow} {_quote(v)};" for u, v in sorted(g.edges)]
    return _dot(kind, arrow, sorted(g.vertices), edges)


def lgraph_dot(sr: Semiring, g: LGraph) -> str:
    edges = [
        f"  {_quote(u)} -> {_quote(v)} [label={_quote(sr.render_label(g[u][v]))}];"
        for u in sorted(g)
        for v in sorted(g[u])
    ]
    return _dot("digraph", "->", sorted(g), edges)


def pairs_dot(pairs: Iterable[tuple]) -> str:
    pairs = sorted(pairs)
    vertices = sorted({u for u, _ in pairs} | {v for _, v in pairs})
    edges = [f"  {_quote(u)} -> {_quote(v)};" for u, v in pairs]
    return _dot("digraph", "->", vertices, edges)
