"""The equational law catalog and the generic checker.

A law is a pair of tree constructions over metavariables: whole subtrees,
single vertices, and node labels.  Checking a law against a (semiring,
target) cell instantiates the metavariables from a seeded generator,
folds both sides through the target interpretation, and compares the
canonical results with plain equality.

Cells are classified must_hold / must_fail / skip.  A must_hold cell
passes when every generated case agrees; a must_fail cell passes when at
least one counterexample shows up (negative facts are existential), and
the counterexample is stored in replayable form.

Sequential-composition laws only hold modulo transitive connections, so
they carry a modulo_closure flag and are compared after closing the
labelled graph.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from . import tree as t
from .closure import closure, to_preorder, to_strict_partial_order
from .graph import to_graph
from .lgraph import to_lgraph
from .semiring import SEMIRINGS, Semiring
from .simplicial import to_simplicial_set
from .tree import Leaf, Node, Tree

ALL = ("unit", "bool", "tropical", "maxmin", "count")
IDEM = ("unit", "bool", "tropical", "maxmin")
STAR = ("bool", "tropical", "maxmin")
BOOL_ONLY = ("bool",)

# Cases whose simplicial-set size bound exceeds this are redrawn: the
# naive representation stores all O(2^n) sub-simplices of an n-fold
# connection, and a tail of huge random cases would swamp the harness.
SIMPLICIAL_CASE_LIMIT = 100_000


# --- tree generation ----------------------------------------------------------


def _alphabet(n: int) -> list:
    if not 1 <= n <= 26:
        raise ValueError("alphabet size must be between 1 and 26")
    return list("abcdefghijklmnopqrstuvwxyz"[:n])


@dataclass(frozen=True)
class TreeGen:
    """Deterministic tree source: same seed, same trees."""

    seed: int
    max_leaves: int
    alphabet: int
    labels: tuple

    @classmethod
    def for_semiring(cls, sr: Semiring, seed: int = 42, max_leaves: int = 12, alphabet: int = 4) -> "TreeGen":
        return cls(seed=seed, max_leaves=max_leaves, alphabet=alphabet, labels=sr.label_pool)


def random_tree(rng: random.Random, max_leaves: int, alphabet: Sequence[str], labels: Sequence[Any]) -> Tree:
    n = rng.randint(1, max_leaves)

    def build(k: int) -> Tree:
        if k == 1:
            return Leaf(rng.choice(alphabet))
        split = rng.randint(1, k - 1)
        return Node(rng.choice(labels), build(split), build(k - split))

    return build(n)


def generate(gen: TreeGen, n: int) -> List[Tree]:
    if gen.max_leaves < 1:
        raise ValueError("max_leaves must be at least 1")
    rng = random.Random(f"treegen:{gen.seed}")
    names = _alphabet(gen.alphabet)
    return [random_tree(rng, gen.max_leaves, names, gen.labels) for _ in range(n)]


# --- targets ------------------------------------------------------------------


def _canon_lgraph_closed(sr: Semiring, tree: Tree) -> Any:
    return closure(sr, to_lgraph(sr, tree))


@dataclass(frozen=True)
class Target:
    name: str
    semirings: tuple
    canon: Callable[[Semiring, Tree], Any]
    canon_closed: Optional[Callable[[Semiring, Tree], Any]] = None


TARGETS: Dict[str, Target] = {
    g.name: g
    for g in (
        Target("set", ALL, lambda sr, x: t.leaf_set(x)),
        Target("size", ALL, lambda sr, x: t.size(x)),
        Target("simplicial", BOOL_ONLY, lambda sr, x: to_simplicial_set(x)),
        Target("graph", BOOL_ONLY, lambda sr, x: to_graph(x)),
        Target("lgraph", ALL, lambda sr, x: to_lgraph(sr, x), _canon_lgraph_closed),
        Target("preorder", BOOL_ONLY, lambda sr, x: to_preorder(x), lambda sr, x: to_preorder(x)),
        Target(
            "order",
            BOOL_ONLY,
            lambda sr, x: to_strict_partial_order(x),
            lambda sr, x: to_strict_partial_order(x),
        ),
    )
}


# --- the catalog ----------------------------------------------------------------

Builder = Callable[[Semiring, list, list, list], Tree]


@dataclass(frozen=True)
class Law:
    """lhs and rhs build trees from (semiring, subtrees, vertices, labels)."""

    name: str
    tree_vars: int
    vertex_vars: int
    label_vars: int
    lhs: Builder
    rhs: Builder
    modulo_closure: bool = False
    distinct_vertices: bool = False


def _ov(sr: Semiring, x: Tree, y: Tree) -> Tree:
    return Node(sr.zero, x, y)


def _ar(sr: Semiring, x: Tree, y: Tree) -> Tree:
    return Node(sr.one, x, y)


def _ovs(sr: Semiring, *xs: Tree) -> Tree:
    out = xs[0]
    for x in xs[1:]:
        out = Node(sr.zero, out, x)
    return out


def _self_loop(sr: Semiring, v: str) -> Tree:
    return Node(sr.one, Leaf(v), Leaf(v))


LAWS: Dict[str, Law] = {
    law.name: law
    for law in (
        Law(
            "overlay_assoc", 3, 0, 0,
            lambda sr, ts, vs, ls: _ov(sr, _ov(sr, ts[0], ts[1]), ts[2]),
            lambda sr, ts, vs, ls: _ov(sr, ts[0], _ov(sr, ts[1], ts[2])),
        ),
        Law(
            "connect_assoc", 3, 0, 1,
            lambda sr, ts, vs, ls: Node(ls[0], Node(ls[0], ts[0], ts[1]), ts[2]),
            lambda sr, ts, vs, ls: Node(ls[0], ts[0], Node(ls[0], ts[1], ts[2])),
        ),
        Law(
            "overlay_comm", 2, 0, 0,
            lambda sr, ts, vs, ls: _ov(sr, ts[0], ts[1]),
            lambda sr, ts, vs, ls: _ov(sr, ts[1], ts[0]),
        ),
        Law(
            "overlay_idem", 1, 0, 0,
            lambda sr, ts, vs, ls: _ov(sr, ts[0], ts[0]),
            lambda sr, ts, vs, ls: ts[0],
        ),
        Law(
            "containment", 2, 0, 0,
            lambda sr, ts, vs, ls: _ar(sr, ts[0], ts[1]),
            lambda sr, ts, vs, ls: _ovs(sr, _ar(sr, ts[0], ts[1]), ts[0], ts[1]),
        ),
        Law(
            "distrib_left", 3, 0, 1,
            lambda sr, ts, vs, ls: Node(ls[0], ts[0], _ov(sr, ts[1], ts[2])),
            lambda sr, ts, vs, ls: _ov(sr, Node(ls[0], ts[0], ts[1]), Node(ls[0], ts[0], ts[2])),
        ),
        Law(
            "distrib_right", 3, 0, 1,
            lambda sr, ts, vs, ls: Node(ls[0], _ov(sr, ts[0], ts[1]), ts[2]),
            lambda sr, ts, vs, ls: _ov(sr, Node(ls[0], ts[0], ts[2]), Node(ls[0], ts[1], ts[2])),
        ),
        Law(
            "decomposition", 3, 0, 0,
            lambda sr, ts, vs, ls: _ar(sr, ts[0], _ar(sr, ts[1], ts[2])),
            lambda sr, ts, vs, ls: _ovs(
                sr, _ar(sr, ts[0], ts[1]), _ar(sr, ts[0], ts[2]), _ar(sr, ts[1], ts[2])
            ),
        ),
        # Single-edge forms of generalised decomposition: hold in every
        # catalog semiring.  The nested forms below quantify over whole
        # subtrees and require an idempotent plus (overlaying the right
        # side duplicates shared edges).
        Law(
            "decomp_general_left", 0, 3, 2,
            lambda sr, ts, vs, ls: Node(ls[1], Node(ls[0], Leaf(vs[0]), Leaf(vs[1])), Leaf(vs[2])),
            lambda sr, ts, vs, ls: _ovs(
                sr,
                Node(ls[0], Leaf(vs[0]), Leaf(vs[1])),
                Node(ls[1], Leaf(vs[0]), Leaf(vs[2])),
                Node(ls[1], Leaf(vs[1]), Leaf(vs[2])),
            ),
            distinct_vertices=True,
        ),
        Law(
            "decomp_general_right", 0, 3, 2,
            lambda sr, ts, vs, ls: Node(ls[0], Leaf(vs[0]), Node(ls[1], Leaf(vs[1]), Leaf(vs[2]))),
            lambda sr, ts, vs, ls: _ovs(
                sr,
                Node(ls[0], Leaf(vs[0]), Leaf(vs[1])),
                Node(ls[0], Leaf(vs[0]), Leaf(vs[2])),
                Node(ls[1], Leaf(vs[1]), Leaf(vs[2])),
            ),
            distinct_vertices=True,
        ),
        Law(
            "decomp_nested_left", 3, 0, 2,
            lambda sr, ts, vs, ls: Node(ls[1], Node(ls[0], ts[0], ts[1]), ts[2]),
            lambda sr, ts, vs, ls: _ovs(
                sr,
                Node(ls[0], ts[0], ts[1]),
                Node(ls[1], ts[0], ts[2]),
                Node(ls[1], ts[1], ts[2]),
            ),
        ),
        Law(
            "decomp_nested_right", 3, 0, 2,
            lambda sr, ts, vs, ls: Node(ls[0], ts[0], Node(ls[1], ts[1], ts[2])),
            lambda sr, ts, vs, ls: _ovs(
                sr,
                Node(ls[0], ts[0], ts[1]),
                Node(ls[0], ts[0], ts[2]),
                Node(ls[1], ts[1], ts[2]),
            ),
        ),
        Law(
            "parallel_unit", 0, 1, 0,
            lambda sr, ts, vs, ls: Leaf(vs[0]),
            lambda sr, ts, vs, ls: Node(sr.zero, Leaf(vs[0]), Leaf(vs[0])),
        ),
        Law(
            "parallel_composition", 0, 2, 2,
            lambda sr, ts, vs, ls: _ov(
                sr,
                Node(ls[0], Leaf(vs[0]), Leaf(vs[1])),
                Node(ls[1], Leaf(vs[0]), Leaf(vs[1])),
            ),
            lambda sr, ts, vs, ls: Node(sr.plus(ls[0], ls[1]), Leaf(vs[0]), Leaf(vs[1])),
        ),
        Law(
            "sequential_unit", 0, 1, 0,
            lambda sr, ts, vs, ls: Leaf(vs[0]),
            lambda sr, ts, vs, ls: Node(sr.one, Leaf(vs[0]), Leaf(vs[0])),
            modulo_closure=True,
        ),
        Law(
            "sequential_composition", 0, 3, 2,
            lambda sr, ts, vs, ls: _ov(
                sr,
                Node(ls[0], Leaf(vs[0]), Leaf(vs[1])),
                Node(ls[1], Leaf(vs[1]), Leaf(vs[2])),
            ),
            lambda sr, ts, vs, ls: _ov(
                sr,
                _ov(
                    sr,
                    Node(ls[0], Leaf(vs[0]), Leaf(vs[1])),
                    Node(ls[1], Leaf(vs[1]), Leaf(vs[2])),
                ),
                Node(sr.times(ls[0], ls[1]), Leaf(vs[0]), Leaf(vs[2])),
            ),
            modulo_closure=True,
        ),
        # A self-connected leaf is the cycle error; any other cyclic term
        # canonicalises to the same error value, which is how the error
        # appears as the right-hand side of the cycle and zero laws.
        Law(
            "cycle", 0, 2, 0,
            lambda sr, ts, vs, ls: _self_loop(sr, vs[0]),
            lambda sr, ts, vs, ls: _self_loop(sr, vs[1]),
        ),
        Law(
            "zero_overlay", 1, 1, 0,
            lambda sr, ts, vs, ls: _ov(sr, ts[0], _self_loop(sr, vs[0])),
            lambda sr, ts, vs, ls: _self_loop(sr, vs[0]),
        ),
        Law(
            "zero_connect_left", 1, 1, 0,
            lambda sr, ts, vs, ls: _ar(sr, _self_loop(sr, vs[0]), ts[0]),
            lambda sr, ts, vs, ls: _self_loop(sr, vs[0]),
        ),
        Law(
            "zero_connect_right", 1, 1, 0,
            lambda sr, ts, vs, ls: _ar(sr, ts[0], _self_loop(sr, vs[0])),
            lambda sr, ts, vs, ls: _self_loop(sr, vs[0]),
        ),
    )
}


def _cells(entries: Dict[str, Dict[str, Sequence[str]]]) -> Dict[Tuple[str, str], str]:
    table: Dict[Tuple[str, str], str] = {}
    for expectation, per_target in entries.items():
        for target, semirings in per_target.items():
            for sr in semirings:
                table[(sr, target)] = expectation
    return table


# Expectation per (semiring, target); anything missing is skip.
APPLICABILITY: Dict[str, Dict[Tuple[str, str], str]] = {
    "overlay_assoc": _cells(
        {
            "must_hold": {
                "set": ALL, "size": ALL, "lgraph": ALL,
                "simplicial": BOOL_ONLY, "graph": BOOL_ONLY,
                "preorder": BOOL_ONLY, "order": BOOL_ONLY,
            }
        }
    ),
    "connect_assoc": _cells(
        {
            "must_hold": {
                "set": ALL, "size": ALL, "lgraph": IDEM,
                "simplicial": BOOL_ONLY, "graph": BOOL_ONLY,
                "preorder": BOOL_ONLY, "order": BOOL_ONLY,
            },
            # shared vertices between operands make the right-association
            # combine a block edge twice, which a non-idempotent plus sees
            "must_fail": {"lgraph": ("count",)},
        }
    ),
    "overlay_comm": _cells(
        {
            "must_hold": {
                "set": ALL, "size": ALL, "lgraph": ALL,
                "simplicial": BOOL_ONLY, "graph": BOOL_ONLY,
                "preorder": BOOL_ONLY, "order": BOOL_ONLY,
            }
        }
    ),
    "overlay_idem": _cells(
        {
            "must_hold": {
                "set": ALL, "lgraph": IDEM,
                "simplicial": BOOL_ONLY, "graph": BOOL_ONLY,
                "preorder": BOOL_ONLY, "order": BOOL_ONLY,
            },
            "must_fail": {"size": ALL, "lgraph": ("count",)},
        }
    ),
    "containment": _cells(
        {
            "must_hold": {
                "set": ALL, "lgraph": IDEM,
                "simplicial": BOOL_ONLY, "graph": BOOL_ONLY,
                "preorder": BOOL_ONLY, "order": BOOL_ONLY,
            },
            "must_fail": {"lgraph": ("count",)},
        }
    ),
    "distrib_left": _cells(
        {
            "must_hold": {
                "set": ALL, "lgraph": IDEM,
                "simplicial": BOOL_ONLY, "graph": BOOL_ONLY,
                "preorder": BOOL_ONLY, "order": BOOL_ONLY,
            },
            "must_fail": {"lgraph": ("count",)},
        }
    ),
    "distrib_right": _cells(
        {
            "must_hold": {
                "set": ALL, "lgraph": IDEM,
                "simplicial": BOOL_ONLY, "graph": BOOL_ONLY,
                "preorder": BOOL_ONLY, "order": BOOL_ONLY,
            },
            "must_fail": {"lgraph": ("count",)},
        }
    ),
    "decomposition": _cells(
        {
            "must_hold": {"set": ALL, "graph": BOOL_ONLY, "preorder": BOOL_ONLY, "order": BOOL_ONLY},
            "must_fail": {"simplicial": BOOL_ONLY},
        }
    ),
    "decomp_general_left": _cells(
        {
            "must_hold": {
                "set": ALL, "lgraph": ALL, "graph": BOOL_ONLY,
                "preorder": BOOL_ONLY, "order": BOOL_ONLY,
            },
            "must_fail": {"simplicial": BOOL_ONLY},
        }
    ),
    "decomp_general_right": _cells(
        {
            "must_hold": {
                "set": ALL, "lgraph": ALL, "graph": BOOL_ONLY,
                "preorder": BOOL_ONLY, "order": BOOL_ONLY,
            },
            "must_fail": {"simplicial": BOOL_ONLY},
        }
    ),
    "decomp_nested_left": _cells(
        {
            "must_hold": {
                "set": ALL, "lgraph": IDEM, "graph": BOOL_ONLY,
                "preorder": BOOL_ONLY, "order": BOOL_ONLY,
            },
            "must_fail": {"lgraph": ("count",), "simplicial": BOOL_ONLY},
        }
    ),
    "decomp_nested_right": _cells(
        {
            "must_hold": {
                "set": ALL, "lgraph": IDEM, "graph": BOOL_ONLY,
                "preorder": BOOL_ONLY, "order": BOOL_ONLY,
            },
            "must_fail": {"lgraph": ("count",), "simplicial": BOOL_ONLY},
        }
    ),
    "parallel_unit": _cells(
        {
            "must_hold": {
                "set": ALL, "lgraph": ALL,
                "simplicial": BOOL_ONLY, "graph": BOOL_ONLY,
                "preorder": BOOL_ONLY, "order": BOOL_ONLY,
            }
        }
    ),
    "parallel_composition": _cells(
        {
            "must_hold": {
                "set": ALL, "lgraph": ALL,
                "simplicial": BOOL_ONLY, "graph": BOOL_ONLY,
                "preorder": BOOL_ONLY, "order": BOOL_ONLY,
            }
        }
    ),
    "sequential_unit": _cells(
        {
            "must_hold": {"lgraph": STAR, "preorder": BOOL_ONLY},
            # strict orders reject reflexivity: the self-connection is a cycle
            "must_fail": {"order": BOOL_ONLY},
        }
    ),
    "sequential_composition": _cells(
        {"must_hold": {"lgraph": STAR, "preorder": BOOL_ONLY, "order": BOOL_ONLY}}
    ),
    "cycle": _cells({"must_hold": {"order": BOOL_ONLY}}),
    "zero_overlay": _cells({"must_hold": {"order": BOOL_ONLY}}),
    "zero_connect_left": _cells({"must_hold": {"order": BOOL_ONLY}}),
    "zero_connect_right": _cells({"must_hold": {"order": BOOL_ONLY}}),
}


def expectation(law_name: str, sr_name: str, target_name: str) -> str:
    return APPLICABILITY[law_name].get((sr_name, target_name), "skip")


# --- checking -------------------------------------------------------------------


@dataclass
class CellResult:
    law: str
    semiring: str
    target: str
    expectation: str  # must_hold | must_fail | skip
    cases_run: int = 0
    failures: int = 0
    counterexample: Optional[dict] = None

    @property
    def as_expected(self) -> bool:
        if self.expectation == "skip":
            return True
        if self.expectation == "must_hold":
            return self.failures == 0
        return self.failures > 0

    def to_json_obj(self) -> dict:
        return {
            "law": self.law,
            "semiring": self.semiring,
            "target": self.target,
            "expectation": self.expectation,
            "cases": self.cases_run,
            "failures": self.failures,
            "ok": self.as_expected,
            "counterexample": self.counterexample,
        }


def _ss_upper_bound(tree: Tree) -> int:
    """Upper bound on the simplex count of the simplicial interpretation."""
    return t.fold(lambda a: 1, lambda s, x, y: x + y + x * y if s else x + y, tree)


def _serialize_case(sr: Semiring, trees: list, vertices: list, labels: list) -> dict:
    return {
        "trees": [t.to_json_obj(x, sr.label_to_json) for x in trees],
        "vertices": list(vertices),
        "labels": [sr.label_to_json(x) for x in labels],
    }


def _deserialize_case(sr: Semiring, case: dict) -> Tuple[list, list, list]:
    trees = [t.from_json_obj(obj, sr.label_from_json) for obj in case["trees"]]
    vertices = list(case["vertices"])
    labels = [sr.label_from_json(x) for x in case["labels"]]
    return trees, vertices, labels


def _draw_case(
    law: Law, gen: TreeGen, rng: random.Random, names: Sequence[str]
) -> Tuple[list, list, list]:
    trees = [random_tree(rng, gen.max_leaves, names, gen.labels) for _ in range(law.tree_vars)]
    if law.distinct_vertices:
        vertices = rng.sample(names, law.vertex_vars)
    else:
        vertices = [rng.choice(names) for _ in range(law.vertex_vars)]
    labels = [rng.choice(gen.labels) for _ in range(law.label_vars)]
    return trees, vertices, labels


def _case_mismatch(law: Law, sr: Semiring, target: Target, trees: list, vertices: list, labels: list) -> bool:
    canon = target.canon_closed if law.modulo_closure else target.canon
    lhs = canon(sr, law.lhs(sr, trees, vertices, labels))
    rhs = canon(sr, law.rhs(sr, trees, vertices, labels))
    return lhs != rhs


def check_law(law: Law, sr: Semiring, target_name: str, cases: int, gen: TreeGen) -> CellResult:
    """Run one cell; the verdict is judged against the applicability table."""
    target = TARGETS[target_name]
    if sr.name not in target.semirings:
        raise ValueError(f"target {target_name!r} is not defined for semiring {sr.name!r}")
    if law.distinct_vertices and gen.alphabet < law.vertex_vars:
        raise ValueError(f"law {law.name!r} needs an alphabet of at least {law.vertex_vars}")
    expect = expectation(law.name, sr.name, target_name)
    result = CellResult(law.name, sr.name, target_name, expect)
    if expect == "skip":
        return result
    if law.modulo_closure and target.canon_closed is None:
        raise ValueError(f"law {law.name!r} needs a closure-aware target, not {target_name!r}")

    names = _alphabet(gen.alphabet)
    for index in range(cases):
        rng = random.Random(f"{gen.seed}:{law.name}:{sr.name}:{target_name}:{index}")
        trees, vertices, labels = _draw_case(law, gen, rng, names)
        if target_name == "simplicial":
            attempts = 0
            while (
                _ss_upper_bound(law.lhs(sr, trees, vertices, labels))
                + _ss_upper_bound(law.rhs(sr, trees, vertices, labels))
                > SIMPLICIAL_CASE_LIMIT
            ):
                attempts += 1
                if attempts > 100:
                    raise RuntimeError("could not draw a bounded simplicial case")
                trees, vertices, labels = _draw_case(law, gen, rng, names)
        result.cases_run += 1
        if _case_mismatch(law, sr, target, trees, vertices, labels):
            result.failures += 1
            if result.counterexample is None:
                result.counterexample = {
                    "law": law.name,
                    "semiring": sr.name,
                    "target": target_name,
                    "seed": gen.seed,
                    "case": index,
                    **_serialize_case(sr, trees, vertices, labels),
                }
            # one witness settles must_fail, and any failure already breaks
            # a must_hold cell, so there is nothing left to learn
            break
    return result


def replay_counterexample(entry: dict) -> bool:
    """Re-evaluate a stored counterexample; True iff it still breaks the law."""
    law = LAWS[entry["law"]]
    sr = SEMIRINGS[entry["semiring"]]
    target = TARGETS[entry["target"]]
    trees, vertices, labels = _deserialize_case(sr, entry)
    return _case_mismatch(law, sr, target, trees, vertices, labels)


def run_suite(
    cases: int = 200,
    seed: int = 42,
    max_leaves: int = 12,
    alphabet: int = 4,
    law_names: Optional[Sequence[str]] = None,
    semiring_names: Optional[Sequence[str]] = None,
    target_names: Optional[Sequence[str]] = None,
) -> List[CellResult]:
    """Check every registered (law, semiring, target) cell, optionally filtered."""
    results = []
    for law_name in law_names or sorted(LAWS):
        law = LAWS[law_name]
        for (sr_name, target_name), _ in sorted(APPLICABILITY[law_name].items()):
            if semiring_names and sr_name not in semiring_names:
                continue
            if target_names and target_name not in target_names:
                continue
            sr = SEMIRINGS[sr_name]
            gen = TreeGen(seed=seed, max_leaves=max_leaves, alphabet=alphabet, labels=sr.label_pool)
            results.append(check_law(law, sr, target_name, cases, gen))
    return results


def derived_law_redundancy_violations(results: List[CellResult]) -> List[str]:
    """Cells breaking 'nested decomposition implies associativity and
    distributivity': wherever both nested forms held, the derived laws
    must have held too."""
    held: Dict[Tuple[str, str, str], bool] = {}
    for r in results:
        if r.cases_run:
            held[(r.law, r.semiring, r.target)] = r.failures == 0
    violations = []
    for (law_name, sr_name, target_name), ok in held.items():
        if law_name != "decomp_nested_left" or not ok:
            continue
        if not held.get(("decomp_nested_right", sr_name, target_name), False):
            continue
        for derived in ("connect_assoc", "distrib_left", "distrib_right"):
            if held.get((derived, sr_name, target_name)) is False:
                violations.append(f"{derived}/{sr_name}/{target_name}")
    return violations
