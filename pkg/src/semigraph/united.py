"""United monoids: two monoids on one carrier sharing their unit.

``check_united_laws`` evaluates the defining laws of the structure over a
fixed sample set and reports pass/fail/skip per law, with a witness for
every failure.  Nothing is proved symbolically; samples are seeded grids
so failures are reproducible.

``check_collapse`` plays out what happens to a semiring or a bounded
lattice once its two units are postulated equal: every element is forced
to the unit, so any sample distinct from it is a counterexample to the
postulated structure's own axioms.

The module also carries the series-parallel time cost model (max for
parallel, plus for sequential), whose evaluation is a homomorphism into
the united monoid (non-negative integers, max, plus, 0).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Callable, List, Optional, Sequence, Tuple, Union

from . import graph as gr
from .semiring import BOOL, Semiring
from .tree import Leaf, Node, Tree


@dataclass(frozen=True)
class UnitedMonoid:
    """Carrier with shared-unit overlay and connect operations.

    ``zero`` is the absorbing element of both operations when one exists
    (None otherwise); checks that need it are skipped when it is absent.
    """

    name: str
    empty: Any
    overlay: Callable[[Any, Any], Any]
    connect: Callable[[Any, Any], Any]
    zero: Any = None


@dataclass(frozen=True)
class BoundedLattice:
    name: str
    join: Callable[[Any, Any], Any]
    meet: Callable[[Any, Any], Any]
    bottom: Any
    top: Any


@dataclass(frozen=True)
class LawResult:
    law: str
    status: str  # "pass" | "fail" | "skip"
    witness: Optional[tuple] = None


UNITED_LAWS = (
    "overlay_associative",
    "overlay_commutative",
    "overlay_unit",
    "overlay_idempotent",
    "connect_associative",
    "connect_unit",
    "distributive_left",
    "distributive_right",
    "containment_left",
    "containment_right",
    "containment_both",
    "containment_3d",
    "zero_coincidence",
    "no_inverses",
)


def check_united_laws(m: UnitedMonoid, samples: Sequence[Any]) -> List[LawResult]:
    """Evaluate every united-monoid law over all sample pairs/triples."""
    if not samples:
        raise ValueError("check_united_laws needs at least one sample")
    ov, cn, e = m.overlay, m.connect, m.empty
    results: List[LawResult] = []

    def law(name: str, witness_fn: Callable[[], Optional[tuple]]) -> None:
        witness = witness_fn()
        results.append(LawResult(name, "fail" if witness else "pass", witness))

    def first(pred: Callable[..., bool], arity: int) -> Optional[tuple]:
        if arity == 1:
            return next((( a,) for a in samples if not pred(a)), None)
        if arity == 2:
            return next(((a, b) for a in samples for b in samples if not pred(a, b)), None)
        return next(
            ((a, b, c) for a in samples for b in samples for c in samples if not pred(a, b, c)),
            None,
        )

    law("overlay_associative", lambda: first(lambda a, b, c: ov(ov(a, b), c) == ov(a, ov(b, c)), 3))
    law("overlay_commutative", lambda: first(lambda a, b: ov(a, b) == ov(b, a), 2))
    law("overlay_unit", lambda: first(lambda a: ov(a, e) == a and ov(e, a) == a, 1))
    law("overlay_idempotent", lambda: first(lambda a: ov(a, a) == a, 1))
    law("connect_associative", lambda: first(lambda a, b, c: cn(cn(a, b), c) == cn(a, cn(b, c)), 3))
    law("connect_unit", lambda: first(lambda a: cn(a, e) == a and cn(e, a) == a, 1))
    law("distributive_left", lambda: first(lambda a, b, c: cn(a, ov(b, c)) == ov(cn(a, b), cn(a, c)), 3))
    law("distributive_right", lambda: first(lambda a, b, c: cn(ov(a, b), c) == ov(cn(a, c), cn(b, c)), 3))
    law("containment_left", lambda: first(lambda a, b: cn(a, b) == ov(cn(a, b), a), 2))
    law("containment_right", lambda: first(lambda a, b: cn(a, b) == ov(cn(a, b), b), 2))
    law("containment_both", lambda: first(lambda a, b: cn(a, b) == ov(ov(cn(a, b), a), b), 2))

    def containment_3d(a: Any, b: Any, c: Any) -> bool:
        abc = cn(cn(a, b), c)
        rhs = abc
        for part in (cn(a, b), cn(a, c), cn(b, c), a, b, c):
            rhs = ov(rhs, part)
        return abc == rhs

    law("containment_3d", lambda: first(containment_3d, 3))

    if m.zero is None:
        results.append(LawResult("zero_coincidence", "skip"))
    else:
        z = m.zero
        law(
            "zero_coincidence",
            lambda: first(lambda a: ov(a, z) == z and cn(a, z) == z and cn(z, a) == z, 1),
        )

    # No inverses: whenever a sample pair composes to empty, both parts are empty.
    annihilating = [
        (op, a, b)
        for op in (ov, cn)
        for a in samples
        for b in samples
        if op(a, b) == e
    ]
    if not annihilating:
        results.append(LawResult("no_inverses", "skip"))
    else:
        bad = next(((a, b) for _, a, b in annihilating if not (a == e and b == e)), None)
        results.append(LawResult("no_inverses", "fail" if bad else "pass", bad))

    return results


# --- collapse under 0 = 1 ---------------------------------------------------


@dataclass(frozen=True)
class CollapseEntry:
    sample: Any
    forced: Any  # the value the 0 = 1 postulate forces the sample to equal
    consistent: bool


def check_collapse(structure: Union[Semiring, BoundedLattice], samples: Sequence[Any]) -> List[CollapseEntry]:
    """Postulate that the structure's two units coincide and report the fallout.

    Semiring: a = one*a = zero*a = zero, so every sample must equal zero.
    Lattice: a = top/\\a = top/\\(bottom\\/a) = bottom/\\(bottom\\/a) = bottom.
    Any sample distinct from the forced value witnesses that the postulated
    structure collapses (or never existed).
    """
    entries = []
    if isinstance(structure, Semiring):
        for a in samples:
            forced = structure.times(structure.zero, a)  # the chain lands on zero*a = zero
            entries.append(CollapseEntry(a, forced, a == forced == structure.zero))
    elif isinstance(structure, BoundedLattice):
        for a in samples:
            forced = structure.meet(structure.bottom, structure.join(structure.bottom, a))
            entries.append(CollapseEntry(a, forced, a == forced == structure.bottom))
    else:
        raise ValueError(f"check_collapse expects a Semiring or BoundedLattice, got {structure!r}")
    return entries


# --- the series-parallel time cost model -------------------------------------


@dataclass(frozen=True)
class Duration:
    value: int

    def __post_init__(self) -> None:
        if self.value < 0:
            raise ValueError("durations must be non-negative")


@dataclass(frozen=True)
class Par:
    left: "SPTerm"
    right: "SPTerm"


@dataclass(frozen=True)
class Seq:
    left: "SPTerm"
    right: "SPTerm"


@dataclass(frozen=True)
class EmptyProgram:
    pass


SPTerm = Union[Duration, Par, Seq, EmptyProgram]


def eval_time(term: SPTerm) -> int:
    """Execution time: parallel parts take the max, sequential parts add."""
    if isinstance(term, Duration):
        return term.value
    if isinstance(term, Par):
        return max(eval_time(term.left), eval_time(term.right))
    if isinstance(term, Seq):
        return eval_time(term.left) + eval_time(term.right)
    if isinstance(term, EmptyProgram):
        return 0
    raise ValueError(f"not a series-parallel term: {term!r}")


# --- registered instances for the check suite --------------------------------


@dataclass(frozen=True)
class UnitedInstance:
    monoid: UnitedMonoid
    samples: tuple
    expected_fail: frozenset  # law names that must fail for this instance
    expected_skip: frozenset


def _graph_samples(universe: Tuple[str, ...] = ("a", "b", "c"), count: int = 24) -> tuple:
    """Seeded sample of graphs over a small universe, plus the two extremes."""
    rng = random.Random("united-graph-samples")
    seen = {gr.EMPTY_GRAPH}

    def random_tree(n: int) -> Tree:
        if n == 1:
            return Leaf(rng.choice(universe))
        split = rng.randint(1, n - 1)
        return Node(rng.random() < 0.5, random_tree(split), random_tree(n - split))

    while len(seen) < count:
        seen.add(gr.to_graph(random_tree(rng.randint(1, 6))))
    seen.add(_complete_graph(universe))
    return tuple(sorted(seen, key=lambda g: (sorted(g.vertices), sorted(g.edges))))


def _complete_graph(universe: Tuple[str, ...]) -> gr.Graph:
    return gr.Graph(frozenset(universe), frozenset((u, v) for u in universe for v in universe))


def united_instances() -> List[UnitedInstance]:
    """The instances exercised by the check suite, with expected outcomes."""
    universe = ("a", "b", "c")
    subsets = tuple(
        frozenset(s)
        for s in (
            (), ("a",), ("b",), ("c",), ("a", "b"), ("a", "c"), ("b", "c"), ("a", "b", "c"),
        )
    )
    time = UnitedMonoid("time", 0, max, lambda a, b: a + b)
    sets = UnitedMonoid(
        "sets", frozenset(), lambda a, b: a | b, lambda a, b: a | b, zero=frozenset(universe)
    )
    graphs = UnitedMonoid(
        "graphs", gr.EMPTY_GRAPH, gr.g_overlay, gr.g_connect, zero=_complete_graph(universe)
    )
    # max-plus with carrier containing negatives: the units of max and plus
    # differ, so declaring 0 as the shared empty must break the unit laws.
    maxplus = UnitedMonoid("tropical-maxplus", 0, max, lambda a, b: a + b)

    return [
        UnitedInstance(time, tuple(range(21)), frozenset(), frozenset({"zero_coincidence"})),
        UnitedInstance(sets, subsets, frozenset(), frozenset()),
        UnitedInstance(graphs, _graph_samples(universe), frozenset(), frozenset()),
        UnitedInstance(
            maxplus,
            tuple(range(-5, 6)),
            frozenset(
                {
                    "overlay_unit",
                    "containment_left",
                    "containment_right",
                    "containment_both",
                    "containment_3d",
                    "no_inverses",
                }
            ),
            frozenset({"zero_coincidence"}),
        ),
    ]


def run_united_suite() -> List[dict]:
    """Check every registered instance; one row per (instance, law)."""
    rows = []
    for inst in united_instances():
        for res in check_united_laws(inst.monoid, inst.samples):
            expected = (
                "skip"
                if res.law in inst.expected_skip
                else "fail"
                if res.law in inst.expected_fail
                else "pass"
            )
            rows.append(
                {
                    "instance": inst.monoid.name,
                    "law": res.law,
                    "status": res.status,
                    "expected": expected,
                    "ok": res.status == expected,
                    "witness": repr(res.witness) if res.witness is not None else None,
                }
            )
    return rows
