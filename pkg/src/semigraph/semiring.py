"""Semiring descriptors and the built-in instance catalog.

Node labels of every tree in this package come from a semiring.  Carriers
use exact values only (bool, int, Fraction, math.inf) so that interpreters
and the law harness can compare results with plain equality; there is no
floating-point arithmetic anywhere.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Optional

INF = math.inf


@dataclass(frozen=True)
class Semiring:
    """A semiring: carrier with (plus, zero) and (times, one).

    ``plus`` is associative and commutative with unit ``zero``; ``times``
    is associative with unit ``one``, distributes over ``plus`` on both
    sides, and is annihilated by ``zero``.  ``idempotent`` declares that
    x plus x = x; the flag is verified by sampling in the test suite, not
    inferred.  ``star``, when present, must satisfy the fixpoint equation
    star(a) = one plus (a times star(a)).

    The label codecs (``parse_label`` etc.) define the literal syntax used
    by the expression grammar and the JSON encoding of interpreter output.
    """

    name: str
    zero: Any
    one: Any
    plus: Callable[[Any, Any], Any]
    times: Callable[[Any, Any], Any]
    idempotent: bool
    star: Optional[Callable[[Any], Any]] = None
    samples: tuple = ()
    label_pool: tuple = ()
    parse_label: Callable[[str], Any] = field(default=lambda text: text)
    render_label: Callable[[Any], str] = field(default=str)
    label_to_json: Callable[[Any], Any] = field(default=lambda x: x)
    label_from_json: Callable[[Any], Any] = field(default=lambda x: x)

    def is_zero(self, x: Any) -> bool:
        return x == self.zero

    def __repr__(self) -> str:  # keep law-harness reports readable
        return f"Semiring({self.name})"


def is_zero(sr: Semiring, x: Any) -> bool:
    """True iff ``x`` is the additive unit of ``sr``."""
    return sr.is_zero(x)


def star(sr: Semiring, x: Any) -> Any:
    """Kleene star of ``x``; rejected for semirings without one."""
    if sr.star is None:
        raise ValueError(f"semiring {sr.name!r} has no star operation")
    return sr.star(x)


# --- label literal syntax ---------------------------------------------------


def _parse_unit(text: str) -> tuple:
    if text.strip() == "()":
        return ()
    raise ValueError(f"invalid unit label {text!r}, expected ()")


def _parse_bool(text: str) -> bool:
    t = text.strip()
    if t == "true":
        return True
    if t == "false":
        return False
    raise ValueError(f"invalid bool label {text!r}, expected true or false")


def _parse_extended(text: str) -> Any:
    """Non-negative rational (decimal or p/q) or the literal ``inf``."""
    t = text.strip()
    if t == "inf":
        return INF
    try:
        value = Fraction(t)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"invalid label {text!r}: {exc}") from None
    if value < 0:
        raise ValueError(f"invalid label {text!r}: must be non-negative")
    return value


def _render_extended(x: Any) -> str:
    return "inf" if x == INF else str(x)


def _parse_count(text: str) -> int:
    t = text.strip()
    if not t.isdigit():
        raise ValueError(f"invalid count label {text!r}, expected a non-negative integer")
    return int(t)


def _extended_from_json(value: Any) -> Any:
    if isinstance(value, str):
        return _parse_extended(value)
    raise ValueError(f"invalid label JSON {value!r}, expected a string")


def _bool_from_json(value: Any) -> bool:
    if isinstance(value, bool):
        return value
    raise ValueError(f"invalid label JSON {value!r}, expected a boolean")


def _count_from_json(value: Any) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ValueError(f"invalid label JSON {value!r}, expected a non-negative integer")
    return value


def _unit_from_json(value: Any) -> tuple:
    if value is None:
        return ()
    raise ValueError(f"invalid label JSON {value!r}, expected null")


# --- the catalog ------------------------------------------------------------

UNIT = Semiring(
    name="unit",
    zero=(),
    one=(),
    plus=lambda x, y: (),
    times=lambda x, y: (),
    idempotent=True,
    star=None,
    samples=((),),
    label_pool=((),),
    parse_label=_parse_unit,
    render_label=lambda x: "()",
    label_to_json=lambda x: None,
    label_from_json=_unit_from_json,
)

BOOL = Semiring(
    name="bool",
    zero=False,
    one=True,
    plus=lambda x, y: x or y,
    times=lambda x, y: x and y,
    idempotent=True,
    star=lambda a: True,
    samples=(False, True),
    label_pool=(False, True),
    parse_label=_parse_bool,
    render_label=lambda x: "true" if x else "false",
    label_to_json=lambda x: x,
    label_from_json=_bool_from_json,
)

# Min-plus: zero is the infinite distance, one is the zero-length hop.
TROPICAL = Semiring(
    name="tropical",
    zero=INF,
    one=Fraction(0),
    plus=min,
    times=operator.add,
    idempotent=True,
    star=lambda a: Fraction(0),
    samples=(Fraction(0), Fraction(1), Fraction(2), Fraction(3), Fraction(1, 2), Fraction(7, 3), INF),
    label_pool=(Fraction(0), Fraction(1), Fraction(2), INF),
    parse_label=_parse_extended,
    render_label=_render_extended,
    label_to_json=_render_extended,
    label_from_json=_extended_from_json,
)

# Max-min: zero is no capacity, one is unbounded capacity.
MAXMIN = Semiring(
    name="maxmin",
    zero=Fraction(0),
    one=INF,
    plus=max,
    times=min,
    idempotent=True,
    star=lambda a: INF,
    samples=(Fraction(0), Fraction(1), Fraction(2), Fraction(3), Fraction(1, 2), Fraction(7, 3), INF),
    label_pool=(Fraction(0), Fraction(1), Fraction(2), INF),
    parse_label=_parse_extended,
    render_label=_render_extended,
    label_to_json=_render_extended,
    label_from_json=_extended_from_json,
)

COUNT = Semiring(
    name="count",
    zero=0,
    one=1,
    plus=operator.add,
    times=operator.mul,
    idempotent=False,
    star=None,
    samples=(0, 1, 2, 3, 5, 10),
    label_pool=(0, 1, 2, 3),
    parse_label=_parse_count,
    render_label=str,
    label_to_json=lambda x: x,
    label_from_json=_count_from_json,
)

SEMIRINGS: dict[str, Semiring] = {s.name: s for s in (UNIT, BOOL, TROPICAL, MAXMIN, COUNT)}

STAR_SEMIRINGS = tuple(name for name, s in SEMIRINGS.items() if s.star is not None)
IDEMPOTENT_SEMIRINGS = tuple(name for name, s in SEMIRINGS.items() if s.idempotent)
