"""Semiring axioms, the idempotence flags, and the star fixpoint equation."""

import random
from fractions import Fraction

import pytest

from semigraph.semiring import BOOL, COUNT, INF, MAXMIN, SEMIRINGS, TROPICAL, UNIT, is_zero, star

CATALOG = sorted(SEMIRINGS.values(), key=lambda s: s.name)


def sample_triples(sr, count=1000):
    rng = random.Random(f"semiring-laws:{sr.name}")
    return [
        (rng.choice(sr.samples), rng.choice(sr.samples), rng.choice(sr.samples))
        for _ in range(count)
    ]


@pytest.mark.parametrize("sr", CATALOG, ids=lambda s: s.name)
def test_semiring_axioms(sr):
    for a, b, c in sample_triples(sr):
        assert sr.plus(sr.plus(a, b), c) == sr.plus(a, sr.plus(b, c))
        assert sr.plus(a, b) == sr.plus(b, a)
        assert sr.plus(a, sr.zero) == a
        assert sr.plus(sr.zero, a) == a
        assert sr.times(sr.times(a, b), c) == sr.times(a, sr.times(b, c))
        assert sr.times(a, sr.one) == a
        assert sr.times(sr.one, a) == a
        assert sr.times(a, sr.plus(b, c)) == sr.plus(sr.times(a, b), sr.times(a, c))
        assert sr.times(sr.plus(a, b), c) == sr.plus(sr.times(a, c), sr.times(b, c))
        assert sr.times(a, sr.zero) == sr.zero
        assert sr.times(sr.zero, a) == sr.zero


@pytest.mark.parametrize("sr", [s for s in CATALOG if s.idempotent], ids=lambda s: s.name)
def test_declared_idempotence_holds(sr):
    for a in sr.samples:
        assert sr.plus(a, a) == a


def test_count_is_not_idempotent():
    assert not COUNT.idempotent
    assert COUNT.plus(1, 1) == 2 != 1


@pytest.mark.parametrize("sr", [BOOL, TROPICAL, MAXMIN], ids=lambda s: s.name)
def test_star_fixpoint_equation(sr):
    for a in sr.samples:
        assert star(sr, a) == sr.plus(sr.one, sr.times(a, star(sr, a)))


def test_star_values():
    assert star(BOOL, True) is True
    assert star(TROPICAL, Fraction(5)) == Fraction(0)
    assert star(MAXMIN, Fraction(7)) == INF


@pytest.mark.parametrize("sr", [UNIT, COUNT], ids=lambda s: s.name)
def test_star_rejected_without_declaration(sr):
    with pytest.raises(ValueError):
        star(sr, sr.one)


def test_is_zero():
    assert is_zero(BOOL, False)
    assert not is_zero(TROPICAL, Fraction(0))  # 0 is the one of min-plus
    assert is_zero(TROPICAL, INF)
    assert not is_zero(COUNT, 1)
    assert is_zero(MAXMIN, Fraction(0))
    assert is_zero(UNIT, ())


@pytest.mark.parametrize("sr", CATALOG, ids=lambda s: s.name)
def test_label_pool_contains_units(sr):
    assert sr.zero in sr.label_pool
    assert sr.one in sr.label_pool


@pytest.mark.parametrize("sr", CATALOG, ids=lambda s: s.name)
def test_label_text_round_trip(sr):
    for label in sr.label_pool + sr.samples:
        assert sr.parse_label(sr.render_label(label)) == label


@pytest.mark.parametrize("sr", CATALOG, ids=lambda s: s.name)
def test_label_json_round_trip(sr):
    for label in sr.label_pool + sr.samples:
        assert sr.label_from_json(sr.label_to_json(label)) == label


def test_label_parse_rejects_garbage():
    for sr, bad in [
        (UNIT, "unit"),
        (BOOL, "1"),
        (TROPICAL, "-1"),
        (TROPICAL, "abc"),
        (MAXMIN, "1/0"),
        (COUNT, "-2"),
        (COUNT, "1.5"),
    ]:
        with pytest.raises(ValueError):
            sr.parse_label(bad)
