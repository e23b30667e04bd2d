import random
from fractions import Fraction

import pytest

from tilecohom.exactfield import (
    CONTAINMENTS,
    CosetRep,
    LatticeId,
    ParseError,
    QuadRat,
    format_quadrat,
    lattice_gens,
    lattice_member,
    mod_canon,
    parse_quadrat,
    qr_arith,
    qr_conj,
    qr_floor,
    qr_sign,
)

G = LatticeId.G
HALF_G = LatticeId.HALF_G
INV_SQRT3_G = LatticeId.INV_SQRT3_G
INV_2SQRT3_G = LatticeId.INV_2SQRT3_G


def rnd_quadrat(rng, span=20, den=12):
    return QuadRat(
        Fraction(rng.randint(-span, span), rng.randint(1, den)),
        Fraction(rng.randint(-span, span), rng.randint(1, den)),
    )


def test_norm_identity():
    assert qr_arith(QuadRat(1, 1), QuadRat(1, -1), "mul") == QuadRat(-2)


def test_root_squares_to_three():
    assert qr_arith(QuadRat(0, 1), QuadRat(0, 1), "mul") == QuadRat(3)


def test_inverse_of_two_plus_root():
    inv = qr_arith(QuadRat(1), QuadRat(2, 1), "div")
    assert inv == QuadRat(2, -1)
    assert inv * QuadRat(2, 1) == QuadRat(1)


def test_division_by_zero_reports_zero_divisor():
    with pytest.raises(ZeroDivisionError, match="zero divisor"):
        qr_arith(QuadRat(1), QuadRat(0), "div")


def test_conjugation():
    assert qr_conj(QuadRat(1, 2)) == QuadRat(1, -2)
    assert qr_conj(QuadRat(5)) == QuadRat(5)
    a = QuadRat(Fraction(1, 7), Fraction(1, 11))
    assert qr_conj(qr_conj(a)) == a


def test_signs():
    assert qr_sign(QuadRat(2, -1)) == 1
    assert qr_sign(QuadRat(-5, 3)) == 1
    assert qr_sign(QuadRat(0, 0)) == 0
    assert qr_sign(QuadRat(-2, 1)) == -1
    assert qr_sign(QuadRat(5, -3)) == -1


def test_floors():
    assert qr_floor(QuadRat(0, 1)) == 1
    assert qr_floor(QuadRat(0, -1)) == -2
    assert qr_floor(QuadRat(Fraction(7, 2))) == 3
    assert qr_floor(QuadRat(-3)) == -3
    assert qr_floor(QuadRat(Fraction(5, 2), 1)) == 4


def test_lattice_membership_examples():
    sixth = QuadRat(0, Fraction(1, 6))  # sqrt(3)/6
    assert lattice_member(sixth, INV_2SQRT3_G)
    assert not lattice_member(sixth, INV_SQRT3_G)
    assert lattice_member(QuadRat(Fraction(1, 2)), HALF_G)
    assert not lattice_member(QuadRat(Fraction(1, 2)), G)


def test_mod_canon_examples():
    rep = mod_canon(QuadRat(Fraction(5, 2), Fraction(7, 3)), G)
    assert rep == CosetRep(QuadRat(Fraction(1, 2), Fraction(1, 3)), G)

    two_thirds_root = mod_canon(QuadRat(0, Fraction(2, 3)), G)
    one_third_root = mod_canon(QuadRat(0, Fraction(1, 3)), G)
    assert two_thirds_root.value == QuadRat(0, Fraction(2, 3))
    assert two_thirds_root != one_third_root

    assert mod_canon(QuadRat(0, 1), INV_SQRT3_G).value == QuadRat(0)


def test_field_axioms_on_random_triples():
    rng = random.Random(101)
    for _ in range(200):
        a, b, c = (rnd_quadrat(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        if b != QuadRat(0):
            assert (a / b) * b == a
        assert a - a == QuadRat(0)


def test_sign_matches_interval_arithmetic():
    # sqrt(3) bracketed by rationals accurate to 10^-40; random inputs have
    # denominators far too small to fall inside the bracket.
    from math import isqrt

    lo = Fraction(isqrt(3 * 10 ** 80), 10 ** 40)
    hi = lo + Fraction(1, 10 ** 40)
    rng = random.Random(202)
    for _ in range(10_000):
        a = rnd_quadrat(rng, span=30, den=30)
        lo_val = a.p + a.q * (lo if a.q >= 0 else hi)
        hi_val = a.p + a.q * (hi if a.q >= 0 else lo)
        if lo_val > 0:
            assert a.sign() == 1
        elif hi_val < 0:
            assert a.sign() == -1
        else:
            assert a == QuadRat(0) and a.sign() == 0


def test_floor_definition_on_random_values():
    rng = random.Random(303)
    for _ in range(2000):
        a = rnd_quadrat(rng, span=50, den=20)
        n = a.floor()
        assert (a - n).sign() >= 0
        assert (a - (n + 1)).sign() < 0


def test_mod_canon_idempotent_and_coset_correct():
    rng = random.Random(404)
    for lattice in LatticeId:
        g1, g2 = lattice_gens(lattice)
        for _ in range(100):
            a = rnd_quadrat(rng)
            rep = mod_canon(a, lattice)
            assert mod_canon(rep.value, lattice) == rep
            shift = g1 * rng.randint(-5, 5) + g2 * rng.randint(-5, 5)
            assert mod_canon(a + shift, lattice) == rep
            assert lattice_member(a - rep.value, lattice)


def test_containment_table():
    rng = random.Random(505)
    for _ in range(100):
        a = QuadRat(rng.randint(-9, 9), rng.randint(-9, 9))
        assert lattice_member(a, G)
        for lattice in CONTAINMENTS[G]:
            assert lattice_member(a, lattice)
    # strictness spot checks
    assert lattice_member(QuadRat(Fraction(1, 2)), HALF_G)
    assert not lattice_member(QuadRat(Fraction(1, 2)), INV_SQRT3_G)
    assert lattice_member(QuadRat(0, Fraction(1, 3)), INV_SQRT3_G)
    assert not lattice_member(QuadRat(0, Fraction(1, 3)), HALF_G)
    assert lattice_member(QuadRat(Fraction(1, 2), Fraction(1, 6)), INV_2SQRT3_G)


def test_parse_fixed_forms():
    assert parse_quadrat("1/2+1/3√3") == QuadRat(Fraction(1, 2), Fraction(1, 3))
    assert parse_quadrat("√3/3") == QuadRat(0, Fraction(1, 3))
    assert parse_quadrat("2/3sqrt3") == QuadRat(0, Fraction(2, 3))
    assert parse_quadrat("-s") == QuadRat(0, -1)
    assert parse_quadrat("7") == QuadRat(7)
    assert parse_quadrat("-2/5") == QuadRat(Fraction(-2, 5))
    assert parse_quadrat("0") == QuadRat(0)
    assert parse_quadrat("1/7 + √3/11") == QuadRat(Fraction(1, 7), Fraction(1, 11))
    assert parse_quadrat("2√3/3") == QuadRat(0, Fraction(2, 3))
    assert parse_quadrat("1-√3") == QuadRat(1, -1)


def test_parse_rejections():
    for bad in ("", "1.5", "pi", "1/0", "s/0", "++", "1+", "2x"):
        with pytest.raises(ParseError):
            parse_quadrat(bad)


def test_format_round_trip():
    rng = random.Random(606)
    for _ in range(300):
        a = rnd_quadrat(rng, span=40, den=40)
        assert parse_quadrat(format_quadrat(a)) == a
    for special in (QuadRat(0), QuadRat(0, 1), QuadRat(0, -1), QuadRat(-1, -1)):
        assert parse_quadrat(format_quadrat(special)) == special
