"""Tests for crossing-point classes on the singular lines."""

import random
from fractions import Fraction

import pytest

from tilecohom.accept import lead_anchor, predicted_keys
from tilecohom.cyclotomic import pt_scale_mul, xpow
from tilecohom.exactfield import QuadRat
from tilecohom.lineorbits import (
    SingularLine,
    candidate_lines,
    orbit_partition,
    reduce_gamma,
)
from tilecohom.pointorbits import (
    build_tables,
    coset_set,
    euler,
    global_key,
    lambda_classes,
)


def q(a, b=0):
    return QuadRat(Fraction(a), Fraction(b))


def rnd_fraction(rnd):
    return Fraction(rnd.randrange(-40, 40), rnd.randrange(1, 24))


def rnd_gamma(rnd):
    raw = (
        QuadRat(rnd_fraction(rnd), rnd_fraction(rnd)),
        QuadRat(rnd_fraction(rnd), rnd_fraction(rnd)),
    )
    return reduce_gamma(raw)


A3 = (q(0), q(0, Fraction(1, 3)), q(0, Fraction(2, 3)))
A4 = (q(0), q(Fraction(1, 2)), q(0, Fraction(1, 2)), q(Fraction(1, 2), Fraction(1, 2)))


def engine_keys(tables, orbit_index):
    return {
        (gc.canon.u, gc.canon.v)
        for gc in tables.points
        if orbit_index in gc.incident_orbits
    }


def orbit_class_lists_match(gamma):
    """Check every orbit's engine classes against the closed-form lists.

    An orbit may hold several candidates (merged at special gamma); its
    class set is then the union of the members' instantiated lists.
    """
    orbits = orbit_partition(candidate_lines(gamma))
    tables = build_tables(orbits)
    for idx, orbit in enumerate(orbits.orbits):
        members = set(orbit.members)
        union = set()
        hits = 0
        for i in range(6):
            for lead in ((0, 2) if i % 2 == 0 else (4, 6)):
                for sign in (1, -1):
                    anchor = lead_anchor(gamma, i, lead)
                    if sign < 0:
                        anchor = -anchor
                    if SingularLine(i, anchor) in members:
                        hits += 1
                        union |= predicted_keys(gamma, i, lead, sign)
        assert hits >= 1
        got = engine_keys(tables, idx)
        assert union == got
        assert tables.per_orbit[idx].total == len(got)
    return orbits, tables


GENERIC_GAMMA = (
    QuadRat(Fraction(1, 7), Fraction(1, 11)),
    QuadRat(Fraction(1, 13), Fraction(1, 17)),
)

# gamma, L1, sum L0^alpha, L0, e, L0 split by p, rows as (n, parity, by_p)
WORKED_CASES = [
    ((q(0), q(0)), 6, 36, 14, 22, (9, 4, 0, 0, 1),
     [(6, "e,o", (3, 2, 0, 0, 1))]),
    ((q(0), q(Fraction(1, 2))), 9, 90, 36, 54, (24, 9, 0, 3, 0),
     [(3, "e", (10, 0, 0, 2, 0)), (3, "o", (4, 5, 0, 1, 0)),
      (3, "o", (2, 4, 0, 2, 0))]),
    ((q(0, Fraction(1, 3)), q(0)), 9, 99, 43, 56, (36, 5, 0, 0, 2),
     [(3, "e", (6, 1, 0, 0, 2)), (6, "o", (9, 2, 0, 0, 1))]),
    ((q(0, Fraction(1, 3)), q(0, Fraction(1, 3))), 12, 180, 80, 100,
     (72, 4, 0, 0, 4), [(12, "e,o", (12, 1, 0, 0, 2))]),
    ((q(0, Fraction(1, 3)), q(Fraction(1, 3))), 12, 180, 78, 102,
     (66, 6, 0, 6, 0), [(6, "e", (12, 0, 0, 3, 0)), (6, "o", (10, 3, 0, 2, 0))]),
    ((q(0), q(0, Fraction(1, 6))), 12, 180, 78, 102, (66, 6, 0, 6, 0),
     [(6, "e", (16, 0, 0, 2, 0)), (3, "o", (8, 4, 0, 2, 0)),
      (3, "o", (4, 2, 0, 4, 0))]),
    ((q(Fraction(1, 2)), q(0, Fraction(1, 2))), 12, 144, 56, 88,
     (36, 16, 0, 0, 4), [(12, "e,o", (6, 4, 0, 0, 2))]),
    ((q(Fraction(1, 2)), q(Fraction(1, 2), Fraction(1, 2))), 12, 216, 99, 117,
     (90, 0, 9, 0, 0), [(6, None, (18, 0, 2, 0, 0)), (6, None, (12, 0, 4, 0, 0))]),
    (GENERIC_GAMMA, 24, 1056, 516, 540, (504, 0, 12, 0, 0),
     [(24, "e,o", (42, 0, 2, 0, 0))]),
]


def test_coset_sets_pinned():
    assert coset_set(1).offsets == (q(0),)
    assert coset_set(5).offsets == (q(0),)
    assert set(coset_set(2).offsets) == set(A3)
    assert set(coset_set(4).offsets) == set(A3)
    assert set(coset_set(3).offsets) == set(A4)
    for d in range(1, 6):
        assert coset_set(d).index == d


def test_coset_set_rejects_out_of_range():
    for d in (0, 6, -1):
        with pytest.raises(ValueError, match="out of range"):
            coset_set(d)


def test_lambda_classes_parallel_never_cross():
    a = SingularLine(2, xpow(0))
    b = SingularLine(2, xpow(1))
    with pytest.raises(ValueError, match="never cross"):
        lambda_classes(a, b)


def test_lambda_classes_enumerate_translate_cosets():
    rnd = random.Random(17)
    alpha = SingularLine(0, pt_scale_mul(xpow(1), q(rnd_fraction(rnd))))
    for d in range(1, 6):
        beta = SingularLine(d, pt_scale_mul(xpow(d + 1), q(rnd_fraction(rnd))))
        classes = lambda_classes(alpha, beta)
        assert len(classes) == len(coset_set(d).offsets)
        assert len({rep.value for rep in classes}) == len(classes)
        keys = {global_key(alpha, rep) for rep in classes}
        assert len(keys) == len(classes)


def test_generic_line_class_lists():
    gamma = reduce_gamma(GENERIC_GAMMA)
    orbits, tables = orbit_class_lists_match(gamma)
    assert len(orbits.orbits) == 24
    assert all(entry.total == 44 for entry in tables.per_orbit)
    assert tables.L0 == 516
    assert tables.L0_by_p == (504, 0, 12, 0, 0)


def test_random_gamma_line_class_lists():
    rnd = random.Random(31)
    for _ in range(6):
        orbit_class_lists_match(rnd_gamma(rnd))


def test_merged_orbit_class_lists_at_worked_gammas():
    for raw, *_ in WORKED_CASES:
        orbit_class_lists_match(reduce_gamma(raw))


def test_worked_case_tables():
    for raw, l1, sum_a, l0, e, l0_by_p, rows in WORKED_CASES:
        gamma = reduce_gamma(raw)
        orbits = orbit_partition(candidate_lines(gamma))
        tables = build_tables(orbits)
        assert orbits.L1 == l1
        assert tables.sum_L0alpha == sum_a
        assert tables.L0 == l0
        assert tables.e == e
        assert euler(tables) == e
        assert tables.L0_by_p == l0_by_p
        got = [(t.n, t.parity, t.by_p) for t in tables.types]
        assert sorted((n, bp) for n, _, bp in got) == sorted(
            (n, bp) for n, _, bp in rows
        )
        for n, parity, by_p in rows:
            if parity is not None:
                assert (n, parity, by_p) in got


def test_double_count_identity():
    rnd = random.Random(47)
    for _ in range(4):
        tables = build_tables(orbit_partition(candidate_lines(rnd_gamma(rnd))))
        for slot, count in enumerate(tables.L0_by_p):
            p = slot + 2
            on_lines = sum(entry.by_p[slot] for entry in tables.per_orbit)
            assert on_lines == p * count
        assert tables.L0 == sum(tables.L0_by_p)
        assert tables.e == -tables.L0 + tables.sum_L0alpha


def test_representative_choice_invariance():
    rnd = random.Random(3)
    for raw, *_ in WORKED_CASES[:4] + WORKED_CASES[-1:]:
        gamma = reduce_gamma(raw)
        lines = candidate_lines(gamma)
        base = build_tables(orbit_partition(lines))
        shuffled = list(lines)
        rnd.shuffle(shuffled)
        redone = build_tables(orbit_partition(shuffled))
        assert redone.L0 == base.L0
        assert redone.L0_by_p == base.L0_by_p
        assert redone.e == base.e
        assert redone.sum_L0alpha == base.sum_L0alpha
        assert sorted(e.by_p for e in redone.per_orbit) == sorted(
            e.by_p for e in base.per_orbit
        )
        assert sorted((t.n, t.parity, t.by_p) for t in redone.types) == sorted(
            (t.n, t.parity, t.by_p) for t in base.types
        )
