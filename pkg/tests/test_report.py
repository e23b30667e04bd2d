"""Tests for the rank report pipeline: compute, parse helpers, rendering."""

import json
import random
from fractions import Fraction

import pytest

from tilecohom.exactfield import ParseError, QuadRat
from tilecohom.lineorbits import reduce_gamma
from tilecohom.report import (
    DENOMINATOR_WARN_LIMIT,
    compute,
    large_denominator,
    parse_gamma,
    render,
)


def rnd_fraction(rnd):
    return Fraction(rnd.randrange(-40, 40), rnd.randrange(1, 24))


def rnd_gamma_text(rnd):
    def one(_):
        a, b = rnd_fraction(rnd), rnd_fraction(rnd)
        return f"{a}+{b}√3"

    return ",".join(one(k) for k in range(2))


def test_compute_fixed_point_case():
    report = compute(parse_gamma("0,0"))
    assert report.L1 == 6
    assert report.per_direction == (1, 1, 1, 1, 1, 1)
    assert report.R == 3
    assert report.sum_L0alpha == 36
    assert report.L0 == 14
    assert report.L0_by_p == (9, 4, 0, 0, 1)
    assert report.e == 22
    assert (report.h0, report.h1, report.h2) == (1, 7, 28)
    assert report.torsion_free
    assert report.timing >= 0.0


def test_compute_single_shift_case():
    report = compute(parse_gamma("√3/3,0"))
    assert report.L1 == 9
    assert report.L0 == 43
    assert report.e == 56
    assert (report.h0, report.h1, report.h2) == (1, 10, 65)


def test_compute_generic_case():
    report = compute(parse_gamma("1/7+1/11√3,1/13+1/17√3"))
    assert report.L1 == 24
    assert report.sum_L0alpha == 1056
    assert report.L0 == 516
    assert report.e == 540
    assert (report.h0, report.h1, report.h2) == (1, 25, 564)


def test_rank_identities_random_gamma():
    rnd = random.Random(11)
    for _ in range(4):
        raw = (
            QuadRat(rnd_fraction(rnd), rnd_fraction(rnd)),
            QuadRat(rnd_fraction(rnd), rnd_fraction(rnd)),
        )
        report = compute(raw)
        assert report.h0 == 1
        assert report.R == 3
        assert report.torsion_free
        assert report.h1 == report.L1 + 1
        assert report.h1 - report.h2 == 1 - report.e
        assert sum(report.per_direction) == report.L1
        assert sum(report.L0_by_p) == report.L0
        assert sum(row.n * row.total for row in report.line_type_table) == report.sum_L0alpha


def test_render_text_fixed_point():
    text = render(compute(parse_gamma("0,0"))).decode("utf-8")
    assert "gamma = (0, 0)" in text
    assert "L1 = 6   per direction: 1 1 1 1 1 1" in text
    assert "R = 3   torsion-free: yes" in text
    assert "n | dir | p=2 | p=3 | p=4 | p=5 | p=6 | total" in text
    assert "sum L0^a | L0 | L1 | e | rk H2 | rk H1 | rk H0" in text
    assert "36 | 14 | 6 | 22 | 28 | 7 | 1" in text


def test_render_text_multi_row_table():
    text = render(compute(parse_gamma("0,1/2"))).decode("utf-8")
    assert "3 |   e |  10 |   0 |   0 |   2 |   0 |    12" in text
    assert "3 |   o |   4 |   5 |   0 |   1 |   0 |    10" in text
    assert "3 |   o |   2 |   4 |   0 |   2 |   0 |     8" in text
    assert "90 | 36 | 9 | 54 | 63 | 10 | 1" in text


def test_render_text_reduces_gamma_first():
    text = render(compute(parse_gamma("1/2,1/2+1/2√3"))).decode("utf-8")
    assert "gamma = (1/2, -1/2+1/2√3)" in text
    assert "216 | 99 | 12 | 117 | 129 | 13 | 1" in text


def test_render_json_shape():
    payload = json.loads(render(compute(parse_gamma("0,1/2")), format="json"))
    assert payload["schema"] == 1
    assert payload["gamma"] == ["0", "1/2"]
    assert payload["L1"] == 9
    assert payload["h2"] == 63
    assert payload["torsion_free"] is True
    assert payload["L0_by_p"] == [24, 9, 0, 3, 0]
    rows = payload["line_types"]
    assert [row["n"] for row in rows] == [3, 3, 3]
    assert rows[0]["by_p"] == [10, 0, 0, 2, 0]
    assert rows[0]["dir"] == "e"
    assert rows[0]["total"] == 12


def test_render_json_deterministic_bytes():
    first = render(compute(parse_gamma("1/5,1/7")), format="json")
    second = render(compute(parse_gamma("1/5,1/7")), format="json")
    assert first == second
    assert first.endswith(b"\n")


def test_render_rejects_unknown_format():
    report = compute(parse_gamma("0,0"))
    with pytest.raises(ValueError, match="format"):
        render(report, format="yaml")


def test_parse_gamma_round_trip():
    g1, g2 = parse_gamma("1/2,-1/2+1/2√3")
    assert g1 == QuadRat(Fraction(1, 2), Fraction(0))
    assert g2 == QuadRat(Fraction(-1, 2), Fraction(1, 2))


def test_parse_gamma_requires_two_components():
    with pytest.raises(ParseError, match="two comma-separated"):
        parse_gamma("1/2")
    with pytest.raises(ParseError, match="two comma-separated"):
        parse_gamma("1/2,1/3,1/5")


def test_parse_gamma_rejects_inexact_tokens():
    with pytest.raises(ParseError, match="exact"):
        parse_gamma("0.5,0")
    with pytest.raises(ParseError, match="exact"):
        parse_gamma("1/2,x")


def test_parse_gamma_random_round_trip():
    rnd = random.Random(23)
    for _ in range(20):
        text = rnd_gamma_text(rnd)
        g1, g2 = parse_gamma(text)
        a, b = text.split(",")
        assert f"{g1.p}+{g1.q}√3" == a
        assert f"{g2.p}+{g2.q}√3" == b


def test_large_denominator_flag():
    assert not large_denominator(reduce_gamma(parse_gamma("1/2,1/3+1/7√3")))
    big = DENOMINATOR_WARN_LIMIT + 1
    assert large_denominator(reduce_gamma(parse_gamma(f"1/{big},0")))
    assert large_denominator(reduce_gamma(parse_gamma(f"0,1/{big}√3")))
