"""Exact arithmetic in Q(sqrt 3) and the four scaling lattices behind every orbit decision.

All quantities in this package live in the real quadratic field Q(sqrt 3),
stored as a pair of rationals.  Nothing here rounds: signs, floors and
lattice membership are decided by integer comparisons only.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import total_ordering
from math import isqrt, lcm
from typing import Union

Rational = Union[int, Fraction]


class ParseError(ValueError):
    """A textual value is not an exact element of Q(sqrt 3)."""


def _sgn(x: Fraction) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


@total_ordering
class QuadRat:
    """The number p + q*sqrt(3) with exact rational coefficients p, q."""

    __slots__ = ("p", "q")

    def __init__(self, p: Rational = 0, q: Rational = 0) -> None:
        self.p = Fraction(p)
        self.q = Fraction(q)

    # -- structural protocol ------------------------------------------------

    def __eq__(self, other: object) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.p == other.p and self.q == other.q

    def __hash__(self) -> int:
        return hash((self.p, self.q))

    def __bool__(self) -> bool:
        return bool(self.p) or bool(self.q)

    def __repr__(self) -> str:
        return f"QuadRat({self.p!r}, {self.q!r})"

    def __str__(self) -> str:
        return format_quadrat(self)

    # -- field operations ----------------------------------------------------

    def __add__(self, other: object) -> "QuadRat":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return QuadRat(self.p + other.p, self.q + other.q)

    __radd__ = __add__

    def __sub__(self, other: object) -> "QuadRat":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return QuadRat(self.p - other.p, self.q - other.q)

    def __rsub__(self, other: object) -> "QuadRat":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return QuadRat(other.p - self.p, other.q - self.q)

    def __neg__(self) -> "QuadRat":
        return QuadRat(-self.p, -self.q)

    def __pos__(self) -> "QuadRat":
        return self

    def __mul__(self, other: object) -> "QuadRat":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return QuadRat(
            self.p * other.p + 3 * self.q * other.q,
            self.p * other.q + self.q * other.p,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadRat":
        norm = self.p * self.p - 3 * self.q * self.q
        if norm == 0:
            raise ZeroDivisionError("zero divisor")
        return QuadRat(self.p / norm, -self.q / norm)

    def __truediv__(self, other: object) -> "QuadRat":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: object) -> "QuadRat":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    # -- exact order structure ------------------------------------------------

    def conj(self) -> "QuadRat":
        """Image under the field automorphism sqrt(3) -> -sqrt(3)."""
        return QuadRat(self.p, -self.q)

    def sign(self) -> int:
        """Exact sign of the real value, never via floating point."""
        sp, sq = _sgn(self.p), _sgn(self.q)
        if sq == 0:
            return sp
        if sp == 0:
            return sq
        if sp == sq:
            return sp
        # Mixed signs: the sign follows whichever of p^2, 3q^2 dominates.
        return sp * _sgn(self.p * self.p - 3 * self.q * self.q)

    def __lt__(self, other: object) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() < 0

    def floor(self) -> int:
        """Largest integer n with n <= p + q*sqrt(3), computed exactly.

        Write the value as (P + Q*sqrt(3))/D with integers P, Q and D > 0.
        floor(Q*sqrt(3)) = isqrt(3*Q^2) for Q >= 0; for Q < 0 it is
        -isqrt(3*Q^2) - 1 because 3*Q^2 is never a perfect square.  Then
        floor((P + t)/D) with t = floor(Q*sqrt(3)) gives the answer, since
        P is an integer.
        """
        d = lcm(self.p.denominator, self.q.denominator)
        big_p = self.p.numerator * (d // self.p.denominator)
        big_q = self.q.numerator * (d // self.q.denominator)
        if big_q >= 0:
            t = isqrt(3 * big_q * big_q)
        else:
            t = -isqrt(3 * big_q * big_q) - 1
        return (big_p + t) // d

    def __floor__(self) -> int:
        return self.floor()

    def __float__(self) -> float:
        return float(self.p) + float(self.q) * (3.0 ** 0.5)


def _coerce(value: object) -> "QuadRat | None":
    if isinstance(value, QuadRat):
        return value
    if isinstance(value, (int, Fraction)):
        return QuadRat(value)
    return None


ZERO = QuadRat(0)
ONE = QuadRat(1)
SQRT3 = QuadRat(0, 1)
HALF = QuadRat(Fraction(1, 2))
INV_SQRT3 = QuadRat(0, Fraction(1, 3))  # 1/sqrt(3) = sqrt(3)/3


# -- named operation dispatch ----------------------------------------------------

def qr_arith(a: QuadRat, b: QuadRat, op: str) -> QuadRat:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def qr_conj(a: QuadRat) -> QuadRat:
    return a.conj()


def qr_sign(a: QuadRat) -> int:
    return a.sign()


def qr_floor(a: QuadRat) -> int:
    return a.floor()


# -- the four lattices ----------------------------------------------------------


class LatticeId(Enum):
    """The scaled copies of G = Z[sqrt 3] that classify the shift parameter."""

    G = "G"
    HALF_G = "(1/2)G"
    INV_SQRT3_G = "(1/sqrt3)G"
    INV_2SQRT3_G = "(1/(2 sqrt3))G"


#: Multiplying by this scalar carries the lattice onto G.
LATTICE_SCALE = {
    LatticeId.G: ONE,
    LatticeId.HALF_G: QuadRat(2),
    LatticeId.INV_SQRT3_G: SQRT3,
    LatticeId.INV_2SQRT3_G: QuadRat(0, 2),
}

#: For each lattice, every lattice containing it.
CONTAINMENTS = {
    LatticeId.G: (
        LatticeId.G,
        LatticeId.HALF_G,
        LatticeId.INV_SQRT3_G,
        LatticeId.INV_2SQRT3_G,
    ),
    LatticeId.HALF_G: (LatticeId.HALF_G, LatticeId.INV_2SQRT3_G),
    LatticeId.INV_SQRT3_G: (LatticeId.INV_SQRT3_G, LatticeId.INV_2SQRT3_G),
    LatticeId.INV_2SQRT3_G: (LatticeId.INV_2SQRT3_G,),
}


def lattice_member(a: QuadRat, lattice: LatticeId) -> bool:
    """True iff a belongs to the lattice (scale by the defining scalar, test in G)."""
    scaled = a * LATTICE_SCALE[lattice]
    return scaled.p.denominator == 1 and scaled.q.denominator == 1


def lattice_gens(lattice: LatticeId) -> tuple[QuadRat, QuadRat]:
    """A Z-basis of the lattice."""
    scale = LATTICE_SCALE[lattice]
    return ONE / scale, SQRT3 / scale


@dataclass(frozen=True)
class CosetRep:
    """Canonical representative of a coset modulo one of the four lattices."""

    value: QuadRat
    modulus: LatticeId


def _frac_part(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def mod_canon(a: QuadRat, lattice: LatticeId = LatticeId.G) -> CosetRep:
    """Canonical coset representative: rescale, take both fractional parts, unscale.

    mod_canon(a) == mod_canon(b) exactly when a - b lies in the lattice, so
    coset equality becomes structural equality (hashable, usable as dict key).
    """
    scale = LATTICE_SCALE[lattice]
    scaled = a * scale
    reduced = QuadRat(_frac_part(scaled.p), _frac_part(scaled.q))
    return CosetRep(reduced / scale, lattice)


# -- text form -------------------------------------------------------------------

_ROOT_TERM = re.compile(r"(?:(\d+(?:/\d+)?)\*?)?s(?:/(\d+))?")
_RAT_TERM = re.compile(r"\d+(?:/\d+)?")


def _parse_term(body: str, sign: int, original: str) -> QuadRat:
    match = _ROOT_TERM.fullmatch(body)
    if match:
        try:
            coef = Fraction(match.group(1)) if match.group(1) else Fraction(1)
            if match.group(2):
                coef /= Fraction(int(match.group(2)))
        except ZeroDivisionError:
            raise ParseError(f"zero denominator in {original!r}") from None
        return QuadRat(0, sign * coef)
    if _RAT_TERM.fullmatch(body):
        try:
            return QuadRat(sign * Fraction(body))
        except ZeroDivisionError:
            raise ParseError(f"zero denominator in {original!r}") from None
    raise ParseError(f"cannot read {body!r} in {original!r} as an exact value")


def parse_quadrat(text: str) -> QuadRat:
    """Parse `a/b+c/d√3` (√3 may be written √3, sqrt3 or s) into a QuadRat.

    Plain rationals, bare roots (`√3/3`, `-2s`, `sqrt3`) and any signed
    combination of such terms are accepted.  Decimals are rejected: the
    machinery downstream is exact and silently approximating the input
    would corrupt every orbit count.
    """
    raw = text.strip()
    if not raw:
        raise ParseError("empty value")
    if "." in raw:
        raise ParseError(f"expected an exact rational, got a decimal in {text!r}")
    norm = raw.replace("√3", "s").replace("sqrt3", "s").replace(" ", "")
    total = QuadRat(0)
    i, n = 0, len(norm)
    while i < n:
        sign = 1
        while i < n and norm[i] in "+-":
            if norm[i] == "-":
                sign = -sign
            i += 1
        j = i
        while j < n and norm[j] not in "+-":
            j += 1
        if i == j:
            raise ParseError(f"dangling sign in {text!r}")
        total = total + _parse_term(norm[i:j], sign, text)
        i = j
    return total


def format_quadrat(a: QuadRat) -> str:
    """Exact text form that parse_quadrat maps back to the same value."""
    if a.q == 0:
        return str(a.p)
    mag = abs(a.q)
    root = "√3" if mag == 1 else f"{mag}√3"
    if a.p == 0:
        return root if a.q > 0 else f"-{root}"
    joiner = "+" if a.q > 0 else "-"
    return f"{a.p}{joiner}{root}"
