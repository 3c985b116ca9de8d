"""Exact rational functions of Laurent polynomials, reciprocal sums, and the
exponent-negation automorphism.

Rank-1 fractions are kept canonical: common monomial factor extracted, the
polynomial pair gcd-reduced, and the denominator scaled to coprime integer
coefficients with positive leading (lex-max) coefficient.  Higher ranks skip
the gcd (multivariate gcd is out of scope); they get the same monomial and
scale normalization, and equality is decided by cross-multiplication, which
is valid in every rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .laurent import (
    LaurentPolynomial,
    Scalar,
    as_fraction,
    format_poly,
    poly_divexact,
    poly_gcd,
)

PolyLike = Union[int, Fraction, LaurentPolynomial]


class RationalFunction:
    """A quotient num/den of Laurent polynomials with den != 0."""

    __slots__ = ("num", "den")

    def __init__(self, num: PolyLike, den: PolyLike | None = None):
        if isinstance(num, (int, Fraction)):
            if isinstance(den, LaurentPolynomial):
                num = LaurentPolynomial.constant(den.rank, num)
            else:
                num = LaurentPolynomial.constant(1, num)
        if den is None:
            den = LaurentPolynomial.one(num.rank)
        elif isinstance(den, (int, Fraction)):
            den = LaurentPolynomial.constant(num.rank, den)
        if num.rank != den.rank:
            raise ValueError("numerator and denominator rank mismatch")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num = LaurentPolynomial.zero(num.rank)
            self.den = LaurentPolynomial.one(num.rank)
            return
        num, den = _extract_common_monomial(num, den)
        if num.rank == 1:
            g = poly_gcd(num, den)
            if not g.is_constant():
                num = poly_divexact(num, g)
                den = poly_divexact(den, g)
        scale = den.content()
        if den.coeff(den.lex_max_exponent()) < 0:
            scale = -scale
        self.num = num.scale(1 / scale)
        self.den = den.scale(1 / scale)

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, rank: int) -> "RationalFunction":
        return cls(LaurentPolynomial.zero(rank))

    @classmethod
    def one(cls, rank: int) -> "RationalFunction":
        return cls(LaurentPolynomial.one(rank))

    @classmethod
    def from_scalar(cls, rank: int, value: Scalar) -> "RationalFunction":
        return cls(LaurentPolynomial.constant(rank, value))

    # -- inspection -------------------------------------------------------

    @property
    def rank(self) -> int:
        return self.num.rank

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def constant_value(self) -> Fraction | None:
        """The value as a Fraction if the function is a constant, else None."""
        if self.num.is_zero():
            return Fraction(0)
        nmin = self.num.lex_min_exponent()
        dmin = self.den.lex_min_exponent()
        if nmin != dmin:
            return None
        c = self.num.coeff(nmin) / self.den.coeff(dmin)
        return c if self.num == self.den.scale(c) else None

    def is_constant(self) -> bool:
        return self.constant_value() is not None

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "RationalFunction | None":
        if isinstance(other, RationalFunction):
            if other.rank != self.rank:
                raise ValueError("rank mismatch")
            return other
        if isinstance(other, LaurentPolynomial):
            return RationalFunction(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunction.from_scalar(self.rank, other)
        return None

    def __add__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.num.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "RationalFunction":
        if not isinstance(exponent, int):
            raise ValueError("rational function powers must be integers")
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return RationalFunction(self.num**exponent, self.den**exponent)

    # -- comparisons --------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None  # not canonical in rank > 1

    def __str__(self) -> str:
        return format_ratfunc(self)

    def __repr__(self) -> str:
        return f"RationalFunction({str(self)!r})"


def _extract_common_monomial(
    num: LaurentPolynomial, den: LaurentPolynomial
) -> tuple[LaurentPolynomial, LaurentPolynomial]:
    """Divide num and den by the largest monomial dividing both.

    Afterwards all exponents are componentwise nonnegative and for each pair
    of coordinatewise minima at least one is zero; rank-1 pairs become true
    polynomials not both divisible by X.
    """

    def floor_exponent(poly: LaurentPolynomial) -> tuple[int, ...]:
        mins = None
        for exponent in poly.support():
            if mins is None:
                mins = list(exponent)
            else:
                mins = [min(a, b) for a, b in zip(mins, exponent)]
        return tuple(mins)

    vnum = floor_exponent(num)
    vden = floor_exponent(den)
    common = tuple(-min(a, b) for a, b in zip(vnum, vden))
    if any(common):
        num = num.shift(common)
        den = den.shift(common)
    return num, den


def format_ratfunc(r: RationalFunction, names: tuple[str, ...] = ("X",)) -> str:
    """Render num/den so that the text parses back to an equal value."""
    num = format_poly(r.num, names)
    if r.den == LaurentPolynomial.one(r.rank):
        return num
    den = format_poly(r.den, names)
    if len(r.num) > 1:
        num = f"({num})"
    if len(r.den) > 1 or "*" in den or den.startswith("-"):
        den = f"({den})"
    return f"{num}/{den}"


@dataclass(frozen=True)
class ReciprocalSum:
    """A formal sum of reciprocals 1/d_1 + ... + 1/d_n of nonzero polynomials."""

    denominators: tuple[LaurentPolynomial, ...]

    def __post_init__(self):
        if not self.denominators:
            raise ValueError("a reciprocal sum needs at least one denominator")
        rank = self.denominators[0].rank
        for d in self.denominators:
            if not isinstance(d, LaurentPolynomial):
                raise TypeError("denominators must be Laurent polynomials")
            if d.rank != rank:
                raise ValueError("denominators must share one rank")
            if d.is_zero():
                raise ValueError("zero denominator in reciprocal sum")

    @property
    def rank(self) -> int:
        return self.denominators[0].rank

    def value(self) -> RationalFunction:
        return normalize_reciprocal_sum(self)


def normalize_reciprocal_sum(
    sum_: ReciprocalSum | Iterable[LaurentPolynomial],
) -> RationalFunction:
    """Exact value of sum(1/d_i) as a normalized rational function.

    The value does not depend on the order of the denominators; a zero
    denominator is rejected.
    """
    if not isinstance(sum_, ReciprocalSum):
        sum_ = ReciprocalSum(tuple(sum_))
    one = LaurentPolynomial.one(sum_.rank)
    total = RationalFunction.zero(sum_.rank)
    for d in sum_.denominators:
        total = total + RationalFunction(one, d)
    return total


def sigma_map(r: RationalFunction) -> RationalFunction:
    """The field automorphism sending X^g to X^-g, applied term by term."""
    return RationalFunction(r.num.sigma(), r.den.sigma())


def sigma_of_reciprocal(f: LaurentPolynomial) -> RationalFunction:
    """sigma(1/f) written with the lex-max support element cleared.

    For f = sum u_i X^(s_i) with lex-nonnegative support this is
    X^s / sum u_i X^(s - s_i) where s is the lex-max element of the support.
    The result equals sigma_map(1/f).
    """
    if f.is_zero():
        raise ValueError("zero has no reciprocal")
    origin = (0,) * f.rank
    for exponent in f.support():
        if exponent < origin:
            raise ValueError("support must be lex-nonnegative")
    s = f.lex_max_exponent()
    num = LaurentPolynomial.monomial(f.rank, s)
    den = LaurentPolynomial(
        f.rank,
        [(tuple(a - b for a, b in zip(s, e)), c) for e, c in f.terms()],
    )
    return RationalFunction(num, den)


def geometric_product(phi: LaurentPolynomial, u: Scalar, e: int) -> LaurentPolynomial:
    """The product (phi+u)(phi^2+u^2)(phi^4+u^4)...(phi^(2^(e-1))+u^(2^(e-1))).

    Telescopes to the geometric sum sum_{j=0}^{2^e-1} phi^j u^(2^e-1-j); the
    identity is exercised by the test suite.
    """
    u = as_fraction(u)
    if u == 0:
        raise ValueError("u must be nonzero")
    if not isinstance(e, int) or e < 1:
        raise ValueError("e must be a positive integer")
    result = phi + u
    power = phi
    upower = u
    for _ in range(e - 1):
        power = power * power
        upower = upower * upower
        result = result * (power + upower)
    return result
