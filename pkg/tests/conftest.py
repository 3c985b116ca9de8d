"""Shared helpers: seeded random generators for polynomials and fractions."""

import random
from fractions import Fraction

from recip.laurent import LaurentPolynomial
from recip.ratfunc import RationalFunction

COEFFS = [Fraction(c) for c in (-3, -2, -1, 1, 2, 3)] + [Fraction(1, 2), Fraction(-1, 2)]


def random_poly(
    rng: random.Random,
    rank: int = 1,
    max_terms: int = 4,
    span: int = 5,
    polynomial: bool = False,
    allow_zero: bool = True,
) -> LaurentPolynomial:
    """A small random Laurent polynomial (uniform exponents in [-span, span],
    or [0, span] when polynomial=True)."""
    lo = 0 if polynomial else -span
    terms = {}
    count = rng.randint(0 if allow_zero else 1, max_terms)
    for _ in range(count):
        exponent = tuple(rng.randint(lo, span) for _ in range(rank))
        terms[exponent] = rng.choice(COEFFS)
    return LaurentPolynomial(rank, terms)


def random_nonzero_poly(rng: random.Random, rank: int = 1, **kwargs) -> LaurentPolynomial:
    while True:
        p = random_poly(rng, rank, allow_zero=False, **kwargs)
        if not p.is_zero():
            return p


def random_ratfunc(rng: random.Random, rank: int = 1) -> RationalFunction:
    return RationalFunction(random_poly(rng, rank), random_nonzero_poly(rng, rank))


def random_full_cone_poly(
    rng: random.Random, rank: int = 2, max_terms: int = 4, span: int = 4
) -> LaurentPolynomial:
    """A nonzero polynomial whose support is lex-nonnegative (full positive
    cone): leading coordinate positive, or zero prefix with the rest again
    lex-nonnegative."""
    zero = (0,) * rank
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            while True:
                exponent = tuple(rng.randint(-span, span) for _ in range(rank))
                if exponent >= zero:
                    break
            terms[exponent] = rng.choice(COEFFS)
        p = LaurentPolynomial(rank, terms)
        if not p.is_zero():
            return p
