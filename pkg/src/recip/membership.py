"""Membership decision for the local ring attached to a derived semigroup.

The target ring is the semigroup algebra of S' localized at its homogeneous
maximal ideal.  A reduced rank-1 fraction p/q belongs to it exactly when q
does not vanish at the origin and some polynomial multiplier h with h(0) = 1
pushes both supports into S':

    support(p*h) in S'   and   support(q*h) in S'.

Searching for h is a finite problem: coefficients of p*h and q*h at the gap
degrees of S' must vanish, each such coefficient at degree j involves only
h_k with k <= j, and every degree at or beyond the conductor of S' lies in
S' automatically.  So truncating h at the Frobenius number F' of S' loses
nothing, and the gap conditions form a finite linear system over Q with
h_0 = 1 pinned.  Feasibility yields a certificate; infeasibility is an exact
non-membership proof.

The reciprocal complement of the semigroup algebra of S is the image of this
ring under the exponent-negation automorphism, so membership for it is
decided on the sigma side.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .laurent import LaurentPolynomial, as_fraction
from .linsolve import solve_affine
from .ratfunc import RationalFunction, ReciprocalSum, sigma_map
from .semigroup import NumericalSemigroup, derive_sprime

MEMBER = "Member"
NOT_MEMBER = "NotMember"
POLE_AT_ORIGIN = "PoleAtOrigin"
LINEAR_SYSTEM_INFEASIBLE = "LinearSystemInfeasible"


@dataclass(frozen=True)
class MembershipVerdict:
    status: str
    certificate: LaurentPolynomial | None = None
    obstruction: str | None = None

    @property
    def is_member(self) -> bool:
        return self.status == MEMBER

    @classmethod
    def member(cls, certificate: LaurentPolynomial) -> "MembershipVerdict":
        return cls(status=MEMBER, certificate=certificate)

    @classmethod
    def not_member(cls, obstruction: str) -> "MembershipVerdict":
        return cls(status=NOT_MEMBER, obstruction=obstruction)


def decide_membership(r: RationalFunction, S: NumericalSemigroup) -> MembershipVerdict:
    """Decide whether the rank-1 fraction r lies in the localized S'-algebra.

    Returns Member with a multiplier certificate h (constant term 1) such
    that p*h and q*h have supports in S', or NotMember naming the failed
    check: a pole at the origin, or an infeasible gap-coefficient system.
    """
    if r.rank != 1:
        raise ValueError("membership decision requires rank 1")
    p, q = r.num, r.den  # already reduced and monomial-normalized
    if q.constant_term() == 0:
        return MembershipVerdict.not_member(POLE_AT_ORIGIN)
    scale = 1 / q.constant_term()
    p = p.scale(scale)
    q = q.scale(scale)

    sprime = derive_sprime(S)
    bound = sprime.frobenius
    if bound < 0:
        return MembershipVerdict.member(LaurentPolynomial.one(1))

    # Unknowns h_1 .. h_bound; h_0 = 1.  One equation per (polynomial, gap):
    # sum_k coeff(poly, j - k) * h_k = 0.
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for poly in (p, q):
        for gap in sprime.gaps:
            rows.append([poly.coeff((gap - k,)) for k in range(1, bound + 1)])
            rhs.append(-poly.coeff((gap,)))
    solution = solve_affine(rows, rhs)
    if solution is None:
        return MembershipVerdict.not_member(LINEAR_SYSTEM_INFEASIBLE)
    h = LaurentPolynomial(
        1, {(0,): Fraction(1), **{(k,): c for k, c in enumerate(solution, 1) if c != 0}}
    )
    return MembershipVerdict.member(h)


def verify_certificate(
    r: RationalFunction, S: NumericalSemigroup, h: LaurentPolynomial
) -> bool:
    """Check a membership certificate against the reduced form of r.

    True when h(0) != 0, the products p*h and q*h have supports inside S',
    and q*h keeps a nonzero constant term.
    """
    if r.rank != 1 or h.rank != 1:
        raise ValueError("certificates are rank-1 polynomials")
    if h.constant_term() == 0:
        return False
    sprime = derive_sprime(S)
    ph = r.num * h
    qh = r.den * h
    if qh.constant_term() == 0:
        return False
    return all(
        sprime.contains(exponent[0])
        for poly in (ph, qh)
        for exponent in poly.support()
    )


def monomial_membership(g: int, S: NumericalSemigroup) -> bool:
    """Whether X^g belongs to the localized S'-algebra, i.e. g is in S'."""
    if g < 0:
        raise ValueError("exponent must be nonnegative")
    return derive_sprime(S).contains(g)


def in_reciprocal_complement(
    r: RationalFunction, S: NumericalSemigroup
) -> MembershipVerdict:
    """Membership of r in the reciprocal complement of the algebra of S.

    Decided through the exponent-negation automorphism, which identifies the
    reciprocal complement with the localized S'-algebra.
    """
    if r.rank != 1:
        raise ValueError("membership decision requires rank 1")
    return decide_membership(sigma_map(r), S)


def brute_force_witness(
    r: RationalFunction,
    S: NumericalSemigroup,
    max_terms: int,
    max_degree: int,
    coeff_pool: Sequence[Fraction | int],
    seed: int,
    *,
    random_trials: int = 400,
    enumeration_budget: int = 60000,
) -> ReciprocalSum | None:
    """Search for denominators d_i over the algebra of S with sum(1/d_i) = r.

    The search is one-sided: a returned witness is exact (it is re-summed and
    compared), while None only means nothing was found within the bounds,
    never a non-membership proof.

    Candidates are tried in a documented, deterministic order so the first
    witness found is reproducible:

    1. single denominators with one or two support points (ascending support,
       then pool order for coefficients);
    2. multisets of 2..max_terms monomial denominators in lexicographic
       order, up to ``enumeration_budget`` checks;
    3. ``random_trials`` seeded random candidates with up to three support
       points per denominator.
    """
    if max_terms < 1 or max_degree < 0:
        raise ValueError("bounds must be positive")
    pool = sorted({as_fraction(c) for c in coeff_pool})
    if not pool or any(c == 0 for c in pool):
        raise ValueError("coefficient pool must be nonzero")
    members = [n for n in range(max_degree + 1) if S.contains(n)]
    one = LaurentPolynomial.one(1)

    def matches(denominators: list[LaurentPolynomial]) -> bool:
        total = RationalFunction.zero(1)
        for d in denominators:
            total = total + RationalFunction(one, d)
        return total == r

    # Stage 1: single denominators with small support.
    for m in members:
        for c in pool:
            d = LaurentPolynomial(1, {(m,): c})
            if matches([d]):
                return ReciprocalSum((d,))
    for m1, m2 in itertools.combinations(members, 2):
        for c1 in pool:
            for c2 in pool:
                d = LaurentPolynomial(1, {(m1,): c1, (m2,): c2})
                if matches([d]):
                    return ReciprocalSum((d,))

    # Stage 2: multisets of monomial denominators.
    monomials = [
        LaurentPolynomial(1, {(m,): c}) for m in members for c in pool
    ]
    checks = 0
    for size in range(2, max_terms + 1):
        for combo in itertools.combinations_with_replacement(range(len(monomials)), size):
            checks += 1
            if checks > enumeration_budget:
                break
            # Sum of monomial reciprocals is itself a Laurent polynomial.
            total = LaurentPolynomial.zero(1)
            for idx in combo:
                m = monomials[idx]
                exponent, coeff = next(m.terms())
                total = total + LaurentPolynomial(1, {(-exponent[0],): 1 / coeff})
            if RationalFunction(total) == r:
                return ReciprocalSum(tuple(monomials[idx] for idx in combo))
        if checks > enumeration_budget:
            break

    # Stage 3: seeded random candidates.
    rng = random.Random(seed)
    for _ in range(random_trials):
        count = rng.randint(1, max_terms)
        denominators = []
        for _ in range(count):
            width = rng.randint(1, min(3, len(members)))
            support = rng.sample(members, width)
            denominators.append(
                LaurentPolynomial(1, {(m,): rng.choice(pool) for m in support})
            )
        if matches(denominators):
            return ReciprocalSum(tuple(denominators))
    return None


def random_reciprocal_sum(
    S: NumericalSemigroup,
    rng: random.Random,
    max_terms: int = 4,
    max_degree: int = 12,
    coeff_pool: Iterable[Fraction | int] = (1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2)),
) -> ReciprocalSum:
    """A seeded random formal sum of reciprocals of algebra elements of S."""
    pool = [as_fraction(c) for c in coeff_pool]
    members = [n for n in range(max_degree + 1) if S.contains(n)]
    denominators = []
    for _ in range(rng.randint(1, max_terms)):
        width = rng.randint(1, min(3, len(members)))
        support = rng.sample(members, width)
        denominators.append(
            LaurentPolynomial(1, {(m,): rng.choice(pool) for m in support})
        )
    return ReciprocalSum(tuple(denominators))
