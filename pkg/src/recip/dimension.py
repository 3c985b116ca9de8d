"""Lex-ordered monoids in Z^N, stratum emptiness, and Krull-dimension reports.

A monoid is presented by plain generators (each lex-positive) and by
families: a family (base, free) contributes every element base + shift where
the shift ranges over integer vectors supported on the free coordinates.
Free coordinates must come strictly after the base's leading nonzero
coordinate, so every family element stays lex-positive.

The i-th stratum S_i collects the monoid elements whose first i-1
coordinates vanish and whose i-th coordinate is positive.  Emptiness is
decided exactly: for each subset of families marked as used, the remaining
conditions are a linear feasibility problem over Q (multipliers >= 0 on
generators, >= 1 on used families, free coordinates eliminated), and any
rational solution scales by a common denominator to an integer monoid
element, which the checker materializes.

The report derives N - t <= dim <= N from the number t of empty strata and
pins the dimension exactly in the cases the theory settles: all strata
nonempty (dim = N), the free-shift family below (dim = number of base
coordinates), and nontrivial rank-1 monoids (dim = 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .linsolve import Constraint, fm_witness
from .semigroup import NumericalSemigroup

EXACT_ALL_NONEMPTY = "AllNonempty"
EXACT_FREE_SHIFT = "FreeShiftFamily"
EXACT_RANK1 = "Rank1"


def _leading_index(vector: tuple[int, ...]) -> int:
    for idx, value in enumerate(vector):
        if value != 0:
            return idx
    raise ValueError("zero vector has no leading coordinate")


@dataclass(frozen=True)
class ShiftFamily:
    """Elements base + sum_{c in free} k_c e_c with arbitrary integers k_c."""

    base: tuple[int, ...]
    free: frozenset[int]  # 0-based coordinate indices

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(self.base))
        object.__setattr__(self, "free", frozenset(self.free))


@dataclass(frozen=True)
class LexMonoid:
    rank: int
    generators: tuple[tuple[int, ...], ...] = ()
    families: tuple[ShiftFamily, ...] = ()

    def __post_init__(self):
        zero = (0,) * self.rank
        for g in self.generators:
            if len(g) != self.rank:
                raise ValueError("generator rank mismatch")
            if not tuple(g) > zero:
                raise ValueError(f"generator {g} is not lex-positive")
        for family in self.families:
            if len(family.base) != self.rank:
                raise ValueError("family base rank mismatch")
            if not family.base > zero:
                raise ValueError(f"family base {family.base} is not lex-positive")
            lead = _leading_index(family.base)
            for c in family.free:
                if not 0 <= c < self.rank:
                    raise ValueError("free coordinate out of range")
                if c <= lead:
                    raise ValueError(
                        "free coordinates must come after the base's leading coordinate"
                    )


@dataclass(frozen=True)
class DimensionReport:
    rank: int
    si_nonempty: tuple[bool, ...]
    t: int  # number of empty strata
    lower: int  # rank - t
    upper: int  # rank
    exact: int | None
    exact_source: str | None


def si_witness(M: LexMonoid, i: int) -> tuple[int, ...] | None:
    """An integer element of the i-th stratum (1-based i), or None if empty.

    Iterates over subsets of families in ascending bitmask order and solves
    each case exactly, so the returned witness is deterministic.
    """
    if not 1 <= i <= M.rank:
        raise ValueError(f"stratum index {i} out of range 1..{M.rank}")
    target = i - 1
    gens = M.generators
    for mask in range(1 << len(M.families)):
        used = [f for k, f in enumerate(M.families) if mask >> k & 1]
        covered = set().union(*(f.free for f in used)) if used else set()
        nvars = len(gens) + len(used)
        constraints: list[Constraint] = []
        for v in range(nvars):
            row = [Fraction(0)] * nvars
            row[v] = Fraction(-1)
            constraints.append((tuple(row), Fraction(0)))  # multiplier >= 0
        for c in range(target + 1):
            if c in covered:
                continue  # a free shift absorbs this coordinate
            row = [Fraction(g[c]) for g in gens] + [Fraction(f.base[c]) for f in used]
            offset = sum(f.base[c] for f in used)  # lambda_f = 1 + mu_f
            if c < target:
                constraints.append((tuple(row), Fraction(-offset)))
                constraints.append((tuple(-v for v in row), Fraction(offset)))
            else:
                constraints.append((tuple(-v for v in row), Fraction(offset - 1)))
        solution = fm_witness(constraints, nvars)
        if solution is None:
            continue
        return _materialize(M, target, gens, used, covered, solution)
    return None


def _materialize(
    M: LexMonoid,
    target: int,
    gens,
    used,
    covered: set[int],
    solution: list[Fraction],
) -> tuple[int, ...]:
    """Scale a rational case solution to an explicit integer monoid element."""
    gen_mult = solution[: len(gens)]
    fam_mult = [Fraction(1) + mu for mu in solution[len(gens):]]
    partial = [Fraction(0)] * M.rank
    for mult, g in zip(gen_mult, gens):
        for c in range(M.rank):
            partial[c] += mult * g[c]
    for mult, f in zip(fam_mult, used):
        for c in range(M.rank):
            partial[c] += mult * f.base[c]
    shifts = {c: Fraction(0) for c in covered}
    for c in covered:
        if c < target:
            shifts[c] = -partial[c]
        elif c == target and partial[c] < 1:
            shifts[c] = 1 - partial[c]
    denominators = (
        [v.denominator for v in gen_mult]
        + [v.denominator for v in fam_mult]
        + [v.denominator for v in shifts.values()]
    )
    scale = math.lcm(*denominators) if denominators else 1

    def whole(value: Fraction) -> int:
        scaled = value * scale
        assert scaled.denominator == 1
        return scaled.numerator

    witness = [0] * M.rank
    for mult, g in zip(gen_mult, gens):
        count = whole(mult)
        assert count >= 0
        for c in range(M.rank):
            witness[c] += count * g[c]
    for mult, f in zip(fam_mult, used):
        count = whole(mult)
        assert count >= 1
        for c in range(M.rank):
            witness[c] += count * f.base[c]
    for c, shift in shifts.items():
        witness[c] += whole(shift)
    assert all(witness[c] == 0 for c in range(target))
    assert witness[target] >= 1
    return tuple(witness)


def si_nonempty(M: LexMonoid, i: int) -> bool:
    """Whether some monoid element vanishes before coordinate i and is
    positive there (1-based i)."""
    return si_witness(M, i) is not None


def _free_shift_shape(M: LexMonoid) -> int | None:
    """If M is exactly the free-shift family monoid on (n, m), return m."""
    if M.generators or not M.families:
        return None
    pairs = set()
    bases = set()
    for f in M.families:
        if len(f.free) != 1:
            return None
        lead = _leading_index(f.base)
        if any(v != (1 if c == lead else 0) for c, v in enumerate(f.base)):
            return None
        bases.add(lead)
        pairs.add((lead, next(iter(f.free))))
    m = max(bases) + 1
    if bases != set(range(m)) or m >= M.rank:
        return None
    expected = {(j, i) for j in range(m) for i in range(m, M.rank)}
    return m if pairs == expected else None


def dimension_report(M: LexMonoid) -> DimensionReport:
    """Stratum flags plus the dimension interval and, when settled, the
    exact dimension of the reciprocal complement of the monoid algebra."""
    flags = tuple(si_nonempty(M, i) for i in range(1, M.rank + 1))
    t = flags.count(False)
    exact: int | None = None
    source: str | None = None
    if all(flags):
        exact, source = M.rank, EXACT_ALL_NONEMPTY
    elif (m := _free_shift_shape(M)) is not None:
        exact, source = m, EXACT_FREE_SHIFT
    elif M.rank == 1 and (M.generators or M.families):
        exact, source = 1, EXACT_RANK1
    return DimensionReport(
        rank=M.rank,
        si_nonempty=flags,
        t=t,
        lower=M.rank - t,
        upper=M.rank,
        exact=exact,
        exact_source=source,
    )


def free_shift_monoid(n: int, m: int) -> LexMonoid:
    """The rank-n monoid with m base coordinates, each shifted freely along
    every one of the n - m trailing coordinates (one family per pair).

    Its algebra has dimension n while the reciprocal complement has
    dimension m; the trailing n - m strata are empty.
    """
    if not (isinstance(n, int) and isinstance(m, int) and n > m >= 1):
        raise ValueError("need integers n > m >= 1")
    families = []
    for j in range(m):
        base = tuple(1 if c == j else 0 for c in range(n))
        for i in range(m, n):
            families.append(ShiftFamily(base, frozenset({i})))
    return LexMonoid(rank=n, families=tuple(families))


def full_cone_monoid(rank: int) -> LexMonoid:
    """The full positive cone of Z^rank under lex order, presented with one
    family per leading coordinate plus the last unit vector."""
    if rank < 1:
        raise ValueError("rank must be positive")
    families = []
    for i in range(rank - 1):
        base = tuple(1 if c == i else 0 for c in range(rank))
        families.append(ShiftFamily(base, frozenset(range(i + 1, rank))))
    last = tuple(1 if c == rank - 1 else 0 for c in range(rank))
    return LexMonoid(rank=rank, generators=(last,), families=tuple(families))


def monoid_from_semigroup(S: NumericalSemigroup) -> LexMonoid:
    return LexMonoid(rank=1, generators=tuple((g,) for g in S.generators))


def reciprocal_noetherian(M: LexMonoid) -> bool:
    """Whether the reciprocal complement of the monoid algebra is Noetherian:
    exactly the finitely generated rank-1 (numerical semigroup) case."""
    return M.rank == 1 and bool(M.generators) and not M.families


def monoid_to_json(M: LexMonoid) -> dict:
    out: dict = {"rank": M.rank, "generators": [list(g) for g in M.generators]}
    out["families"] = [
        {"base": list(f.base), "free": sorted(c + 1 for c in f.free)}
        for f in M.families
    ]
    return out


def monoid_from_json(obj: dict) -> LexMonoid:
    rank = obj["rank"]
    generators = tuple(tuple(g) for g in obj.get("generators", ()))
    families = tuple(
        ShiftFamily(tuple(f["base"]), frozenset(c - 1 for c in f["free"]))
        for f in obj.get("families", ())
    )
    return LexMonoid(rank=rank, generators=generators, families=families)


def report_to_json(report: DimensionReport) -> dict:
    return {
        "rank": report.rank,
        "si": list(report.si_nonempty),
        "t": report.t,
        "lower": report.lower,
        "upper": report.upper,
        "exact": report.exact,
        "exactSource": report.exact_source,
    }
