"""Exact linear algebra over Q for the small systems arising here.

Two solvers: Gauss-Jordan elimination for affine systems (used by the
membership certificate search) and Fourier-Motzkin elimination with witness
back-substitution for linear inequality feasibility (used by the monoid
stratum checks).  Everything works on Fractions; instances are tiny, so
clarity wins over sparsity tricks.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

Row = tuple[Fraction, ...]
Constraint = tuple[Row, Fraction]  # coefficients a, bound b: a . x <= b


def solve_affine(
    rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> list[Fraction] | None:
    """One exact solution of rows . x = rhs, or None if inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    aug = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(n):
        pivot_row = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if pivot_row is None:
            continue
        aug[r], aug[pivot_row] = aug[pivot_row], aug[r]
        pivot = aug[r][c]
        aug[r] = [v / pivot for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                factor = aug[i][c]
                aug[i] = [v - factor * w for v, w in zip(aug[i], aug[r])]
        pivots.append((r, c))
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n] != 0:
            return None
    solution = [Fraction(0)] * n
    for row, col in pivots:
        solution[col] = aug[row][n]
    return solution


def _normalized(coeffs: tuple[Fraction, ...], bound: Fraction) -> Constraint:
    # Divide by the positive content to keep numbers small and rows canonical.
    values = [c for c in coeffs if c != 0] + ([bound] if bound != 0 else [])
    if not values:
        return coeffs, bound
    g = Fraction(
        math.gcd(*(v.numerator for v in values)),
        math.lcm(*(v.denominator for v in values)),
    )
    return tuple(c / g for c in coeffs), bound / g


def fm_witness(
    constraints: Sequence[Constraint], nvars: int
) -> list[Fraction] | None:
    """A rational point satisfying every a . x <= b, or None if infeasible.

    Eliminates the last variable, recurses, then back-substitutes a value
    inside the residual interval (midpoint when bounded on both sides), so
    the witness is deterministic.
    """
    if nvars == 0:
        return [] if all(b >= 0 for _, b in constraints) else None
    uppers: list[Constraint] = []
    lowers: list[Constraint] = []
    reduced: dict[Constraint, None] = {}
    for coeffs, bound in constraints:
        c = coeffs[nvars - 1]
        if c > 0:
            uppers.append((coeffs, bound))
        elif c < 0:
            lowers.append((coeffs, bound))
        else:
            reduced.setdefault(_normalized(coeffs[: nvars - 1], bound))
    for up_coeffs, up_bound in uppers:
        cp = up_coeffs[nvars - 1]
        for low_coeffs, low_bound in lowers:
            cn = low_coeffs[nvars - 1]
            combined = tuple(
                -cn * a + cp * b
                for a, b in zip(up_coeffs[: nvars - 1], low_coeffs[: nvars - 1])
            )
            reduced.setdefault(_normalized(combined, -cn * up_bound + cp * low_bound))
    partial = fm_witness(list(reduced), nvars - 1)
    if partial is None:
        return None
    lo: Fraction | None = None
    hi: Fraction | None = None
    for coeffs, bound in uppers:
        rest = sum((a * x for a, x in zip(coeffs, partial)), Fraction(0))
        candidate = (bound - rest) / coeffs[nvars - 1]
        hi = candidate if hi is None else min(hi, candidate)
    for coeffs, bound in lowers:
        rest = sum((a * x for a, x in zip(coeffs, partial)), Fraction(0))
        candidate = (bound - rest) / coeffs[nvars - 1]  # negative pivot flips the bound
        lo = candidate if lo is None else max(lo, candidate)
    if lo is not None and hi is not None:
        assert lo <= hi, "Fourier-Motzkin interval must be nonempty"
        value = (lo + hi) / 2
    elif lo is not None:
        value = lo
    elif hi is not None:
        value = hi
    else:
        value = Fraction(0)
    return partial + [value]
