"""Exact arithmetic core: Bernoulli numbers, even-zeta constants, and
dense rational linear algebra.

All scalars are ``fractions.Fraction`` (aliased ``Rational``): always in
lowest terms, positive denominator, canonical zero.  The linear-algebra
entry point is row-space membership: given a rational matrix A and a
target row t, find lambda with lambda . A == t or decide that none
exists.  Elimination uses a fixed first-nonzero pivot order and sets all
free variables to zero, so results are reproducible across runs.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

__all__ = [
    "Rational",
    "PiPowerScalar",
    "RationalMatrix",
    "bernoulli_number",
    "zeta_even_pi_coeff",
    "matrix_rank",
    "rref",
    "solve_membership",
]

Rational = Fraction

_BERNOULLI: list[Fraction] = [Fraction(1)]
_BERNOULLI_LOCK = threading.Lock()


def bernoulli_number(m: int) -> Fraction:
    """Bernoulli number B_m in the convention B_1 = -1/2.

    Computed from the defining recurrence sum_{k=0}^{m} C(m+1,k) B_k = 0
    and memoized in-process; safe to call from multiple threads.
    """
    if m < 0:
        raise ValueError(f"Bernoulli index must be nonnegative, got {m}")
    with _BERNOULLI_LOCK:
        while len(_BERNOULLI) <= m:
            j = len(_BERNOULLI)
            acc = sum(math.comb(j + 1, k) * _BERNOULLI[k] for k in range(j))
            _BERNOULLI.append(-acc / (j + 1))
        return _BERNOULLI[m]


def zeta_even_pi_coeff(n: int) -> Fraction:
    """The rational q with zeta(2n) = q * pi^(2n), for n >= 1.

    q = (-1)^(n+1) * B_{2n} * 2^(2n-1) / (2n)!; q is positive for all n.
    """
    if n < 1:
        raise ValueError(f"even zeta argument index must be >= 1, got {n}")
    sign = 1 if n % 2 == 1 else -1
    q = sign * Fraction(2 ** (2 * n - 1), math.factorial(2 * n)) * bernoulli_number(2 * n)
    if q <= 0:
        raise AssertionError(f"zeta_even_pi_coeff({n}) computed nonpositive: {q}")
    return q


@dataclass(frozen=True)
class PiPowerScalar:
    """A scalar of the form coeff * pi^pi_exponent with rational coeff.

    pi_exponent is a nonnegative even integer; a zero coefficient forces
    pi_exponent == 0 so that zero has one representation.
    """

    coeff: Fraction
    pi_exponent: int = 0

    def __post_init__(self) -> None:
        coeff = self.coeff if isinstance(self.coeff, Fraction) else Fraction(self.coeff)
        exponent = self.pi_exponent
        if exponent < 0:
            raise ValueError(f"pi exponent must be nonnegative, got {exponent}")
        if exponent % 2 != 0:
            raise ValueError(f"pi exponent must be even, got {exponent}")
        if coeff == 0:
            exponent = 0
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "pi_exponent", exponent)

    @property
    def is_zero(self) -> bool:
        return self.coeff == 0

    def scaled(self, q: Fraction) -> "PiPowerScalar":
        return PiPowerScalar(self.coeff * q, self.pi_exponent)

    def __mul__(self, other: "PiPowerScalar") -> "PiPowerScalar":
        return PiPowerScalar(self.coeff * other.coeff, self.pi_exponent + other.pi_exponent)

    def __neg__(self) -> "PiPowerScalar":
        return PiPowerScalar(-self.coeff, self.pi_exponent)


def _as_fraction_rows(entries: Iterable[Iterable[Fraction]]) -> list[list[Fraction]]:
    rows = [[x if isinstance(x, Fraction) else Fraction(x) for x in row] for row in entries]
    if rows:
        width = len(rows[0])
        for row in rows:
            if len(row) != width:
                raise ValueError("matrix rows must all have the same length")
    return rows


class RationalMatrix:
    """Dense matrix over Fraction; shape may be zero in either dimension."""

    __slots__ = ("entries", "rows", "cols")

    def __init__(self, entries: Iterable[Iterable[Fraction]], cols: Optional[int] = None):
        data = _as_fraction_rows(entries)
        self.entries: list[list[Fraction]] = data
        self.rows: int = len(data)
        self.cols: int = len(data[0]) if data else (cols or 0)

    def row(self, i: int) -> list[Fraction]:
        return list(self.entries[i])

    def column(self, j: int) -> list[Fraction]:
        return [row[j] for row in self.entries]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RationalMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        return f"RationalMatrix({self.rows}x{self.cols})"


def _echelon(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """In-place forward elimination; returns (rows, pivot column list).

    Pivot choice is the first row (in current order) with a nonzero entry
    in the leftmost unresolved column; no other row exchanges happen.
    """
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rref(matrix: RationalMatrix) -> tuple[RationalMatrix, tuple[int, ...]]:
    """Reduced row-echelon form and the pivot columns."""
    rows = [list(row) for row in matrix.entries]
    reduced, pivots = _echelon(rows)
    return RationalMatrix(reduced, cols=matrix.cols), tuple(pivots)


def matrix_rank(matrix: RationalMatrix) -> int:
    _, pivots = rref(matrix)
    return len(pivots)


def solve_membership(
    system: RationalMatrix, target: Sequence[Fraction]
) -> Optional[list[Fraction]]:
    """Coefficients lambda with lambda . system == target, else None.

    Solves the transposed system by exact elimination; free variables are
    set to zero, which together with the fixed pivot order makes the
    returned combination deterministic.
    """
    if len(target) != system.cols:
        raise ValueError(
            f"target length {len(target)} does not match column count {system.cols}"
        )
    t = [x if isinstance(x, Fraction) else Fraction(x) for x in target]
    if system.rows == 0:
        return [] if all(x == 0 for x in t) else None
    # Augmented transpose: one row per original column, unknowns = lambda.
    aug = [[system.entries[i][j] for i in range(system.rows)] + [t[j]] for j in range(system.cols)]
    if not aug:
        return [Fraction(0)] * system.rows
    reduced, pivots = _echelon(aug)
    n_unknowns = system.rows
    for row in reduced:
        if all(x == 0 for x in row[:n_unknowns]) and row[n_unknowns] != 0:
            return None
    solution = [Fraction(0)] * n_unknowns
    for r, c in enumerate(pivots):
        if c >= n_unknowns:
            return None  # pivot in the augmented column: inconsistent
        solution[c] = reduced[r][n_unknowns] - sum(
            reduced[r][j] * solution[j] for j in range(c + 1, n_unknowns)
        )
    return solution
