"""Expressibility of odd-zeta monomials through the Lz family.

At weight N the pairs (N-b, b), b = 1..floor(N/2), give one linear
equation each: the reduced expansion of Lz(N-b, b) over odd-only
monomials with pi-power coefficients.  A weight-w monomial always
carries the fixed factor pi^(N-w), so that factor is absorbed into the
column and the system lives over the rationals.  Unknown columns are
the full-weight odd monomials (partitions of N into odd parts >= 3);
in optimistic mode lower-weight odd monomials count as already settled
and land in the known part, while strict mode keeps them as columns.

A successful solve is packaged as a Certificate for the exact identity

    pi^(N - wt(target)) * target = sum lambda_i Lz(a_i, b_i) + remainder

and machine-verified by substituting the expansions back in before it
is returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .exact import PiPowerScalar, RationalMatrix, rref, solve_membership
from .expansion import (
    UNIT_MONOMIAL,
    PiReducedCombination,
    ZetaMonomial,
    expand_lz,
    reduce_even,
)
from .partitions import PartitionFilter, count_partitions, enumerate_partitions

__all__ = [
    "MODES",
    "SystemRow",
    "LinearSystem",
    "Certificate",
    "ExpressOutcome",
    "SurveyRecord",
    "SurveyReport",
    "odd_monomials",
    "build_system",
    "verify_certificate",
    "express",
    "survey",
]

MODES = ("optimistic", "strict")

_ODD_FILTER = PartitionFilter(min_part=3, parity="odd")


def odd_monomials(weight: int) -> list[ZetaMonomial]:
    """Monomials over odd zetas >= 3 of the given weight, canonical order."""
    found = [
        ZetaMonomial.from_partition(x) for x in enumerate_partitions(weight, _ODD_FILTER)
    ]
    return sorted(found, key=lambda m: m.factors)


@dataclass(frozen=True)
class SystemRow:
    pair: tuple[int, int]
    coefficients: tuple[Fraction, ...]
    known: PiReducedCombination


@dataclass(frozen=True)
class LinearSystem:
    weight: int
    mode: str
    columns: tuple[ZetaMonomial, ...]
    rows: tuple[SystemRow, ...]

    def matrix(self) -> RationalMatrix:
        return RationalMatrix(
            [list(row.coefficients) for row in self.rows], cols=len(self.columns)
        )

    def column_index(self, mono: ZetaMonomial) -> Optional[int]:
        try:
            return self.columns.index(mono)
        except ValueError:
            return None


def build_system(
    N: int, mode: str = "optimistic", ensure: tuple[ZetaMonomial, ...] = ()
) -> LinearSystem:
    """Weight-N system; ensure promotes given monomials into the columns."""
    if N < 3:
        raise ValueError(f"need N >= 3, got {N}")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    columns = list(odd_monomials(N))
    if mode == "strict":
        for w in range(N - 2, 2, -1):
            if (N - w) % 2 == 0:
                columns.extend(odd_monomials(w))
    for mono in ensure:
        if mono.is_unit or not mono.is_odd_only:
            raise ValueError(f"cannot carry {mono} as an unknown column")
        if mono.weight > N or (N - mono.weight) % 2:
            raise ValueError(f"{mono} cannot appear at weight {N}")
        if mono not in columns:
            columns.append(mono)
    columns.sort(key=lambda m: (-m.weight, m.factors))
    colset = set(columns)

    rows: list[SystemRow] = []
    for b in range(1, N // 2 + 1):
        red = reduce_even(expand_lz(N - b, b))
        coeffs = tuple(red.coefficient(m) for m in columns)
        if not any(coeffs):
            continue  # row touches no unknown; nothing to solve with
        known = PiReducedCombination(
            N, {m: s for m, s in red.terms.items() if m not in colset}
        )
        rows.append(SystemRow((N - b, b), coeffs, known))
    return LinearSystem(N, mode, tuple(columns), tuple(rows))


@dataclass(frozen=True, eq=False)
class Certificate:
    """Exact identity pi^(weight - wt(target)) * target = lz_terms + remainder."""

    target: ZetaMonomial
    weight: int
    lz_terms: dict[tuple[int, int], PiPowerScalar]
    known_remainder: PiReducedCombination

    @property
    def target_pi_exponent(self) -> int:
        return self.weight - self.target.weight

    def sorted_lz(self) -> list[tuple[tuple[int, int], PiPowerScalar]]:
        return sorted(self.lz_terms.items(), key=lambda ps: ps[0][1])

    def dependencies(self) -> list[ZetaMonomial]:
        return [m for m in self.known_remainder.terms if not m.is_unit]

    def common_denominator(self) -> int:
        denom = 1
        for scalar in self.lz_terms.values():
            denom = math.lcm(denom, scalar.coeff.denominator)
        for scalar in self.known_remainder.terms.values():
            denom = math.lcm(denom, scalar.coeff.denominator)
        return denom

    def cleared(self) -> tuple[int, dict[tuple[int, int], int], dict[ZetaMonomial, int]]:
        """Secondary form with one multiplier and integer coefficients."""
        m = self.common_denominator()
        lz = {pair: int(s.coeff * m) for pair, s in self.sorted_lz()}
        known = {
            mono: int(s.coeff * m) for mono, s in self.known_remainder.sorted_terms()
        }
        return m, lz, known

    def to_payload(self) -> dict:
        return {
            "target": str(self.target),
            "weight": self.weight,
            "lz": [
                {"a": a, "b": b, "coeff": str(s.coeff), "pi": s.pi_exponent}
                for (a, b), s in self.sorted_lz()
            ],
            "known": [
                {"mono": str(mono), "coeff": str(s.coeff), "pi": s.pi_exponent}
                for mono, s in self.known_remainder.sorted_terms()
            ],
        }


def verify_certificate(cert: Certificate) -> bool:
    """Substitute the expansions back in; True iff the identity is exact."""
    acc: dict[tuple[ZetaMonomial, int], Fraction] = {}

    def put(mono: ZetaMonomial, pi_exp: int, coeff: Fraction) -> None:
        key = (mono, pi_exp)
        acc[key] = acc.get(key, Fraction(0)) + coeff

    for (a, b), scalar in cert.lz_terms.items():
        red = reduce_even(expand_lz(a, b))
        for mono, s in red.terms.items():
            put(mono, s.pi_exponent + scalar.pi_exponent, s.coeff * scalar.coeff)
    for mono, s in cert.known_remainder.terms.items():
        put(mono, s.pi_exponent, s.coeff)
    put(cert.target, cert.target_pi_exponent, Fraction(-1))
    return all(v == 0 for v in acc.values())


@dataclass(frozen=True, eq=False)
class ExpressOutcome:
    target: ZetaMonomial
    mode: str
    weight: int
    status: str  # "expressible" | "not_expressible" | "unresolved_dependency"
    certificate: Optional[Certificate]
    detail: str = ""


def _solve(target: ZetaMonomial, N: int, mode: str) -> Optional[Certificate]:
    system = build_system(N, mode, ensure=(target,))
    j = system.column_index(target)
    unit = [Fraction(1) if i == j else Fraction(0) for i in range(len(system.columns))]
    lam = solve_membership(system.matrix(), unit)
    if lam is None:
        return None
    lz_terms = {
        row.pair: PiPowerScalar(coeff, 0)
        for row, coeff in zip(system.rows, lam)
        if coeff != 0
    }
    remainder = PiReducedCombination(N, {})
    for row, coeff in zip(system.rows, lam):
        if coeff != 0:
            remainder = remainder + row.known.scale(-coeff)
    cert = Certificate(target, N, lz_terms, remainder)
    if not verify_certificate(cert):
        raise RuntimeError(f"certificate for {target} failed the substitution check")
    return cert


@lru_cache(maxsize=None)
def _fully_expressible(mono: ZetaMonomial, mode: str) -> bool:
    return express(mono, mode=mode).status == "expressible"


def express(
    target: ZetaMonomial, mode: str = "optimistic", weight: Optional[int] = None
) -> ExpressOutcome:
    """Try to express the target; weight > wt(target) adds a pi factor."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if target.is_unit or not target.is_odd_only:
        raise ValueError(f"target must be a product of odd zetas >= 3, got {target}")
    N = target.weight if weight is None else weight
    if N < target.weight or (N - target.weight) % 2:
        raise ValueError(
            f"weight {N} cannot carry {target}: the pi exponent must be even and >= 0"
        )

    cert = _solve(target, N, mode)
    used_mode = mode
    if cert is None and mode == "strict":
        # see whether the strict obstruction is only a lower-weight dependency
        cert = _solve(target, N, "optimistic")
        used_mode = "optimistic"
    if cert is None:
        return ExpressOutcome(target, mode, N, "not_expressible", None)

    missing = [
        m for m in cert.dependencies() if not _fully_expressible(m, used_mode)
    ]
    if missing:
        names = ", ".join(str(m) for m in sorted(missing, key=lambda m: m.factors))
        return ExpressOutcome(
            target,
            mode,
            N,
            "unresolved_dependency",
            cert,
            detail=f"remainder depends on {names}, not itself expressible",
        )
    detail = ""
    if used_mode != mode:
        deps = ", ".join(str(m) for m in cert.dependencies())
        detail = f"strict solve needed lower-weight certificates for {deps}"
    return ExpressOutcome(target, mode, N, "expressible", cert, detail=detail)


@dataclass(frozen=True)
class SurveyRecord:
    weight: int
    equations: int
    unknowns: int
    rank: int
    expressible: tuple[ZetaMonomial, ...]
    inexpressible: tuple[ZetaMonomial, ...]
    counting_equations: int
    counting_unknowns: int
    counting_deficient: bool
    rank_deficient: bool


@dataclass(frozen=True)
class SurveyReport:
    mode: str
    records: tuple[SurveyRecord, ...]

    def record(self, weight: int) -> SurveyRecord:
        for rec in self.records:
            if rec.weight == weight:
                return rec
        raise KeyError(f"weight {weight} not surveyed")


def _rowspace_members(system: LinearSystem) -> tuple[int, set[int]]:
    """Exact rank and the set of column indices whose unit vector is reachable."""
    reduced, pivots = rref(system.matrix())
    members: set[int] = set()
    for r, c in enumerate(pivots):
        row = reduced.entries[r]
        if all(x == 0 for i, x in enumerate(row) if i != c):
            members.add(c)
    return len(pivots), members


def survey(n_min: int, n_max: int, mode: str = "optimistic") -> SurveyReport:
    """Per-weight equation/unknown/rank bookkeeping over a weight range."""
    if not 3 <= n_min <= n_max:
        raise ValueError(f"need 3 <= n_min <= n_max, got [{n_min}, {n_max}]")
    records = []
    for N in range(n_min, n_max + 1):
        system = build_system(N, mode)
        rank, members = _rowspace_members(system)
        good = tuple(m for j, m in enumerate(system.columns) if j in members)
        bad = tuple(m for j, m in enumerate(system.columns) if j not in members)
        po3 = count_partitions(N, _ODD_FILTER)
        if N % 2:
            m_half = (N - 1) // 2
            counting_eq, counting_unk = m_half - 2, po3 - 1
        else:
            m_half = N // 2
            counting_eq, counting_unk = m_half - 1, po3
        records.append(
            SurveyRecord(
                weight=N,
                equations=len(system.rows),
                unknowns=len(system.columns),
                rank=rank,
                expressible=good,
                inexpressible=bad,
                counting_equations=counting_eq,
                counting_unknowns=counting_unk,
                counting_deficient=counting_eq < counting_unk,
                rank_deficient=rank < len(system.columns),
            )
        )
    return SurveyReport(mode, tuple(records))
