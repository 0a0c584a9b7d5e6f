"""Exact expansion of Lz(a,b) into zeta monomials.

Lz(a,b) with N = a+b expands over the partitions of N with parts >= 2:
each partition X contributes little_c(X, b) times the monomial mapping
every part n of multiplicity k to a factor zeta(n)^k.  Partitions with
more than min(a, b) parts drop out (their coefficient vanishes; the
filter just skips the work).  Even-argument factors reduce further to
rational multiples of powers of pi, giving combinations over odd-only
monomials.

Monomial text grammar: ``z<n>[^<k>]`` factors joined by ``*``, the unit
written ``1``.  Rendered terms are ordered by descending weight of the
odd part, then lexicographically by factors.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

from .coefficients import little_c
from .exact import PiPowerScalar, Rational, zeta_even_pi_coeff
from .partitions import PartitionElement, PartitionFilter, enumerate_partitions

__all__ = [
    "MonomialParseError",
    "ZetaMonomial",
    "UNIT_MONOMIAL",
    "ZetaCombination",
    "PiReducedCombination",
    "expand_lz",
    "reduce_even",
    "expand_weight",
]


class MonomialParseError(ValueError):
    """Raised when a monomial expression does not follow the grammar."""


_FACTOR_RE = re.compile(r"^z(\d+)(?:\^(\d+))?$")


def _exp_str(k: int) -> str:
    if k == 1:
        return ""
    return f"^{k}" if k < 10 else f"^{{{k}}}"


@dataclass(frozen=True)
class ZetaMonomial:
    """Product of zeta factors, stored as (argument, exponent) ascending."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        prev = 1
        for n, k in self.factors:
            if n <= prev:
                raise ValueError(f"factor arguments must be ascending and >= 2: {self.factors}")
            if k < 1:
                raise ValueError(f"exponent must be >= 1 in factor ({n}, {k})")
            prev = n

    @classmethod
    def from_partition(cls, x: PartitionElement) -> "ZetaMonomial":
        return cls(x.support)

    @classmethod
    def parse(cls, text: str) -> "ZetaMonomial":
        s = text.strip()
        if s == "1":
            return UNIT_MONOMIAL
        if not s:
            raise MonomialParseError("empty monomial expression")
        counts: dict[int, int] = {}
        for piece in s.split("*"):
            m = _FACTOR_RE.match(piece.strip())
            if not m:
                raise MonomialParseError(f"bad factor {piece.strip()!r}; expected z<n> or z<n>^<k>")
            n = int(m.group(1))
            k = int(m.group(2)) if m.group(2) else 1
            if n < 2:
                raise MonomialParseError(f"zeta argument must be >= 2, got z{n}")
            if k < 1:
                raise MonomialParseError(f"exponent must be >= 1, got {piece.strip()!r}")
            counts[n] = counts.get(n, 0) + k
        return cls(tuple(sorted(counts.items())))

    @property
    def weight(self) -> int:
        return sum(n * k for n, k in self.factors)

    @property
    def odd_weight(self) -> int:
        return sum(n * k for n, k in self.factors if n % 2)

    @property
    def is_unit(self) -> bool:
        return not self.factors

    @property
    def is_odd_only(self) -> bool:
        return all(n % 2 for n, _ in self.factors)

    def sort_key(self) -> tuple:
        return (-self.odd_weight, self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(f"z{n}" + (f"^{k}" if k > 1 else "") for n, k in self.factors)

    def latex(self) -> str:
        if not self.factors:
            return "1"
        return "".join(f"\\zeta({n})" + _exp_str(k) for n, k in self.factors)


UNIT_MONOMIAL = ZetaMonomial(())

TermsLike = Union[Mapping[ZetaMonomial, Rational], Iterable[tuple[ZetaMonomial, Rational]]]


def _term_text(mag_txt: str, pi_exponent: int, mono: ZetaMonomial) -> str:
    parts = []
    if mag_txt is not None:
        parts.append(mag_txt)
    if pi_exponent:
        parts.append(f"pi^{pi_exponent}")
    if not mono.is_unit:
        parts.append(str(mono))
    return "*".join(parts)


def _term_latex(mag_tex: str, pi_exponent: int, mono: ZetaMonomial) -> str:
    parts = []
    if mag_tex is not None:
        parts.append(mag_tex)
    if pi_exponent:
        parts.append("\\pi" + _exp_str(pi_exponent))
    if not mono.is_unit:
        parts.append(mono.latex())
    return "".join(parts)


def _render(items: list[tuple[Fraction, int, ZetaMonomial]], latex: bool) -> str:
    # items: (coefficient, pi exponent, monomial), already sorted
    if not items:
        return "0"
    chunks: list[str] = []
    for coeff, pi_exp, mono in items:
        mag = -coeff if coeff < 0 else coeff
        bare = pi_exp == 0 and mono.is_unit
        if latex:
            if mag == 1 and not bare:
                mag_txt = None
            elif mag.denominator == 1:
                mag_txt = str(mag.numerator)
            else:
                mag_txt = f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}"
            body = _term_latex(mag_txt, pi_exp, mono)
            sep_minus, sep_plus = "-", "+"
        else:
            if mag == 1 and not bare:
                mag_txt = None
            elif mag.denominator == 1:
                mag_txt = str(mag.numerator)
            else:
                mag_txt = f"({mag})"
            body = _term_text(mag_txt, pi_exp, mono)
            sep_minus, sep_plus = " - ", " + "
        if not chunks:
            chunks.append(("-" + body) if coeff < 0 else body)
        else:
            chunks.append((sep_minus if coeff < 0 else sep_plus) + body)
    return "".join(chunks)


class ZetaCombination:
    """Homogeneous rational combination of weight-N zeta monomials."""

    __slots__ = ("weight", "_terms")

    def __init__(self, weight: int, terms: TermsLike):
        items = terms.items() if isinstance(terms, Mapping) else terms
        cleaned: dict[ZetaMonomial, Fraction] = {}
        for mono, coeff in items:
            q = Fraction(coeff)
            if q == 0:
                continue
            if mono.weight != weight:
                raise ValueError(f"monomial {mono} has weight {mono.weight}, expected {weight}")
            cleaned[mono] = cleaned.get(mono, Fraction(0)) + q
        object.__setattr__(self, "weight", weight)
        object.__setattr__(self, "_terms", {m: c for m, c in cleaned.items() if c != 0})

    def __setattr__(self, name, value):
        raise AttributeError("ZetaCombination is immutable")

    @property
    def terms(self) -> dict[ZetaMonomial, Fraction]:
        return dict(self._terms)

    def coefficient(self, mono: ZetaMonomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    def sorted_terms(self) -> list[tuple[ZetaMonomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda mc: mc[0].sort_key())

    def scale(self, r: Rational) -> "ZetaCombination":
        q = Fraction(r)
        return ZetaCombination(self.weight, {m: c * q for m, c in self._terms.items()})

    def __add__(self, other: "ZetaCombination") -> "ZetaCombination":
        if self.weight != other.weight:
            raise ValueError("cannot add combinations of different weight")
        merged = dict(self._terms)
        for m, c in other._terms.items():
            merged[m] = merged.get(m, Fraction(0)) + c
        return ZetaCombination(self.weight, merged)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZetaCombination):
            return NotImplemented
        return self.weight == other.weight and self._terms == other._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __repr__(self) -> str:
        return f"ZetaCombination(weight={self.weight}, {self.text()!r})"

    def text(self) -> str:
        return _render([(c, 0, m) for m, c in self.sorted_terms()], latex=False)

    def latex(self) -> str:
        return _render([(c, 0, m) for m, c in self.sorted_terms()], latex=True)


class PiReducedCombination:
    """Combination over odd-only monomials with explicit pi-power scalars.

    Every term of weight w carries the factor pi^(N-w), so a weight-N
    value is stored as {odd monomial: PiPowerScalar}.
    """

    __slots__ = ("weight", "_terms")

    def __init__(self, weight: int, terms: Mapping[ZetaMonomial, PiPowerScalar]):
        cleaned: dict[ZetaMonomial, PiPowerScalar] = {}
        for mono, scalar in terms.items():
            if scalar.is_zero:
                continue
            if not mono.is_odd_only:
                raise ValueError(f"monomial {mono} has even-argument factors")
            if scalar.pi_exponent + mono.weight != weight:
                raise ValueError(
                    f"term {mono} with pi^{scalar.pi_exponent} does not reach weight {weight}"
                )
            cleaned[mono] = scalar
        object.__setattr__(self, "weight", weight)
        object.__setattr__(self, "_terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("PiReducedCombination is immutable")

    @property
    def terms(self) -> dict[ZetaMonomial, PiPowerScalar]:
        return dict(self._terms)

    def coefficient(self, mono: ZetaMonomial) -> Fraction:
        scalar = self._terms.get(mono)
        return scalar.coeff if scalar is not None else Fraction(0)

    def sorted_terms(self) -> list[tuple[ZetaMonomial, PiPowerScalar]]:
        return sorted(self._terms.items(), key=lambda ms: (-ms[0].weight, ms[0].factors))

    def scale(self, r: Rational) -> "PiReducedCombination":
        q = Fraction(r)
        if q == 0:
            return PiReducedCombination(self.weight, {})
        return PiReducedCombination(
            self.weight, {m: s.scaled(q) for m, s in self._terms.items()}
        )

    def __neg__(self) -> "PiReducedCombination":
        return self.scale(Fraction(-1))

    def __add__(self, other: "PiReducedCombination") -> "PiReducedCombination":
        if self.weight != other.weight:
            raise ValueError("cannot add combinations of different weight")
        merged: dict[ZetaMonomial, Fraction] = {m: s.coeff for m, s in self._terms.items()}
        for m, s in other._terms.items():
            merged[m] = merged.get(m, Fraction(0)) + s.coeff
        return PiReducedCombination(
            self.weight,
            {
                m: PiPowerScalar(c, self.weight - m.weight)
                for m, c in merged.items()
                if c != 0
            },
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, PiReducedCombination):
            return NotImplemented
        return self.weight == other.weight and self._terms == other._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __repr__(self) -> str:
        return f"PiReducedCombination(weight={self.weight}, {self.text()!r})"

    def text(self) -> str:
        return _render(
            [(s.coeff, s.pi_exponent, m) for m, s in self.sorted_terms()], latex=False
        )

    def latex(self) -> str:
        return _render(
            [(s.coeff, s.pi_exponent, m) for m, s in self.sorted_terms()], latex=True
        )


@lru_cache(maxsize=None)
def expand_lz(a: int, b: int) -> ZetaCombination:
    """Exact weight-(a+b) expansion of Lz(a,b)."""
    if a < 1 or b < 1:
        raise ValueError(f"need a >= 1 and b >= 1, got ({a}, {b})")
    n = a + b
    bound = min(a, b)  # coefficients vanish once the part count exceeds this
    terms: dict[ZetaMonomial, Fraction] = {}
    for x in enumerate_partitions(n, PartitionFilter(min_part=2)):
        if x.norm > bound:
            continue
        coeff = little_c(x, b)
        if coeff:
            terms[ZetaMonomial.from_partition(x)] = coeff
    return ZetaCombination(n, terms)


def reduce_even(c: ZetaCombination) -> PiReducedCombination:
    """Fold even-argument zeta factors into rational pi powers."""
    merged: dict[ZetaMonomial, Fraction] = {}
    for mono, coeff in c.terms.items():
        q = Fraction(coeff)
        odd: list[tuple[int, int]] = []
        for n, k in mono.factors:
            if n % 2 == 0:
                q *= zeta_even_pi_coeff(n // 2) ** k
            else:
                odd.append((n, k))
        om = ZetaMonomial(tuple(odd))
        merged[om] = merged.get(om, Fraction(0)) + q
    return PiReducedCombination(
        c.weight,
        {
            m: PiPowerScalar(v, c.weight - m.weight)
            for m, v in merged.items()
            if v != 0
        },
    )


def expand_weight(N: int) -> dict[tuple[int, int], ZetaCombination]:
    """Expansions for every pair a+b=N with a >= b >= 1, one enumeration."""
    if N < 2:
        raise ValueError(f"need N >= 2, got {N}")
    base = enumerate_partitions(N, PartitionFilter(min_part=2))
    out: dict[tuple[int, int], ZetaCombination] = {}
    for b in range(1, N // 2 + 1):
        terms: dict[ZetaMonomial, Fraction] = {}
        for x in base:
            if x.norm > b:
                continue
            coeff = little_c(x, b)
            if coeff:
                terms[ZetaMonomial.from_partition(x)] = coeff
        out[(N - b, b)] = ZetaCombination(N, terms)
    return out
