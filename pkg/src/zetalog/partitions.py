"""Restricted integer partitions as sparse multisets.

A partition of N is stored by its support: (part size, multiplicity)
pairs with ascending sizes.  Enumeration yields elements in decreasing
lexicographic order of the descending part lists, e.g. for N = 6 with
min_part = 2: 6, 4+2, 3+3, 2+2+2.  Counting runs the analogous dynamic
program without materializing elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

__all__ = [
    "PARITY_CHOICES",
    "PartitionFilter",
    "PartitionElement",
    "enumerate_partitions",
    "count_partitions",
    "norm",
]

PARITY_CHOICES = ("any", "odd", "even")


@dataclass(frozen=True)
class PartitionFilter:
    """Constraints: minimum part size, exact part count, part parity."""

    min_part: int = 1
    exact_parts: Optional[int] = None
    parity: str = "any"

    def __post_init__(self) -> None:
        if self.min_part < 1:
            raise ValueError(f"min_part must be >= 1, got {self.min_part}")
        if self.exact_parts is not None and self.exact_parts < 1:
            raise ValueError(f"exact_parts must be >= 1, got {self.exact_parts}")
        if self.parity not in PARITY_CHOICES:
            raise ValueError(f"parity must be one of {PARITY_CHOICES}, got {self.parity!r}")

    def allows_size(self, n: int) -> bool:
        if n < self.min_part:
            return False
        if self.parity == "odd":
            return n % 2 == 1
        if self.parity == "even":
            return n % 2 == 0
        return True


@dataclass(frozen=True)
class PartitionElement:
    """A partition held as its support; hashable and immutable."""

    weight: int
    support: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        total = 0
        prev = 0
        for size, mult in self.support:
            if size <= prev:
                raise ValueError(f"support sizes must be strictly ascending: {self.support}")
            if size < 1 or mult < 1:
                raise ValueError(f"invalid support entry ({size}, {mult})")
            prev = size
            total += size * mult
        if total != self.weight:
            raise ValueError(f"support sums to {total}, declared weight {self.weight}")

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "PartitionElement":
        counts: dict[int, int] = {}
        for p in parts:
            counts[p] = counts.get(p, 0) + 1
        support = tuple(sorted(counts.items()))
        return cls(sum(n * k for n, k in support), support)

    @property
    def parts(self) -> dict[int, int]:
        return dict(self.support)

    @property
    def norm(self) -> int:
        """Total number of parts, counted with multiplicity."""
        return sum(k for _, k in self.support)

    @property
    def min_part(self) -> int:
        return self.support[0][0] if self.support else 0

    def part_list(self, descending: bool = True) -> tuple[int, ...]:
        flat = [n for n, k in self.support for _ in range(k)]
        return tuple(sorted(flat, reverse=descending))

    def __str__(self) -> str:
        return "+".join(str(p) for p in self.part_list()) if self.support else "0"


def norm(x: PartitionElement) -> int:
    return x.norm


def enumerate_partitions(
    n: int, flt: Optional[PartitionFilter] = None
) -> list[PartitionElement]:
    """All partitions of n satisfying flt, in canonical order."""
    if n < 0:
        raise ValueError(f"cannot partition a negative integer: {n}")
    flt = flt or PartitionFilter()
    t = flt.exact_parts
    out: list[PartitionElement] = []
    acc: list[int] = []

    def rec(remaining: int, max_part: int) -> None:
        if remaining == 0:
            if t is None or len(acc) == t:
                out.append(PartitionElement.from_parts(acc))
            return
        if t is not None and len(acc) >= t:
            return
        slots_left = None if t is None else t - len(acc)
        for p in range(min(max_part, remaining), flt.min_part - 1, -1):
            if not flt.allows_size(p):
                continue
            rest = remaining - p
            if slots_left is not None:
                # rest must split into exactly slots_left - 1 parts, each in [min_part, p]
                if rest < (slots_left - 1) * flt.min_part or rest > (slots_left - 1) * p:
                    continue
            acc.append(p)
            rec(rest, p)
            acc.pop()

    if n == 0:
        if t is None:
            out.append(PartitionElement(0, ()))
    else:
        rec(n, n)
    return out


def count_partitions(n: int, flt: Optional[PartitionFilter] = None) -> int:
    """Number of partitions of n satisfying flt, by dynamic programming."""
    if n < 0:
        raise ValueError(f"cannot partition a negative integer: {n}")
    flt = flt or PartitionFilter()
    if n == 0:
        return 1 if flt.exact_parts is None else 0
    t = flt.exact_parts

    @lru_cache(maxsize=None)
    def cnt(remaining: int, max_part: int, parts_left: Optional[int]) -> int:
        if remaining == 0:
            return 1 if parts_left in (None, 0) else 0
        if parts_left == 0 or max_part < flt.min_part:
            return 0
        total = 0
        nxt = None if parts_left is None else parts_left - 1
        for p in range(min(max_part, remaining), flt.min_part - 1, -1):
            if not flt.allows_size(p):
                continue
            rest = remaining - p
            if nxt is not None and (rest < nxt * flt.min_part or rest > nxt * p):
                continue
            total += cnt(rest, p, nxt)
        return total

    result = cnt(n, n, t)
    cnt.cache_clear()
    return result
