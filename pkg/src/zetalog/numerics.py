"""High-precision evaluation and cross-checking of the Lz integrals.

Two independent numeric routes are provided.  The series route sums
Lz(a,b) = ((-1)^(a+b-1)/b!) * sum_{n>=b} S_n^(b)/n^a, where S_n^(b) runs
over compositions of n into b positive parts; the head of the sum is
taken literally and the tail is corrected by Euler-Maclaurin using the
smooth continuation S(x) = (b!/x) * e_{b-1}(1, 1/2, ..., 1/(x-1)), the
elementary symmetric function rebuilt from power sums (digamma and
Hurwitz zeta).  The quadrature route integrates the defining integral
directly with a double-exponential (tanh-sinh) rule whose nodes carry
full-precision values of t, 1-t and both logarithms, so the endpoint
log singularities cost nothing.

zeta_value is an in-house Euler-Maclaurin evaluation with an explicit
remainder bound; pi comes from the float library's certified constant.
Working precision carries guard digits over the requested P and results
are trusted to 10^(-P).
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional

from mpmath import mp, mpf, workdps

from .exact import bernoulli_number
from .expansion import PiReducedCombination, expand_lz, reduce_even

__all__ = [
    "PrecisionBudgetError",
    "zeta_value",
    "STable",
    "build_s_table",
    "series_orientation_sum",
    "lz_series",
    "lz_quadrature",
    "raw_lz_quadrature",
    "evaluate_reduced",
    "VerificationReport",
    "verify_expansion",
]

QUADRATURE_MAX_LEVEL = 12
SERIES_HEAD_START = 128
SERIES_HEAD_CAP = 4096
_JET_ORDER = 85


class PrecisionBudgetError(RuntimeError):
    """Requested precision unreachable within the configured budget."""


def _frac(q: Fraction) -> mpf:
    return mp.mpf(q.numerator) / q.denominator


# ---------------------------------------------------------------------------
# zeta at integer arguments, Euler-Maclaurin with a rigorous tail bound


@lru_cache(maxsize=None)
def _zeta_cached(s: int, wdps: int) -> mpf:
    with workdps(wdps):
        k = max(16, wdps)
        total = mp.zero
        for n in range(1, k):
            total += mp.mpf(n) ** (-s)
        kk = mp.mpf(k)
        total += kk ** (1 - s) / (s - 1) + kk ** (-s) / 2
        target = mp.mpf(10) ** (-(wdps + 2))
        rising = s  # (s)_{2j-1}, here at j=1
        j = 1
        while True:
            b2j = bernoulli_number(2 * j)
            total += _frac(b2j / math.factorial(2 * j)) * rising * kk ** (-s - 2 * j + 1)
            # remainder is bounded by the first omitted term for real s > 1
            rising = rising * (s + 2 * j - 1) * (s + 2 * j)
            b_next = bernoulli_number(2 * j + 2)
            bound = abs(_frac(b_next / math.factorial(2 * j + 2))) * rising * kk ** (
                -s - 2 * j - 1
            )
            if bound < target:
                break
            j += 1
            if j > 400:
                raise PrecisionBudgetError(
                    f"zeta({s}): correction budget of 400 terms exhausted at {wdps} digits"
                )
        return +total


def zeta_value(s: int, precision: int) -> mpf:
    """zeta(s) for integer s >= 2, accurate to 10^(-precision)."""
    if s < 2:
        raise ValueError(f"zeta_value needs s >= 2, got {s}")
    val = _zeta_cached(s, precision + 10)
    with workdps(precision):
        return +val


# ---------------------------------------------------------------------------
# the S table: sums over compositions of n into k positive parts of prod 1/m_j


@dataclass(frozen=True)
class STable:
    """S[k][n] for 1 <= k <= b_max, 0 <= n <= n_max; zero below the diagonal."""

    b_max: int
    n_max: int
    exact: bool
    rows: tuple[tuple, ...]  # rows[k][n], row 0 unused

    def value(self, k: int, n: int):
        if not 1 <= k <= self.b_max:
            raise ValueError(f"order {k} outside 1..{self.b_max}")
        if not 0 <= n <= self.n_max:
            raise ValueError(f"index {n} outside 0..{self.n_max}")
        return self.rows[k][n]


_STABLE_LOCK = threading.Lock()
_STABLE_CACHE: dict[tuple, STable] = {}


def _build_exact(b_max: int, n_max: int) -> STable:
    # convolution on the last part: S_n^(k) = sum_m (1/m) S_{n-m}^(k-1)
    zero = Fraction(0)
    rows = [None, [zero] + [Fraction(1, n) for n in range(1, n_max + 1)]]
    for k in range(2, b_max + 1):
        prev = rows[k - 1]
        row = [zero] * (n_max + 1)
        for n in range(k, n_max + 1):
            acc = Fraction(0)
            for m in range(1, n - k + 2):
                acc += Fraction(1, m) * prev[n - m]
            row[n] = acc
        rows.append(row)
    return STable(b_max, n_max, True, tuple(tuple(r) if r else () for r in rows))


def _build_float(b_max: int, n_max: int, wdps: int) -> STable:
    # prefix form S_n^(k) = (k/n) * sum_{m<n} S_m^(k-1); same values, O(b*n)
    with workdps(wdps):
        zero = mp.zero
        rows = [None, [zero] + [mp.one / n for n in range(1, n_max + 1)]]
        for k in range(2, b_max + 1):
            prev = rows[k - 1]
            row = [zero] * (n_max + 1)
            running = mp.zero
            for n in range(k, n_max + 1):
                running += prev[n - 1]
                row[n] = k * running / n
            rows.append(row)
    return STable(b_max, n_max, False, tuple(tuple(r) if r else () for r in rows))


def build_s_table(b_max: int, n_max: int, precision: Optional[int] = None) -> STable:
    """S table up to order b_max and index n_max; exact when precision is None."""
    if b_max < 1:
        raise ValueError(f"b_max must be >= 1, got {b_max}")
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    key = (b_max, n_max, None if precision is None else precision + 10)
    with _STABLE_LOCK:
        hit = _STABLE_CACHE.get(key)
    if hit is not None:
        return hit
    table = _build_exact(b_max, n_max) if precision is None else _build_float(
        b_max, n_max, precision + 10
    )
    with _STABLE_LOCK:
        _STABLE_CACHE[key] = table
    return table


# ---------------------------------------------------------------------------
# tanh-sinh quadrature over (0,1) with precomputed endpoint data


class _Node:
    __slots__ = ("t", "mt", "log_t", "log_mt", "base_weight")

    def __init__(self, t, mt, log_t, log_mt, base_weight):
        self.t = t
        self.mt = mt
        self.log_t = log_t
        self.log_mt = log_mt
        self.base_weight = base_weight

    def swapped(self) -> "_Node":
        return _Node(self.mt, self.t, self.log_mt, self.log_t, self.base_weight)


_TIER_LOCK = threading.Lock()
_TIER_CACHE: dict[tuple[int, int], list[_Node]] = {}
_VMAX_CACHE: dict[int, float] = {}


def _vmax(wdps: int) -> float:
    hit = _VMAX_CACHE.get(wdps)
    if hit is not None:
        return hit
    goal = -(wdps + 12) * math.log(10.0)
    v = 1.0
    # node weight decays like exp(-pi*sinh v); margin covers log-power factors
    while -math.pi * math.sinh(v) + math.log(math.cosh(v)) + 24 * math.log1p(
        math.pi * math.sinh(v)
    ) > goal:
        v += 0.05
    _VMAX_CACHE[wdps] = v
    return v


def _make_node(v: mpf) -> _Node:
    u = mp.pi / 2 * mp.sinh(v)
    emu = mp.exp(-2 * u)
    log_big = -mp.log1p(emu)  # log of the side near 1
    log_small = -2 * u + log_big
    big = mp.exp(log_big)
    small = emu * big
    base_weight = (mp.pi / 4) * mp.cosh(v) / mp.cosh(u) ** 2
    return _Node(big, small, log_big, log_small, base_weight)


def _tier_nodes(tier: int, wdps: int) -> list[_Node]:
    """Nodes new at this refinement level: v = odd multiples of 2^-tier."""
    key = (tier, wdps)
    with _TIER_LOCK:
        hit = _TIER_CACHE.get(key)
    if hit is not None:
        return hit
    vmax = _vmax(wdps)
    nodes: list[_Node] = []
    with workdps(wdps + 5):
        if tier == 0:
            half = mp.mpf(1) / 2
            nodes.append(_Node(half, half, -mp.log(2), -mp.log(2), mp.pi / 4))
            for k in range(1, int(vmax) + 1):
                nodes.append(_make_node(mp.mpf(k)))
        else:
            h = mp.mpf(1) / 2**tier
            k = 1
            while k * float(h) <= vmax:
                nodes.append(_make_node(k * h))
                k += 2
    with _TIER_LOCK:
        _TIER_CACHE[key] = nodes
    return nodes


def _integrate01(
    integrand: Callable[[_Node], mpf],
    wdps: int,
    agree_digits: int,
    what: str,
    symmetric: bool = False,
) -> mpf:
    """Tanh-sinh on (0,1): refine until two consecutive levels agree."""
    with workdps(wdps):
        tol = mp.mpf(10) ** (-agree_digits)
        tier_sums: list[mpf] = []
        prev = None
        for level in range(QUADRATURE_MAX_LEVEL + 1):
            acc = mp.zero
            for node in _tier_nodes(level, wdps):
                val = integrand(node)
                if node.t != node.mt:
                    val = 2 * val if symmetric else val + integrand(node.swapped())
                acc += node.base_weight * val
            tier_sums.append(acc)
            total = sum(tier_sums) / 2**level
            if level >= 5 and abs(total - prev) <= tol * max(1, abs(total)):
                return +total
            prev = total
        raise PrecisionBudgetError(
            f"{what}: quadrature level budget ({QUADRATURE_MAX_LEVEL}) exhausted"
        )


def raw_lz_quadrature(a: int, b: int, precision: int) -> mpf:
    """integral over (0,1) of log^a(t) * log^b(1-t) dt, for a, b >= 0."""
    if a < 0 or b < 0:
        raise ValueError(f"raw integral needs a, b >= 0, got ({a}, {b})")
    wdps = precision + 10

    def integrand(node: _Node) -> mpf:
        return node.log_t**a * node.log_mt**b

    val = _integrate01(
        integrand, wdps, precision + 2, f"raw lz({a},{b})", symmetric=(a == b)
    )
    with workdps(precision):
        return +val


def lz_quadrature(a: int, b: int, precision: int) -> mpf:
    """Lz(a,b) by direct tanh-sinh integration of the normalized integral."""
    if a < 1 or b < 1:
        raise ValueError(f"Lz needs a, b >= 1, got ({a}, {b})")
    wdps = precision + 10
    norm = math.factorial(a - 1) * math.factorial(b)

    def integrand(node: _Node) -> mpf:
        return node.log_t ** (a - 1) * node.log_mt**b / node.t

    val = _integrate01(integrand, wdps, precision + 2, f"Lz({a},{b}) quadrature")
    with workdps(precision):
        return +val / norm


# ---------------------------------------------------------------------------
# series route with Euler-Maclaurin tail


_SPECIAL_LOCK = threading.Lock()
_SPECIAL_CACHE: dict[tuple, mpf] = {}


def _hurwitz(s: int, x) -> mpf:
    key = ("hz", s, x, mp.prec)
    with _SPECIAL_LOCK:
        hit = _SPECIAL_CACHE.get(key)
    if hit is None:
        hit = mp.zeta(s, x) if x is not None else mp.zeta(s)
        with _SPECIAL_LOCK:
            _SPECIAL_CACHE[key] = hit
    return hit


def _digamma(x) -> mpf:
    key = ("psi", x, mp.prec)
    with _SPECIAL_LOCK:
        hit = _SPECIAL_CACHE.get(key)
    if hit is None:
        hit = mp.digamma(x)
        with _SPECIAL_LOCK:
            _SPECIAL_CACHE[key] = hit
    return hit


def _power_sum(j: int, x) -> mpf:
    # p_j(x) = sum_{m<x} 1/m^j continued smoothly off the integers
    if j == 1:
        return _digamma(x) + mp.euler
    return _hurwitz(j, None) - _hurwitz(j, x)


def _elementary_from_power_sums(p: list, count: int) -> list:
    # Newton: k e_k = sum_{j=1..k} (-1)^(j-1) p_j e_{k-j}
    e = [mp.one] + [mp.zero] * count
    for k in range(1, count + 1):
        acc = mp.zero
        for j in range(1, k + 1):
            term = p[j] * e[k - j]
            acc += term if j % 2 else -term
        e[k] = acc / k
    return e


def _jet_mul(u: list, v: list, order: int) -> list:
    out = [mp.zero] * (order + 1)
    for i, ui in enumerate(u):
        if i > order:
            break
        for j, vj in enumerate(v):
            if i + j > order:
                break
            out[i + j] += ui * vj
    return out


def _power_sum_jet(j: int, x0: int, order: int) -> list:
    """Taylor coefficients of p_j at integer x0."""
    jet = [mp.zero] * (order + 1)
    jet[0] = _power_sum(j, mp.mpf(x0))
    if j == 1:
        # psi^(i)(x) = (-1)^(i+1) i! zeta(i+1, x)
        for i in range(1, order + 1):
            hz = _hurwitz(i + 1, x0)
            jet[i] = hz if i % 2 else -hz
    else:
        # coefficient of zeta(j,x): (-1)^i C(j+i-1, i) zeta(j+i, x); p_j carries -zeta(j,x)
        coeff = mp.one
        for i in range(1, order + 1):
            coeff = coeff * (j + i - 1) / i
            hz = coeff * _hurwitz(j + i, x0)
            jet[i] = hz if i % 2 else -hz
    return jet


def _inverse_power_jet(m: int, x0: int, order: int) -> list:
    """Taylor coefficients of x^(-m) at x0."""
    jet = [mp.zero] * (order + 1)
    jet[0] = mp.mpf(x0) ** (-m)
    for i in range(1, order + 1):
        jet[i] = -jet[i - 1] * (m + i - 1) / (i * x0)
    return jet


def _elementary_jet(order: int, x0: int, jet_order: int) -> list:
    """Taylor coefficients of e_{order-1}(p_1(x), ..., p_{order-1}(x)) at x0."""
    if order == 1:
        return [mp.one] + [mp.zero] * jet_order
    p_jets = [None] + [_power_sum_jet(j, x0, jet_order) for j in range(1, order)]
    e = [[mp.one] + [mp.zero] * jet_order]
    for k in range(1, order):
        acc = [mp.zero] * (jet_order + 1)
        for j in range(1, k + 1):
            prod = _jet_mul(p_jets[j], e[k - j], jet_order)
            if j % 2:
                acc = [x + y for x, y in zip(acc, prod)]
            else:
                acc = [x - y for x, y in zip(acc, prod)]
        e.append([c / k for c in acc])
    return e[order - 1]


def _tail_integral(exponent: int, order: int, n0: int, wdps: int) -> mpf:
    # integral over (n0, inf) of order! x^(-exponent-1) e_{order-1}(p(x)) dx,
    # pulled back to (0,1) by x = n0/u
    if order == 1:
        return mp.mpf(n0) ** (-exponent) / exponent
    fact = math.factorial(order)

    def integrand(node: _Node) -> mpf:
        u = node.t
        x = n0 / u
        p = [mp.zero] + [_power_sum(j, x) for j in range(1, order)]
        e = _elementary_from_power_sums(p, order - 1)
        return n0 * e[order - 1] * x ** (-exponent - 1) / u**2

    return fact * _integrate01(
        integrand, wdps, wdps - 4, f"series tail integral (order {order})"
    )


def _series_value(exponent: int, order: int, n0: int, wdps: int) -> mpf:
    """sum_{n>=order} S_n^(order)/n^exponent, head to n0 plus corrected tail."""
    table = build_s_table(order, n0, wdps - 10)
    with workdps(wdps):
        head = mp.zero
        for n in range(order, n0 + 1):
            head += table.value(order, n) / mp.mpf(n) ** exponent

        f_jet = _jet_mul(
            _inverse_power_jet(exponent + 1, n0, _JET_ORDER),
            _elementary_jet(order, n0, _JET_ORDER),
            _JET_ORDER,
        )
        fact = math.factorial(order)

        # sum_{n>n0} f(n) = int_{n0}^inf f - f(n0)/2 - sum_k B_2k f^(2k-1)(n0)/(2k)!
        tail = _tail_integral(exponent, order, n0, wdps) - fact * f_jet[0] / 2
        eps = mp.mpf(10) ** (-(wdps + 2))
        prev_mag = mp.inf
        for k in range(1, (_JET_ORDER + 1) // 2):
            term = -fact * _frac(bernoulli_number(2 * k)) / (2 * k) * f_jet[2 * k - 1]
            mag = abs(term)
            if mag > prev_mag:
                break  # asymptotic divergence onset; the head-doubling retries
            tail += term
            if mag < eps * max(1, abs(head)):
                break
            prev_mag = mag
        return head + tail


def series_orientation_sum(
    exponent: int, order: int, precision: int, n0: Optional[int] = None
) -> mpf:
    """sum_{n>=order} S_n^(order)/n^exponent to 10^(-precision).

    With n0 given the head length is fixed (no adaptation), which lets two
    orientations of the symmetry be compared under one truncation policy;
    otherwise the head doubles until two consecutive runs agree.
    """
    if exponent < 1 or order < 1:
        raise ValueError(f"need exponent, order >= 1, got ({exponent}, {order})")
    if n0 is not None:
        if n0 < 16:
            raise ValueError(f"head length n0 must be >= 16, got {n0}")
        wdps = precision + 10 + math.ceil(math.log10(n0))
        val = _series_value(exponent, order, n0, wdps)
        with workdps(precision):
            return +val
    head = SERIES_HEAD_START
    wdps = precision + 10 + math.ceil(math.log10(SERIES_HEAD_CAP))
    with workdps(wdps):
        tol = mp.mpf(10) ** (-(precision + 2))
        prev = _series_value(exponent, order, head, wdps)
        while head < SERIES_HEAD_CAP:
            head *= 2
            cur = _series_value(exponent, order, head, wdps)
            if abs(cur - prev) <= tol * max(1, abs(cur)):
                with workdps(precision):
                    return +cur
            prev = cur
    raise PrecisionBudgetError(
        f"series head budget exhausted: n0 cap {SERIES_HEAD_CAP} reached for "
        f"S^({order})/n^{exponent} at {precision} digits"
    )


def lz_series(a: int, b: int, precision: int) -> mpf:
    """Lz(a,b) via the composition-sum series, larger argument as exponent."""
    if a < 1 or b < 1:
        raise ValueError(f"Lz needs a, b >= 1, got ({a}, {b})")
    exponent, order = (a, b) if a >= b else (b, a)
    total = series_orientation_sum(exponent, order, precision + 2)
    sign = -1 if (a + b) % 2 == 0 else 1
    with workdps(precision):
        return +(sign * total / math.factorial(order))


# ---------------------------------------------------------------------------
# symbolic evaluation and the three-way verification report


def evaluate_reduced(comb: PiReducedCombination, precision: int) -> mpf:
    """Numeric value of a pi-reduced combination from zeta_value and pi."""
    wdps = precision + 10
    with workdps(wdps):
        total = mp.zero
        for mono, scalar in comb.sorted_terms():
            term = _frac(scalar.coeff)
            if scalar.pi_exponent:
                term *= mp.pi**scalar.pi_exponent
            for n, k in mono.factors:
                term *= zeta_value(n, wdps) ** k
            total += term
    with workdps(precision):
        return +total


@dataclass(frozen=True)
class VerificationReport:
    a: int
    b: int
    digits: int
    symbolic: mpf
    series: mpf
    quadrature: mpf
    max_deviation: mpf
    threshold: mpf
    passed: bool

    def deviations(self) -> dict[str, mpf]:
        return {
            "series_vs_symbolic": abs(self.series - self.symbolic),
            "quadrature_vs_symbolic": abs(self.quadrature - self.symbolic),
            "series_vs_quadrature": abs(self.series - self.quadrature),
        }


def verify_expansion(a: int, b: int, precision: int) -> VerificationReport:
    """Check the symbolic expansion of Lz(a,b) against both numeric routes."""
    reduced = reduce_even(expand_lz(a, b))
    wdps = precision + 10
    with workdps(wdps):
        symbolic = evaluate_reduced(reduced, precision + 5)
        series = lz_series(a, b, precision + 5)
        quadrature = lz_quadrature(a, b, precision + 5)
        threshold = mp.mpf(10) ** (-(precision - 5))
        max_dev = max(
            abs(series - symbolic), abs(quadrature - symbolic), abs(series - quadrature)
        )
        return VerificationReport(
            a=a,
            b=b,
            digits=precision,
            symbolic=symbolic,
            series=series,
            quadrature=quadrature,
            max_deviation=max_dev,
            threshold=threshold,
            passed=bool(max_dev < threshold),
        )
