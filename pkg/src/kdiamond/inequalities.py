"""Exact Laguerre, Toeplitz-determinant, Turan and invariant checks on coefficient tables.

Indexing conventions
--------------------
``toeplitz_det(table, n, m)`` is det(a_{n-i+j})_{1<=i,j<=m}.  The 3x3 matrix
with rows (a_{n+2}, a_{n+3}, a_{n+4}), ..., (a_n, a_{n+1}, a_{n+2}) has
determinant ``toeplitz_det(table, n + 2, 3)``.

Thresholds are counted from n = 1, matching ``REFERENCE_THRESHOLDS`` (its order-1
entries are 1 even though both predicates already hold at n = 0).
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .polynomial import IntPolynomial, is_hyperbolic
from .series import CoeffTable

FAMILIES = ("laguerre", "toeplitz_det", "turan_jensen", "invariant_A", "invariant_B", "invariant_I")
MAX_ORDER = 14
FIRST_INDEX = 1


class HorizonError(ValueError):
    """Requested index falls outside the coefficient table."""


def binomial(n: int, r: int) -> int:
    if r < 0 or r > n:
        return 0
    return math.comb(n, r)


def _need(table: Sequence[int], hi: int, what: str) -> None:
    if hi > len(table) - 1:
        raise HorizonError(f"{what} needs a_{hi} but table stops at {len(table) - 1}")


def laguerre_value(table: Sequence[int], n: int, m: int) -> int:
    """Exact L_m at n: half of sum_{j=0}^{2m} (-1)^{j+m} C(2m, j) a_{n+j} a_{n+2m-j}."""
    if n < 0 or m < 1:
        raise HorizonError(f"laguerre needs n >= 0 and m >= 1, got n={n}, m={m}")
    _need(table, n + 2 * m, f"L_{m}({n})")
    s = 0
    for j in range(2 * m + 1):
        term = binomial(2 * m, j) * table[n + j] * table[n + 2 * m - j]
        s += -term if (j + m) % 2 else term
    assert s % 2 == 0, f"odd Laguerre pre-sum at n={n}, m={m}"
    return s // 2


def _bareiss(M: list[list[int]], pivoting: bool = True) -> tuple[int, list[int]]:
    """Fraction-free elimination in place.

    Returns (determinant, leading principal minors); the minor list is only
    complete when no row swap was needed.
    """
    size = len(M)
    sign = 1
    swapped = False
    prev = 1
    minors: list[int] = []
    for k in range(size):
        if M[k][k] == 0:
            if not pivoting:
                return 0, minors
            for r in range(k + 1, size):
                if M[r][k] != 0:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    swapped = True
                    break
            else:
                return 0, minors
        piv = M[k][k]
        if not swapped:
            minors.append(piv)
        rowk = M[k]
        for i in range(k + 1, size):
            rowi = M[i]
            mik = rowi[k]
            for j in range(k + 1, size):
                q, r = divmod(rowi[j] * piv - mik * rowk[j], prev)
                assert r == 0, "inexact Bareiss division"
                rowi[j] = q
        prev = piv
    return sign * M[size - 1][size - 1], minors


def _toeplitz_matrix(table: Sequence[int], n: int, m: int) -> list[list[int]]:
    return [[table[n - i + j] for j in range(m)] for i in range(m)]


def toeplitz_det(table: Sequence[int], n: int, m: int) -> int:
    """det(a_{n-i+j})_{1<=i,j<=m} by Bareiss elimination."""
    if m < 1 or n - m + 1 < 0:
        raise HorizonError(f"toeplitz_det needs m >= 1 and n >= m - 1, got n={n}, m={m}")
    _need(table, n + m - 1, f"det_{m}({n})")
    det, _ = _bareiss(_toeplitz_matrix(table, n, m))
    return det


def toeplitz_minors(table: Sequence[int], n: int, m_max: int) -> list[int]:
    """[toeplitz_det(table, n, m) for m in 1..m_max] from a single elimination.

    The leading m x m block of the Toeplitz matrix at n is the order-m Toeplitz
    matrix at the same n, so the Bareiss pivots are the lower-order determinants.
    """
    _need(table, n + m_max - 1, f"det_{m_max}({n})")
    _, minors = _bareiss(_toeplitz_matrix(table, n, m_max), pivoting=False)
    # a zero pivot stops the pivot reading; finish those orders one by one
    for m in range(len(minors) + 1, m_max + 1):
        minors.append(toeplitz_det(table, n, m))
    return minors


def invariants_ABI(a0: int, a1: int, a2: int, a3: int, a4: int) -> tuple[int, int, int]:
    A = a0 * a4 - 4 * a1 * a3 + 3 * a2 * a2
    B = -a0 * a2 * a4 + a2**3 + a0 * a3 * a3 + a1 * a1 * a4 - 2 * a1 * a2 * a3
    return A, B, A**3 - 27 * B * B


def jensen_poly(table: Sequence[int], d: int, shift: int) -> IntPolynomial:
    """J^{d,shift}(X) = sum_j C(d, j) a_{shift+j} X^j."""
    if shift < 0 or d < 0:
        raise HorizonError(f"jensen_poly needs shift >= 0 and d >= 0, got d={d}, shift={shift}")
    _need(table, shift + d, f"J^{{{d},{shift}}}")
    return IntPolynomial([binomial(d, j) * table[shift + j] for j in range(d + 1)])


def turan3_value(table: Sequence[int], n: int) -> int:
    if n < 1:
        raise HorizonError(f"turan3 needs n >= 1, got {n}")
    _need(table, n + 2, f"turan3({n})")
    am, a0, a1, a2 = table[n - 1], table[n], table[n + 1], table[n + 2]
    return 4 * (a0 * a0 - am * a1) * (a1 * a1 - a0 * a2) - (a0 * a1 - am * a2) ** 2


@dataclass(frozen=True)
class FamilySpec:
    family: str
    order: int = 1
    k: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        lo = 2 if self.family == "turan_jensen" else 1
        if self.family in ("laguerre", "toeplitz_det", "turan_jensen") and not lo <= self.order <= MAX_ORDER:
            raise ValueError(f"{self.family} order must be in {lo}..{MAX_ORDER}, got {self.order}")

    @property
    def natural_min(self) -> int:
        if self.family == "toeplitz_det":
            return self.order - 1
        if self.family == "turan_jensen":
            return 1
        return 0

    @property
    def admissible_min(self) -> int:
        return max(FIRST_INDEX, self.natural_min)

    def reach(self, n: int) -> int:
        """Largest table index the predicate touches at n."""
        if self.family == "laguerre":
            return n + 2 * self.order
        if self.family == "toeplitz_det":
            return n + self.order - 1
        if self.family == "turan_jensen":
            return n - 1 + self.order
        return n + 4

    def label(self) -> str:
        return f"{self.family}[m={self.order},k={self.k}]"


def predicate_eval(spec: FamilySpec, table: Sequence[int], n: int) -> bool:
    if n < spec.natural_min:
        raise HorizonError(f"{spec.label()} undefined at n={n}")
    fam = spec.family
    if fam == "laguerre":
        return laguerre_value(table, n, spec.order) > 0
    if fam == "toeplitz_det":
        return toeplitz_det(table, n, spec.order) > 0
    if fam == "turan_jensen":
        return is_hyperbolic(jensen_poly(table, spec.order, n - 1))
    _need(table, n + 4, f"{fam}({n})")
    A, B, I = invariants_ABI(*table[n : n + 5])
    return {"invariant_A": A, "invariant_B": B, "invariant_I": I}[fam] > 0


@dataclass
class ThresholdReport:
    spec: FamilySpec
    horizon: int
    threshold: int | None
    failures: list[int] = field(default_factory=list)
    admissible_min: int = FIRST_INDEX

    @property
    def censored(self) -> bool:
        """True when the predicate fails at the horizon itself."""
        return self.threshold is None


def _report_from_failures(spec: FamilySpec, H: int, failures: Iterable[int]) -> ThresholdReport:
    failures = sorted(failures)
    lo = spec.admissible_min
    if failures and failures[-1] == H:
        return ThresholdReport(spec, H, None, failures, lo)
    threshold = failures[-1] + 1 if failures else lo
    return ThresholdReport(spec, H, threshold, failures, lo)


def find_threshold(spec: FamilySpec, table: CoeffTable, H: int) -> ThresholdReport:
    """Minimal N* with the predicate true on [N*, H], plus every failure below it."""
    if spec.reach(H) > table.horizon:
        raise HorizonError(f"{spec.label()} up to n={H} needs table horizon {spec.reach(H)}, have {table.horizon}")
    if H < spec.admissible_min:
        raise HorizonError(f"horizon {H} is below the admissible domain start {spec.admissible_min}")
    fails = [n for n in range(spec.admissible_min, H + 1) if not predicate_eval(spec, table.coeffs, n)]
    return _report_from_failures(spec, H, fails)


def _scan_chunk(args) -> tuple[dict[int, list[int]], dict[int, list[int]]]:
    coeffs, m_max, lo, hi = args
    lag_fail: dict[int, list[int]] = {m: [] for m in range(1, m_max + 1)}
    det_fail: dict[int, list[int]] = {m: [] for m in range(1, m_max + 1)}
    for n in range(lo, hi + 1):
        for m in range(1, m_max + 1):
            if laguerre_value(coeffs, n, m) <= 0:
                lag_fail[m].append(n)
        top = min(m_max, n + 1)
        for m, d in enumerate(toeplitz_minors(coeffs, n, top), start=1):
            if d <= 0:
                det_fail[m].append(n)
    return lag_fail, det_fail


def scan_tables(table: CoeffTable, m_max: int, horizon: int, jobs: int = 1) -> list[ThresholdReport]:
    """Threshold reports for laguerre and toeplitz_det, orders 1..m_max, up to ``horizon``.

    Work is split into contiguous n-chunks; with ``jobs > 1`` the chunks run in
    worker processes and the failure lists are merged in n order.
    """
    if not 1 <= m_max <= MAX_ORDER:
        raise ValueError(f"m_max must be in 1..{MAX_ORDER}, got {m_max}")
    need = horizon + 2 * m_max
    if need > table.horizon:
        raise HorizonError(f"scan to n={horizon} with m_max={m_max} needs table horizon {need}, have {table.horizon}")
    lo = FIRST_INDEX
    if horizon < lo:
        raise HorizonError(f"horizon {horizon} is below the first index {lo}")
    chunk = max(1, (horizon - lo + 1) // max(1, 8 * jobs))
    pieces = [(table.coeffs, m_max, s, min(s + chunk - 1, horizon)) for s in range(lo, horizon + 1, chunk)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_chunk, pieces))
    else:
        results = [_scan_chunk(p) for p in pieces]
    reports = []
    for fam, idx in (("laguerre", 0), ("toeplitz_det", 1)):
        for m in range(1, m_max + 1):
            spec = FamilySpec(fam, m, table.k)
            fails = [n for r in results for n in r[idx][m] if n >= spec.admissible_min]
            reports.append(_report_from_failures(spec, horizon, fails))
    return reports


# Reference thresholds for orders 1..14, used to annotate scans.
REFERENCE_THRESHOLDS = {
    ("laguerre", 1): (1, 12, 53, 132, 251, 420, 639, 912, 1245, 1636, 2091, 2612, 3201, 3858),
    ("laguerre", 2): (1, 10, 45, 106, 211, 354, 539, 774, 1059, 1398, 1781, 2240, 2749, 3318),
    ("toeplitz_det", 1): (1, 1, 20, 84, 194, 362, 594, 890, 1258, 1700, 2218, 2818, 3498, 4264),
    ("toeplitz_det", 2): (1, 1, 18, 72, 168, 308, 506, 762, 1082, 1464, 1914, 2436, 3028, 3696),
}


def reference_threshold(spec: FamilySpec) -> int | None:
    row = REFERENCE_THRESHOLDS.get((spec.family, spec.k))
    if row is None or not 1 <= spec.order <= len(row):
        return None
    return row[spec.order - 1]
