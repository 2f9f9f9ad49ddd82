"""Exact coefficients of the broken k-diamond generating function.

The generating function

    prod_{n>=1} (1 - q^{2n}) (1 - q^{(2k+1)n}) / ((1 - q^n)^3 (1 - q^{(4k+2)n}))

is rewritten as prod_j (1 - q^j)^{-e_j}.  Taking the logarithmic derivative
gives the recurrence

    n * D(n) = sum_{m=1}^{n} sigma(m) * D(n - m),   sigma(m) = sum_{d | m} d * e_d,

which is the production path.  ``naive_oracle`` multiplies the truncated
product out directly and shares no code with it.
"""
from __future__ import annotations

from dataclasses import dataclass
from operator import mul

SUPPORTED_K = (1, 2)


def _check_k(k: int) -> None:
    if k not in SUPPORTED_K:
        raise ValueError(f"k must be 1 or 2, got {k!r}")


def eta_exponent(k: int, j: int) -> int:
    """Exponent e_j of (1 - q^j)^{-1} in the product form."""
    _check_k(k)
    if j < 1:
        raise ValueError(f"stride must be >= 1, got {j}")
    return 3 + (j % (4 * k + 2) == 0) - (j % 2 == 0) - (j % (2 * k + 1) == 0)


@dataclass(frozen=True)
class CoeffTable:
    """Delta_k(0..horizon), immutable once built."""

    k: int
    coeffs: tuple[int, ...]

    @property
    def horizon(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        if n < 0:
            raise IndexError(f"negative index {n}")
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def prefix(self, N: int) -> "CoeffTable":
        if N > self.horizon:
            raise ValueError(f"prefix {N} exceeds horizon {self.horizon}")
        return CoeffTable(self.k, self.coeffs[: N + 1])


def sigma_weight(k: int, m: int) -> int:
    """Divisor sum sum_{d | m} d * e_d."""
    _check_k(k)
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    total = 0
    d = 1
    while d * d <= m:
        if m % d == 0:
            total += d * eta_exponent(k, d)
            e = m // d
            if e != d:
                total += e * eta_exponent(k, e)
        d += 1
    return total


def _sigma_table(k: int, N: int) -> list[int]:
    # sieve form of sigma_weight for 1..N; index 0 unused
    sig = [0] * (N + 1)
    for d in range(1, N + 1):
        w = d * eta_exponent(k, d)
        for m in range(d, N + 1, d):
            sig[m] += w
    return sig


def expand_coeffs(k: int, N: int, start: CoeffTable | None = None) -> CoeffTable:
    """Delta_k(0..N) via the logarithmic-derivative recurrence.

    ``start`` may hold an already computed prefix (e.g. from a cache); only the
    missing entries are computed.
    """
    _check_k(k)
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    if start is not None:
        if start.k != k:
            raise ValueError(f"start table has k={start.k}, expected {k}")
        if start.horizon >= N:
            return start.prefix(N)
        a = list(start.coeffs)
    else:
        a = [1]
    sig = _sigma_table(k, N)
    # rev holds a[n-1], a[n-2], ..., a[0] so that sum(map(mul, sig[1:], rev)) is the convolution
    rev = a[::-1]
    for n in range(len(a), N + 1):
        s = sum(map(mul, sig[1 : n + 1], rev))
        q, r = divmod(s, n)
        assert r == 0, f"inexact division at n={n} (k={k}): exponent profile is wrong"
        a.append(q)
        rev.insert(0, q)
    return CoeffTable(k, tuple(a))


def _mul_truncated(p: list[int], q: list[int], N: int) -> list[int]:
    out = [0] * (N + 1)
    for i, pi in enumerate(p):
        if pi == 0:
            continue
        for j in range(0, min(len(q), N + 1 - i)):
            out[i + j] += pi * q[j]
    return out


def _mul_one_minus(p: list[int], stride: int, N: int) -> list[int]:
    """p * (1 - q^stride) mod q^{N+1}, in place."""
    for i in range(N, stride - 1, -1):
        p[i] -= p[i - stride]
    return p


def _invert_series(p: list[int], N: int) -> list[int]:
    if p[0] != 1:
        raise ValueError("series inversion needs constant term 1")
    inv = [0] * (N + 1)
    inv[0] = 1
    for n in range(1, N + 1):
        inv[n] = -sum(p[i] * inv[n - i] for i in range(1, n + 1))
    return inv


def naive_oracle(k: int, N: int) -> CoeffTable:
    """Delta_k(0..N) by expanding the truncated product directly (quadratic reference)."""
    _check_k(k)
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    num = [1] + [0] * N
    for n in range(1, N // 2 + 1):
        _mul_one_minus(num, 2 * n, N)
    for n in range(1, N // (2 * k + 1) + 1):
        _mul_one_minus(num, (2 * k + 1) * n, N)
    den = [1] + [0] * N
    for n in range(1, N + 1):
        for _ in range(3):
            _mul_one_minus(den, n, N)
    for n in range(1, N // (4 * k + 2) + 1):
        _mul_one_minus(den, (4 * k + 2) * n, N)
    return CoeffTable(k, tuple(_mul_truncated(num, _invert_series(den, N), N)))
