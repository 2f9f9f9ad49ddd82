"""Dense univariate polynomials and exact real-root counting."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, lowest degree first, trailing zeros stripped."""

    coefficients: tuple[int, ...]

    def __init__(self, coefficients: Sequence[int]):
        cs = list(coefficients)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coefficients", tuple(int(c) for c in cs))

    @property
    def degree(self) -> int:
        # the zero polynomial gets degree -1
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _derivative(p: list) -> list:
    return _trim([i * c for i, c in enumerate(p)][1:])


def _divmod(a: list, b: list) -> tuple[list, list]:
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for i, bc in enumerate(b):
            a[i + shift] -= c * bc
        a.pop()
        _trim(a)
    return _trim(q), a


def _gcd(a: list, b: list) -> list:
    a, b = _trim([Fraction(c) for c in a]), _trim([Fraction(c) for c in b])
    while b:
        a, b = b, _divmod(a, b)[1]
    return [c / a[-1] for c in a]


def _sign_changes(values) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def sturm_chain(p: Sequence) -> list[list]:
    chain = [_trim([Fraction(c) for c in p])]
    chain.append(_derivative(chain[0]))
    while chain[-1]:
        r = _divmod(chain[-2], chain[-1])[1]
        if not r:
            break
        chain.append([-c for c in r])
    return chain


def count_real_roots(p: Sequence) -> int:
    """Number of distinct real roots, by Sturm's theorem on the whole line."""
    chain = sturm_chain(p)
    at_plus = [q[-1] for q in chain if q]
    at_minus = [q[-1] * (-1) ** (len(q) - 1) for q in chain if q]
    return _sign_changes(at_minus) - _sign_changes(at_plus)


def squarefree_part(p: Sequence) -> list:
    p = _trim([Fraction(c) for c in p])
    g = _gcd(p, _derivative(p))
    return _divmod(p, g)[0]


def is_hyperbolic(p: IntPolynomial) -> bool:
    """True iff every complex root of ``p`` is real (repeated roots allowed)."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no well-defined roots")
    sf = squarefree_part(p.coefficients)
    return count_real_roots(sf) == len(sf) - 1
