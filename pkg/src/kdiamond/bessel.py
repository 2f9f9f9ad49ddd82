"""High-precision bounds for I_2 and for Delta_k(n), and the numeric proof checkpoints.

Real values are ``mpmath.mpf``.  Every public evaluator takes ``prec`` (bits)
and follows one acceptance policy: compute at ``prec`` and at ``2 * prec`` and
accept only if the two agree to relative ``2**(-prec / 2)``.  Inequality checks
further require the margin to exceed that same budget, so a pass does not
hinge on the last bits.

All rational constants are kept as ``Fraction`` and converted at evaluation time.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import mpmath
from mpmath import mp, mpf

DEFAULT_PREC = 256
MIN_PREC = 64


class PrecisionError(ArithmeticError):
    """Doubling the working precision changed a result by more than the budget."""


class DomainError(ValueError):
    """Argument below the validity threshold of the bound being evaluated."""


def to_mpf(v) -> mpf:
    if isinstance(v, Fraction):
        return mpf(v.numerator) / v.denominator
    if isinstance(v, str):
        return mpf(v)
    return mpf(v)


def _budget(prec: int) -> mpf:
    return mpf(2) ** (-(prec // 2))


def _agree(a, b, prec: int) -> bool:
    if isinstance(a, (tuple, list)):
        return all(_agree(x, y, prec) for x, y in zip(a, b))
    if b == 0:
        return a == 0
    return abs(a - b) <= _budget(prec) * abs(b)


def stable(fn: Callable[[], object], prec: int = DEFAULT_PREC):
    """Evaluate ``fn`` at prec and 2*prec bits; return the 2*prec result if they agree."""
    if prec < MIN_PREC:
        raise ValueError(f"precision must be >= {MIN_PREC} bits, got {prec}")
    with mp.workprec(prec):
        lo = fn()
    with mp.workprec(2 * prec):
        hi = fn()
        if not _agree(lo, hi, prec):
            raise PrecisionError(f"result unstable under precision doubling at {prec} bits")
    return hi


# --------------------------------------------------------------------------
# I_2 reference values


def _i2_series(s: mpf) -> mpf:
    if s == 0:
        return mpf(0)
    h2 = (s / 2) ** 2
    term = h2 / 2  # j = 0: (s/2)^2 / (0! 2!)
    total = term
    eps = mpf(2) ** (-mp.prec)
    j = 0
    while True:
        ratio = h2 / ((j + 1) * (j + 3))
        term *= ratio
        total += term
        j += 1
        if ratio < 0.5 and term < eps * total:
            # remaining terms shrink at least geometrically with the current ratio
            tail = term * ratio / (1 - ratio)
            return total + tail


def i2_series(s, prec: int = DEFAULT_PREC) -> mpf:
    """I_2(s) from the ascending series sum_j (s/2)^{2j+2} / (j! (j+2)!)."""
    if to_mpf(s) < 0:
        raise ValueError(f"i2_series needs s >= 0, got {s}")
    return stable(lambda: _i2_series(to_mpf(s)), prec)


def i2_integral(s, prec: int = DEFAULT_PREC) -> mpf:
    """I_2(s) = s^2/(3 pi) * int_{-1}^{1} (1 - t^2)^{3/2} e^{s t} dt by tanh-sinh quadrature.

    Only meant as a cross-check of ``i2_series`` for 0 <= s <= 64.
    """
    sv = to_mpf(s)
    if not 0 <= sv <= 64:
        raise ValueError(f"i2_integral is a cross-check for 0 <= s <= 64, got {s}")

    def run():
        x = to_mpf(s)
        f = lambda t: (1 - t * t) ** mpf(1.5) * mpmath.exp(x * t)
        return x * x / (3 * mp.pi) * mpmath.quad(f, [-1, 0, 1])

    return stable(run, prec)


# --------------------------------------------------------------------------
# truncated asymptotic expansions and the I_2 enclosures

B_SHORT = (
    Fraction(1),
    Fraction(-15, 8),
    Fraction(105, 128),
    Fraction(315, 1024),
    Fraction(10395, 32768),
    Fraction(135135, 262144),
)
B_LONG = B_SHORT + (
    Fraction(4729725, 4194304),
    Fraction(103378275, 33554432),
    Fraction(21606059475, 2147483648),
    Fraction(655383804075, 17179869184),
    Fraction(45221482481175, 274877906944),
    Fraction(1747193641318125, 2199023255552),
)

# variant -> (coefficients, remainder constant, remainder power, smallest valid s)
LEMMAS = {
    "lemma23": (B_SHORT, 27, 6, 28),
    "lemma24": (B_LONG, 6148836, 12, 50),
}


def b_i_exact(s: Fraction, variant: str = "short") -> Fraction:
    coeffs = {"short": B_SHORT, "long": B_LONG}[variant]
    return sum((c / s**i for i, c in enumerate(coeffs)), Fraction(0))


def _poly_inv(coeffs: Sequence[Fraction], s: mpf) -> mpf:
    inv = 1 / s
    acc = mpf(0)
    for c in reversed(coeffs):
        acc = acc * inv + to_mpf(c)
    return acc


def b_i(s, variant: str = "short", prec: int = DEFAULT_PREC) -> mpf:
    """B_I(s) ("short", through s^-5) or its extension through s^-11 ("long")."""
    if variant not in ("short", "long"):
        raise ValueError(f"variant must be 'short' or 'long', got {variant!r}")
    if to_mpf(s) <= 0:
        raise ValueError(f"b_i needs s > 0, got {s}")
    coeffs = B_SHORT if variant == "short" else B_LONG
    return stable(lambda: _poly_inv(coeffs, to_mpf(s)), prec)


@dataclass(frozen=True)
class BoundPair:
    lower: mpf
    upper: mpf
    variant: str
    prec: int = DEFAULT_PREC

    @property
    def relative_width(self) -> mpf:
        mid = (self.lower + self.upper) / 2
        return (self.upper - self.lower) / abs(mid)

    def contains(self, value) -> bool:
        with mp.workprec(2 * self.prec):
            v = value if isinstance(value, mpf) else to_mpf(value)
            return self.lower <= v <= self.upper

    def within(self, other: "BoundPair") -> bool:
        return other.lower <= self.lower and self.upper <= other.upper


def _i2_pair(s: mpf, variant: str) -> tuple[mpf, mpf]:
    coeffs, rem, power, _ = LEMMAS[variant]
    pref = mpmath.exp(s) / mpmath.sqrt(2 * mp.pi * s)
    b = _poly_inv(coeffs, s)
    r = mpf(rem) / s**power
    return pref * (b - r), pref * (b + r)


def i2_bounds(s, variant: str = "lemma23", prec: int = DEFAULT_PREC, unchecked: bool = False) -> BoundPair:
    """(I_21, I_22) for ``lemma23`` or (I_23, I_24) for ``lemma24``."""
    if variant not in LEMMAS:
        raise ValueError(f"unknown variant {variant!r}")
    s_min = LEMMAS[variant][3]
    if not unchecked and to_mpf(s) < s_min:
        raise DomainError(f"{variant} enclosure only holds for s >= {s_min}, got {s}")
    lo, hi = stable(lambda: _i2_pair(to_mpf(s), variant), prec)
    return BoundPair(lo, hi, variant, prec)


# --------------------------------------------------------------------------
# checkpoint function g and the incomplete-gamma tail


def _g(s: mpf) -> mpf:
    r2, rpi = mpmath.sqrt(2), mpmath.sqrt(mp.pi)
    return (91785 + 4096 * r2 * s) / (12288 * rpi) * mpmath.exp(-s) * s ** mpf(7.5) + mpf(4729725) / (131072 * r2)


def g_checkpoint(s, prec: int = DEFAULT_PREC) -> mpf:
    if to_mpf(s) <= 0:
        raise ValueError(f"g needs s > 0, got {s}")
    return stable(lambda: _g(to_mpf(s)), prec)


def g_limit(prec: int = DEFAULT_PREC) -> mpf:
    return stable(lambda: mpf(4729725) / (131072 * mpmath.sqrt(2)), prec)


def g_derivative_factor(s, prec: int = DEFAULT_PREC) -> mpf:
    """Quadratic whose positivity makes g decreasing: g'(s) = -e^{-s} s^{13/2} / (24576 sqrt(pi)) * factor."""

    def run():
        x, r2 = to_mpf(s), mpmath.sqrt(2)
        return 8192 * r2 * x * x + (183570 - 69632 * r2) * x - 1376775

    return stable(run, prec)


def g_derivative(s, prec: int = DEFAULT_PREC) -> mpf:
    def run():
        x = to_mpf(s)
        fac = 8192 * mpmath.sqrt(2) * x * x + (183570 - 69632 * mpmath.sqrt(2)) * x - 1376775
        return -mpmath.exp(-x) * x ** mpf(6.5) / (24576 * mpmath.sqrt(mp.pi)) * fac

    return stable(run, prec)


def upper_gamma(a, s, prec: int = DEFAULT_PREC) -> mpf:
    return stable(lambda: mpmath.gammainc(to_mpf(a), to_mpf(s)), prec)


def gamma_tail_check(a, s, prec: int = DEFAULT_PREC) -> bool:
    """Gamma(a, s) <= a s^{a-1} e^{-s} for a >= 1, s >= a.

    Non-strict: a margin within the evaluation budget counts as holding, which
    is what the a = 1 equality case needs.
    """
    av, sv = to_mpf(a), to_mpf(s)
    if av < 1 or sv < av:
        raise DomainError(f"tail bound needs a >= 1 and s >= a, got a={a}, s={s}")

    def run():
        x, y = to_mpf(a), to_mpf(s)
        return mpmath.gammainc(x, y), x * y ** (x - 1) * mpmath.exp(-y)

    gam, bound = stable(run, prec)
    with mp.workprec(2 * prec):
        return bound - gam >= -_budget(prec) * bound


# --------------------------------------------------------------------------
# Delta_k(n) sandwiches


ALPHA = {1: Fraction(7, 3), 2: Fraction(12, 5)}
SANDWICH_MIN_N = 3512
SANDWICH_VARIANTS = {"thm21": ("lemma23", 6), "thm22": ("lemma24", 10)}
FG_VARIANTS = {"deg12": ("lemma23", 12, 16), "deg20": ("lemma24", 20, 24)}


def alpha_k(k: int) -> Fraction:
    if k not in ALPHA:
        raise ValueError(f"k must be 1 or 2, got {k!r}")
    return ALPHA[k]


def _x(k: int, n: int) -> mpf:
    return mp.pi * mpmath.sqrt(24 * n - (2 * k + 2)) / 6


def _u(k: int, n: int) -> mpf:
    # fourth root of pi^2 (24n - (2k+2)) / 36, not sqrt(x), so the two routes stay independent
    return mpmath.root(mp.pi**2 * (24 * n - (2 * k + 2)) / 36, 4)


@dataclass(frozen=True)
class ModelParams:
    k: int
    n: int
    alpha: Fraction
    x: mpf
    u: mpf


def model_params(k: int, n: int, prec: int = DEFAULT_PREC) -> ModelParams:
    a = alpha_k(k)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    x, u = stable(lambda: (_x(k, n), _u(k, n)), prec)
    return ModelParams(k, n, a, x, u)


def _check_n(n: int, unchecked: bool) -> None:
    if not unchecked and n < SANDWICH_MIN_N:
        raise DomainError(f"Delta_k sandwiches hold for n >= {SANDWICH_MIN_N}, got {n}")


def delta_sandwich(k: int, n: int, variant: str = "thm21", prec: int = DEFAULT_PREC, unchecked: bool = False) -> BoundPair:
    """M_k(n) (1 -/+ x^-6) (thm21) or (1 -/+ x^-10) (thm22), with I_2 replaced by its enclosure."""
    lemma, power = SANDWICH_VARIANTS[variant]
    _check_n(n, unchecked)
    a = alpha_k(k)

    def run():
        am = to_mpf(a)
        x = _x(k, n)
        lo, hi = _i2_pair(mpmath.sqrt(am) * x, lemma)
        scale = am * mp.pi**3 / (18 * x * x)
        e = 1 / x**power
        return scale * lo * (1 - e), scale * hi * (1 + e)

    lo, hi = stable(run, prec)
    return BoundPair(lo, hi, variant, prec)


def fg_bounds(k: int, n: int, variant: str = "deg12", prec: int = DEFAULT_PREC, unchecked: bool = False) -> BoundPair:
    """(f_k(n), g_k(n)) for deg12, or the tilde pair for deg20, written in u = x^{1/2}."""
    lemma, deg, den = FG_VARIANTS[variant]
    _check_n(n, unchecked)
    a = alpha_k(k)

    def run():
        am = to_mpf(a)
        u = _u(k, n)
        lo, hi = _i2_pair(mpmath.sqrt(am) * u * u, lemma)
        scale = am * mp.pi**3 / (18 * u**den)
        return scale * (u**deg - 1) * lo, scale * (u**deg + 1) * hi

    lo, hi = stable(run, prec)
    return BoundPair(lo, hi, variant, prec)


# --------------------------------------------------------------------------
# numeric proof checkpoints


@dataclass
class Check:
    name: str
    point: str
    margin: mpf
    ok: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "point": self.point,
            "margin": mpmath.nstr(self.margin, 12),
            "ok": self.ok,
            "detail": self.detail,
        }


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.ok for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def add(self, name: str, point, lhs: mpf, rhs: mpf, prec: int, detail: str = "") -> Check:
        """Record lhs < rhs, passing only if rhs - lhs clears the error budget."""
        margin = rhs - lhs
        budget = _budget(prec) * (abs(lhs) + abs(rhs))
        c = Check(name, str(point), margin, bool(margin > budget), detail)
        self.checks.append(c)
        return c

    def extend(self, other: "Report") -> "Report":
        self.checks.extend(other.checks)
        return self


EXP_TAIL_MIN_X = 152


def exp_tail_check(x_grid: Iterable, powers: Sequence[int] = (6, 10), prec: int = DEFAULT_PREC) -> Report:
    """72 exp(-sqrt(21) x / 6) <= 1 / (2 x^p) at each grid point x >= 152."""
    rep = Report("exp_tail")
    for x in x_grid:
        if to_mpf(x) < EXP_TAIL_MIN_X:
            raise DomainError(f"grid point {x} below {EXP_TAIL_MIN_X}")
        for p in powers:
            lhs, rhs = stable(
                lambda: (72 * mpmath.exp(-mpmath.sqrt(21) * to_mpf(x) / 6), 1 / (2 * to_mpf(x) ** p)), prec
            )
            with mp.workprec(2 * prec):
                rep.add(f"exp_tail[p={p}]", x, lhs, rhs, prec)
    return rep


# Each bound is a list of (coefficient, power of pi, power of 1/z) added to z.
_W = [(Fraction(-1, 3), 2, 3), (Fraction(-1, 6), 4, 7), (Fraction(-7, 54), 6, 11), (Fraction(-77, 648), 8, 15)]
_Y = [(Fraction(-1, 6), 2, 3), (Fraction(-1, 24), 4, 7), (Fraction(-7, 432), 6, 11), (Fraction(-77, 10368), 8, 15)]
_I = [(Fraction(1, 6), 2, 3), (Fraction(-1, 24), 4, 7), (Fraction(7, 432), 6, 11), (Fraction(-77, 10368), 8, 15)]
_J = [(Fraction(1, 3), 2, 3), (Fraction(-1, 6), 4, 7), (Fraction(7, 54), 6, 11), (Fraction(-77, 648), 8, 15)]

EXPANSION_BOUNDS = {
    "sec4": {
        "w": (_W + [(Fraction(-39, 324), 10, 19)], _W + [(Fraction(-77, 648), 10, 19)]),
        "y": (_Y + [(Fraction(-13, 3456), 10, 19)], _Y + [(Fraction(-77, 20736), 10, 19)]),
        "i": (_I, _I + [(Fraction(77, 20736), 10, 19)]),
        "j": (_J, _J + [(Fraction(77, 648), 10, 19)]),
    },
    # w_1 uses 77/468 and the last j_2 term carries pi^12; both are valid bounds as they stand
    "sec5": {
        "w": (
            _W + [(Fraction(-77, 468), 10, 19), (Fraction(-61, 486), 12, 23)],
            _W + [(Fraction(-77, 648), 10, 19), (Fraction(-1463, 11664), 12, 23)],
        ),
        "y": (
            _Y + [(Fraction(-13, 3456), 10, 19), (Fraction(-61, 31104), 12, 23)],
            _Y + [(Fraction(-77, 20736), 10, 19), (Fraction(-1463, 746496), 12, 23)],
        ),
        "i": (
            _I + [(Fraction(77, 20736), 10, 19), (Fraction(-1463, 746496), 12, 23)],
            _I + [(Fraction(77, 20736), 10, 19)],
        ),
        "j": (
            _J + [(Fraction(77, 648), 10, 19), (Fraction(-1463, 11664), 12, 23)],
            _J + [(Fraction(77, 648), 12, 19)],
        ),
    },
}
EXPANSION_MIN_N = {"sec4": 122, "sec5": 2404}
# w, y, i, j are u_k(n), u_k(n+1), u_k(n+3), u_k(n+4); their fourth powers differ from z^4 by these multiples of pi^2
FOURTH_POWER_SHIFT = {"w": Fraction(-4, 3), "y": Fraction(-2, 3), "i": Fraction(2, 3), "j": Fraction(4, 3)}
NEIGHBOUR_OFFSET = {"w": 0, "y": 1, "i": 3, "j": 4}


def eval_expansion(terms, z: mpf) -> mpf:
    return z + sum(to_mpf(c) * mp.pi**a / z**b for c, a, b in terms)


def gap_closed_forms(z: mpf) -> tuple[mpf, mpf]:
    """Closed rational forms of i_2^2 + y_2^2 - 2z^2 and j_2^2 + w_2^2 - 2z^2 (degree-19 bounds)."""
    p4 = mp.pi**4
    n1 = 5929 * p4**5 + 75460 * p4**4 * z**8 + 911232 * p4**3 * z**16 - 3317760 * p4**2 * z**24 - 23887872 * p4 * z**32
    n2 = 5929 * p4**5 + 18865 * p4**4 * z**8 + 56952 * p4**3 * z**16 - 51840 * p4**2 * z**24 - 93312 * p4 * z**32
    return n1 / (214990848 * z**38), n2 / (209952 * z**38)


def expansion_sandwich_check(
    k: int, n: int, family: str = "sec4", prec: int = DEFAULT_PREC, unchecked: bool = False
) -> Report:
    """Two-sided polynomial bounds for w, y, i, j around z = u_k(n+2), plus the exponent-gap signs."""
    if family not in EXPANSION_BOUNDS:
        raise ValueError(f"family must be 'sec4' or 'sec5', got {family!r}")
    if not unchecked and n < EXPANSION_MIN_N[family]:
        raise DomainError(f"{family} bounds are claimed for n >= {EXPANSION_MIN_N[family]}, got {n}")
    alpha_k(k)
    bounds = EXPANSION_BOUNDS[family]
    rep = Report(f"expansion_sandwich[{family},k={k},n={n}]")

    def run():
        z = _u(k, n + 2)
        vals = {}
        for name, shift in FOURTH_POWER_SHIFT.items():
            vals[name] = mpmath.root(z**4 + to_mpf(shift) * mp.pi**2, 4)
        lows = {name: eval_expansion(lo, z) for name, (lo, _) in bounds.items()}
        highs = {name: eval_expansion(hi, z) for name, (_, hi) in bounds.items()}
        direct = {name: _u(k, n + off) for name, off in NEIGHBOUR_OFFSET.items()}
        return z, vals, lows, highs, direct

    z, vals, lows, highs, direct = _unflatten(stable(lambda: _flatten(run()), prec))
    with mp.workprec(2 * prec):
        point = f"k={k},n={n}"
        for name in ("w", "y", "i", "j"):
            rep.add(f"{name}1<{name}", point, lows[name], vals[name], prec)
            rep.add(f"{name}<{name}2", point, vals[name], highs[name], prec)
            # fourth-root identity: the closed form must reproduce u_k at the neighbouring index
            err = abs(vals[name] - direct[name])
            ok = err <= _budget(prec) * abs(direct[name])
            rep.checks.append(Check(f"{name}=u_k(n+{NEIGHBOUR_OFFSET[name]})", point, -err, ok, "fourth-root identity"))
        if family == "sec4":
            g1, g2 = gap_closed_forms(z)
            i2, y2, j2, w2 = highs["i"], highs["y"], highs["j"], highs["w"]
            rep.add("i2^2+y2^2-2z^2<0", point, g1, mpf(0), prec, "closed rational form")
            rep.add("j2^2+w2^2-2z^2<0", point, g2, mpf(0), prec, "closed rational form")
            rep.add("i2^2+y2^2-2z^2 direct<0", point, i2**2 + y2**2 - 2 * z * z, mpf(0), prec)
            rep.add("j2^2+w2^2-2z^2 direct<0", point, j2**2 + w2**2 - 2 * z * z, mpf(0), prec)
        else:
            i2, y2, j2, w2 = highs["i"], highs["y"], highs["j"], highs["w"]
            i, y, j, w = vals["i"], vals["y"], vals["j"], vals["w"]
            rep.add("j2^2+w2^2-2z^2<0", point, j2**2 + w2**2 - 2 * z * z, mpf(0), prec)
            rep.add("i2^2+y2^2-2z^2<0", point, i2**2 + y2**2 - 2 * z * z, mpf(0), prec)
            rep.add("2i^2+w^2-3z^2<0", point, 2 * i * i + w * w - 3 * z * z, mpf(0), prec)
            rep.add("j^2+2y^2-3z^2<0", point, j * j + 2 * y * y - 3 * z * z, mpf(0), prec)
    return rep


_NAMES = ("w", "y", "i", "j")


def _flatten(res) -> tuple:
    z, vals, lows, highs, direct = res
    return (z,) + tuple(d[nm] for d in (vals, lows, highs, direct) for nm in _NAMES)


def _unflatten(flat) -> tuple:
    z, rest = flat[0], flat[1:]
    dicts = [dict(zip(_NAMES, rest[4 * i : 4 * i + 4])) for i in range(4)]
    return (z, *dicts)


def exp_upper_poly(t: mpf) -> mpf:
    """Degree-4 Taylor prefix of e^t; an upper bound for t < 0."""
    return 1 + t + t**2 / 2 + t**3 / 6 + t**4 / 24


def exp_lower_poly(t: mpf) -> mpf:
    """Degree-5 Taylor prefix of e^t; a lower bound for t < 0."""
    return exp_upper_poly(t) + t**5 / 120


def phi_bound_check(t_grid: Iterable, prec: int = DEFAULT_PREC) -> Report:
    rep = Report("phi_bound")
    for t in t_grid:
        if to_mpf(t) >= 0:
            raise DomainError(f"grid point {t} must be negative")
        lo, mid, hi = stable(lambda: (exp_lower_poly(to_mpf(t)), mpmath.exp(to_mpf(t)), exp_upper_poly(to_mpf(t))), prec)
        with mp.workprec(2 * prec):
            rep.add("phi(t)<e^t", t, lo, mid, prec)
            rep.add("e^t<Phi(t)", t, mid, hi, prec)
    return rep


def _a(alpha: mpf, family: str) -> tuple[mpf, mpf, mpf]:
    """Top three coefficients (a_191..a_193 or a_360..a_362) as functions of alpha."""
    p, two, three = mp.pi, mpf(2), mpf(3)
    if family == "sec4":
        return (
            two**131 * three**86 * 25 * alpha**2 * (-3528 - 792 * alpha**3 + 77 * p**8 * alpha**4),
            -(two**134) * three**84 * 25 * alpha ** mpf(2.5) * (-9072 - 648 * alpha**3 + 13 * p**8 * alpha**4),
            two**136 * three**84 * 5 * alpha**3 * (-6048 - 216 * alpha**3 + p**8 * alpha**4),
        )
    if family == "sec5":
        return (
            two**260 * three**165 * 5 * alpha ** mpf(17.5) * (524880 + 2123 * p**12 * alpha),
            -(two**264) * three**166 * 5 * alpha**18 * (1944 + 7 * p**12 * alpha),
            two**267 * three**163 * 5 * p**12 * alpha ** mpf(19.5),
        )
    raise ValueError(f"family must be 'sec4' or 'sec5', got {family!r}")


LEADING_INDEX = {"sec4": (191, 192, 193), "sec5": (360, 361, 362)}
QUARTIC_Z_MIN = {"sec4": mpf("10.1"), "sec5": mpf("12.65")}


def leading_coeffs(alpha, family: str, prec: int = DEFAULT_PREC) -> tuple[mpf, mpf, mpf]:
    return stable(lambda: _a(to_mpf(alpha), family), prec)


def leading_coeff_signs(alpha, family: str = "sec4", prec: int = DEFAULT_PREC) -> Report:
    """Expected sign pattern (+, -, +) of the three top coefficients."""
    c = leading_coeffs(alpha, family, prec)
    rep = Report(f"leading_coeff[{family}]")
    idx = LEADING_INDEX[family]
    with mp.workprec(2 * prec):
        rep.add(f"a_{idx[0]}>0", f"alpha={alpha}", mpf(0), c[0], prec)
        rep.add(f"a_{idx[1]}<0", f"alpha={alpha}", c[1], mpf(0), prec)
        rep.add(f"a_{idx[2]}>0", f"alpha={alpha}", mpf(0), c[2], prec)
    return rep


def quartic_tail(alpha, family: str, z, prec: int = DEFAULT_PREC) -> mpf:
    """-(top index) * a_lo + a_mid z^2 + a_hi z^4 (top index 192 or 361)."""
    mult = LEADING_INDEX[family][1]

    def run():
        c0, c1, c2 = _a(to_mpf(alpha), family)
        zz = to_mpf(z) ** 2
        return -mult * c0 + c1 * zz + c2 * zz * zz

    return stable(run, prec)


def quartic_tail_check(family: str, alpha, z_grid: Iterable, prec: int = DEFAULT_PREC, unchecked: bool = False) -> Report:
    rep = Report(f"quartic_tail[{family}]")
    for z in z_grid:
        if not unchecked and to_mpf(z) <= QUARTIC_Z_MIN[family]:
            raise DomainError(f"{family} quartic is claimed positive for z > {QUARTIC_Z_MIN[family]}, got {z}")
        v = quartic_tail(alpha, family, z, prec)
        with mp.workprec(2 * prec):
            rep.add("quartic>0", f"alpha={alpha},z={z}", mpf(0), v, prec)
    return rep
