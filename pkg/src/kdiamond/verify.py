"""Default grids and check suites for the analytic bounds."""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

import mpmath
from mpmath import mp, mpf

from . import bessel
from .bessel import DEFAULT_PREC, Report

SANDWICH_NS = (3512, 4000, 6000, 10000)
EXPANSION_SAMPLES = {"sec4": (122, 200, 500, 1000, 3512, 10000), "sec5": (2404, 3000, 3512, 5000, 8000, 10000)}
EXP_TAIL_GRID = (152, 200, 500)
PHI_GRID = ("-0.1", "-1", "-5", "-10")
QUARTIC_GRID = {"sec4": ("10.1001", "10.2", "11", "20", "100"), "sec5": ("12.6501", "12.7", "13", "20", "100")}
GAMMA_A = tuple(Fraction(2 * i + 3, 2) for i in range(1, 7))  # 5/2 .. 15/2


def log_grid(lo: float, hi: float, count: int) -> list[mpf]:
    with mp.workprec(128):
        return [mpf(lo) * (mpf(hi) / lo) ** (mpf(i) / (count - 1)) for i in range(count)]


def enclosure_report(variant: str, grid: Sequence, prec: int = DEFAULT_PREC) -> Report:
    rep = Report(f"i2_enclosure[{variant}]")
    for s in grid:
        ref = bessel.i2_series(s, prec)
        pair = bessel.i2_bounds(s, variant, prec)
        with mp.workprec(2 * prec):
            point = mpmath.nstr(s, 8)
            rep.add("lower<=I2", point, pair.lower, ref, prec)
            rep.add("I2<=upper", point, ref, pair.upper, prec)
    return rep


def lemmas_suite(prec: int = DEFAULT_PREC) -> Report:
    rep = Report("lemmas")
    rep.extend(enclosure_report("lemma23", log_grid(28, 2000, 40), prec))
    rep.extend(enclosure_report("lemma24", log_grid(50, 2000, 40), prec))
    for s in log_grid(50, 2000, 10):
        inner = bessel.i2_bounds(s, "lemma24", prec)
        outer = bessel.i2_bounds(s, "lemma23", prec)
        with mp.workprec(2 * prec):
            rep.add("nest lower", mpmath.nstr(s, 8), outer.lower, inner.lower, prec)
            rep.add("nest upper", mpmath.nstr(s, 8), inner.upper, outer.upper, prec)
    g28 = bessel.g_checkpoint(28, prec)
    with mp.workprec(2 * prec):
        rep.add("g(28)>26.0915", 28, mpf("26.0915"), g28, prec, detail=mpmath.nstr(g28, 10))
        rep.add("g(28)<26.0917", 28, g28, mpf("26.0917"), prec, detail=mpmath.nstr(g28, 10))
        rep.add("g(28)<27", 28, g28, mpf(27), prec)
    for s in ("7.9", "10", "28", "100"):
        fac = bessel.g_derivative_factor(s, prec)
        with mp.workprec(2 * prec):
            rep.add("g' factor>0", s, mpf(0), fac, prec)
    for a in GAMMA_A:
        for s in (28, 50, 200):
            ok = bessel.gamma_tail_check(a, s, prec)
            rep.checks.append(bessel.Check("Gamma(a,s)<=a s^(a-1) e^-s", f"a={a},s={s}", mpf(int(ok)), ok))
    return rep


def sandwich_suite(
    table_for: Callable[[int, int], Sequence[int]],
    ns: Sequence[int] = SANDWICH_NS,
    ks: Sequence[int] = (1, 2),
    prec: int = DEFAULT_PREC,
) -> Report:
    """Check every Delta_k sandwich against exact values; ``table_for(k, N)`` supplies Delta_k(0..N)."""
    rep = Report("sandwich")
    for k in ks:
        table = table_for(k, max(ns))
        for n in ns:
            exact = table[n]
            with mp.workprec(2 * prec):
                ex = mpf(exact)
            for variant in ("thm21", "thm22"):
                pair = bessel.delta_sandwich(k, n, variant, prec)
                with mp.workprec(2 * prec):
                    rep.add(f"{variant} lower<=Delta", f"k={k},n={n}", pair.lower, ex, prec)
                    rep.add(f"{variant} Delta<=upper", f"k={k},n={n}", ex, pair.upper, prec)
            for variant in ("deg12", "deg20"):
                pair = bessel.fg_bounds(k, n, variant, prec)
                with mp.workprec(2 * prec):
                    rep.add(f"{variant} f<=Delta", f"k={k},n={n}", pair.lower, ex, prec)
                    rep.add(f"{variant} Delta<=g", f"k={k},n={n}", ex, pair.upper, prec)
        x = bessel.model_params(k, bessel.SANDWICH_MIN_N, prec).x
        with mp.workprec(2 * prec):
            rep.add("x_k(3512)>=152", f"k={k}", mpf(152), x, prec)
    return rep


def proof_checks_suite(prec: int = DEFAULT_PREC) -> Report:
    rep = Report("proof-checks")
    rep.extend(bessel.exp_tail_check(EXP_TAIL_GRID, (6, 10), prec))
    for family, ns in EXPANSION_SAMPLES.items():
        for k in (1, 2):
            for n in ns:
                rep.extend(bessel.expansion_sandwich_check(k, n, family, prec))
    rep.extend(bessel.phi_bound_check([mpf(t) for t in PHI_GRID], prec))
    for alpha in (Fraction(7, 3), Fraction(12, 5)):
        for family in ("sec4", "sec5"):
            rep.extend(bessel.leading_coeff_signs(alpha, family, prec))
            rep.extend(bessel.quartic_tail_check(family, alpha, QUARTIC_GRID[family], prec))
    return rep
