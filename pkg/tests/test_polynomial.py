from math import prod

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from kdiamond.polynomial import IntPolynomial, count_real_roots, is_hyperbolic, squarefree_part

X = sympy.Symbol("X")


def from_roots(roots):
    return IntPolynomial(sympy.Poly(prod((X - r) for r in roots), X).all_coeffs()[::-1])


def test_basic_shape():
    p = IntPolynomial([1, 2, 0, 0])
    assert p.coefficients == (1, 2) and p.degree == 1
    assert IntPolynomial([0, 0]).is_zero() and IntPolynomial([]).degree == -1
    assert IntPolynomial([1, 2, 1])(3) == 16


def test_examples():
    assert is_hyperbolic(IntPolynomial([1, 2, 1]))
    assert not is_hyperbolic(IntPolynomial([1, 0, 1]))
    assert is_hyperbolic(IntPolynomial([5]))
    with pytest.raises(ValueError):
        is_hyperbolic(IntPolynomial([0]))


def test_repeated_roots_reduce():
    p = from_roots([2, 2, 2, -1, -1])
    assert count_real_roots(list(p.coefficients)) == 2
    assert len(squarefree_part(list(p.coefficients))) == 3
    assert is_hyperbolic(p)


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=7))
def test_real_rooted_products_are_hyperbolic(roots):
    assert is_hyperbolic(from_roots(roots))


@given(st.lists(st.integers(-20, 20), max_size=5), st.integers(-10, 10), st.integers(1, 10))
def test_complex_pair_breaks_hyperbolicity(roots, re, im):
    p = from_roots(roots) if roots else IntPolynomial([1])
    quad = sympy.Poly((X - re) ** 2 + im**2, X)
    q = sympy.Poly(list(p.coefficients)[::-1], X) * quad
    assert not is_hyperbolic(IntPolynomial(q.all_coeffs()[::-1]))


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(-50, 50), min_size=2, max_size=7).filter(lambda c: c[-1] != 0))
def test_root_count_matches_sympy(coeffs):
    poly = sympy.Poly(coeffs[::-1], X)
    distinct = len(set(sympy.real_roots(poly)))
    assert count_real_roots(coeffs) == distinct
    expected = len(sympy.real_roots(poly)) == poly.degree()
    assert is_hyperbolic(IntPolynomial(coeffs)) == expected
