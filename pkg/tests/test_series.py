import pytest
from hypothesis import given, settings, strategies as st

from kdiamond.series import (
    CoeffTable,
    eta_exponent,
    expand_coeffs,
    naive_oracle,
    sigma_weight,
)


def brute_sigma(k, m):
    return sum(d * eta_exponent(k, d) for d in range(1, m + 1) if m % d == 0)


@pytest.mark.parametrize("k,m,expected", [(1, 1, 3), (1, 2, 7), (2, 5, 13)])
def test_sigma_examples(k, m, expected):
    assert sigma_weight(k, m) == expected


@given(st.sampled_from([1, 2]), st.integers(1, 3000))
def test_sigma_matches_brute_force(k, m):
    assert sigma_weight(k, m) == brute_sigma(k, m)


def test_eta_exponents_by_hand():
    # k=1: factors (1-q^2n)(1-q^3n) / ((1-q^n)^3 (1-q^6n))
    assert [eta_exponent(1, j) for j in range(1, 7)] == [3, 2, 2, 2, 3, 2]
    assert [eta_exponent(2, j) for j in range(1, 11)] == [3, 2, 3, 2, 2, 2, 3, 2, 3, 2]


@pytest.mark.parametrize("bad", [(3, 1), (0, 1), (1, 0), (1, -4)])
def test_sigma_rejects_bad_input(bad):
    with pytest.raises(ValueError):
        sigma_weight(*bad)


def test_small_tables():
    assert expand_coeffs(1, 0).coeffs == (1,)
    assert expand_coeffs(1, 1).coeffs == (1, 3)
    assert naive_oracle(1, 0).coeffs == (1,)
    assert naive_oracle(1, 1).coeffs == (1, 3)
    # (1-q)^-3 (1-q^2)^-2 to order q^2: 6 + 2
    assert expand_coeffs(1, 2)[2] == 8


def test_rejects_unsupported_k_and_negative_n():
    for fn in (expand_coeffs, naive_oracle):
        with pytest.raises(ValueError):
            fn(3, 10)
        with pytest.raises(ValueError):
            fn(1, -1)


@pytest.mark.parametrize("k,N", [(1, 300), (2, 500)])
def test_oracle_equivalence(k, N):
    assert expand_coeffs(k, N).coeffs == naive_oracle(k, N).coeffs


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([1, 2]), st.integers(0, 200))
def test_oracle_equivalence_random_horizon(k, N):
    assert expand_coeffs(k, N).coeffs == naive_oracle(k, N).coeffs


@pytest.mark.parametrize("k", [1, 2])
def test_positivity_and_recurrence_exactness(k):
    t = expand_coeffs(k, 800)
    assert all(isinstance(c, int) and c > 0 for c in t.coeffs)
    sig = [0] + [sigma_weight(k, m) for m in range(1, 801)]
    for n in range(1, 801):
        total = sum(sig[m] * t[n - m] for m in range(1, n + 1))
        assert total % n == 0 and total // n == t[n]


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([1, 2]), st.integers(0, 300), st.integers(0, 300))
def test_prefix_consistency(k, N, extra):
    small, big = expand_coeffs(k, N), expand_coeffs(k, N + extra)
    assert big.coeffs[: N + 1] == small.coeffs
    assert big.prefix(N) == small


def test_extension_from_start_matches_fresh():
    base = expand_coeffs(2, 150)
    assert expand_coeffs(2, 400, start=base) == expand_coeffs(2, 400)


def test_extension_rejects_wrong_k():
    with pytest.raises(ValueError):
        expand_coeffs(2, 50, start=expand_coeffs(1, 20))


def test_monotone_growth():
    t = expand_coeffs(1, 1000)
    assert all(a < b for a, b in zip(t.coeffs, t.coeffs[1:]))


def test_table_container():
    t = expand_coeffs(1, 10)
    assert isinstance(t, CoeffTable)
    assert t.horizon == 10 and len(t) == 11
    assert t[0] == 1 and t.coeffs[1:3] == (3, 8)
