from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from nashblowup.eta import EtaSequence, enumerate_omega
from nashblowup.identities import (
    binomial_matrix,
    check_diagonal_span,
    check_riordan,
    check_translation_span,
    check_vandermonde_matrix,
    check_vanishing_sum,
    diagonal_basis,
    gbinom,
    vanishing_sum,
)


def test_gbinom():
    assert gbinom(5, 2) == 10
    assert gbinom(-1, 3) == -1
    assert gbinom(-2, 2) == 3
    assert gbinom(4, -1) == 0
    assert gbinom(2, 5) == 0


@given(st.integers(-15, 15), st.integers(0, 8))
def test_gbinom_pascal(a, b):
    assert gbinom(a + 1, b + 1) == gbinom(a, b) + gbinom(a, b + 1)


@pytest.mark.parametrize("n", range(13))
def test_riordan_grid(n):
    assert all(check_riordan(n, m, p) for m in range(13) for p in range(13))


def test_binomial_matrix():
    assert binomial_matrix([1, 2, 4]) == [[1, 1, 0], [1, 2, 1], [1, 4, 6]]


def test_vandermonde_all_subsets():
    for L in range(1, 6):
        for c in combinations(range(1, 11), L):
            assert check_vandermonde_matrix(c)


@pytest.mark.parametrize("bad", [[], [0, 1], [3, 2], [2, 2]])
def test_vandermonde_rejects(bad):
    with pytest.raises(ValueError):
        check_vandermonde_matrix(bad)


def test_diagonal_basis_n2():
    # w1 = bar(1,1), w2 = bar(2,2) - 2 bar(1,1)
    assert diagonal_basis(2) == [[1, 1, 0, 1, 0], [0, 0, 1, 2, 1]]


@pytest.mark.parametrize("n", range(1, 6))
def test_diagonal_span(n):
    assert all(check_diagonal_span(n, m) for m in range(3 * n + 1))


@pytest.mark.parametrize("n", range(1, 6))
def test_vanishing_sums(n):
    for l in range(1, n + 1):
        for a in range(5):
            for r in range(5):
                assert check_vanishing_sum(n, a, r, l)
                assert check_vanishing_sum(n, a, r, l, transposed=True)


def test_vanishing_sum_is_not_trivially_zero():
    # the same lifts summed without signs do not cancel
    from nashblowup.identities import _combine

    n, l, h = 2, 1, 2
    terms = [(1, (j, i + j)) for i in range(l + 1) for j in range(h + 1)]
    assert any(_combine(n, terms))
    assert not any(vanishing_sum(n, 0, 0, l))
    with pytest.raises(ValueError):
        vanishing_sum(2, 0, 0, 3)


@pytest.mark.parametrize("n", range(1, 5))
def test_translation_span(n):
    for eta in enumerate_omega(n):
        for l in range(1, n + 1):
            assert check_translation_span(n, eta, l, [3 * n] * l)
            assert check_translation_span(n, eta, l, list(range(l)))


def test_translation_span_argument_checks():
    eta = EtaSequence.parse("1,0,2")
    with pytest.raises(ValueError):
        check_translation_span(2, eta, 2, [1])
    with pytest.raises(ValueError):
        check_translation_span(2, eta, 3, [1, 1, 1])
