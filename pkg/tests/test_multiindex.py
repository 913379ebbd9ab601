from math import comb

import pytest
from hypothesis import given, strategies as st

from nashblowup.multiindex import (
    apply_An,
    as_multiindex,
    bar_lift,
    binom,
    binom_product,
    degree,
    enumerate_lambda,
    lambda_position,
    lambda_size,
    leq,
    m_of,
)


def test_lambda_small_cases():
    assert enumerate_lambda(2, 1) == ((0, 1), (1, 0))
    assert enumerate_lambda(2, 2) == ((0, 1), (1, 0), (0, 2), (1, 1), (2, 0))
    assert enumerate_lambda(3, 1) == ((0, 0, 1), (0, 1, 0), (1, 0, 0))


@pytest.mark.parametrize("t", [1, 2, 3])
@pytest.mark.parametrize("n", range(1, 11))
def test_lambda_size(t, n):
    lam = enumerate_lambda(t, n)
    assert len(lam) == lambda_size(t, n) == comb(n + t, n) - 1
    assert len(set(lam)) == len(lam)
    assert all(1 <= degree(b) <= n for b in lam)
    # graded, then lexicographic
    assert list(lam) == sorted(lam, key=lambda b: (sum(b), b))


def test_lambda_position_inverts_enumeration():
    pos = lambda_position(3, 4)
    for i, b in enumerate(enumerate_lambda(3, 4)):
        assert pos[b] == i


def test_lambda_rejects_bad_args():
    with pytest.raises(ValueError):
        enumerate_lambda(0, 3)
    with pytest.raises(ValueError):
        enumerate_lambda(2, 0)


def test_binom_conventions():
    assert binom(4, 2) == 6
    assert binom(2, 4) == 0
    assert binom(3, -1) == 0
    assert binom(0, 0) == 1


def test_binom_product_and_leq():
    assert binom_product((3, 2), (1, 1)) == 6
    assert binom_product((1, 2), (2, 0)) == 0
    assert leq((0, 1, 2), (1, 1, 2))
    assert not leq((2, 0), (1, 5))
    with pytest.raises(ValueError):
        leq((1, 2), (1, 2, 3))


def test_bar_lift_values():
    assert bar_lift((3, 2), 2) == (2, 3, 1, 6, 3)
    assert bar_lift((1, 0), 1) == (0, 1)
    # first two coordinates recover the point
    v = bar_lift((7, 5), 3)
    assert (v[1], v[0]) == (7, 5)


def test_apply_An():
    assert apply_An(1, (0, 0, 1)) == (1, 2)
    assert apply_An(6, (1, 2, 3)) == (1 + 2 + 18, 2 + 21)
    assert m_of(1, [(0, 0, 1), (0, 1, 0)]) == (2, 3)
    with pytest.raises(ValueError):
        m_of(2, [])


def test_as_multiindex_rejects_negatives():
    assert as_multiindex([1, 0, 2]) == (1, 0, 2)
    with pytest.raises(ValueError):
        as_multiindex([1, -1])


@pytest.mark.parametrize("n", range(1, 9))
def test_An_injective_on_lambda3(n):
    images = [apply_An(n, b) for b in enumerate_lambda(3, n)]
    assert len(set(images)) == len(images)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_bar_lift_injective_on_box(n):
    bound = 2 * n * n
    lifts = {bar_lift((x, y), n) for x in range(bound + 1) for y in range(bound + 1)}
    assert len(lifts) == (bound + 1) ** 2


@given(st.tuples(st.integers(0, 6), st.integers(0, 6)), st.tuples(st.integers(0, 6), st.integers(0, 6)))
def test_binom_product_vanishes_off_order(beta, gamma):
    if not leq(gamma, beta):
        assert binom_product(beta, gamma) == 0
    else:
        assert binom_product(beta, gamma) > 0
