import random

import pytest
from hypothesis import given, settings, strategies as st

from nashblowup.exactlinalg import (
    BigIntMatrix,
    determinant,
    determinant_mod,
    in_span,
    is_nonsingular,
    rank,
)

square = st.integers(1, 6).flatmap(
    lambda k: st.lists(st.lists(st.integers(-20, 20), min_size=k, max_size=k), min_size=k, max_size=k)
)


def test_small_determinants():
    assert determinant([[2]]) == 2
    assert determinant([[1, 2], [3, 4]]) == -2
    assert determinant([[0, 1], [1, 0]]) == -1
    assert determinant([[1, 2, 3], [4, 5, 6], [7, 8, 9]]) == 0
    assert determinant([[2, 0, 0], [0, 3, 0], [0, 0, 4]]) == 24


def test_big_entries_stay_exact():
    h = 10**40
    M = [[h, 1], [1, h]]
    assert determinant(M) == h * h - 1


def test_hilbert_like_integer_matrix():
    # det of (C(i+j, i)) is 1 for every size
    from math import comb

    for k in range(1, 12):
        assert determinant([[comb(i + j, i) for j in range(k)] for i in range(k)]) == 1


def test_non_square_rejected():
    with pytest.raises(ValueError):
        determinant([[1, 2, 3], [4, 5, 6]])


def test_matrix_type():
    M = BigIntMatrix([[1, 2], [3, 4]])
    assert M.shape == (2, 2)
    assert M.transpose().tolist() == [[1, 3], [2, 4]]
    assert M == BigIntMatrix([[1, 2], [3, 4]])
    assert hash(M) == hash(BigIntMatrix([[1, 2], [3, 4]]))
    with pytest.raises(ValueError):
        BigIntMatrix([[1, 2], [3]])


@given(square)
def test_determinant_matches_transpose(M):
    assert determinant(M) == determinant(BigIntMatrix(M).transpose())


@given(square, st.randoms(use_true_random=False))
def test_abs_det_invariant_under_row_permutation(M, rnd):
    rows = list(M)
    rnd.shuffle(rows)
    assert abs(determinant(rows)) == abs(determinant(M))


@given(square)
def test_modular_reduction_agrees(M):
    p = 1_000_000_007
    assert determinant_mod(M, p) == determinant(M) % p


@given(square)
def test_fast_screen_agrees_with_exact(M):
    assert is_nonsingular(M, fast=True) == is_nonsingular(M) == (determinant(M) != 0)


@settings(max_examples=60)
@given(
    st.integers(1, 5).flatmap(
        lambda r: st.integers(1, 5).flatmap(
            lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )
)
def test_rank_equals_transpose_rank(M):
    r = rank(M)
    assert r == rank(BigIntMatrix(M).transpose())
    assert 0 <= r <= min(len(M), len(M[0]))


def test_rank_examples():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank([[1, 0, 0], [0, 1, 0], [1, 1, 0]]) == 2


def test_in_span():
    basis = [[1, 0, 1], [0, 1, 1]]
    assert in_span([2, 3, 5], basis)
    assert not in_span([0, 0, 1], basis)
    assert in_span([0, 0, 0], basis)


def test_rank_of_random_product_is_bounded():
    rnd = random.Random(7)
    A = [[rnd.randint(-3, 3) for _ in range(2)] for _ in range(5)]
    B = [[rnd.randint(-3, 3) for _ in range(5)] for _ in range(2)]
    AB = [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]
    assert rank(AB) <= 2
    assert determinant(AB) == 0
