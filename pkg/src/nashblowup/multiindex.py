"""Multi-indices, binomial products, the bar lift and the matrix A_n.

Multi-indices are plain tuples of non-negative ints. Lattice points in the
plane use :class:`LatticePoint`, a named tuple, so both serialize to JSON
as integer arrays without any conversion.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import comb
from typing import Iterable, NamedTuple, Sequence

MultiIndex = tuple[int, ...]


class LatticePoint(NamedTuple):
    x: int
    y: int


def degree(beta: Sequence[int]) -> int:
    return sum(beta)


def as_multiindex(coords: Iterable[int]) -> MultiIndex:
    beta = tuple(int(c) for c in coords)
    if any(c < 0 for c in beta):
        raise ValueError(f"multi-index has a negative coordinate: {beta}")
    return beta


@lru_cache(maxsize=None)
def enumerate_lambda(t: int, n: int) -> tuple[MultiIndex, ...]:
    """All beta in N^t with 1 <= |beta| <= n, graded then lexicographic.

    >>> enumerate_lambda(2, 2)
    ((0, 1), (1, 0), (0, 2), (1, 1), (2, 0))
    """
    if t < 1 or n < 1:
        raise ValueError(f"need t >= 1 and n >= 1, got t={t}, n={n}")
    out = [b for b in product(range(n + 1), repeat=t) if 1 <= sum(b) <= n]
    out.sort(key=lambda b: (sum(b), b))
    return tuple(out)


def lambda_size(t: int, n: int) -> int:
    return comb(n + t, n) - 1


@lru_cache(maxsize=None)
def lambda_position(t: int, n: int) -> dict[MultiIndex, int]:
    return {b: i for i, b in enumerate(enumerate_lambda(t, n))}


def leq(gamma: Sequence[int], beta: Sequence[int]) -> bool:
    if len(gamma) != len(beta):
        raise ValueError("multi-indices of different length")
    return all(g <= b for g, b in zip(gamma, beta))


def binom(a: int, b: int) -> int:
    """C(a, b) for naturals, zero when b > a or b < 0."""
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def binom_product(beta: Sequence[int], gamma: Sequence[int]) -> int:
    if len(beta) != len(gamma):
        raise ValueError("multi-indices of different length")
    out = 1
    for b, g in zip(beta, gamma):
        out *= binom(b, g)
        if not out:
            return 0
    return out


def bar_lift(v: Sequence[int], n: int) -> tuple[int, ...]:
    """The vector (C(v, alpha)) over alpha in Lambda_{2,n}, in canonical order."""
    x, y = v
    if x < 0 or y < 0:
        raise ValueError(f"bar lift needs a point of N^2, got {tuple(v)}")
    return _bar_lift(int(x), int(y), n)


@lru_cache(maxsize=65536)
def _bar_lift(x: int, y: int, n: int) -> tuple[int, ...]:
    cx = [binom(x, i) for i in range(n + 1)]
    cy = [binom(y, i) for i in range(n + 1)]
    return tuple(cx[a] * cy[b] for a, b in enumerate_lambda(2, n))


def apply_An(n: int, beta: Sequence[int]) -> LatticePoint:
    b1, b2, b3 = beta
    return LatticePoint(b1 + b2 + n * b3, b2 + (n + 1) * b3)


def m_of(n: int, J: Iterable[Sequence[int]]) -> LatticePoint:
    x = y = 0
    count = 0
    for beta in J:
        p = apply_An(n, beta)
        x += p.x
        y += p.y
        count += 1
    if not count:
        raise ValueError("m_J is undefined for an empty J")
    return LatticePoint(x, y)
