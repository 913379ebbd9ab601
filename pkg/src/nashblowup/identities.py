"""Instance checkers for binomial identities and span statements.

Every check evaluates both sides exactly and compares; nothing is proved
symbolically.  Binomials whose top argument can go negative are evaluated
as polynomials in the top argument (``gbinom``), which is the reading under
which the difference identities hold on all of N^3.
"""

from __future__ import annotations

from math import factorial
from typing import Sequence

from .eta import EtaSequence, staircase
from .exactlinalg import determinant, rank
from .multiindex import bar_lift, binom, lambda_size


def gbinom(a: int, b: int) -> int:
    """C(a, b) = a (a-1) ... (a-b+1) / b! for any integer a; 0 when b < 0."""
    if b < 0:
        return 0
    if a >= 0:
        return binom(a, b)
    num = 1
    for i in range(b):
        num *= a - i
    return num // factorial(b)


def check_riordan(n: int, m: int, p: int) -> bool:
    """The four product/convolution identities for one triple (n, m, p)."""
    one = gbinom(n, m) * gbinom(m, p) == gbinom(n, p) * gbinom(n - p, m - p)

    alt = sum((-1) ** j * gbinom(n - j, m) * gbinom(p, j) for j in range(p + 1))
    two = alt == gbinom(n - p, m - p)
    if n >= p:
        # the symmetric form needs a nonnegative top
        two = two and gbinom(n - p, m - p) == gbinom(n - p, n - m)

    three = sum(gbinom(n, m - j) * gbinom(p, j) for j in range(p + 1)) == gbinom(n + p, m)
    four = sum(gbinom(n - p, m - j) * gbinom(p, j) for j in range(p + 1)) == gbinom(n, m)
    return one and two and three and four


def binomial_matrix(c: Sequence[int]) -> list[list[int]]:
    return [[binom(ci, j) for j in range(len(c))] for ci in c]


def check_vandermonde_matrix(c: Sequence[int]) -> bool:
    """det(C(c_i, j)) != 0 for 0 < c_0 < c_1 < ... < c_l."""
    c = list(c)
    if not c or c[0] <= 0 or any(a >= b for a, b in zip(c, c[1:])):
        raise ValueError(f"need a strictly increasing list of positive ints, got {c}")
    return determinant(binomial_matrix(c)) != 0


def _combine(n: int, terms) -> list[int]:
    acc = [0] * lambda_size(2, n)
    for coef, point in terms:
        if coef:
            for i, x in enumerate(bar_lift(point, n)):
                acc[i] += coef * x
    return acc


def diagonal_basis(n: int) -> list[list[int]]:
    """w_j = sum_{i=1}^{j} (-1)^{j-i} C(j, i) bar((i, i)), j = 1..n."""
    return [
        _combine(n, (((-1) ** (j - i) * binom(j, i), (i, i)) for i in range(1, j + 1)))
        for j in range(1, n + 1)
    ]


def check_diagonal_span(n: int, m: int) -> bool:
    """bar((m, m)) == sum_j C(m, j) w_j, coordinate by coordinate."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    w = diagonal_basis(n)
    rhs = [0] * lambda_size(2, n)
    for j, wj in enumerate(w, start=1):
        c = binom(m, j)
        if c:
            rhs = [a + c * b for a, b in zip(rhs, wj)]
    return list(bar_lift((m, m), n)) == rhs


def vanishing_sum(n: int, a: int, r: int, l: int, transposed: bool = False) -> list[int]:
    """The double alternating sum of bar lifts; identically zero in theory."""
    if not 1 <= l <= n:
        raise ValueError(f"l must lie in 1..{n}, got {l}")
    h = n - l + 1
    terms = []
    for i in range(l + 1):
        for j in range(h + 1):
            coef = (-1) ** (i + h + j) * binom(l, i) * binom(h, j)
            pt = (a + r + j, r + i + j)
            terms.append((coef, pt[::-1] if transposed else pt))
    return _combine(n, terms)


def check_vanishing_sum(n: int, a: int, r: int, l: int, transposed: bool = False) -> bool:
    return not any(vanishing_sum(n, a, r, l, transposed))


def check_translation_span(n: int, eta: EtaSequence, l: int, shifts: Sequence[int]) -> bool:
    """Shifting T_1..T_l along the diagonal leaves the span of the lifts unchanged."""
    if not 1 <= l <= n:
        raise ValueError(f"l must lie in 1..{n}, got {l}")
    if len(shifts) != l:
        raise ValueError(f"need {l} shifts, got {len(shifts)}")
    segs = staircase(n, eta).segments
    plain = [p for seg in segs[: l + 1] for p in seg]
    moved = list(segs[0])
    for seg, s in zip(segs[1 : l + 1], shifts):
        moved.extend((x + s, y + s) for x, y in seg)
    A = [bar_lift(p, n) for p in moved]
    B = [bar_lift(p, n) for p in plain]
    ra, rb = rank(A), rank(B)
    return ra == rb == rank(A + B) == len(B)
