"""Exact integer linear algebra.

Everything here works on Python ints with fraction-free (Bareiss)
elimination: each division in the update step is exact, so no rationals
and no floating point appear.  The optional modular screen only ever
*proves* a determinant nonzero; a zero residue falls back to the exact path.
"""

from __future__ import annotations

from typing import Iterable, Sequence

# 61-bit primes for the modular screen.
_SCREEN_PRIMES = (2305843009213693951, 2305843009213693921, 2305843009213693907)


class BigIntMatrix:
    """Immutable dense integer matrix stored row-major as nested tuples."""

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Sequence[int]], ncols: int | None = None):
        data = tuple(tuple(int(x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        if any(len(row) != ncols for row in data):
            raise ValueError("ragged rows")
        self._rows = data
        self.nrows = len(data)
        self.ncols = ncols

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def transpose(self) -> "BigIntMatrix":
        return BigIntMatrix(zip(*self._rows), ncols=self.nrows)

    def __getitem__(self, idx):
        i, j = idx
        return self._rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, BigIntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash((self.shape, self._rows))

    def __repr__(self):
        return f"BigIntMatrix({[list(r) for r in self._rows]!r})"

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._rows]


def _as_rows(M) -> list[list[int]]:
    if isinstance(M, BigIntMatrix):
        return [list(r) for r in M.rows]
    return [[int(x) for x in row] for row in M]


def determinant(M) -> int:
    """Exact determinant by Bareiss elimination with row pivoting."""
    a = _as_rows(M)
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def determinant_mod(M, p: int) -> int:
    """Determinant modulo a prime p, by Gaussian elimination over GF(p)."""
    a = [[x % p for x in row] for row in _as_rows(M)]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant needs a square matrix")
    det = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det = det * a[k][k] % p
        inv = pow(a[k][k], -1, p)
        row_k = a[k]
        for i in range(k + 1, n):
            f = a[i][k] * inv % p
            if f:
                row_i = a[i]
                for j in range(k, n):
                    row_i[j] = (row_i[j] - f * row_k[j]) % p
    return det % p


def is_nonsingular(M, fast: bool = False) -> bool:
    """True iff det(M) != 0.

    With ``fast`` the determinant is first reduced modulo a few large primes;
    a nonzero residue certifies a nonzero determinant.  If every residue is
    zero the exact determinant decides.
    """
    if fast:
        rows = _as_rows(M)
        for p in _SCREEN_PRIMES:
            if determinant_mod(rows, p):
                return True
        return determinant(rows) != 0
    return determinant(M) != 0


def rank(M) -> int:
    """Exact rank over Q.

    Fraction-free elimination; the pivot is the first nonzero entry met in a
    row-major scan of the remaining submatrix.
    """
    a = [row for row in _as_rows(M) if any(row)]
    if not a:
        return 0
    ncols = len(a[0])
    r = 0
    prev = 1
    cols = list(range(ncols))
    while r < len(a):
        found = None
        for i in range(r, len(a)):
            for j in cols:
                if a[i][j] != 0:
                    found = (i, j)
                    break
            if found:
                break
        if found is None:
            break
        i, j = found
        a[r], a[i] = a[i], a[r]
        cols.remove(j)
        pivot = a[r][j]
        row_r = a[r]
        for i in range(r + 1, len(a)):
            row_i = a[i]
            aij = row_i[j]
            for c in cols:
                row_i[c] = (pivot * row_i[c] - aij * row_r[c]) // prev
            row_i[j] = 0
        prev = pivot
        r += 1
    return r


def in_span(v: Sequence[int], basis: Sequence[Sequence[int]]) -> bool:
    """True iff v is a rational combination of the basis vectors."""
    width = len(v)
    if any(len(b) != width for b in basis):
        raise ValueError("vectors of different length")
    if not any(v):
        return True
    if not basis:
        return False
    return rank(list(basis)) == rank(list(basis) + [list(v)])
