"""Staircase sequences and the point sets built from them.

An :class:`EtaSequence` is a parity bit ``z`` together with a composition
``d = (0, d1, ..., dr)`` of n.  Each sequence places n vectors on the two
coordinate axes of N^2, one per index j, alternating axes block by block.
From those axis vectors we grow diagonal segments (the staircase ``T``),
shift the segments that start on the y-axis (``T'``) and pull the shifted
set back along A_n to an index set ``J`` in Lambda_{3,n}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterator, Sequence

from .multiindex import LatticePoint, MultiIndex, apply_An, bar_lift, enumerate_lambda, lambda_size


@dataclass(frozen=True, order=True)
class EtaSequence:
    z: int
    d: tuple[int, ...]  # d[0] == 0

    def __post_init__(self):
        if self.z not in (0, 1):
            raise ValueError(f"z must be 0 or 1, got {self.z}")
        if not self.d or self.d[0] != 0:
            raise ValueError("d must start with d0 = 0")
        if len(self.d) < 2 or any(x < 1 for x in self.d[1:]):
            raise ValueError(f"parts d1..dr must be positive, got {self.d}")

    @property
    def n(self) -> int:
        return sum(self.d)

    @property
    def r(self) -> int:
        return len(self.d) - 1

    def as_tuple(self) -> tuple[int, ...]:
        return (self.z, *self.d)

    def __str__(self):
        return "(" + ",".join(map(str, self.as_tuple())) + ")"

    @classmethod
    def from_tuple(cls, seq: Sequence[int]) -> "EtaSequence":
        """Build from (z, d0, d1, ..., dr); d0 may be omitted.

        Parts after d0 are positive, so a zero in second position can only
        be d0.
        """
        seq = [int(x) for x in seq]
        if len(seq) < 2:
            raise ValueError(f"sequence too short: {seq}")
        z, rest = seq[0], seq[1:]
        if rest[0] != 0:
            rest = [0] + rest
        return cls(z, tuple(rest))

    @classmethod
    def parse(cls, text: str) -> "EtaSequence":
        return cls.from_tuple([int(tok) for tok in text.replace("(", "").replace(")", "").split(",") if tok.strip()])

    def block_of(self, j: int) -> tuple[int, int]:
        """Return (t, c) with j = d0 + ... + d_{t-1} + c and 0 < c <= d_t."""
        if not 1 <= j <= self.n:
            raise ValueError(f"index {j} outside 1..{self.n}")
        acc = 0
        for t in range(1, len(self.d)):
            if j <= acc + self.d[t]:
                return t, j - acc
            acc += self.d[t]
        raise AssertionError("unreachable")


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """Compositions of n in lexicographic order."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first, *rest)


def enumerate_omega(n: int) -> list[EtaSequence]:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    comps = sorted(compositions(n))
    return [EtaSequence(z, (0, *c)) for z, c in product((0, 1), comps)]


def _check(n: int, eta: EtaSequence) -> None:
    if eta.n != n:
        raise ValueError(f"{eta} is a sequence for n={eta.n}, not n={n}")


def axis_vector(eta: EtaSequence, j: int) -> LatticePoint:
    t, c = eta.block_of(j)
    odd = sum(eta.d[i] for i in range(1, t, 2))
    even = sum(eta.d[i] for i in range(0, t, 2))
    if eta.z == 1:
        return LatticePoint(odd + c, 0) if t % 2 else LatticePoint(0, even + c)
    return LatticePoint(0, odd + c) if t % 2 else LatticePoint(even + c, 0)


def base_vectors(n: int, eta: EtaSequence) -> list[LatticePoint]:
    """v_{1,eta}, ..., v_{n,eta}."""
    _check(n, eta)
    return [axis_vector(eta, j) for j in range(1, n + 1)]


def _segment(start: Sequence[int], length: int, shift: int = 0) -> list[LatticePoint]:
    x, y = start
    return [LatticePoint(x + shift + p, y + shift + p) for p in range(length)]


@dataclass(frozen=True)
class StaircaseData:
    eta: EtaSequence
    base_vectors: tuple[LatticePoint, ...]
    segments: tuple[tuple[LatticePoint, ...], ...]  # T_0, T_1, ..., T_n

    @property
    def n(self) -> int:
        return self.eta.n

    @property
    def points(self) -> list[LatticePoint]:
        return [p for seg in self.segments for p in seg]

    @cached_property
    def point_set(self) -> frozenset[LatticePoint]:
        return frozenset(self.points)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "eta": list(self.eta.as_tuple()),
            "base_vectors": [list(v) for v in self.base_vectors],
            "segments": [[list(p) for p in seg] for seg in self.segments],
        }


def staircase(n: int, eta: EtaSequence) -> StaircaseData:
    vs = base_vectors(n, eta)
    segs = [tuple(_segment((1, 1), n))]
    for j, v in enumerate(vs, start=1):
        segs.append(tuple(_segment(v, n - j + 1)))
    return StaircaseData(eta, tuple(vs), tuple(segs))


@dataclass(frozen=True)
class TranslatedStaircase:
    eta: EtaSequence
    shifts: tuple[int, ...]  # r_1, ..., r_n
    segments: tuple[tuple[LatticePoint, ...], ...]  # T_0, T_1 + r_1, ...

    @property
    def n(self) -> int:
        return self.eta.n

    @property
    def points(self) -> list[LatticePoint]:
        return [p for seg in self.segments for p in seg]

    @cached_property
    def point_set(self) -> frozenset[LatticePoint]:
        return frozenset(self.points)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "eta": list(self.eta.as_tuple()),
            "shifts": list(self.shifts),
            "segments": [[list(p) for p in seg] for seg in self.segments],
        }


def translated_staircase(n: int, eta: EtaSequence) -> TranslatedStaircase:
    vs = base_vectors(n, eta)
    shifts = tuple(n * v.y for v in vs)
    segs = [tuple(_segment((1, 1), n))]
    for j, (v, r) in enumerate(zip(vs, shifts), start=1):
        segs.append(tuple(_segment(v, n - j + 1, r)))
    return TranslatedStaircase(eta, shifts, tuple(segs))


def preimage(n: int, v: Sequence[int]) -> MultiIndex:
    """The beta with A_n beta = v among the three shapes used by T'.

    Raises ValueError when v has no preimage of the form (0,t,0), (q,s,0)
    or (0,s,q) with nonnegative entries and degree in 1..n.
    """
    x, y = v
    if x == y:
        beta = (0, x, 0)
    elif x > y:
        beta = (x - y, y, 0)
    else:
        q = y - x
        beta = (0, x - n * q, q)
    if min(beta) < 0 or not 1 <= sum(beta) <= n:
        raise ValueError(f"no preimage of {tuple(v)} in Lambda_(3,{n})")
    if apply_An(n, beta) != tuple(v):
        raise AssertionError(f"inverse of A_{n} is wrong at {tuple(v)}")
    return beta


def j_of_eta(n: int, eta: EtaSequence) -> tuple[MultiIndex, ...]:
    """J_eta in canonical (graded-lex) order."""
    tp = translated_staircase(n, eta)
    J = {preimage(n, v) for v in tp.points}
    if len(J) != len(tp.points):
        raise AssertionError(f"A_{n} is not injective on J for {eta}")
    order = {b: i for i, b in enumerate(enumerate_lambda(3, n))}
    return tuple(sorted(J, key=order.__getitem__))


def staircase_properties(n: int, eta: EtaSequence) -> dict[str, bool]:
    """Instance checks of the basic structural facts about T_eta.

    Keys: ``distinct_lifts`` (lifts of T are pairwise distinct),
    ``cardinality``, ``axis_bound`` (v_j's nonzero coordinate is at most j),
    ``box`` (every point of T lies in [0, n]^2), ``axis_downward`` (each axis
    value below v_j's is taken by an earlier v), ``prefix_saturated``.
    """
    st = staircase(n, eta)
    vs = st.base_vectors
    pts = st.points
    out = {
        "distinct_lifts": len({bar_lift(p, n) for p in pts}) == len(pts),
        "cardinality": len(st.point_set) == lambda_size(2, n)
        and len(st.segments[0]) == n
        and all(len(st.segments[j]) == n - j + 1 for j in range(1, n + 1)),
        "axis_bound": all((v.x == 0) != (v.y == 0) and max(v) <= j for j, v in enumerate(vs, 1)),
        "box": all(0 <= c <= n for p in pts for c in p),
    }
    down = True
    sat = True
    for j, v in enumerate(vs, 1):
        earlier = set(vs[: j - 1])
        axis = 1 if v.x == 0 else 0
        p = v[axis]
        unit = (lambda q: LatticePoint(0, q)) if axis else (lambda q: LatticePoint(q, 0))
        down = down and all(unit(q) in earlier for q in range(1, p))
        other = (lambda s: LatticePoint(s, 0)) if axis else (lambda s: LatticePoint(0, s))
        expected = {unit(q) for q in range(1, p + 1)} | {other(s) for s in range(1, j - p + 1)}
        sat = sat and set(vs[:j]) == expected
    out["axis_downward"] = down
    out["prefix_saturated"] = sat
    return out


def check_endpoint_order(n: int, eta: EtaSequence) -> bool:
    """Far ends of same-axis segments move inward, staying put only within a d-block.

    For l < j with v_l, v_j on the same axis, the axis coordinate of
    v_j + (n - j)(1, 1) is at most that of v_l + (n - l)(1, 1), with equality
    exactly when l and j fall in the same block of eta.
    """
    vs = base_vectors(n, eta)
    for l in range(1, n + 1):
        for j in range(l + 1, n + 1):
            a, b = vs[l - 1], vs[j - 1]
            if (a.x == 0) != (b.x == 0):
                continue
            axis = 1 if a.x == 0 else 0
            end_l = a[axis] + n - l
            end_j = b[axis] + n - j
            same_block = eta.block_of(l)[0] == eta.block_of(j)[0]
            if end_j > end_l or (end_j == end_l) != same_block:
                return False
    return True
