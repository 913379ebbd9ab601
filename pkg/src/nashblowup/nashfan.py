"""Jacobian minors, the point set I_n and the fan of its order function.

The fan lives in the cone sigma_n spanned by (0, 1) and (n+1, -n).  For a
finite point cloud P the order function v -> min_{p in P} <v, p> is
piecewise linear on sigma_n; its linearity domains are 2D cones whose
interior rays are the inner normals of the bounded edges of the Newton
polyhedron conv(P) + sigma_n^dual.  We compute them by sweeping the
direction from (0, 1) to (n+1, -n) and recording every change of minimizer.
All arithmetic is on ints and Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd
from typing import Iterable, Mapping, Sequence

from .exactlinalg import BigIntMatrix, determinant, is_nonsingular
from .multiindex import (
    LatticePoint,
    MultiIndex,
    apply_An,
    bar_lift,
    binom_product,
    lambda_position,
    lambda_size,
)


def sigma_generators(n: int) -> tuple[LatticePoint, LatticePoint]:
    return LatticePoint(0, 1), LatticePoint(n + 1, -n)


def dual_generators(n: int) -> tuple[LatticePoint, LatticePoint]:
    """Generators of the dual cone of sigma_n (recession rays of the polyhedron)."""
    return LatticePoint(1, 0), LatticePoint(n, n + 1)


def in_sigma(n: int, v: Sequence[int]) -> bool:
    return all(g[0] * v[0] + g[1] * v[1] >= 0 for g in dual_generators(n))


def primitive(v: Sequence[int]) -> LatticePoint:
    g = gcd(v[0], v[1])
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return LatticePoint(v[0] // g, v[1] // g)


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return u[0] * v[0] + u[1] * v[1]


def cross(u: Sequence[int], v: Sequence[int]) -> int:
    return u[0] * v[1] - u[1] * v[0]


# -- Jacobian minors ---------------------------------------------------------


@lru_cache(maxsize=None)
def c_vector(n: int, beta: MultiIndex) -> tuple[int, ...]:
    """sum over gamma <= beta of (-1)^{|beta-gamma|} C(beta, gamma) bar(A_n gamma)."""
    beta = tuple(beta)
    if beta not in lambda_position(3, n):
        raise ValueError(f"{beta} is not in Lambda_(3,{n})")
    acc = [0] * lambda_size(2, n)
    for gamma in product(*(range(b + 1) for b in beta)):
        if not any(gamma):
            continue  # bar((0,0)) = 0
        coef = binom_product(beta, gamma)
        if (sum(beta) - sum(gamma)) % 2:
            coef = -coef
        for i, x in enumerate(bar_lift(apply_An(n, gamma), n)):
            if x:
                acc[i] += coef * x
    return tuple(acc)


def canonical_order(n: int, J: Iterable[Sequence[int]]) -> tuple[MultiIndex, ...]:
    pos = lambda_position(3, n)
    J = {tuple(b) for b in J}
    bad = [b for b in J if b not in pos]
    if bad:
        raise ValueError(f"{bad[0]} is not in Lambda_(3,{n})")
    return tuple(sorted(J, key=pos.__getitem__))


def l_matrix(n: int, J: Iterable[Sequence[int]]) -> BigIntMatrix:
    J = canonical_order(n, J)
    if len(J) != lambda_size(2, n):
        raise ValueError(f"|J| must be {lambda_size(2, n)}, got {len(J)}")
    return BigIntMatrix(c_vector(n, b) for b in J)


def is_in_S(n: int, J: Iterable[Sequence[int]], fast: bool = False) -> bool:
    return is_nonsingular(l_matrix(n, J), fast=fast)


def l_determinant(n: int, J: Iterable[Sequence[int]]) -> int:
    return determinant(l_matrix(n, J))


# -- point clouds and the order function -------------------------------------


@dataclass
class PointCloud:
    """Deduplicated lattice points with optional witness labels per point."""

    n: int
    witnesses: dict[LatticePoint, list] = field(default_factory=dict)

    @classmethod
    def from_points(cls, n: int, points: Iterable[Sequence[int]]) -> "PointCloud":
        cloud = cls(n)
        for p in points:
            cloud.add(p)
        return cloud

    def add(self, p: Sequence[int], witness=None) -> None:
        p = LatticePoint(int(p[0]), int(p[1]))
        if p.x < 0 or p.y < 0:
            raise ValueError(f"point cloud entries must be nonnegative, got {p}")
        bucket = self.witnesses.setdefault(p, [])
        if witness is not None:
            bucket.append(witness)

    @property
    def points(self) -> list[LatticePoint]:
        return sorted(self.witnesses)

    def __len__(self):
        return len(self.witnesses)

    def __contains__(self, p):
        return LatticePoint(*p) in self.witnesses

    def union(self, other: "PointCloud") -> "PointCloud":
        if other.n != self.n:
            raise ValueError("point clouds for different n")
        out = PointCloud(self.n)
        for cloud in (self, other):
            for p, ws in cloud.witnesses.items():
                out.witnesses.setdefault(p, []).extend(ws)
        return out


def _points_of(points) -> list[LatticePoint]:
    if isinstance(points, PointCloud):
        return points.points
    return sorted({LatticePoint(int(p[0]), int(p[1])) for p in points})


def ord_value(points, v: Sequence[int]) -> tuple[int, list[LatticePoint]]:
    """min over the cloud of <v, p>, and the sorted list of minimizers."""
    pts = _points_of(points)
    if not pts:
        raise ValueError("order function of an empty point set")
    values = [dot(v, p) for p in pts]
    best = min(values)
    return best, [p for p, val in zip(pts, values) if val == best]


# -- fans ---------------------------------------------------------------------


@dataclass(frozen=True)
class Cone:
    rays: tuple[int, int]  # indices into Fan2D.rays
    m: LatticePoint | None = None
    witnesses: tuple = ()


@dataclass(frozen=True)
class Fan2D:
    n: int
    rays: tuple[LatticePoint, ...]
    cones: tuple[Cone, ...]
    points: tuple[LatticePoint, ...] = ()

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "rays": [list(r) for r in self.rays],
            "cones": [
                {
                    "rays": list(c.rays),
                    "m": list(c.m) if c.m is not None else None,
                    "witnesses": [_jsonable(w) for w in c.witnesses],
                }
                for c in self.cones
            ],
            "points": [list(p) for p in self.points],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Fan2D":
        rays = tuple(LatticePoint(*r) for r in data["rays"])
        cones = tuple(
            Cone(tuple(c["rays"]), LatticePoint(*c["m"]) if c.get("m") is not None else None, tuple(c.get("witnesses", ())))
            for c in data["cones"]
        )
        return cls(data["n"], rays, cones, tuple(LatticePoint(*p) for p in data.get("points", ())))


def _jsonable(w):
    if isinstance(w, (list, tuple)):
        return [_jsonable(x) for x in w]
    if hasattr(w, "as_tuple"):
        return list(w.as_tuple())
    return w


def _fan_from_rays(n: int, rays: Sequence[LatticePoint], tags=None, points=()) -> Fan2D:
    cones = []
    for i in range(len(rays) - 1):
        m, ws = tags[i] if tags else (None, ())
        cones.append(Cone((i, i + 1), m, tuple(ws)))
    return Fan2D(n, tuple(rays), tuple(cones), tuple(points))


def newton_fan(points, n: int | None = None, max_witnesses: int = 3) -> Fan2D:
    """Linearity domains of the order function of ``points`` on sigma_n.

    The direction v(theta) = (1 - theta) g0 + theta g1 sweeps sigma_n from
    g0 = (0, 1) to g1 = (n+1, -n).  While p is the minimizer, a competitor q
    with <g1, q - p> < 0 overtakes it at theta = a / (a - b), where
    a = <g0, q - p> and b = <g1, q - p>; the ray there is a g1 - b g0.
    """
    if isinstance(points, PointCloud):
        n = points.n if n is None else n
        wit = points.witnesses
    else:
        wit = {}
    if n is None:
        raise ValueError("n is required for a bare point list")
    pts = _points_of(points)
    if not pts:
        raise ValueError("Newton fan of an empty point set")
    g0, g1 = sigma_generators(n)
    drift = (g1[0] - g0[0], g1[1] - g0[1])

    def pick(cands):
        return min(cands, key=lambda q: (dot(drift, q), q))

    _, start = ord_value(pts, g0)
    current = pick(start)
    theta = Fraction(0)
    rays = [g0]
    tags = []
    while True:
        best_theta = None
        ray = None
        for q in pts:
            a = dot(g0, (q[0] - current[0], q[1] - current[1]))
            b = dot(g1, (q[0] - current[0], q[1] - current[1]))
            if b >= 0:
                continue
            th = Fraction(a, a - b)
            if th <= theta:
                continue
            if best_theta is None or th < best_theta:
                best_theta = th
                ray = primitive((a * g1[0] - b * g0[0], a * g1[1] - b * g0[1]))
        tags.append((current, wit.get(current, [])[:max_witnesses]))
        if best_theta is None:
            break
        _, tied = ord_value(pts, ray)
        nxt = pick(tied)
        if nxt == current:
            raise AssertionError("Newton fan sweep did not advance")
        rays.append(ray)
        theta = best_theta
        current = nxt
    rays.append(g1)
    return _fan_from_rays(n, rays, tags, pts)


def minimal_resolution_fan(n: int) -> Fan2D:
    """sigma_n subdivided by the rays (k, 1-k), k = 1..n."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    rays = [LatticePoint(k, 1 - k) for k in range(0, n + 2)]
    rays[-1] = LatticePoint(n + 1, -n)
    return _fan_from_rays(n, rays)


def ray_present(points, k: int, n: int | None = None) -> tuple[bool, tuple[LatticePoint, LatticePoint] | None]:
    """Whether (k, 1-k) separates two distinct minimizers of the order function."""
    if isinstance(points, PointCloud):
        n = points.n if n is None else n
    if n is not None and not 1 <= k <= n:
        raise ValueError(f"k must lie in 1..{n}, got {k}")
    _, mins = ord_value(points, (k, 1 - k))
    if len(mins) < 2:
        return False, None
    return True, (mins[0], mins[-1])


def validate_fan(fan: Fan2D) -> None:
    """Raise ValueError unless the fan is a well-formed subdivision of sigma_n."""
    g0, g1 = sigma_generators(fan.n)
    if fan.rays[0] != g0 or fan.rays[-1] != g1:
        raise ValueError("fan must start at (0,1) and end at (n+1,-n)")
    for r in fan.rays:
        if gcd(r[0], r[1]) != 1 or not in_sigma(fan.n, r):
            raise ValueError(f"ray {r} is not a primitive vector of sigma_n")
    for u, v in zip(fan.rays, fan.rays[1:]):
        if cross(u, v) >= 0:
            raise ValueError(f"rays {u}, {v} are not in clockwise order")
    if [c.rays for c in fan.cones] != [(i, i + 1) for i in range(len(fan.rays) - 1)]:
        raise ValueError("cones must be the consecutive ray pairs")


def refines(fine: Fan2D, coarse: Fan2D) -> bool:
    """True iff every cone of ``fine`` lies inside a cone of ``coarse``."""
    if fine.n != coarse.n:
        raise ValueError(f"fans over different cones: n={fine.n} vs n={coarse.n}")
    validate_fan(fine)
    validate_fan(coarse)
    # ray lists are validated as angularly sorted, so ray containment puts
    # every fine cone between two consecutive coarse rays
    return set(coarse.rays) <= set(fine.rays)


def fan_rays_contain(fan: Fan2D, rays: Iterable[Sequence[int]]) -> bool:
    have = set(fan.rays)
    return all(LatticePoint(*r) in have for r in rays)


def family_points(n: int) -> PointCloud:
    """m_{J_eta} for every eta in Omega, deduplicated, witnesses kept."""
    from .eta import enumerate_omega, j_of_eta
    from .multiindex import m_of

    cloud = PointCloud(n)
    for eta in enumerate_omega(n):
        cloud.add(m_of(n, j_of_eta(n, eta)), eta)
    return cloud
