"""The greedy sequence eta_k, its twin, and the inequalities behind minimality.

f_k is the linear functional <(k, 1-k), .>.  Its values on the two
generators of A_n's image directions, (1, 0) and (n, n+1), are k and
n + 1 - k; both are positive for 1 <= k <= n, which is what makes every
maximum in the greedy step an exact floor division.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .eta import (
    EtaSequence,
    base_vectors,
    enumerate_omega,
    j_of_eta,
    translated_staircase,
)
from .multiindex import LatticePoint, apply_An, enumerate_lambda, leq, m_of
from .nashfan import is_in_S


def f_k(k: int, v: Sequence[int]) -> int:
    return k * v[0] + (1 - k) * v[1]


def _check_k(n: int, k: int) -> None:
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in 1..{n}, got {k}")


def _partial(d: Sequence[int], upto: int, parity: int) -> int:
    """Sum of d[j] for j <= upto with j % 2 == parity."""
    return sum(d[j] for j in range(parity, upto + 1, 2))


@dataclass
class EtaKTrace:
    n: int
    k: int
    z: int
    t: list[int] = field(default_factory=list)  # t_1, t_2, ...
    s: list[int] = field(default_factory=list)
    d: list[int] = field(default_factory=lambda: [0])

    @property
    def eta(self) -> EtaSequence:
        return EtaSequence(self.z, tuple(self.d))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "z": self.z,
            "f_k(1,0)": self.k,
            "f_k(n,n+1)": self.n + 1 - self.k,
            "steps": [
                {"l": l, "t": t, "s": s, "remaining": rem, "d": d}
                for l, (t, s, rem, d) in enumerate(
                    zip(self.t, self.s, self._remaining(), self.d[1:]), start=1
                )
            ],
            "eta": list(self.eta.as_tuple()),
        }

    def _remaining(self):
        acc = 0
        for d in self.d[1:]:
            yield self.n - acc
            acc += d


def eta_k_trace(n: int, k: int) -> EtaKTrace:
    """Run the greedy construction of eta_k, keeping every t_l, s_l, d_l."""
    _check_k(n, k)
    e1 = k  # f_k((1, 0))
    e2 = n + 1 - k  # f_k((n, n+1))
    z = 1 if e1 <= e2 else 0
    tr = EtaKTrace(n, k, z)
    d = tr.d
    while sum(d) < n:
        l = len(d)
        evens = _partial(d, l - 1, 0) + 1
        odds = _partial(d, l - 1, 1) + 1
        if z == 1:
            t = (evens * e2) // e1 if l % 2 else (odds * e1) // e2
        else:
            t = (evens * e1) // e2 if l % 2 else (odds * e2) // e1
        if l == 1:
            s = 0
        elif l % 2:
            s = _partial(d, l - 1, 1)
        else:
            s = _partial(d, l - 1, 0)
        dl = min(n - sum(d), t - s)
        if dl <= 0:
            raise RuntimeError(f"eta_k construction produced d_{l} = {dl} for n={n}, k={k}")
        tr.t.append(t)
        tr.s.append(s)
        d.append(dl)
    return tr


def build_eta_k(n: int, k: int) -> EtaSequence:
    return eta_k_trace(n, k).eta


def twin_eta(n: int, k: int) -> EtaSequence:
    """eta_k with its last part d_r split as (d_r - 1, 1)."""
    eta = build_eta_k(n, k)
    if eta.d[-1] < 2:
        raise RuntimeError(f"last part of eta_{k} is {eta.d[-1]} < 2 for n={n}; no split twin")
    return EtaSequence(eta.z, (*eta.d[:-1], eta.d[-1] - 1, 1))


def m_of_eta(n: int, eta: EtaSequence) -> LatticePoint:
    return m_of(n, j_of_eta(n, eta))


@dataclass
class EtaKReport:
    n: int
    k: int
    eta_k: EtaSequence
    twin: EtaSequence | None
    twin_source: str  # "split" or "search" or "none"
    m_k: LatticePoint
    m_twin: LatticePoint | None
    f_value: int
    f_twin: int | None
    eta_k_in_S: bool
    twin_in_S: bool
    family_min: bool
    family_min_value: int
    trace: EtaKTrace
    notes: list[str] = field(default_factory=list)

    @property
    def checks(self) -> dict[str, bool]:
        return {
            "eta_k_in_S": self.eta_k_in_S,
            "twin_found": self.twin is not None,
            "twin_in_S": self.twin_in_S,
            "twin_equal_f": self.f_twin == self.f_value,
            "twin_distinct_m": self.m_twin is not None and self.m_twin != self.m_k,
            "family_min": self.family_min,
        }

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "ray": [self.k, 1 - self.k],
            "eta_k": list(self.eta_k.as_tuple()),
            "twin": list(self.twin.as_tuple()) if self.twin else None,
            "twin_source": self.twin_source,
            "m_k": list(self.m_k),
            "m_twin": list(self.m_twin) if self.m_twin else None,
            "f_value": self.f_value,
            "family_min_value": self.family_min_value,
            "checks": self.checks,
            "passed": self.passed,
            "trace": self.trace.to_json(),
            "notes": list(self.notes),
        }


def verify_main(n: int, k: int, fast: bool = False) -> EtaKReport:
    """Check that (k, 1-k) is a ray of the family fan, with two witnesses.

    Failures are recorded in the report rather than raised.
    """
    _check_k(n, k)
    trace = eta_k_trace(n, k)
    eta = trace.eta
    m_k = m_of_eta(n, eta)
    f_val = f_k(k, m_k)
    notes = []

    family = {e: m_of_eta(n, e) for e in enumerate_omega(n)}
    fam_min = min(f_k(k, m) for m in family.values())

    twin, source = None, "none"
    if eta.d[-1] >= 2:
        twin, source = twin_eta(n, k), "split"
    else:
        notes.append(f"last part of eta_k is {eta.d[-1]}; searched Omega for a twin")
        for e, m in family.items():
            if e != eta and m != m_k and f_k(k, m) == f_val:
                twin, source = e, "search"
                break
    m_twin = family[twin] if twin is not None else None
    return EtaKReport(
        n=n,
        k=k,
        eta_k=eta,
        twin=twin,
        twin_source=source,
        m_k=m_k,
        m_twin=m_twin,
        f_value=f_val,
        f_twin=f_k(k, m_twin) if m_twin is not None else None,
        eta_k_in_S=is_in_S(n, j_of_eta(n, eta), fast=fast),
        twin_in_S=twin is not None and is_in_S(n, j_of_eta(n, twin), fast=fast),
        family_min=f_val <= fam_min,
        family_min_value=fam_min,
        trace=trace,
        notes=notes,
    )


# -- instance checks of the supporting inequalities --------------------------


def _segment_heads(n: int, eta: EtaSequence) -> list[LatticePoint]:
    """The points v_i + r_i (1, 1), i = 1..n."""
    tp = translated_staircase(n, eta)
    return [seg[0] for seg in tp.segments[1:]]


def check_eta_k_monotone(n: int, k: int) -> bool:
    """Growth of f_k along the segment heads of T' for eta_k.

    Checks, for every i: f_k of the shifted head equals f_k(v_i) + n y_i and
    stays under the block bound; heads never decrease in f_k; and two equal
    consecutive values are followed by a jump of at least 2 over the one
    before them.
    """
    _check_k(n, k)
    eta = build_eta_k(n, k)
    d = eta.d
    vs = base_vectors(n, eta)
    heads = _segment_heads(n, eta)
    g = [f_k(k, h) for h in heads]  # f_k(v_i) + r_i == f_k(v_i + r_i (1,1))
    e1, e2 = k, n + 1 - k

    for i in range(1, n + 1):
        l, _ = eta.block_of(i)
        val = f_k(k, vs[i - 1]) + n * vs[i - 1].y
        if val != g[i - 1]:
            return False
        evens = _partial(d, l, 0) + 1
        odds = _partial(d, l, 1) + 1
        if eta.z == 1:
            bound = evens * e2 if l % 2 else odds * e1
        else:
            bound = evens * e1 if l % 2 else odds * e2
        if val > bound:
            return False

    # monotone over all pairs covers the within-block case too
    for i in range(1, n + 1):
        for i2 in range(i + 1, n + 1):
            if g[i - 1] > g[i2 - 1]:
                return False

    for l in range(3, n + 1):
        if g[l - 1] == g[l - 2] and g[l - 1] < g[l - 3] + 2:
            return False
    return True


def check_last_vector(n: int, k: int) -> bool:
    """v_n of eta_k is (0, k) or (n - k + 1, 0)."""
    vs = base_vectors(n, build_eta_k(n, k))
    return vs[-1] in (LatticePoint(0, k), LatticePoint(n - k + 1, 0))


def off_staircase_lines(n: int, eta: EtaSequence, beta: Sequence[int]) -> bool:
    """A_n beta avoids the main diagonal and every line v_j + N(1, 1)."""
    x, y = apply_An(n, beta)
    diffs = {0} | {v.x - v.y for v in base_vectors(n, eta)}
    return x - y not in diffs


def check_lower_bounds(n: int, k: int, sample: Iterable[Sequence[int]] | None = None, q_extra: int | None = None) -> bool:
    """Instance checks of the three inequalities used for minimality.

    * f_k(A_n b') <= f_k(A_n b) for every comparable pair b' <= b of the sample;
    * f_k(A_n b) >= f_k(v) for all v in T'_{eta_k}, for sample elements whose
      image avoids the staircase lines;
    * f_k(v_l + q(1,1)) >= f_k(u) for u in T_0 and the first l shifted
      segments, for q from n - l + 1 + r_l up to ``q_extra`` more.
    """
    _check_k(n, k)
    sample = [tuple(b) for b in (enumerate_lambda(3, n) if sample is None else sample)]
    q_extra = 3 * n if q_extra is None else q_extra
    fk = [f_k(k, apply_An(n, b)) for b in sample]
    for i, b in enumerate(sample):
        for j, b2 in enumerate(sample):
            if leq(b2, b) and fk[j] > fk[i]:
                return False

    eta = build_eta_k(n, k)
    tp = translated_staircase(n, eta)
    top = max(f_k(k, v) for v in tp.points)
    for i, b in enumerate(sample):
        if off_staircase_lines(n, eta, b) and fk[i] < top:
            return False

    vs = base_vectors(n, eta)
    for l in range(1, n + 1):
        prefix = [p for seg in tp.segments[: l + 1] for p in seg]
        bound = max(f_k(k, u) for u in prefix)
        lo = n - l + 1 + tp.shifts[l - 1]
        v = vs[l - 1]
        for q in range(lo, lo + q_extra + 1):
            if f_k(k, (v.x + q, v.y + q)) < bound:
                return False
    return True


def family_minimum(n: int, k: int) -> tuple[int, list[EtaSequence]]:
    """min over Omega of f_k(m_{J_eta}) and the sequences attaining it."""
    vals = {e: f_k(k, m_of_eta(n, e)) for e in enumerate_omega(n)}
    best = min(vals.values())
    return best, [e for e, v in vals.items() if v == best]
