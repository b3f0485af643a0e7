"""Point-count bounds that rule switchings out wholesale.

The trace quotient of L cuts out the affine curve y^q - y = L(x)/x.
Its rational point count is N = 1 + q * #{x : Tr(L(x)/x) = 0} (one
point at infinity), and the genus of a smooth model is governed by a
digit statistic of the exponents of L: for every j invertible mod
q^n - 1 put

    ell(j) = max over supported i >= 1 of Lead(Res(j (q^i - 1))),

with Res the residue mod q^n - 1 and Lead the smallest member of the
p-cyclotomic coset mod p^(mn) - 1; then ell = min_j ell(j) (ties to the
smallest j) and genus = (q-1)(ell-1)/2.  The Weil-Serre window
|N - (q^n + 1)| <= genus * floor(2 q^(n/2)) then turns into a pair of
impossibility verdicts: a predicate-passing L forces N = 1 when
Tr(a_0) != 0 and N = q + 1 when Tr(a_0) = 0, so if the window cannot
reach that low the predicate has no passing L of that shape.

Everything is exact integer arithmetic; floor(2 q^(n/2)) is isqrt(4 q^n).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .linpoly import trace_quotient


def canonical_residue(j, q, n):
    """j mod q^n - 1, in 0..q^n - 2."""
    return j % (q**n - 1)


def coset_leader(j, p, mn):
    """Smallest member of the p-cyclotomic coset of j mod p^mn - 1."""
    N = p**mn - 1
    j %= N
    best = j
    cur = (j * p) % N
    while cur != j:
        if cur < best:
            best = cur
        cur = (cur * p) % N
    return best


def min_max_leader(L):
    """(ell, argmin j) over j in 1..q^n-2 coprime to q^n - 1.

    Needs at least one supported coefficient index i >= 1.
    """
    ctx = L.ctx
    support = [i for i in range(1, ctx.n) if L.coeffs[i]]
    if not support:
        raise ValueError("all higher coefficients vanish; the statistic is undefined")
    q, n, p, mn = ctx.q, ctx.n, ctx.p, ctx.m * ctx.n
    N = q**n - 1
    cache = {}

    def lead(v):
        if v not in cache:
            cache[v] = coset_leader(v, p, mn)
        return cache[v]

    best = None
    best_j = None
    for j in range(1, N):
        if gcd(j, N) != 1:
            continue
        lj = max(lead(canonical_residue(j * (q**i - 1), q, n)) for i in support)
        if best is None or lj < best:
            best, best_j = lj, j
    return best, best_j


def serre_term(q, n):
    """floor(2 q^(n/2)) computed exactly as isqrt(4 q^n)."""
    return isqrt(4 * q**n)


def leader_thresholds(q, n):
    """Minimum ell a passing L must reach, per trace case.

    (threshold when Tr(a_0) != 0, threshold when Tr(a_0) = 0).
    """
    s = serre_term(q, n)
    t_nonzero = 1 + -(-2 * q**n // ((q - 1) * s))
    t_zero = 1 + -(-2 * (q**n - q) // ((q - 1) * s))
    return t_nonzero, t_zero


def rational_point_count(L):
    """N = 1 + q * #{x in F_{q^n} : Tr(L(x)/x) = 0} (x = 0 counts via a_0)."""
    ctx = L.ctx
    zeros = sum(1 for x in ctx.elements() if trace_quotient(L, x) == 0)
    return 1 + ctx.q * zeros


@dataclass(frozen=True)
class CurveBoundReport:
    ell: int
    argmin_j: int
    genus: int
    serre_term: int
    trace_zero: bool
    point_count: int
    impossible_nonzero_trace: bool
    impossible_zero_trace: bool
    threshold_nonzero_trace: int
    threshold_zero_trace: int
    meets_threshold: bool

    def to_dict(self):
        return {
            "ell": self.ell,
            "argmin_j": self.argmin_j,
            "genus": self.genus,
            "serre_term": self.serre_term,
            "trace_zero": self.trace_zero,
            "point_count": self.point_count,
            "impossible_nonzero_trace": self.impossible_nonzero_trace,
            "impossible_zero_trace": self.impossible_zero_trace,
            "threshold_nonzero_trace": self.threshold_nonzero_trace,
            "threshold_zero_trace": self.threshold_zero_trace,
            "meets_threshold": self.meets_threshold,
        }


def curve_verdicts(L):
    """Bundle ell, genus, Serre window verdicts and thresholds for L.

    ``impossible_nonzero_trace`` says: no L with this exponent support
    passes the predicate with Tr(a_0) != 0.  Same for the zero-trace
    case with its weaker requirement N = q + 1.
    """
    ctx = L.ctx
    q, n = ctx.q, ctx.n
    ell, argmin_j = min_max_leader(L)
    prod = (q - 1) * (ell - 1)
    if prod % 2:
        from .errors import ConsistencyError

        raise ConsistencyError("(q-1)(ell-1) must be even", witness=(q, ell))
    genus = prod // 2
    s = serre_term(q, n)
    window = genus * s
    t_nonzero, t_zero = leader_thresholds(q, n)
    trace_zero = ctx.rel_trace(L.coeffs[0]) == 0
    threshold = t_zero if trace_zero else t_nonzero
    return CurveBoundReport(
        ell=ell,
        argmin_j=argmin_j,
        genus=genus,
        serre_term=s,
        trace_zero=trace_zero,
        point_count=rational_point_count(L),
        impossible_nonzero_trace=q**n + 1 - window > 1,
        impossible_zero_trace=q**n + 1 - window > q + 1,
        threshold_nonzero_trace=t_nonzero,
        threshold_zero_trace=t_zero,
        meets_threshold=ell >= threshold,
    )


__all__ = [
    "canonical_residue",
    "coset_leader",
    "min_max_leader",
    "serre_term",
    "leader_thresholds",
    "rational_point_count",
    "CurveBoundReport",
    "curve_verdicts",
]
