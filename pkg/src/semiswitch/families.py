"""Explicit predicate-passing families for extension degrees 2, 3, 4.

Each family comes with its published coefficient criterion:

* degree 2: ``a_1 X^q + a_0 X`` passes iff the companion quadratic
  ``X^2 + Tr(a_0) X + a_1^(q+1)`` has two distinct roots in F_q.
* degree 3: from parameters u, v (nonzero, N(-v/u) != 1), an admissible
  theta, and a scaling a != 0 one builds
  ``L = u^(q^2) v^q (u a^(q^2-1) X^(q^2) + v a^(q-1) X^q + theta X)``.
* degree 4 (q odd): the binomial ``a_1 X^(q^2) + a_0 X`` passes iff
  ``a_1^(q^2+1)`` is a nonzero square of F_q and Tr(a_0) = 0; the
  matching switched product ``xy + Tr(a_1 x y^(q^2) + a0t x y)`` with
  ``Tr(a0t) = -1`` is isotopic to a commutative semifield.

``classify`` bundles the family matches with the behaviour of the
induced switched multiplication (commutativity, commutative-isotopy
witness, nuclei).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError
from .linpoly import LinearizedPoly, switching_predicate
from .presemifield import (
    SwitchSpec,
    build_switch,
    commutative_isotopy_test,
    is_commutative,
    nuclei,
    unitalize,
    verify_presemifield,
)


@dataclass(frozen=True)
class FamilyInstance:
    kind: str
    params: dict
    poly: LinearizedPoly

    def to_dict(self):
        return {
            "kind": self.kind,
            "params": {k: v for k, v in self.params.items()},
            "poly": self.poly.to_dict(),
        }


# ---- degree 2 ----


def n2_criterion(ctx, a1, a0):
    """Two distinct roots of X^2 + Tr(a_0) X + a_1^(q+1) in F_q."""
    if ctx.n != 2:
        raise ValueError("criterion is for n = 2")
    t = ctx.rel_trace(a0)
    c = ctx.pow(a1, ctx.q + 1) if a1 else 0
    roots = 0
    for y in ctx.subfield(1):
        v = ctx.add(ctx.add(ctx.mul(y, y), ctx.mul(t, y)), c)
        if v == 0:
            roots += 1
    return roots == 2


def n2_lemma_roots(ctx, a1, a0):
    """Roots in F_{q^2} of a_1 y^2 + Tr(a_0) y + a_1^q = 0."""
    if ctx.n != 2:
        raise ValueError("lemma is for n = 2")
    t = ctx.rel_trace(a0)
    aq = ctx.frobenius(a1, 1)
    out = set()
    for y in ctx.elements():
        v = ctx.add(ctx.add(ctx.mul(a1, ctx.mul(y, y)), ctx.mul(t, y)), aq)
        if v == 0:
            out.add(y)
    return out


# ---- degree 3 ----


def theta_set(ctx, u, v):
    """Admissible theta values: Tr(u^(q^2) v^q x) = N(u) + N(v).

    Returned in a fixed order (zero first if admissible, then nonzero
    elements by ascending gamma power); always q^2 of them.
    """
    if ctx.n != 3:
        raise ValueError("theta set is for n = 3")
    if u == 0 or v == 0:
        raise ValueError("u and v must be nonzero")
    w = ctx.mul(ctx.frobenius(u, 2), ctx.frobenius(v, 1))
    rhs = ctx.add(ctx.rel_norm(u), ctx.rel_norm(v))
    out = [x for x in [0] if ctx.rel_trace(0) == rhs]
    out += [x for x in ctx.star_units() if ctx.rel_trace(ctx.mul(w, x)) == rhs]
    if len(out) != ctx.q**2:
        raise ConsistencyError("theta set size is not q^2", witness=len(out))
    return out


def n3_construct(ctx, u, v, theta, a=1):
    """Build the degree-3 family member for (u, v, theta, a)."""
    if ctx.n != 3:
        raise ValueError("construction is for n = 3")
    if u == 0 or v == 0 or a == 0:
        raise ValueError("u, v, a must be nonzero")
    ratio = ctx.neg(ctx.div(v, u))
    if ctx.rel_norm(ratio) == 1:
        raise ValueError("N(-v/u) = 1 is excluded")
    w = ctx.mul(ctx.frobenius(u, 2), ctx.frobenius(v, 1))
    rhs = ctx.add(ctx.rel_norm(u), ctx.rel_norm(v))
    if ctx.rel_trace(ctx.mul(w, theta)) != rhs:
        raise ValueError("theta is not admissible for (u, v)")
    q = ctx.q
    c2 = ctx.mul(w, ctx.mul(u, ctx.pow(a, q * q - 1)))
    c1 = ctx.mul(w, ctx.mul(v, ctx.pow(a, q - 1)))
    c0 = ctx.mul(w, theta)
    L = LinearizedPoly(ctx, (c0, c1, c2))
    if not switching_predicate(L):
        raise ConsistencyError(
            "degree-3 construction produced a failing polynomial",
            witness={"u": u, "v": v, "theta": theta, "a": a},
        )
    return FamilyInstance("n3", {"u": u, "v": v, "theta": theta, "a": a}, L)


def matches_n3(L):
    """Recover (u, v, theta, a) giving L the degree-3 family shape, or None.

    Solves the shape equations instead of enumerating the scaling: with
    w = u^(q^2) v^q, a_1/(w v) must be a norm-1 element t (then t =
    a^(q-1)), a_2 must equal w u t^(q+1), and theta = a_0/w must be
    admissible.  (u, v) runs over all nonzero pairs.
    """
    ctx = L.ctx
    if ctx.n != 3:
        return None
    c0, c1, c2 = L.coeffs
    if c1 == 0 or c2 == 0:
        return None
    q = ctx.q
    for u in ctx.star_units():
        for v in ctx.star_units():
            if ctx.rel_norm(ctx.neg(ctx.div(v, u))) == 1:
                continue
            w = ctx.mul(ctx.frobenius(u, 2), ctx.frobenius(v, 1))
            t = ctx.div(c1, ctx.mul(w, v))
            if ctx.rel_norm(t) != 1:
                continue
            if c2 != ctx.mul(w, ctx.mul(u, ctx.pow(t, q + 1))):
                continue
            theta = ctx.div(c0, w)
            rhs = ctx.add(ctx.rel_norm(u), ctx.rel_norm(v))
            if ctx.rel_trace(ctx.mul(w, theta)) == rhs:
                # norm-1 elements are exactly the (q-1)-th powers here,
                # so a solving a^(q-1) = t always exists
                a = 1 if t == 1 else ctx.from_index(ctx.log[t] // (q - 1))
                return u, v, theta, a
    return None


# ---- degree 4 ----


def is_square_in_base(ctx, x):
    """Whether x is a nonzero square of the base field F_q (q odd)."""
    if x == 0 or not ctx.in_subfield(x, 1):
        return False
    if ctx.p == 2:
        return True
    k = ctx.log[x]
    return (k // ctx.trace_step) % 2 == 0


def n4_criterion(ctx, a1, a0):
    """a_1^(q^2+1) a nonzero square of F_q and Tr(a_0) = 0 (q odd)."""
    if ctx.n != 4:
        raise ValueError("criterion is for n = 4")
    if ctx.p == 2:
        raise ValueError("criterion needs odd characteristic")
    if a1 == 0:
        raise ValueError("a_1 = 0 is the monomial case, not covered here")
    s = ctx.pow(a1, ctx.q**2 + 1)
    return is_square_in_base(ctx, s) and ctx.rel_trace(a0) == 0


def n4_commutative_op(ctx, a1, a0t):
    """Verified switched product xy + Tr(a_1 x y^(q^2) + a0t x y).

    Preconditions: q odd, a_1^(q^2+1) a nonzero square of F_q, and
    Tr(a0t) = -1.
    """
    if ctx.n != 4:
        raise ValueError("construction is for n = 4")
    if ctx.p == 2:
        raise ValueError("construction needs odd characteristic")
    if a1 == 0 or not is_square_in_base(ctx, ctx.pow(a1, ctx.q**2 + 1)):
        raise ValueError("a_1^(q^2+1) must be a nonzero square of F_q")
    if ctx.rel_trace(a0t) != ctx.neg(1):
        raise ValueError("Tr(a0t) must be -1")
    spec = SwitchSpec(ctx, (a0t, 0, a1, 0), 1)
    op = build_switch(spec)
    if not verify_presemifield(op):
        raise ConsistencyError(
            "degree-4 commutative construction failed verification",
            witness={"a1": a1, "a0t": a0t},
        )
    return op


# ---- classification ----


def first_unit_trace_element(ctx):
    """Smallest element code with relative trace 1."""
    for x in ctx.elements():
        if ctx.rel_trace(x) == 1:
            return x
    raise ConsistencyError("trace is onto, impossible")


def switch_spec_for(L, alpha=None):
    """Canonical switching spec of a predicate-passing L.

    b agrees with the coefficients of L except b_0 = a_0 - alpha where
    Tr(alpha) = 1; alpha defaults to the smallest such element code.
    """
    ctx = L.ctx
    if alpha is None:
        alpha = first_unit_trace_element(ctx)
    elif ctx.rel_trace(alpha) != 1:
        raise ValueError("alpha must have trace 1")
    b = (ctx.sub(L.coeffs[0], alpha),) + L.coeffs[1:]
    return SwitchSpec(ctx, b, 1)


def classify(L, deep=True):
    """Family and behaviour report for a predicate-passing L.

    With deep=True the induced switched product is built, verified,
    unitalized and measured (commutativity, commutative-isotopy
    witness, nuclei sizes).
    """
    ctx = L.ctx
    if not switching_predicate(L):
        raise ValueError("classify expects a predicate-passing polynomial")
    families = []
    if L.is_monomial():
        families.append("monomial")
    if ctx.n == 2 and n2_criterion(ctx, L.coeffs[1], L.coeffs[0]):
        families.append("n2")
    if ctx.n == 3 and matches_n3(L):
        families.append("n3")
    if (
        ctx.n == 4
        and ctx.p != 2
        and L.coeffs[2] != 0
        and all(c == 0 for i, c in enumerate(L.coeffs) if i not in (0, 2))
        and n4_criterion(ctx, L.coeffs[2], L.coeffs[0])
    ):
        families.append("n4")
    report = {
        "coeffs": list(L.coeffs),
        "families": families,
        "predicate": True,
    }
    if deep:
        spec = switch_spec_for(L)
        op = build_switch(spec)
        if not verify_presemifield(op):
            raise ConsistencyError(
                "predicate-passing L produced a non-presemifield", witness=L.coeffs
            )
        unital = unitalize(op)
        iso, witness = commutative_isotopy_test(op)
        report.update(
            {
                "spec": {"b": list(spec.b), "xi": spec.xi},
                "presemifield": True,
                "commutative": is_commutative(op),
                "ganley": iso,
                "ganley_witness": witness,
                "nuclei": list(nuclei(unital).sizes),
            }
        )
    return report


__all__ = [
    "FamilyInstance",
    "n2_criterion",
    "n2_lemma_roots",
    "theta_set",
    "n3_construct",
    "matches_n3",
    "is_square_in_base",
    "n4_criterion",
    "n4_commutative_op",
    "first_unit_trace_element",
    "switch_spec_for",
    "classify",
]
