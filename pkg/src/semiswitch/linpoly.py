"""q-linearized polynomials and the switching predicate.

``L(X) = sum_i a_i X^(q^i)`` is stored as the coefficient tuple
``(a_0, ..., a_{n-1})`` over F_{q^n}.  The central object is the trace
quotient ``x -> Tr(L(x)/x)``; by convention its value at ``x = 0`` is
``Tr(a_0)`` (the quotient ``L(x)/x = a_0 + sum_{i>=1} a_i x^(q^i - 1)``
extends there).  ``L`` passes the switching predicate when the trace
quotient vanishes nowhere on the nonzero elements; those are exactly
the polynomials whose induced switching of the field multiplication
stays a presemifield.

Search runs in a fixed order so results are reproducible: coefficient
tuples are enumerated lexicographically by element code, lowest
coefficient index most significant.  Random mode draws from a seeded
64-bit generator and reports the seed back.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from itertools import product

from .errors import BudgetExceeded
from .gf import FieldCtx

DEFAULT_SEARCH_BUDGET = 1 << 20


def search_budget(budget=None):
    if budget is not None:
        return budget
    raw = os.environ.get("SEMISWITCH_SEARCH_BUDGET")
    return DEFAULT_SEARCH_BUDGET if raw is None else int(raw)


@dataclass(frozen=True)
class LinearizedPoly:
    ctx: FieldCtx
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.ctx.n:
            raise ValueError(f"need {self.ctx.n} coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        for c in self.coeffs:
            if not 0 <= c < self.ctx.order:
                raise ValueError(f"coefficient {c} out of range")

    def eval(self, x):
        ctx = self.ctx
        acc = 0
        for i, a in enumerate(self.coeffs):
            if a:
                acc = ctx.add(acc, ctx.mul(a, ctx.frobenius(x, i)))
        return acc

    __call__ = eval

    def support(self):
        """Indices with nonzero coefficient."""
        return tuple(i for i, a in enumerate(self.coeffs) if a)

    def is_monomial(self):
        """Only the X term present (a_i = 0 for all i >= 1)."""
        return all(a == 0 for a in self.coeffs[1:])

    def to_dict(self):
        return {"field": self.ctx.to_spec(), "coeffs": list(self.coeffs)}


def lp_eval(L, x):
    return L.eval(x)


def trace_quotient(L, x):
    """Tr(L(x)/x) as an element of F_q, with the value Tr(a_0) at x = 0."""
    ctx = L.ctx
    if x == 0:
        return ctx.rel_trace(L.coeffs[0])
    k = ctx.log[x]
    N = ctx.mult_order
    acc = L.coeffs[0]
    for i in range(1, ctx.n):
        a = L.coeffs[i]
        if a:
            acc = ctx.add(acc, ctx.mul(a, ctx.exp[(k * ctx.qpow_minus1[i]) % N]))
    return ctx.rel_trace(acc)


def switching_predicate(L):
    """True when Tr(L(x)/x) != 0 for every nonzero x."""
    ctx = L.ctx
    for x in ctx.units():
        if trace_quotient(L, x) == 0:
            return False
    return True


def is_permutation(L):
    """Whether L permutes F_{q^n} (additive map, so: trivial kernel)."""
    for x in L.ctx.units():
        if L.eval(x) == 0:
            return False
    return True


# ---- search ----


def _trace_term_tables(ctx, support):
    """tt[i][a][k] = Tr(a * x^(q^i - 1)) for x = k + 1, as F_q codes.

    The i = 0 row is constant in x (the term is Tr(a_0)).
    """
    N = ctx.mult_order
    tables = {}
    for i in support:
        rows = []
        if i == 0:
            for a in range(ctx.order):
                rows.append((ctx.rel_trace(a),) * N)
        else:
            e = ctx.qpow_minus1[i]
            xpow = [ctx.exp[(ctx.log[x] * e) % N] for x in ctx.units()]
            for a in range(ctx.order):
                rows.append(tuple(ctx.rel_trace(ctx.mul(a, xp)) for xp in xpow))
        tables[i] = rows
    return tables


def _passes(ctx, support, tables, assignment):
    add = ctx.add
    rows = [tables[i][a] for i, a in zip(support, assignment)]
    for k in range(ctx.mult_order):
        s = 0
        for row in rows:
            s = add(s, row[k])
        if s == 0:
            return False
    return True


def _make_poly(ctx, support, assignment):
    coeffs = [0] * ctx.n
    for i, a in zip(support, assignment):
        coeffs[i] = a
    return LinearizedPoly(ctx, tuple(coeffs))


def _search_exhaustive_binary(ctx, support, per_item=None):
    """Fast path for q = 2: the trace transcript of a candidate is the
    XOR of per-coefficient bitmask transcripts, and the predicate holds
    exactly when the combined mask has every bit set."""
    import numpy as np

    N = ctx.mult_order
    full = (1 << N) - 1
    masks = {}
    for i in support:
        row = []
        for a in range(ctx.order):
            m = 0
            for k, x in enumerate(ctx.units()):
                if i == 0:
                    t = ctx.rel_trace(a)
                else:
                    t = ctx.rel_trace(
                        ctx.mul(a, ctx.exp[(ctx.log[x] * ctx.qpow_minus1[i]) % N])
                    )
                if t:
                    m |= 1 << k
            row.append(m)
        masks[i] = row

    out = []
    use_numpy = ctx.order <= 64 and len(support) >= 2
    if use_numpy:
        # combine the trailing coefficients into one vectorized block
        tail = 1
        while tail < len(support) and ctx.order ** (tail + 1) <= 4096:
            tail += 1
        head_sup, tail_sup = support[:-tail], support[-tail:]
        tail_tuples = list(product(range(ctx.order), repeat=tail))
        tail_arr = np.zeros(len(tail_tuples), dtype=np.uint64)
        for idx, tt in enumerate(tail_tuples):
            m = 0
            for i, a in zip(tail_sup, tt):
                m ^= masks[i][a]
            tail_arr[idx] = m
        fullv = np.uint64(full)
        for head in product(range(ctx.order), repeat=len(head_sup)):
            base = 0
            for i, a in zip(head_sup, head):
                base ^= masks[i][a]
            hits = np.flatnonzero((tail_arr ^ np.uint64(base)) == fullv)
            for h in hits:
                L = _make_poly(ctx, support, head + tail_tuples[int(h)])
                out.append(L)
                if per_item:
                    per_item(L)
        return out
    for assignment in product(range(ctx.order), repeat=len(support)):
        m = 0
        for i, a in zip(support, assignment):
            m ^= masks[i][a]
        if m == full:
            L = _make_poly(ctx, support, assignment)
            out.append(L)
            if per_item:
                per_item(L)
    return out


def search(ctx, support=None, mode="exhaustive", seed=None, budget=None, per_item=None):
    """Find predicate-passing L with the given coefficient support.

    mode="exhaustive" enumerates every assignment (lexicographic by
    element code, lowest support index most significant) and needs
    ``order**len(support)`` to fit the budget.  mode="random" draws
    ``budget`` assignments from ``random.Random(seed)`` and returns the
    distinct passing ones in discovery order.

    per_item, when given, is called with each hit as it is found.
    """
    if support is None:
        support = range(ctx.n)
    support = tuple(sorted(set(int(i) for i in support)))
    if support and not (0 <= support[0] and support[-1] < ctx.n):
        raise ValueError(f"support indices must lie in 0..{ctx.n - 1}")
    if not support:
        return []
    limit = search_budget(budget)
    if mode == "exhaustive":
        total = ctx.order ** len(support)
        if total > limit:
            raise BudgetExceeded(
                f"exhaustive search needs {total} candidates, budget is {limit}"
            )
        if ctx.q == 2:
            return _search_exhaustive_binary(ctx, support, per_item)
        tables = _trace_term_tables(ctx, support)
        out = []
        for assignment in product(range(ctx.order), repeat=len(support)):
            if _passes(ctx, support, tables, assignment):
                L = _make_poly(ctx, support, assignment)
                out.append(L)
                if per_item:
                    per_item(L)
        return out
    if mode == "random":
        rng = random.Random(seed)
        tables = _trace_term_tables(ctx, support)
        seen = set()
        out = []
        for _ in range(limit):
            assignment = tuple(rng.randrange(ctx.order) for _ in support)
            if assignment in seen:
                continue
            seen.add(assignment)
            if _passes(ctx, support, tables, assignment):
                L = _make_poly(ctx, support, assignment)
                out.append(L)
                if per_item:
                    per_item(L)
        return out
    raise ValueError(f"unknown mode {mode!r}")


__all__ = [
    "LinearizedPoly",
    "lp_eval",
    "trace_quotient",
    "switching_predicate",
    "is_permutation",
    "search",
    "search_budget",
    "DEFAULT_SEARCH_BUDGET",
]
