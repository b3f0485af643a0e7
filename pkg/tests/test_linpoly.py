"""Linearized polynomials, the trace-quotient predicate, and the search harness."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from semiswitch import (
    BudgetExceeded,
    LinearizedPoly,
    build_field,
    is_permutation,
    search,
    switching_predicate,
    trace_quotient,
)


def test_eval_identity_and_zero(f9):
    L = LinearizedPoly(f9, (1, 0))
    Z = LinearizedPoly(f9, (0, 0))
    for x in f9.elements():
        assert L(x) == x
        assert Z(x) == 0


def test_eval_frobenius_anchor(f9):
    # L = X^3 sends i to 2i
    L = LinearizedPoly(f9, (0, 1))
    assert L(3) == f9.mul(2, 3)


def test_eval_is_additive_and_linear(f9, f64_q4):
    for ctx in (f9, f64_q4):
        L = LinearizedPoly(ctx, tuple(ctx.pow(ctx.generator, k) for k in range(ctx.n)))
        els = list(ctx.elements())
        step = max(1, len(els) // 12)
        for x in els[::step]:
            for y in els[::step]:
                assert L(ctx.add(x, y)) == ctx.add(L(x), L(y))
            for c in ctx.subfield(1):
                assert L(ctx.mul(c, x)) == ctx.mul(c, L(x))


def test_coeff_length_enforced(f9):
    with pytest.raises(ValueError):
        LinearizedPoly(f9, (1, 0, 0))


def test_trace_quotient_constant_family(f9):
    # L = bX gives the constant Tr(b) on units
    for b in f9.elements():
        L = LinearizedPoly(f9, (b, 0))
        vals = {trace_quotient(L, x) for x in f9.units()}
        assert vals == {f9.rel_trace(b)}


def test_trace_quotient_f8_census(f8):
    # L = X^2 over F_8: value at x is the absolute trace of x,
    # zero for exactly 3 of the 7 units
    L = LinearizedPoly(f8, (0, 1, 0))
    zeros = sum(1 for x in f8.units() if trace_quotient(L, x) == 0)
    assert zeros == 3


def test_trace_quotient_gamma_monomial(f9):
    # L = gamma X^3: nonzero at all 8 units
    L = LinearizedPoly(f9, (0, 4))
    assert all(trace_quotient(L, x) != 0 for x in f9.units())


def test_trace_quotient_zero_convention(f9):
    L = LinearizedPoly(f9, (4, 7))
    assert trace_quotient(L, 0) == f9.rel_trace(4)


def test_predicate_monomial_cases(f9):
    for a0 in f9.elements():
        L = LinearizedPoly(f9, (a0, 0))
        assert switching_predicate(L) == (f9.rel_trace(a0) != 0)


def test_predicate_x9_at_3_4(f81_n4):
    L = LinearizedPoly(f81_n4, (0, 0, 1, 0))
    assert switching_predicate(L)


def test_is_permutation(f9):
    assert is_permutation(LinearizedPoly(f9, (0, 1)))  # X^q
    assert not is_permutation(LinearizedPoly(f9, (f9.neg(1), 1)))  # X^q - X


def test_predicate_implies_permutation(f9, f27):
    for ctx in (f9, f27):
        for L in search(ctx, mode="exhaustive"):
            assert is_permutation(L)


def test_search_f8_full_support(f8):
    hits = search(f8, mode="exhaustive")
    assert len(hits) == 4
    for L in hits:
        a0 = L.coeffs[0]
        assert L.coeffs[1:] == (0, 0)
        assert f8.rel_trace(a0) == 1
    assert [L.coeffs for L in hits] == sorted(L.coeffs for L in hits)


def test_search_f9_census(f9):
    hits = search(f9, mode="exhaustive")
    assert len(hits) == 18
    monomial = [L for L in hits if L.is_monomial()]
    assert len(monomial) == 6


def test_search_empty_support(f9):
    assert search(f9, support=(), mode="exhaustive") == []


def test_search_restricted_support(f9):
    hits = search(f9, support=(1,), mode="exhaustive")
    # monomials a_1 X^q passing: Tr(a_1 x^(q-1)) != 0 for all units
    assert all(L.coeffs[0] == 0 for L in hits)
    full = [L for L in search(f9, mode="exhaustive") if L.coeffs[0] == 0]
    assert [L.coeffs for L in hits] == [L.coeffs for L in full]


def test_search_budget(f9):
    with pytest.raises(BudgetExceeded):
        search(f9, mode="exhaustive", budget=10)


def test_search_matches_naive_oracle():
    # direct double loop recomputing the trace quotient from scratch
    for n in (2, 3):
        ctx = build_field(2, 1, n)
        naive = []
        for coeffs in itertools.product(range(ctx.order), repeat=n):
            good = True
            for x in ctx.units():
                num = 0
                for i, a in enumerate(coeffs):
                    num = ctx.add(num, ctx.mul(a, ctx.frobenius(x, i)))
                if ctx.rel_trace(ctx.div(num, x)) == 0:
                    good = False
                    break
            if good:
                naive.append(coeffs)
        fast = [L.coeffs for L in search(ctx, mode="exhaustive")]
        assert fast == naive


def test_search_random_mode_reproducible(f9):
    a = search(f9, mode="random", seed=42, budget=300)
    b = search(f9, mode="random", seed=42, budget=300)
    assert [L.coeffs for L in a] == [L.coeffs for L in b]
    assert all(switching_predicate(L) for L in a)
    exhaustive = {L.coeffs for L in search(f9, mode="exhaustive")}
    assert {L.coeffs for L in a} <= exhaustive


def test_predicate_scaling_invariance(f9):
    # c*L for c in F_q* and L(dX)/d for units d preserve the predicate
    ctx = f9
    units_q = [c for c in ctx.subfield(1) if c != 0]
    for coeffs in itertools.product(range(9), repeat=2):
        L = LinearizedPoly(ctx, coeffs)
        base = switching_predicate(L)
        for c in units_q:
            scaled = LinearizedPoly(ctx, tuple(ctx.mul(c, a) for a in coeffs))
            assert switching_predicate(scaled) == base
        for d in (4, 7, 8):
            # L(dX)/d has coefficients a_i d^(q^i - 1)
            conj = LinearizedPoly(
                ctx,
                tuple(
                    ctx.mul(a, ctx.div(ctx.frobenius(d, i), d))
                    for i, a in enumerate(coeffs)
                ),
            )
            assert switching_predicate(conj) == base


@settings(deadline=None, max_examples=80)
@given(st.tuples(st.integers(0, 26), st.integers(0, 26), st.integers(0, 26)))
def test_predicate_matches_pointwise_definition(coeffs):
    ctx = _f27()
    L = LinearizedPoly(ctx, coeffs)
    expect = all(trace_quotient(L, x) != 0 for x in ctx.units())
    assert switching_predicate(L) == expect


_cache = {}


def _f27():
    if "c" not in _cache:
        _cache["c"] = build_field(3, 1, 3)
    return _cache["c"]
