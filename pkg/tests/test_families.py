"""Explicit small-degree families: criteria, constructions, classification."""

import itertools
import random

import pytest

from semiswitch import (
    ConsistencyError,
    LinearizedPoly,
    build_field,
    build_switch,
    classify,
    n2_criterion,
    n2_lemma_roots,
    n3_construct,
    n4_commutative_op,
    n4_criterion,
    search,
    switch_spec_for,
    switching_predicate,
    theta_set,
    verify_presemifield,
)
from semiswitch.families import is_square_in_base, matches_n3


# ---------------------------------------------------------------- n = 2


def test_n2_criterion_monomial_case(f9, f16_q4):
    for ctx in (f9, f16_q4):
        for a0 in ctx.elements():
            want = ctx.rel_trace(a0) != 0
            assert n2_criterion(ctx, 0, a0) == want


def test_n2_criterion_binary_a1_always_false(f16_q4):
    # over F_4 = F_q with q = 4? no: q must be 2 here
    ctx = build_field(2, 1, 2)
    for a1 in (1, 2, 3):
        for a0 in ctx.elements():
            assert not n2_criterion(ctx, a1, a0)


def test_n2_criterion_gamma_instance(f9):
    # a_1 = gamma, Tr(a_0) = 0: X^2 + 2 has roots 1 and 2
    for a0 in f9.elements():
        if f9.rel_trace(a0) == 0:
            assert n2_criterion(f9, 4, a0)


def test_n2_iff_exhaustive():
    for p, m in ((3, 1), (2, 1)):
        ctx = build_field(p, m, 2)
        for a1 in ctx.elements():
            for a0 in ctx.elements():
                L = LinearizedPoly(ctx, (a0, a1))
                assert n2_criterion(ctx, a1, a0) == switching_predicate(L)


def test_n2_iff_exhaustive_q4(f16_q4):
    ctx = f16_q4
    for a1 in ctx.elements():
        for a0 in ctx.elements():
            L = LinearizedPoly(ctx, (a0, a1))
            assert n2_criterion(ctx, a1, a0) == switching_predicate(L)


def test_n2_criterion_wrong_degree(f27):
    with pytest.raises(ValueError):
        n2_criterion(f27, 1, 1)


def test_n2_lemma_roots_degenerate(f9):
    # a_1 = 0: the equation collapses to Tr(a_0) y = 0
    assert n2_lemma_roots(f9, 0, 1) == {0}
    assert n2_lemma_roots(f9, 0, 3) == set(f9.elements())


def test_n2_lemma_characterization(f9):
    # predicate fails iff the quadratic has a root that is a (q-1)-th
    # power of a unit; the whole parameter space is small, check all of it
    for a1 in f9.elements():
        for a0 in f9.elements():
            L = LinearizedPoly(f9, (a0, a1))
            roots = n2_lemma_roots(f9, a1, a0)
            hit = any(r != 0 and f9.log[r] % (f9.q - 1) == 0 for r in roots)
            assert switching_predicate(L) == (not hit)


# ---------------------------------------------------------------- n = 3


def test_theta_set_size(f27, f64_q4):
    for ctx, u, v in ((f27, 1, f27.pow(f27.generator, 2)), (f64_q4, f64_q4.pow(2, 5), 2)):
        B = theta_set(ctx, u, v)
        assert len(B) == ctx.q ** 2
        assert len(set(B)) == len(B)


def test_theta_set_is_affine_subspace(f27):
    ctx = f27
    u, v = 1, ctx.pow(ctx.generator, 2)
    B = theta_set(ctx, u, v)
    # coset of the trace-kernel: theta - theta' always lands in the kernel
    w = ctx.mul(ctx.frobenius(u, 2), ctx.frobenius(v, 1))
    t0 = B[0]
    for t in B:
        assert ctx.rel_trace(ctx.mul(w, ctx.sub(t, t0))) == 0


def test_n3_construct_all_theta_q3(f27):
    ctx = f27
    u, v = 1, ctx.pow(ctx.generator, 2)
    # norm precondition: N(-g^2) = 2 != 1
    for theta in theta_set(ctx, u, v):
        inst = n3_construct(ctx, u, v, theta)
        assert switching_predicate(inst.poly)
        assert inst.kind == "n3"


def test_n3_construct_rejects_bad_norm(f27):
    ctx = f27
    # N(-v/u) = 1 whenever v = -u
    with pytest.raises(ValueError):
        n3_construct(ctx, 1, ctx.neg(1), 0)


def test_n3_construct_rejects_bad_theta(f27):
    ctx = f27
    u, v = 1, ctx.pow(ctx.generator, 2)
    B = set(theta_set(ctx, u, v))
    outside = next(x for x in ctx.elements() if x not in B)
    with pytest.raises(ValueError):
        n3_construct(ctx, u, v, outside)


def test_n3_q4_flagship_instance(f64_q4):
    ctx = f64_q4
    xi = ctx.generator
    inst = n3_construct(ctx, ctx.pow(xi, 5), xi, ctx.pow(xi, 62))
    assert switching_predicate(inst.poly)
    op = build_switch(switch_spec_for(inst.poly))
    assert verify_presemifield(op)


def test_n3_isotopy_across_a(f27):
    # different a give isotopic ops: star_a(x, y) = star_1(a x, y) / a ... the
    # stated relation is checked pointwise through the defining identity
    ctx = f27
    u, v = 1, ctx.pow(ctx.generator, 2)
    theta = theta_set(ctx, u, v)[1]
    for a in (1, ctx.generator, ctx.pow(ctx.generator, 7)):
        inst = n3_construct(ctx, u, v, theta, a=a)
        assert switching_predicate(inst.poly)


def test_matches_n3_roundtrip(f27):
    ctx = f27
    u, v = 1, ctx.pow(ctx.generator, 2)
    theta = theta_set(ctx, u, v)[3]
    inst = n3_construct(ctx, u, v, theta)
    params = matches_n3(inst.poly)
    assert params is not None
    u2, v2, t2, a2 = params
    rebuilt = n3_construct(ctx, u2, v2, t2, a=a2)
    assert rebuilt.poly.coeffs == inst.poly.coeffs


def test_matches_n3_rejects_monomial(f27):
    L = LinearizedPoly(f27, (1, 0, 0))
    assert matches_n3(L) is None


# ---------------------------------------------------------------- n = 4


def test_square_in_base(f9, f81_n4):
    # F_3 squares: 1 is, 2 is not, 0 is not a unit square
    assert is_square_in_base(f81_n4, 1)
    assert not is_square_in_base(f81_n4, 2)
    assert not is_square_in_base(f81_n4, 0)
    # elements outside F_q are never "squares in the base field"
    assert not is_square_in_base(f81_n4, f81_n4.generator)


def test_n4_criterion_anchors(f81_n4):
    ctx = f81_n4
    assert n4_criterion(ctx, 1, 0)
    for a0 in ctx.elements():
        if ctx.rel_trace(a0) != 0:
            assert not n4_criterion(ctx, 1, a0)
    # a_1 with norm-to-F9 landing on a non-square of F_3
    bad = next(
        a1
        for a1 in ctx.units()
        if ctx.pow(a1, ctx.q**2 + 1) == 2
    )
    assert not n4_criterion(ctx, bad, 0)


def test_n4_criterion_rejects_bad_domain(f27, f81_n4):
    with pytest.raises(ValueError):
        n4_criterion(f27, 1, 0)
    ctx = build_field(2, 1, 4)
    with pytest.raises(ValueError):
        n4_criterion(ctx, 1, 0)
    with pytest.raises(ValueError):
        n4_criterion(f81_n4, 0, 1)


def test_n4_iff(f81_n4):
    ctx = f81_n4
    zero_trace = [a0 for a0 in ctx.elements() if ctx.rel_trace(a0) == 0]
    assert len(zero_trace) == 27
    # exhaustive on the true side
    true_a1 = [a1 for a1 in ctx.units() if is_square_in_base(ctx, ctx.pow(a1, 10))]
    assert len(true_a1) == 10
    for a1 in true_a1:
        for a0 in zero_trace:
            assert switching_predicate(LinearizedPoly(ctx, (a0, 0, a1, 0)))
    # sampled on the false side
    rng = random.Random(17)
    checked = 0
    while checked < 2000:
        a1 = 1 + rng.randrange(80)
        a0 = rng.randrange(81)
        if n4_criterion(ctx, a1, a0):
            continue
        checked += 1
        assert not switching_predicate(LinearizedPoly(ctx, (a0, 0, a1, 0)))


def test_n4_commutative_construct(f81_n4):
    ctx = f81_n4
    op = n4_commutative_op(ctx, 1, 2)
    assert ctx.rel_trace(2) == ctx.neg(1)
    assert verify_presemifield(op)
    assert op(3, 5) == op(5, 3)


def test_n4_commutative_rejects_bad_trace(f81_n4):
    ctx = f81_n4
    bad = next(x for x in ctx.elements() if ctx.rel_trace(x) != ctx.neg(1))
    with pytest.raises(ValueError):
        n4_commutative_op(ctx, 1, bad)


# ---------------------------------------------------------------- classify


def test_classify_monomial(f9):
    L = LinearizedPoly(f9, (1, 0))
    rep = classify(L)
    assert "monomial" in rep["families"]
    assert rep["predicate"] and rep["presemifield"]


def test_classify_search_output_n2(f9):
    for L in search(f9, mode="exhaustive"):
        rep = classify(L, deep=False)
        assert "n2" in rep["families"]


def test_classify_x9(f81_n4):
    L = LinearizedPoly(f81_n4, (0, 0, 1, 0))
    rep = classify(L, deep=False)
    assert "n4" in rep["families"]
    assert "monomial" not in rep["families"]


def test_classify_reports_nuclei_and_ganley(f81_n4):
    ctx = f81_n4
    L = LinearizedPoly(ctx, (0, 0, 1, 0))
    rep = classify(L)
    assert rep["presemifield"]
    assert rep["ganley"]
    assert tuple(rep["nuclei"]) == (3, 9, 3, 3)
