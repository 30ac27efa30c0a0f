import pytest
from dataclasses import replace

from cyclofactor import errors
from cyclofactor.explicit import (
    case_params,
    factor_explicit,
    lift_general,
    solve_witness_1317,
    solve_witness_3mod20,
    solve_witness_7mod20_n5,
    verify_factorization,
)
from cyclofactor.ffield import is_square, make_context, omega2, omega5, rho_chain, sqrt
from cyclofactor.fpoly import Poly, compose_power, cyclotomic
from cyclofactor.oracle import factorize
from conftest import ctx_for


def sorted_encs(factors):
    return sorted(tuple(f.encodings()) for f in factors)


def test_case_params_examples():
    p13 = case_params(make_context(13), 5)
    assert (p13.residue, p13.L1, p13.L2, p13.L4) == (13, 2, 3, 4)
    p3 = case_params(make_context(3), 5)
    assert (p3.residue, p3.L1, p3.L2, p3.L4, p3.k) == (3, 1, 3, 4, 0)
    p11 = case_params(make_context(11), 5)
    assert (p11.residue, p11.L1, p11.L2, p11.L4) == (11, 1, 3, 4)
    with pytest.raises(errors.EvenR):
        case_params(make_context(13), 4)
    with pytest.raises(errors.CharacteristicDividesR):
        case_params(make_context(3), 9)


def test_deep_valuations_handled():
    # the generic L2 = 3 / L4 = 4 pattern fails for these; the engine must not
    assert case_params(make_context(23), 5).L4 == 5
    assert case_params(make_context(47), 5).L4 == 6
    assert case_params(make_context(31), 5).L2 == 6
    assert case_params(make_context(17), 5).L4 == 6


def test_golden_q3_n4():
    ef = factor_explicit(make_context(3), 4)
    golden = sorted(
        [
            (2, 0, 0, 1, 1), (2, 0, 0, 2, 1),          # x^4 +- x^3 + 2
            (2, 1, 0, 0, 1), (2, 2, 0, 0, 1),          # x^4 +- x + 2
            (2, 2, 1, 1, 1), (2, 1, 1, 2, 1),          # x^4 + a x^3 + x^2 - a x + 2
            (2, 2, 2, 1, 1), (2, 1, 2, 2, 1),          # x^4 + a x^3 - x^2 - a x + 2
        ]
    )
    assert sorted_encs(ef.factors) == golden
    assert ef.meta.count == 8 and ef.meta.degree == 4


def test_f11_n3_quadratics():
    c11 = make_context(11)
    ef = factor_explicit(c11, 3)
    want = []
    for w in omega5(c11).elements:
        for c in (c11.el(3), c11.el(8)):  # c^2 = -2 = 9
            want.append(Poly(c11, [-(w * w), c * w, c11.one]))
    assert sorted_encs(ef.factors) == sorted_encs(want)


def test_q5_for_inert_classes():
    for q in (13, 17, 3, 7):
        ctx = ctx_for(q)
        ef = factor_explicit(ctx, 0)
        assert len(ef.factors) == 1
        assert ef.factors[0] == cyclotomic(ctx, 5)


def test_f13_n2_rho_twists():
    c13 = make_context(13)
    ef = factor_explicit(c13, 2)
    want = []
    for rho in omega2(c13, 2):  # {5, 8}
        want.append(Poly(c13, [rho**4, rho**3, rho**2, rho, c13.one]))
    assert sorted_encs(ef.factors) == sorted_encs(want)


def test_characteristic_guard():
    with pytest.raises(errors.CharacteristicUnsupported):
        factor_explicit(make_context(5, 2), 1)


MATRIX = [3, 7, 9, 11, 13, 17, 19, 23, 27, 29, 41, 47, 49]


@pytest.mark.parametrize("q", MATRIX)
def test_verify_matrix_low_n(q):
    ctx = ctx_for(q)
    for n in range(0, 7):
        ef = factor_explicit(ctx, n)
        rep = verify_factorization(ef)
        assert rep.passed, (q, n, rep.failures())


@pytest.mark.parametrize("q", [3, 11, 13, 23, 27, 49])
def test_oracle_agreement_sample(q):
    ctx = ctx_for(q)
    for n in range(0, 6):
        ef = factor_explicit(ctx, n)
        rep = factorize(cyclotomic(ctx, (1 << n) * 5), seed=11)
        assert [f.sort_key() for f in ef.factors] == [f.sort_key() for f, _ in rep.factors]


@pytest.mark.parametrize("q", [3, 11, 13, 19, 29, 47])
def test_stabilization_lifts(q):
    ctx = ctx_for(q)
    params = case_params(ctx, 5)
    n0 = params.L2 if ctx.q % 5 in (1, 4) else params.L4
    base = factor_explicit(ctx, n0)
    for n in (n0 + 1, n0 + 3):
        lifted = sorted_encs(compose_power(f, 1 << (n - n0)) for f in base.factors)
        assert lifted == sorted_encs(factor_explicit(ctx, n).factors)


def test_witness_1317_spec_values():
    c13 = make_context(13)
    params = case_params(c13, 5)
    ws = solve_witness_1317(c13, params, rho_chain(c13))
    assert sorted(e.enc for e in ws.values["aL2"]) == [1, 12]
    # per-omega2 values from the spec examples
    for rho2, roots in ((8, [1, 12]), (5, [5, 8])):
        got = sqrt(5 * c13.el(rho2))
        assert sorted(e.enc for e in got) == roots


@pytest.mark.parametrize("q", [13, 17, 53, 37, 73, 97])
def test_witness_1317_equations(q):
    ctx = make_context(q)
    params = case_params(ctx, 5)
    rho = rho_chain(ctx)
    ws = solve_witness_1317(ctx, params, rho)
    rho_l1 = rho[params.L1]
    for a in ws.values["aL2"]:
        assert a * a == 5 * rho_l1
        lifted = ws.values["aL4"][a.enc]
        branch = ws.values["branch"][a.enc]
        target = (2 * rho[2] - 1) * a if branch == "plus" else -(2 * rho[2] + 1) * a
        for b in lifted:
            assert b * b == target


@pytest.mark.parametrize("q", [7, 23, 43, 47, 67, 83, 103, 107, 127])
def test_witness_3mod20_matches_engine(q):
    ctx = make_context(q)
    params = case_params(ctx, 5)
    ws = solve_witness_3mod20(ctx, params)
    got = sorted(
        tuple(Poly(ctx, [e, c, b, a, ctx.one]).encodings())
        for (a, b, c, e) in ws.values["quartets"]
    )
    assert got == sorted_encs(factor_explicit(ctx, 4).factors)
    for a2 in ws.values["a2"]:
        assert a2 * a2 == ctx.scalar(-5)
    if ws.values["branch"] == "cond4a":
        alpha = ws.values["alpha"]
        assert alpha * alpha == ctx.scalar(-2)
    else:
        beta = ws.values["beta"]
        assert beta * beta == ctx.scalar(2)
    for (a2, a3, b3, c3) in ws.values["level3"]:
        assert a3 * a3 == 2 * b3 - a2
        assert a3 * c3 == ctx.scalar(3)


def test_witness_3mod20_rejects_char3():
    for q in (3, 27):
        ctx = ctx_for(q)
        with pytest.raises(errors.CharacteristicUnsupported):
            solve_witness_3mod20(ctx, case_params(ctx, 5))


@pytest.mark.parametrize("q", [7, 47, 107, 23, 103, 127])
def test_witness_n5_matches_engine(q):
    ctx = make_context(q)
    params = case_params(ctx, 5)
    if params.L4 <= 4:
        pytest.skip("stabilized at n=4; no resolvent stage")
    ws4 = solve_witness_3mod20(ctx, params)
    ws5 = solve_witness_7mod20_n5(ctx, params, ws4)
    got = sorted(
        tuple(Poly(ctx, [e, c, b, a, ctx.one]).encodings())
        for (a, b, c, e) in ws5.values["quintets"]
    )
    assert got == sorted_encs(factor_explicit(ctx, 5).factors)


def test_f47_spec_count():
    ef = factor_explicit(make_context(47), 5)
    assert ef.meta.count == 16 and ef.meta.degree == 4


def test_f27_lifts_from_n4():
    c27 = ctx_for(27)
    params = case_params(c27, 5)
    assert params.L2 == 3 and params.L4 == 4  # behaves like the k-odd class
    base = factor_explicit(c27, 4)
    lifted = sorted_encs(compose_power(f, 2) for f in base.factors)
    assert lifted == sorted_encs(factor_explicit(c27, 5).factors)


def test_branch_exclusivity_residues_3_7():
    for q in (23, 43, 83, 103, 7, 47, 67):
        ctx = make_context(q)
        a2_pair = sqrt(ctx.scalar(-5))
        for a2 in a2_pair:
            assert is_square(2 - a2) != is_square(-2 - a2)


def test_lift_general_examples():
    c7 = make_context(7)
    ef = lift_general(c7, 3, 0)
    assert sorted_encs(ef.factors) == [(3, 1), (5, 1)]  # roots 2 and 4
    ef = lift_general(c7, 3, 6)
    assert case_params(c7, 3).L == 4
    assert verify_factorization(ef).passed
    with pytest.raises(errors.EvenR):
        lift_general(c7, 4, 2)
    with pytest.raises(errors.CharacteristicDividesR):
        lift_general(make_context(3), 9, 2)


def test_lift_general_agrees_with_explicit():
    for q in (13, 23):
        ctx = make_context(q)
        for n in (0, 2, 5, 10):
            a = lift_general(ctx, 5, n, seed=3)
            b = factor_explicit(ctx, n)
            assert sorted_encs(a.factors) == sorted_encs(b.factors)


def test_lift_general_matrix_slice():
    for r in (3, 7, 9, 11):
        for q in (7, 13):
            if q % r == 0:
                continue
            ctx = make_context(q)
            cap_l = case_params(ctx, r).L
            for n in (cap_l + 1, cap_l + 2):
                assert verify_factorization(lift_general(ctx, r, n, seed=1)).passed


def test_verify_negative_control():
    ctx = make_context(13)
    ef = factor_explicit(ctx, 4)
    bad = list(ef.factors)
    encs = bad[0].encodings()
    encs[0] = (encs[0] + 1) % 13
    bad[0] = Poly.from_encodings(ctx, encs)
    rep = verify_factorization(replace(ef, factors=tuple(bad)))
    assert not rep.passed
    assert any(c.name == "product" and not c.passed for c in rep.checks)


def test_verify_order_skip_flag():
    ctx = make_context(13)
    ef = factor_explicit(ctx, 6)
    rep = verify_factorization(ef, order_degree_limit=2)
    order_check = [c for c in rep.checks if c.name == "order"][0]
    assert order_check.passed and "skipped" in order_check.detail
