import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclofactor import errors, intutil
from cyclofactor.ffield import (
    is_square,
    make_context,
    mult_order,
    omega2,
    omega5,
    rho_chain,
    sqrt,
)
from conftest import ctx_for


def test_make_context_examples():
    assert make_context(13).generator.enc == 2
    assert make_context(3).generator.enc == 2
    assert make_context(3, 2).modulus == (1, 0, 1)  # first irreducible monic quadratic


def test_make_context_errors():
    with pytest.raises(errors.NotPrime):
        make_context(6)
    with pytest.raises(errors.CharacteristicUnsupported):
        make_context(2)
    with pytest.raises(errors.BadModulus):
        make_context(3, 2, modulus=(2, 0, 1))  # x^2 - 1 is reducible
    with pytest.raises(errors.BadModulus):
        make_context(3, 2, modulus=(1, 1))  # wrong degree


def test_arithmetic_examples():
    c13 = make_context(13)
    assert (c13.el(5) * c13.el(5)).enc == 12
    assert (c13.el(2) ** 12).enc == 1
    c11 = make_context(11)
    assert c11.el(3).inv().enc == 4
    with pytest.raises(errors.DivisionByZero):
        c11.zero.inv()
    with pytest.raises(errors.ContextMismatch):
        c13.el(1) + c11.el(1)


def test_is_square_examples():
    c11, c13 = make_context(11), make_context(13)
    assert is_square(c11.el(9))
    assert not is_square(c13.el(5))
    assert is_square(c13.el(12))
    with pytest.raises(errors.ZeroInput):
        is_square(c13.zero)


def test_sqrt_examples():
    c11, c13, c19 = make_context(11), make_context(13), make_context(19)
    assert [e.enc for e in sqrt(c11.el(9))] == [3, 8]
    assert [e.enc for e in sqrt(c13.el(12))] == [5, 8]
    assert [e.enc for e in sqrt(c19.el(5))] == [9, 10]
    with pytest.raises(errors.NonResidue):
        sqrt(c13.el(5))
    z = sqrt(c13.zero)
    assert z[0].enc == 0 and z[1].enc == 0


@pytest.mark.parametrize("q", [13, 17, 9, 27, 49])
def test_sqrt_roundtrip_all_squares(q):
    ctx = ctx_for(q)
    for e in ctx.elements():
        if e.enc and is_square(e):
            r, negr = sqrt(e)
            assert r * r == e
            assert r + negr == ctx.zero
            assert r.enc <= negr.enc


def test_mult_order_examples():
    assert mult_order(make_context(11).el(3)) == 5
    assert mult_order(make_context(13).el(12)) == 2
    assert mult_order(make_context(13).one) == 1
    with pytest.raises(errors.ZeroInput):
        mult_order(make_context(13).zero)


@pytest.mark.parametrize("q", [13, 3, 11, 9, 27, 49, 41, 17])
def test_rho_chain_invariants(q):
    ctx = ctx_for(q)
    chain = rho_chain(ctx)
    assert len(chain) == intutil.v2(ctx.q - 1) + 1
    assert chain[0].enc == 1
    assert chain[1] == -ctx.one
    for i in range(1, len(chain)):
        assert chain[i] * chain[i] == chain[i - 1]
        assert mult_order(chain[i]) == 2**i


def test_rho_chain_spec_values():
    assert [e.enc for e in rho_chain(make_context(13)).entries] == [1, 12, 8]
    assert [e.enc for e in rho_chain(make_context(3)).entries] == [1, 2]
    assert [e.enc for e in rho_chain(make_context(11)).entries] == [1, 10]


@pytest.mark.parametrize("q", [13, 11, 9, 49])
def test_omega2_orders(q):
    ctx = ctx_for(q)
    for i in range(intutil.v2(ctx.q - 1) + 1):
        els = omega2(ctx, i)
        assert len(els) == (1 if i == 0 else 2 ** (i - 1))
        assert all(mult_order(e) == 2**i for e in els)


def test_omega5_examples():
    o11 = omega5(make_context(11))
    assert o11.kind == "roots"
    assert sorted(e.enc for e in o11.elements) == [3, 4, 5, 9]
    o19 = omega5(make_context(19))
    assert o19.kind == "traces"
    assert [e.enc for e in o19.elements] == [4, 14]
    o13 = omega5(make_context(13))
    assert o13.kind == "empty" and o13.elements == ()
    with pytest.raises(errors.CharacteristicFive):
        omega5(make_context(5))


@pytest.mark.parametrize("q", [11, 41, 9, 19, 49, 81])
def test_omega5_defining_equations(q):
    ctx = ctx_for(q)
    om = omega5(ctx)
    if om.kind == "roots":
        for w in om.elements:
            assert w**5 == ctx.one and w.enc != 1
    elif om.kind == "traces":
        for t in om.elements:
            assert t * t + t - 1 == ctx.zero


@pytest.mark.parametrize("q", [13, 9, 49])
def test_square_census(q):
    ctx = ctx_for(q)
    squares = sum(1 for e in ctx.elements() if e.enc and is_square(e))
    assert squares == (ctx.q - 1) // 2


@pytest.mark.parametrize("q", [13, 9])
@settings(max_examples=350, deadline=None)
@given(data=st.data())
def test_field_axioms(q, data):
    ctx = ctx_for(q)
    a = ctx.el(data.draw(st.integers(0, ctx.q - 1)))
    b = ctx.el(data.draw(st.integers(0, ctx.q - 1)))
    c = ctx.el(data.draw(st.integers(0, ctx.q - 1)))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ctx.zero == a and a * ctx.one == a
    assert a - a == ctx.zero
    if b.enc:
        assert (a / b) * b == a
