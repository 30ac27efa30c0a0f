import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclofactor import errors
from cyclofactor.explicit import case_params, factor_explicit
from cyclofactor.ffield import make_context
from cyclofactor.fpoly import Poly, is_irreducible, poly_order_is
from cyclofactor.sparsegen import family_for, generate_sparse, reciprocal
from conftest import ctx_for


def test_irred3_n5_members():
    c3 = make_context(3)
    got = sorted(tuple(f.encodings()) for f in generate_sparse(c3, 5, "irred-3"))
    want = sorted(
        [
            (2, 0, 0, 0, 0, 0, 1, 0, 1),   # x^8 + x^6 + 2
            (2, 0, 0, 0, 0, 0, 2, 0, 1),   # x^8 - x^6 + 2
            (2, 0, 1, 0, 0, 0, 0, 0, 1),   # x^8 + x^2 + 2
            (2, 0, 2, 0, 0, 0, 0, 0, 1),   # x^8 - x^2 + 2
            (2, 0, 2, 0, 1, 0, 1, 0, 1),   # x^8 + x^6 + x^4 - x^2 + 2
            (2, 0, 1, 0, 2, 0, 2, 0, 1),   # x^8 - x^6 + x^4 + x^2 + 2 (a = -1)
            (2, 0, 1, 0, 1, 0, 2, 0, 1),   # x^8 - x^6 - x^4 + x^2 + 2 -> mod-3 encodings
            (2, 0, 2, 0, 2, 0, 1, 0, 1),
        ]
    )
    assert got == want


def test_irred3_validity_floor():
    c3 = make_context(3)
    with pytest.raises(errors.NBelowValidity):
        generate_sparse(c3, 4, "irred-3")


def test_family_auto_f11():
    c11 = make_context(11)
    members = generate_sparse(c11, 6, "auto")
    assert family_for(c11) == "trinomial-mod-11"
    assert len(members) == 8
    assert all(f.degree == 16 and f.weight() == 3 for f in members)


def test_family_residue_mismatch():
    with pytest.raises(errors.FamilyResidueMismatch):
        generate_sparse(make_context(11), 6, "irred-mod-13-17")
    with pytest.raises(errors.FamilyResidueMismatch):
        generate_sparse(make_context(3), 6, "irred-mod-3")  # q = 3 is its own family
    with pytest.raises(errors.FamilyResidueMismatch):
        generate_sparse(make_context(11), 6, "no-such-family")


def test_reciprocal_examples():
    c3 = make_context(3)
    f = Poly.from_encodings(c3, [2, 0, 0, 1, 1])  # x^4 + x^3 + 2
    assert reciprocal(f).encodings() == [2, 2, 0, 0, 1]  # x^4 + 2x + 2
    pal = Poly.from_encodings(c3, [1, 1, 1, 1, 1])
    assert reciprocal(pal) == pal
    xm1 = Poly.from_encodings(c3, [2, 1])
    assert reciprocal(xm1) == xm1
    with pytest.raises(errors.ZeroConstantTerm):
        reciprocal(Poly.from_encodings(c3, [0, 1]))


@settings(max_examples=120, deadline=None)
@given(data=st.data())
def test_reciprocal_involution(data):
    ctx = make_context(13)
    deg = data.draw(st.integers(1, 8))
    coeffs = [data.draw(st.integers(1, 12))] + [
        data.draw(st.integers(0, 12)) for _ in range(deg - 1)
    ] + [1]
    f = Poly.from_encodings(ctx, coeffs)
    assert reciprocal(reciprocal(f)) == f
    # non-monic inputs come back monic (the definition scales by f(0)^-1)
    g = f.scale(ctx.el(5))
    assert reciprocal(reciprocal(g)) == g.monic()


# class representatives with the generic (minimal) 2-adic depth, so members
# have degree 2^(n-2); deeper fields are exercised separately below
REPRESENTATIVES = [3, 43, 27, 13, 37, 29, 61, 11, 19]


@pytest.mark.parametrize("q", REPRESENTATIVES)
def test_family_members_shape(q):
    ctx = ctx_for(q)
    import cyclofactor.sparsegen as sg

    fam = family_for(ctx)
    n = max(sg._validity_floor(ctx, fam), 5)
    members = generate_sparse(ctx, n, fam, check=False)
    assert {f.degree for f in members} == {2 ** (n - 2)}
    for f in members:
        assert f.weight() <= 5
        assert is_irreducible(f)
        assert poly_order_is(f, (1 << n) * 5)
        rec = reciprocal(f)
        assert rec.is_monic() and rec.degree == f.degree
        assert rec.weight() <= 5


def test_subset_of_explicit_factors():
    for q, n in ((3, 6), (13, 5), (11, 4), (29, 4)):
        ctx = ctx_for(q)
        members = {tuple(f.encodings()) for f in generate_sparse(ctx, n)}
        factors = {tuple(f.encodings()) for f in factor_explicit(ctx, n).factors}
        assert members <= factors


def test_deep_field_members_have_class_degree():
    # q = 23 stabilizes at L4 = 5, so its members have degree 2^(n-3), not
    # the generic 2^(n-2); they are still sparse, irreducible, right order.
    ctx = make_context(23)
    n = 6
    members = generate_sparse(ctx, n, "irred-mod-3", check=False)
    assert {f.degree for f in members} == {2 ** (n - 3)}
    for f in members:
        assert f.weight() <= 5
        assert is_irreducible(f)
        assert poly_order_is(f, (1 << n) * 5)
