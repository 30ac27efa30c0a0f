import random

import pytest

from cyclofactor import errors
from cyclofactor.ffield import make_context
from cyclofactor.fpoly import Poly, cyclotomic, is_irreducible
from cyclofactor.oracle import XorShift64Star, factorize, find_roots
from conftest import ctx_for


def P(ctx, *encs):
    return Poly.from_encodings(ctx, encs)


def test_factorize_examples():
    c7 = make_context(7)
    rep = factorize(P(c7, 6, 0, 1))  # x^2 - 1
    assert [f.encodings() for f, _ in rep.factors] == [[1, 1], [6, 1]]
    c3 = make_context(3)
    rep = factorize(cyclotomic(c3, 10))
    assert len(rep.factors) == 1 and rep.factors[0][0].degree == 4
    c11 = make_context(11)
    rep = factorize(cyclotomic(c11, 20))
    assert [f.encodings() for f, _ in rep.factors] == [[3, 0, 1], [4, 0, 1], [5, 0, 1], [9, 0, 1]]
    with pytest.raises(errors.ZeroPolynomial):
        factorize(Poly.zero(c3))


def test_find_roots_examples():
    c19, c3, c13 = make_context(19), make_context(3), make_context(13)
    assert [e.enc for e in find_roots(P(c19, 18, 1, 1))] == [4, 14]
    assert find_roots(P(c3, 1, 0, 1)) == []
    assert [e.enc for e in find_roots(P(c13, 12, 0, 1))] == [1, 12]
    # multiplicity
    f = P(c3, 1, 1) ** 3 * P(c3, 2, 1)
    assert [e.enc for e in find_roots(f)] == [1, 2, 2, 2]


@pytest.mark.parametrize("q", [3, 7, 11, 13, 17, 19, 23, 29])
def test_reassembly_random(q):
    ctx = ctx_for(q)
    rng = random.Random(q)
    for _ in range(500):
        deg = rng.randint(1, 32)
        coeffs = [ctx.el(rng.randrange(ctx.q)) for _ in range(deg)]
        coeffs.append(ctx.el(rng.randrange(1, ctx.q)))
        f = Poly(ctx, coeffs)
        rep = factorize(f, seed=rng.randrange(1 << 30))
        assert rep.product() == f


def test_factors_are_irreducible():
    ctx = make_context(13)
    rng = random.Random(99)
    for _ in range(40):
        deg = rng.randint(2, 24)
        f = Poly(ctx, [ctx.el(rng.randrange(13)) for _ in range(deg)] + [ctx.one])
        for g, _ in factorize(f, seed=5).factors:
            assert g.is_monic() and is_irreducible(g)


def test_idempotence():
    ctx = make_context(13)
    rep = factorize(cyclotomic(ctx, 80), seed=42)
    for g, _ in rep.factors:
        sub = factorize(g, seed=1)
        assert len(sub.factors) == 1
        assert sub.factors[0] == (g, 1)


def test_determinism():
    ctx = make_context(19)
    f = cyclotomic(ctx, 160)
    a = factorize(f, seed=7)
    b = factorize(f, seed=7)
    assert [(g.encodings(), m) for g, m in a.factors] == [(g.encodings(), m) for g, m in b.factors]


def test_multiplicities():
    c3 = make_context(3)
    f = P(c3, 1, 1) ** 2 * P(c3, 1, 0, 1) ** 3 * P(c3, 2, 1)
    rep = factorize(f, seed=0)
    assert sorted((g.encodings(), m) for g, m in rep.factors) == [
        ([1, 0, 1], 3),
        ([1, 1], 2),
        ([2, 1], 1),
    ]
    assert rep.product() == f


def test_pth_power_input():
    # derivative vanishes: f = (x^2+1)^3 over F_3 has f' = 0
    c3 = make_context(3)
    f = P(c3, 1, 0, 1) ** 3
    rep = factorize(f, seed=0)
    assert [(g.encodings(), m) for g, m in rep.factors] == [([1, 0, 1], 3)]


@pytest.mark.parametrize("q", [9, 27, 49])
def test_extension_field_factorization(q):
    ctx = ctx_for(q)
    f = cyclotomic(ctx, 40)
    rep = factorize(f, seed=3)
    assert rep.product() == f
    assert all(m == 1 for _, m in rep.factors)
    assert all(is_irreducible(g) for g, _ in rep.factors)


def test_cyclotomic_squarefree_multiplicities():
    for q in (3, 13):
        ctx = ctx_for(q)
        for n in (2, 5, 7):
            rep = factorize(cyclotomic(ctx, (1 << n) * 5), seed=1)
            assert all(m == 1 for _, m in rep.factors)


def test_unit_preserved():
    c13 = make_context(13)
    f = P(c13, 1, 1).scale(c13.el(5))
    rep = factorize(f, seed=0)
    assert rep.unit.enc == 5
    assert rep.product() == f


def test_xorshift_stream_fixed():
    rng = XorShift64Star(42)
    first = [rng.next() for _ in range(3)]
    rng2 = XorShift64Star(42)
    assert first == [rng2.next() for _ in range(3)]
    assert XorShift64Star(0).next() != 0
