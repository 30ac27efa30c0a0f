"""Generic factorization over F_q: the ground truth for the explicit engine.

Pipeline: squarefree split, distinct-degree factorization with blocked gcd
batching, then Cantor-Zassenhaus equal-degree splitting.  Equal-degree
splitting uses trace maps of seeded-random polynomials: over small fields the
trace value itself partitions the factors (one gcd per field element), over
larger fields the classic (q-1)/2 power splits in half.  All randomness comes
from a 64-bit xorshift* stream derived from the caller's seed, so identical
(f, seed) inputs give identical reports.

None of this shares formula code with the explicit case engine; agreement
between the two is the point.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import intutil
from ._kernels import Modulus, strip
from .errors import ZeroPolynomial
from .ffield import FieldContext, FieldElement
from .fpoly import Poly, is_irreducible

_MULTIWAY_MAX_Q = 64


class XorShift64Star:
    """Deterministic 64-bit xorshift* generator."""

    _MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = (seed ^ 0x9E3779B97F4A7C15) & self._MASK or 0x2545F4914F6CDD1D

    def next(self) -> int:
        s = self.state
        s ^= (s >> 12) & self._MASK
        s ^= (s << 25) & self._MASK
        s ^= (s >> 27) & self._MASK
        self.state = s
        return (s * 0x2545F4914F6CDD1D) & self._MASK

    def below(self, n: int) -> int:
        return self.next() % n


@dataclass(frozen=True)
class FactorizationReport:
    """Complete factorization: unit * prod(factor^multiplicity) = input."""

    input: Poly
    factors: tuple[tuple[Poly, int], ...]
    unit: FieldElement

    def product(self) -> Poly:
        out = Poly.one(self.input.ctx).scale(self.unit)
        for f, mult in self.factors:
            out = out * f**mult
        return out

    def factor_list(self) -> list[Poly]:
        """Factors repeated by multiplicity, canonically sorted."""
        out: list[Poly] = []
        for f, mult in self.factors:
            out.extend([f] * mult)
        return out


def _rand_array(rng: XorShift64Star, ctx: FieldContext, length: int) -> np.ndarray:
    if ctx.m == 1:
        return strip(np.array([rng.below(ctx.q) for _ in range(length)], dtype=np.int64))
    arr = np.zeros((length, ctx.m), dtype=np.int64)
    for i in range(length):
        arr[i] = np.array(ctx.decode(rng.below(ctx.q)), dtype=np.int64)
    return strip(arr)


def _pth_root_coeff(ctx: FieldContext, el: FieldElement) -> FieldElement:
    # Inverse Frobenius: a^(p^(m-1)).
    return ctx._pow(el, ctx.p ** (ctx.m - 1))


def _squarefree_parts(f: Poly) -> list[tuple[Poly, int]]:
    """Squarefree decomposition of a monic f (char-p aware)."""
    ctx = f.ctx
    out: list[tuple[Poly, int]] = []
    deriv = f.derivative()
    if deriv.is_zero():
        # f = u(x^p): take p-th roots of the surviving coefficients.
        coeffs = [_pth_root_coeff(ctx, f.coeff(i * ctx.p)) for i in range(f.degree // ctx.p + 1)]
        for g, m in _squarefree_parts(Poly(ctx, coeffs)):
            out.append((g, m * ctx.p))
        return out
    c = f.gcd(deriv)
    w = f // c
    i = 1
    while w.degree > 0:
        y = w.gcd(c)
        z = w // y
        if z.degree > 0:
            out.append((z, i))
        i += 1
        w = y
        c = c // y
    if c.degree > 0:
        coeffs = [_pth_root_coeff(ctx, c.coeff(j * ctx.p)) for j in range(c.degree // ctx.p + 1)]
        for g, m in _squarefree_parts(Poly(ctx, coeffs)):
            out.append((g, m * ctx.p))
    return out


_DDF_BLOCK = 8


def _ddf(f: Poly) -> list[tuple[Poly, int]]:
    """Split monic squarefree f into (product of degree-d factors, d) parts."""
    ctx = f.ctx
    ring = ctx.ring
    out: list[tuple[Poly, int]] = []
    cur = f
    x_arr = Poly.x(ctx)._c
    h = x_arr
    i = 0
    while cur.degree >= 2 * (i + 1):
        mod = cur._kernel_modulus()
        block = min(_DDF_BLOCK, cur.degree // 2 - i)
        steps: list[np.ndarray] = []
        acc = ring.one()
        for _ in range(block):
            h = mod.powmod(h, ctx.q)
            steps.append(h)
            acc = mod.mulmod(acc, ring.sub(h, x_arr))
        g_arr = ring.gcd(cur._c, acc)
        if g_arr.shape[0] > 1:
            for t, hj in enumerate(steps):
                d = i + t + 1
                gj = ring.gcd(cur._c, ring.sub(hj, x_arr))
                if gj.shape[0] > 1:
                    gp = Poly._raw(ctx, gj)
                    out.append((gp, d))
                    cur = cur // gp
                    if cur.degree == 0:
                        break
            if cur.degree > 0:
                h = cur._kernel_modulus().reduce(h)
        i += block
    if cur.degree > 0:
        out.append((cur, cur.degree))
    return out


def _trace_map(mod: Modulus, ctx: FieldContext, h: np.ndarray, d: int) -> np.ndarray:
    t = h
    u = h
    for _ in range(d - 1):
        u = mod.powmod(u, ctx.q)
        t = ctx.ring.add(t, u)
    return t


def _edf(f: Poly, d: int, rng: XorShift64Star) -> list[Poly]:
    """Split monic squarefree f, all of whose factors have degree d."""
    ctx = f.ctx
    ring = ctx.ring
    if f.degree == d:
        return [f]
    mod = f._kernel_modulus()
    while True:
        h = _rand_array(rng, ctx, f.degree)
        if h.shape[0] < 2:
            continue
        t = _trace_map(mod, ctx, h, d)
        pieces: list[Poly] = []
        if ctx.q <= _MULTIWAY_MAX_Q:
            rem = f
            for enc in range(ctx.q):
                if rem.degree <= 0:
                    break
                shift = Poly._raw(ctx, ring.sub(t, Poly(ctx, [ctx.el(enc)])._c))
                g = rem.gcd(shift)
                if g.degree > 0:
                    pieces.append(g)
                    rem = rem // g
            if rem.degree > 0:
                pieces.append(rem)
        else:
            g0_arr = ring.gcd(f._c, t)
            g0 = Poly._raw(ctx, g0_arr)
            rest = f // g0 if g0.degree > 0 else f
            if rest.degree > 0:
                s = mod.powmod(t, (ctx.q - 1) // 2)
                g1 = rest.gcd(Poly._raw(ctx, ring.sub(s, ring.one())))
                g2 = rest // g1 if g1.degree > 0 else rest
                for part in (g0, g1, g2):
                    if part.degree > 0:
                        pieces.append(part)
            else:
                pieces.append(g0)
        if len(pieces) <= 1:
            continue
        out: list[Poly] = []
        for piece in pieces:
            out.extend(_edf(piece, d, rng))
        return out


def factorize(f: Poly, seed: int = 0) -> FactorizationReport:
    """Complete factorization of a nonzero polynomial over its field."""
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    rng = XorShift64Star(seed)
    unit = f.lead
    work = f.monic()
    found: dict[Poly, int] = {}
    if work.degree >= 1:
        for part, mult in _squarefree_parts(work):
            for prod, d in _ddf(part):
                for irr in _edf(prod, d, rng):
                    found[irr] = found.get(irr, 0) + mult
    factors = tuple(sorted(found.items(), key=lambda kv: kv[0].sort_key()))
    return FactorizationReport(input=f, factors=factors, unit=unit)


def find_roots(f: Poly) -> list[FieldElement]:
    """All roots of f in F_q, with multiplicity, sorted by encoding."""
    if f.is_zero():
        raise ZeroPolynomial("cannot extract roots of the zero polynomial")
    if f.degree < 1:
        return []
    ctx = f.ctx
    work = f.monic()
    xq = Poly.x(ctx).powmod(ctx.q, work) if work.degree > 1 else Poly.zero(ctx)
    if work.degree > 1:
        linear_part = work.gcd(xq - Poly.x(ctx))
    else:
        linear_part = work
    roots: list[FieldElement] = []
    if linear_part.degree >= 1:
        rng = XorShift64Star(12345)
        for lin in _edf(linear_part, 1, rng):
            # lin = x + c  =>  root is -c
            roots.append(-lin.coeff(0))
    out: list[FieldElement] = []
    for r in roots:
        lin = Poly(ctx, [-r, ctx.one])
        g = f
        while True:
            q, rem = divmod(g, lin)
            if not rem.is_zero():
                break
            out.append(r)
            g = q
    return sorted(out, key=lambda e: e.enc)
