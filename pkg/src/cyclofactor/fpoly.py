"""Dense univariate polynomials over a FieldContext.

Coefficients are stored ascending by degree as the kernel arrays described in
cyclofactor._kernels.  Construction of cyclotomic polynomials goes through
the Mobius product of (x^d - 1) terms with exact division; irreducibility is
the deterministic Rabin test, so all outputs are reproducible.
"""

from __future__ import annotations

from math import gcd as _intgcd

import numpy as np

from . import intutil
from ._kernels import Modulus, Ring, strip
from .errors import (
    CharacteristicDividesN,
    ContextMismatch,
    DivisionByZero,
    NonMonic,
    NotIrreducible,
    ZeroConstantTerm,
    ZeroDegree,
)
from .ffield import FieldContext, FieldElement

euler_phi = intutil.euler_phi
moebius = intutil.moebius


class Poly:
    """Immutable dense polynomial over one field context."""

    __slots__ = ("ctx", "_c", "_mod")

    def __init__(self, ctx: FieldContext, coeffs):
        arr = _coeffs_to_array(ctx, coeffs)
        self.ctx = ctx
        self._c = strip(arr)
        self._mod = None

    @classmethod
    def _raw(cls, ctx: FieldContext, arr: np.ndarray) -> "Poly":
        obj = object.__new__(cls)
        obj.ctx = ctx
        obj._c = arr
        obj._mod = None
        return obj

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, ctx: FieldContext) -> "Poly":
        return cls._raw(ctx, ctx.ring.zero())

    @classmethod
    def one(cls, ctx: FieldContext) -> "Poly":
        return cls._raw(ctx, ctx.ring.one())

    @classmethod
    def x(cls, ctx: FieldContext) -> "Poly":
        return cls.monomial(ctx, 1)

    @classmethod
    def monomial(cls, ctx: FieldContext, deg: int, coeff=1) -> "Poly":
        c = ctx.el(coeff) if not isinstance(coeff, FieldElement) else coeff
        if c.enc == 0:
            return cls.zero(ctx)
        shape = (deg + 1,) if ctx.m == 1 else (deg + 1, ctx.m)
        arr = np.zeros(shape, dtype=np.int64)
        if ctx.m == 1:
            arr[deg] = c.enc
        else:
            arr[deg] = np.array(c.digits, dtype=np.int64)
        return cls._raw(ctx, arr)

    @classmethod
    def from_encodings(cls, ctx: FieldContext, encs) -> "Poly":
        return cls(ctx, [ctx.el(int(e)) for e in encs])

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self) -> int:
        return self._c.shape[0] - 1

    def is_zero(self) -> bool:
        return self._c.shape[0] == 0

    def coeff(self, i: int) -> FieldElement:
        if i < 0 or i > self.degree:
            return self.ctx.zero
        if self.ctx.m == 1:
            return FieldElement(self.ctx, int(self._c[i]))
        return self.ctx.el(tuple(int(d) for d in self._c[i]))

    @property
    def lead(self) -> FieldElement:
        if self.is_zero():
            return self.ctx.zero
        return self.coeff(self.degree)

    def is_monic(self) -> bool:
        return not self.is_zero() and self.lead.enc == 1

    def encodings(self) -> list[int]:
        """Canonical integer encodings of all coefficients, ascending degree."""
        if self.ctx.m == 1:
            return [int(c) for c in self._c]
        return [self.ctx.encode(row) for row in self._c]

    def sort_key(self) -> tuple:
        return (self.degree, tuple(self.encodings()))

    def weight(self) -> int:
        """Number of nonzero terms."""
        if self.ctx.m == 1:
            return int(np.count_nonzero(self._c))
        return int(self._c.any(axis=1).sum())

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if self.ctx is not other.ctx:
            raise ContextMismatch("polynomials from different contexts")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        return Poly._raw(self.ctx, self.ctx.ring.add(self._c, other._c))

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        return Poly._raw(self.ctx, self.ctx.ring.sub(self._c, other._c))

    def __neg__(self) -> "Poly":
        return Poly._raw(self.ctx, self.ctx.ring.neg(self._c))

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            return self.scale(other)
        self._check(other)
        return Poly._raw(self.ctx, self.ctx.ring.mul(self._c, other._c))

    def scale(self, s: FieldElement) -> "Poly":
        if s.ctx is not self.ctx:
            raise ContextMismatch("scalar from a different context")
        if s.enc == 0:
            return Poly.zero(self.ctx)
        arg = s.enc if self.ctx.m == 1 else np.array(s.digits, dtype=np.int64)
        return Poly._raw(self.ctx, strip(self.ctx.ring.rowmul(self._c, arg)))

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        q, r = self.ctx.ring.divmod(self._c, other._c)
        return Poly._raw(self.ctx, q), Poly._raw(self.ctx, r)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power")
        result = Poly.one(self.ctx)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def monic(self) -> "Poly":
        if self.is_zero() or self.is_monic():
            return self
        return Poly._raw(self.ctx, self.ctx.ring.monic(self._c))

    def gcd(self, other: "Poly") -> "Poly":
        self._check(other)
        return Poly._raw(self.ctx, self.ctx.ring.gcd(self._c, other._c))

    def _kernel_modulus(self) -> Modulus:
        if self._mod is None:
            if not self.is_monic():
                raise NonMonic("modulus must be monic")
            self._mod = Modulus(self.ctx.ring, self._c)
        return self._mod

    def powmod(self, e: int, modulus: "Poly") -> "Poly":
        """self^e reduced modulo a monic modulus, via square-and-multiply."""
        self._check(modulus)
        return Poly._raw(self.ctx, modulus._kernel_modulus().powmod(self._c, e))

    def evaluate(self, x) -> FieldElement:
        ctx = self.ctx
        xv = ctx.el(x) if not isinstance(x, FieldElement) else x
        acc = ctx.zero
        for i in range(self.degree, -1, -1):
            acc = acc * xv + self.coeff(i)
        return acc

    def derivative(self) -> "Poly":
        if self.degree < 1:
            return Poly.zero(self.ctx)
        if self.ctx.m == 1:
            ks = np.arange(1, self.degree + 1, dtype=np.int64)
            arr = self._c[1:] * (ks % self.ctx.p) % self.ctx.p
        else:
            ks = np.arange(1, self.degree + 1, dtype=np.int64) % self.ctx.p
            arr = self._c[1:] * ks[:, None] % self.ctx.p
        return Poly._raw(self.ctx, strip(arr))

    # -- equality / ordering ------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ctx is other.ctx and np.array_equal(self._c, other._c)

    def __hash__(self):
        return hash((id(self.ctx), self._c.tobytes(), self._c.shape))

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        return "Poly(" + ",".join(str(e) for e in self.encodings()) + ")"


def _coeffs_to_array(ctx: FieldContext, coeffs) -> np.ndarray:
    vals = list(coeffs)
    if ctx.m == 1:
        return np.array(
            [(v.enc if isinstance(v, FieldElement) else int(v) % ctx.p) for v in vals],
            dtype=np.int64,
        ).reshape(len(vals))
    out = np.zeros((len(vals), ctx.m), dtype=np.int64)
    for i, v in enumerate(vals):
        el = v if isinstance(v, FieldElement) else ctx.el(v)
        out[i] = np.array(el.digits, dtype=np.int64)
    return out


# -- x^d - 1 helpers ----------------------------------------------------------


def _mul_xd_minus_1(ctx: FieldContext, arr: np.ndarray, d: int) -> np.ndarray:
    n = arr.shape[0]
    shape = (n + d,) if ctx.m == 1 else (n + d, ctx.m)
    out = np.zeros(shape, dtype=np.int64)
    out[d : d + n] = arr
    out[:n] = (out[:n] - arr) % ctx.p
    return strip(out)


def _div_xd_minus_1(ctx: FieldContext, arr: np.ndarray, d: int) -> np.ndarray:
    """Exact division by x^d - 1 (raises if not exact)."""
    n = arr.shape[0]
    if n <= d:
        raise ArithmeticError("division by x^d - 1 is not exact")
    gl = n - d
    pad = (-gl) % d
    shape = (gl + pad,) if ctx.m == 1 else (gl + pad, ctx.m)
    buf = np.zeros(shape, dtype=np.int64)
    buf[:gl] = arr[:gl]
    if ctx.m == 1:
        lanes = buf.reshape(-1, d)
        g = (-np.cumsum(lanes, axis=0)).reshape(-1) % ctx.p
    else:
        lanes = buf.reshape(-1, d, ctx.m)
        g = (-np.cumsum(lanes, axis=0)).reshape(-1, ctx.m) % ctx.p
    g = g[:gl]
    # top d coefficients of arr must equal the top d of g shifted by d
    top = arr[gl:]
    gtop_shape = (d,) if ctx.m == 1 else (d, ctx.m)
    gtop = np.zeros(gtop_shape, dtype=np.int64)
    take = min(d, gl)
    gtop[d - take :] = g[gl - take :]
    if not np.array_equal(top % ctx.p, gtop):
        raise ArithmeticError("division by x^d - 1 is not exact")
    return strip(g)


def cyclotomic(ctx: FieldContext, n: int) -> Poly:
    """The n-th cyclotomic polynomial reduced into F_q[x].

    Built from the Mobius-inversion product of (x^d - 1) factors with exact
    divisions, so it works even when the primitive roots live in extensions.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n % ctx.p == 0:
        raise CharacteristicDividesN(f"characteristic {ctx.p} divides {n}")
    num: list[int] = []
    den: list[int] = []
    for d in intutil.divisors(n):
        mu = intutil.moebius(n // d)
        if mu == 1:
            num.append(d)
        elif mu == -1:
            den.append(d)
    arr = ctx.ring.one()
    for d in num:
        arr = _mul_xd_minus_1(ctx, arr, d)
    for d in den:
        arr = _div_xd_minus_1(ctx, arr, d)
    out = Poly._raw(ctx, arr)
    assert out.degree == intutil.euler_phi(n)
    return out


def negate_arg(f: Poly) -> Poly:
    """g(x) = f(-x)."""
    if f.is_zero():
        return f
    arr = f._c.copy()
    arr[1::2] = (-arr[1::2]) % f.ctx.p
    return Poly._raw(f.ctx, strip(arr))


def compose_power(f: Poly, t: int) -> Poly:
    """g(x) = f(x^t) for t >= 1."""
    if t < 1:
        raise ValueError("t must be >= 1")
    if t == 1 or f.is_zero():
        return f
    n = f.degree
    shape = (n * t + 1,) if f.ctx.m == 1 else (n * t + 1, f.ctx.m)
    arr = np.zeros(shape, dtype=np.int64)
    arr[::t] = f._c
    return Poly._raw(f.ctx, arr)


def is_irreducible(f: Poly) -> bool:
    """Deterministic Rabin irreducibility test over F_q."""
    if f.is_zero() or f.degree < 1:
        raise ZeroDegree("irreducibility needs degree >= 1")
    if not f.is_monic():
        raise NonMonic("irreducibility test expects a monic polynomial")
    d = f.degree
    if d == 1:
        return True
    ctx = f.ctx
    ring = ctx.ring
    mod = f._kernel_modulus()
    x = Poly.x(ctx)._c
    need = sorted({d // ell for ell in intutil.factorint(d)} | {d})
    frob = x
    step = 0
    for j in need:
        while step < j:
            frob = mod.powmod(frob, ctx.q)
            step += 1
        diff = ring.sub(frob, x)
        if j == d:
            if diff.shape[0]:
                return False
        else:
            if ring.gcd(f._c, diff).shape[0] != 1:
                return False
    return True


def poly_order_is(f: Poly, e: int) -> bool:
    """True iff the order of x modulo f is exactly e (f monic, f(0) != 0).

    Complete check without factoring q^deg - 1: verifies x^e = 1 (mod f) and
    x^(e/l) != 1 for every prime l dividing e.
    """
    if not f.is_monic():
        raise NonMonic("order check expects a monic polynomial")
    if f.coeff(0).enc == 0:
        raise ZeroConstantTerm("order is undefined with zero constant term")
    mod = f._kernel_modulus()
    x = Poly.x(f.ctx)._c
    one = f.ctx.ring.one()
    if not np.array_equal(mod.powmod(x, e), one):
        return False
    for ell in intutil.factorint(e):
        if np.array_equal(mod.powmod(x, e // ell), one):
            return False
    return True


_ORDER_FACTOR_CAP = 1 << 96


def poly_order(f: Poly) -> int:
    """Least e with f | x^e - 1, for monic irreducible f with f(0) != 0.

    Computed by factoring q^deg(f) - 1 and descending over prime divisors,
    so it is practical only while that integer is factorable (a cap guards
    against runaway Pollard rho on huge inputs; use poly_order_is to verify
    a known candidate order instead).
    """
    if f.is_zero() or f.degree < 1:
        raise ZeroDegree("order needs degree >= 1")
    if not f.is_monic():
        raise NonMonic("order expects a monic polynomial")
    if f.coeff(0).enc == 0:
        raise ZeroConstantTerm("order is undefined with zero constant term")
    if not is_irreducible(f):
        raise NotIrreducible("poly_order expects an irreducible polynomial")
    group = f.ctx.q ** f.degree - 1
    if group >= _ORDER_FACTOR_CAP:
        raise ValueError("q^deg - 1 too large to factor; use poly_order_is")
    mod = f._kernel_modulus()
    x = Poly.x(f.ctx)._c
    one = f.ctx.ring.one()
    e = group
    for p in intutil.factorint(group):
        while e % p == 0 and np.array_equal(mod.powmod(x, e // p), one):
            e //= p
    return e


def ord_mod(q: int, n: int) -> int:
    """Multiplicative order of q modulo n: the common factor degree of Q_n."""
    return intutil.mult_order_int(q % n, n)
