"""Exact arithmetic in F_q, q = p^m with p an odd prime.

Elements are identified by their canonical integer encoding: the base-p
packing of the coefficient vector over the prime subfield, an integer in
[0, q).  The context caches a multiplicative generator (the element of
smallest encoding with order q - 1) so that square roots, quadratic
characters, and the coherent chain of 2-power roots of unity are all
deterministic.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from . import intutil
from ._kernels import Modulus, Ring, strip
from .errors import (
    BadModulus,
    CharacteristicFive,
    CharacteristicUnsupported,
    ContextMismatch,
    DivisionByZero,
    NonResidue,
    NotPrime,
    ZeroInput,
)


def _is_irreducible_fp(vec: np.ndarray, p: int) -> bool:
    """Rabin test for a monic polynomial over the prime field F_p."""
    d = vec.shape[0] - 1
    if d < 1:
        return False
    ring = Ring(p)
    mod = Modulus(ring, vec)
    x = np.array([0, 1], dtype=np.int64)
    need = sorted({d // ell for ell in intutil.factorint(d)} | {d})
    frob = x
    step = 0
    for j in need:
        while step < j:
            frob = mod.powmod(frob, p)
            step += 1
        diff = ring.sub(frob, x)
        if j == d:
            if diff.shape[0]:
                return False
        else:
            if ring.gcd(mod.f, diff).shape[0] != 1:
                return False
    return True


class FieldElement:
    """An element of a fixed F_q, stored by canonical integer encoding."""

    __slots__ = ("ctx", "enc")

    def __init__(self, ctx: "FieldContext", enc: int):
        self.ctx = ctx
        self.enc = enc

    @property
    def digits(self) -> tuple[int, ...]:
        return self.ctx.decode(self.enc)

    def is_zero(self) -> bool:
        return self.enc == 0

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx:
                raise ContextMismatch("operands from different field contexts")
            return other
        if isinstance(other, (int, np.integer)):
            return self.ctx.scalar(int(other))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.ctx._add(self, o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.ctx._add(self, self.ctx._neg(o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.ctx._add(o, self.ctx._neg(self))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.ctx._mul(self, o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.ctx._mul(self, o.inv())

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.ctx._mul(o, self.inv())

    def __neg__(self):
        return self.ctx._neg(self)

    def __pow__(self, e: int):
        return self.ctx._pow(self, e)

    def inv(self) -> "FieldElement":
        if self.enc == 0:
            raise DivisionByZero("inverse of zero")
        return self.ctx._inv(self)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.ctx is other.ctx and self.enc == other.enc
        if isinstance(other, int):
            return self.enc == self.ctx.el(other).enc
        return NotImplemented

    def __hash__(self):
        return hash((id(self.ctx), self.enc))

    def __int__(self):
        return self.enc

    def __repr__(self):
        return f"{self.enc}#F{self.ctx.q}"


@dataclass(frozen=True)
class RhoChain:
    """Coherent chain rho_0 = 1, rho_1 = -1, ..., rho_i^2 = rho_(i-1)."""

    entries: tuple[FieldElement, ...]

    def __getitem__(self, i: int) -> FieldElement:
        return self.entries[i]

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class Omega5:
    """The set Omega(5), or the trace values w + 1/w when 5 does not split.

    kind is "roots" when 5 | q-1 (elements are the four primitive fifth
    roots of unity), "traces" when q = -1 mod 5 (elements are the two roots
    of x^2 + x - 1), and "empty" when q = +-2 mod 5.
    """

    kind: str
    elements: tuple[FieldElement, ...]


class FieldContext:
    """Validated description of one finite field F_q (q = p^m, p odd)."""

    def __init__(self, p: int, m: int = 1, modulus=None):
        if not intutil.is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if p == 2:
            raise CharacteristicUnsupported("characteristic 2 is unsupported")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.m = m
        self.q = p**m
        if m == 1:
            if modulus is not None:
                raise BadModulus("prime fields take no modulus")
            self.modulus = None
            self.ring = Ring(p)
        else:
            if modulus is None:
                vec = self._search_modulus(p, m)
            else:
                vec = np.asarray(list(modulus), dtype=np.int64) % p
                if vec.shape[0] != m + 1 or int(vec[-1]) != 1:
                    raise BadModulus("modulus must be monic of degree m")
                if not _is_irreducible_fp(vec, p):
                    raise BadModulus("modulus is reducible")
            self.modulus = tuple(int(c) for c in vec)
            self.ring = Ring(p, m, vec)
        self._qm1_factors = intutil.factorint(self.q - 1)
        self.generator = self._find_generator()
        self._sqrt_data = None

    @staticmethod
    def _search_modulus(p: int, m: int) -> np.ndarray:
        for enc in range(p**m):
            vec = np.zeros(m + 1, dtype=np.int64)
            e = enc
            for i in range(m):
                vec[i] = e % p
                e //= p
            vec[m] = 1
            if _is_irreducible_fp(vec, p):
                return vec
        raise BadModulus(f"no irreducible monic degree-{m} polynomial found")  # pragma: no cover

    # -- encoding helpers ------------------------------------------------

    def decode(self, enc: int) -> tuple[int, ...]:
        if self.m == 1:
            return (enc,)
        out = []
        for _ in range(self.m):
            out.append(enc % self.p)
            enc //= self.p
        return tuple(out)

    def encode(self, digits) -> int:
        out = 0
        for d in reversed(list(digits)):
            out = out * self.p + int(d) % self.p
        return out

    def el(self, value) -> FieldElement:
        """Build an element from an int (reduced mod p for m = 1, else an
        encoding in [0, q)), a digit sequence, or pass one through."""
        if isinstance(value, FieldElement):
            if value.ctx is not self:
                raise ContextMismatch("element from a different context")
            return value
        if isinstance(value, (int, np.integer)):
            v = int(value)
            if self.m == 1:
                return FieldElement(self, v % self.p)
            if 0 <= v < self.q:
                return FieldElement(self, v)
            return FieldElement(self, v % self.p)  # small literals act on the prime subfield
        return FieldElement(self, self.encode(value))

    def scalar(self, k: int) -> FieldElement:
        """The image of the integer k in the prime subfield."""
        return FieldElement(self, int(k) % self.p)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    # -- scalar arithmetic backing ----------------------------------------

    def _add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        if self.m == 1:
            return FieldElement(self, (a.enc + b.enc) % self.p)
        da = np.array(self.decode(a.enc), dtype=np.int64)
        db = np.array(self.decode(b.enc), dtype=np.int64)
        return FieldElement(self, self.encode((da + db) % self.p))

    def _neg(self, a: FieldElement) -> FieldElement:
        if self.m == 1:
            return FieldElement(self, (-a.enc) % self.p)
        da = np.array(self.decode(a.enc), dtype=np.int64)
        return FieldElement(self, self.encode((-da) % self.p))

    def _mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        if self.m == 1:
            return FieldElement(self, a.enc * b.enc % self.p)
        da = np.array(self.decode(a.enc), dtype=np.int64)
        db = np.array(self.decode(b.enc), dtype=np.int64)
        return FieldElement(self, self.encode(self.ring.el_mul(da, db)))

    def _inv(self, a: FieldElement) -> FieldElement:
        if self.m == 1:
            return FieldElement(self, pow(a.enc, self.p - 2, self.p))
        da = np.array(self.decode(a.enc), dtype=np.int64)
        return FieldElement(self, self.encode(self.ring.el_inv(da)))

    def _pow(self, a: FieldElement, e: int) -> FieldElement:
        if e < 0:
            return self._pow(a.inv(), -e)
        if self.m == 1:
            return FieldElement(self, pow(a.enc, e, self.p))
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self._mul(result, base)
            e >>= 1
            if e:
                base = self._mul(base, base)
        return result

    def _find_generator(self) -> FieldElement:
        targets = [(self.q - 1) // ell for ell in self._qm1_factors]
        for enc in range(2, self.q):
            cand = FieldElement(self, enc)
            if all(self._pow(cand, t).enc != 1 for t in targets):
                return cand
        if self.q == 2:  # pragma: no cover - excluded by odd p
            return self.one
        raise ArithmeticError("no generator found")  # pragma: no cover

    def elements(self):
        """Iterate all field elements in encoding order."""
        return (FieldElement(self, e) for e in range(self.q))

    def __repr__(self):
        if self.m == 1:
            return f"F_{self.p}"
        return f"F_{self.p}^{self.m}(mod={list(self.modulus)})"


@functools.lru_cache(maxsize=None)
def _cached_context(p: int, m: int, modulus: tuple | None) -> FieldContext:
    return FieldContext(p, m, modulus)


def make_context(p: int, m: int = 1, modulus=None) -> FieldContext:
    """Create (or fetch the cached) validated field context."""
    key = tuple(int(c) for c in modulus) if modulus is not None else None
    return _cached_context(int(p), int(m), key)


def is_square(a: FieldElement) -> bool:
    """Quadratic character: true iff a^((q-1)/2) = 1.  Requires a != 0."""
    if a.enc == 0:
        raise ZeroInput("is_square is undefined at zero")
    ctx = a.ctx
    return ctx._pow(a, (ctx.q - 1) // 2).enc == 1


def sqrt(a: FieldElement) -> tuple[FieldElement, FieldElement]:
    """Both square roots of a, canonical (smaller encoding) first.

    Tonelli-Shanks generalized to F_q, seeded with the context generator
    as the required nonresidue.  Raises NonResidue for nonsquares.
    """
    ctx = a.ctx
    if a.enc == 0:
        return ctx.zero, ctx.zero
    if not is_square(a):
        raise NonResidue(f"{a!r} is not a square")
    q = ctx.q
    s = intutil.v2(q - 1)
    t = (q - 1) >> s
    r = ctx._pow(a, (t + 1) // 2)
    b = ctx._pow(a, t)
    c = ctx._pow(ctx.generator, t)
    big_m = s
    while b.enc != 1:
        i = 0
        probe = b
        while probe.enc != 1:
            probe = ctx._mul(probe, probe)
            i += 1
        gain = c
        for _ in range(big_m - i - 1):
            gain = ctx._mul(gain, gain)
        r = ctx._mul(r, gain)
        c = ctx._mul(gain, gain)
        b = ctx._mul(b, c)
        big_m = i
    other = ctx._neg(r)
    return (r, other) if r.enc <= other.enc else (other, r)


def mult_order(a: FieldElement) -> int:
    """Least k >= 1 with a^k = 1, via descent over the factors of q - 1."""
    if a.enc == 0:
        raise ZeroInput("zero has no multiplicative order")
    ctx = a.ctx
    e = ctx.q - 1
    for p in ctx._qm1_factors:
        while e % p == 0 and ctx._pow(a, e // p).enc == 1:
            e //= p
    return e


def rho_chain(ctx: FieldContext) -> RhoChain:
    """The coherent chain rho_i = g^((q-1)/2^i), i = 0..v2(q-1)."""
    l1 = intutil.v2(ctx.q - 1)
    entries = tuple(ctx._pow(ctx.generator, (ctx.q - 1) >> i) for i in range(l1 + 1))
    return RhoChain(entries)


def omega2(ctx: FieldContext, i: int) -> list[FieldElement]:
    """All elements of multiplicative order exactly 2^i, sorted by encoding."""
    if i == 0:
        return [ctx.one]
    if intutil.v2(ctx.q - 1) < i:
        return []
    base = ctx._pow(ctx.generator, (ctx.q - 1) >> i)
    out = []
    cur = base
    for j in range(1, 1 << i):
        if j % 2 == 1:
            out.append(cur)
        cur = ctx._mul(cur, base)
    return sorted(out, key=lambda e: e.enc)


def omega5(ctx: FieldContext) -> Omega5:
    """Omega(5) as elements when 5 | q-1, else the trace set of x^2 + x - 1."""
    if ctx.p == 5:
        raise CharacteristicFive("Omega(5) is undefined in characteristic 5")
    q = ctx.q
    if (q - 1) % 5 == 0:
        step = (q - 1) // 5
        els = tuple(ctx._pow(ctx.generator, i * step) for i in range(1, 5))
        return Omega5("roots", els)
    # q = +-1 mod 5 <=> 5 is a square; the trace values solve t^2 + t - 1 = 0.
    five = ctx.scalar(5)
    if five.enc != 0 and is_square(five):
        root = sqrt(five)[0]
        inv2 = ctx.scalar(2).inv()
        t1 = ctx._mul(root - 1, inv2)
        t2 = ctx._mul(ctx._neg(root) - 1, inv2)
        els = tuple(sorted((t1, t2), key=lambda e: e.enc))
        return Omega5("traces", els)
    return Omega5("empty", ())
