"""Dense univariate polynomial kernels over F_{p^m}.

Representation: coefficient arrays ascending in degree, dtype int64.
Prime fields (m = 1) use shape (L,); extension fields use an (L, m) digit
matrix where row i holds the base-p digits of coefficient i.  The zero
polynomial has L = 0.

A compiled Cython core accelerates the prime-field leaf loops (schoolbook
multiply, long division, gcd).  It is selected at import time; setting
CYCLOFACTOR_PURE=1 in the environment forces the numpy fallback.  Large
multiplications go through an exactness-guarded float FFT in either backend,
since that beats schoolbook loops well before degree 10^3.

Repeated reduction by one modulus is served by the Modulus class, which
precomputes either a sparse folding rule (for moduli with few terms, e.g.
cyclotomics of 2-power-times-5 order) or a Newton power-series inverse for
Barrett-style division.
"""

from __future__ import annotations

import os

import numpy as np

from . import fallback

COMPILED = False
_impl = fallback
if os.environ.get("CYCLOFACTOR_PURE", "") in ("", "0"):
    try:
        from . import _core  # type: ignore[attr-defined]

        _impl = _core
        COMPILED = True
    except ImportError:
        pass


def backend_name() -> str:
    return "compiled" if COMPILED else "fallback"


# FFT products are used once the output length crosses this.
_FFT_MIN = 64
# Conservative exactness budget for float64 FFT convolution.
_FFT_SAFE = 1 << 45
_INT64_SAFE = fallback.INT64_SAFE


def _strip1(a: np.ndarray) -> np.ndarray:
    nz = np.nonzero(a)[0]
    return a[: nz[-1] + 1] if nz.size else a[:0]


def _strip2(a: np.ndarray) -> np.ndarray:
    nz = np.nonzero(a.any(axis=1))[0]
    return a[: nz[-1] + 1] if nz.size else a[:0]


def strip(a: np.ndarray) -> np.ndarray:
    """Drop trailing zero coefficients."""
    return _strip1(a) if a.ndim == 1 else _strip2(a)


def _mul_fft1(a: np.ndarray, b: np.ndarray, p: int, n: int) -> np.ndarray:
    size = 1 << (n - 1).bit_length()
    fa = np.fft.rfft(a, size)
    fb = np.fft.rfft(b, size)
    c = np.fft.irfft(fa * fb, size)[:n]
    r = np.rint(c)
    if np.max(np.abs(c - r)) > 0.25:  # pragma: no cover - guarded by _FFT_SAFE
        raise ArithmeticError("FFT convolution lost exactness")
    return r.astype(np.int64) % p


def _mul_kron(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact product via Kronecker substitution into Python big integers."""
    n = a.shape[0] + b.shape[0] - 1
    bits = (min(a.shape[0], b.shape[0]) * (p - 1) * (p - 1)).bit_length() + 1
    ia = 0
    for c in a[::-1]:
        ia = (ia << bits) | int(c)
    ib = 0
    for c in b[::-1]:
        ib = (ib << bits) | int(c)
    prod = ia * ib
    mask = (1 << bits) - 1
    out = np.empty(n, dtype=np.int64)
    for i in range(n):
        out[i] = (prod & mask) % p
        prod >>= bits
    return out


def xgcd_fp(a: np.ndarray, b: np.ndarray, p: int):
    """Extended gcd over F_p[x]: returns (g, u, v) with u*a + v*b = g, g monic."""
    r0, r1 = strip(a.astype(np.int64)), strip(b.astype(np.int64))
    u0 = np.array([1], dtype=np.int64)
    u1 = np.zeros(0, dtype=np.int64)
    v0 = np.zeros(0, dtype=np.int64)
    v1 = np.array([1], dtype=np.int64)
    ring = Ring(p)
    while r1.shape[0]:
        q, r = _impl.divmod_fp(r0, r1, p) if int(r1[-1]) == 1 else (None, None)
        if q is None:
            inv = pow(int(r1[-1]), p - 2, p)
            r1m = r1 * inv % p
            q, r = _impl.divmod_fp(r0, r1m, p)
            q = q * inv % p
        r = strip(r)
        qu = strip(ring.mul(strip(q), u1))
        qv = strip(ring.mul(strip(q), v1))
        r0, r1 = r1, r
        u0, u1 = u1, ring.sub(u0, qu)
        v0, v1 = v1, ring.sub(v0, qv)
    if r0.shape[0]:
        lead = int(r0[-1])
        if lead != 1:
            inv = pow(lead, p - 2, p)
            r0 = r0 * inv % p
            u0 = u0 * inv % p
            v0 = v0 * inv % p
    return r0, u0, v0


class Ring:
    """Coefficient arithmetic and polynomial kernels for one F_{p^m}."""

    def __init__(self, p: int, m: int = 1, modulus: np.ndarray | None = None):
        self.p = int(p)
        self.m = int(m)
        self.modulus = None
        self.red: np.ndarray | None = None
        if m > 1:
            if modulus is None:
                raise ValueError("extension ring requires a modulus")
            self.modulus = np.asarray(modulus, dtype=np.int64) % p
            if self.modulus.shape[0] != m + 1 or int(self.modulus[-1]) != 1:
                raise ValueError("modulus must be monic of degree m")
            # red[j] = digits of x^(m+j) reduced mod the modulus, j = 0..m-2
            red = np.zeros((max(m - 1, 0), m), dtype=np.int64)
            cur = (-self.modulus[:m]) % p
            for j in range(m - 1):
                red[j] = cur
                top = int(cur[m - 1])
                nxt = np.zeros(m, dtype=np.int64)
                nxt[1:] = cur[: m - 1]
                if top:
                    nxt = (nxt + top * red[0]) % p
                cur = nxt % p
            self.red = red

    # -- shape helpers -------------------------------------------------

    def zero(self) -> np.ndarray:
        return np.zeros((0,) if self.m == 1 else (0, self.m), dtype=np.int64)

    def one(self) -> np.ndarray:
        if self.m == 1:
            return np.array([1], dtype=np.int64)
        out = np.zeros((1, self.m), dtype=np.int64)
        out[0, 0] = 1
        return out

    def _pad_pair(self, a, b):
        la, lb = a.shape[0], b.shape[0]
        if la == lb:
            return a, b
        n = max(la, lb)
        shape = (n,) if self.m == 1 else (n, self.m)
        if la < n:
            aa = np.zeros(shape, dtype=np.int64)
            aa[:la] = a
            a = aa
        if lb < n:
            bb = np.zeros(shape, dtype=np.int64)
            bb[:lb] = b
            b = bb
        return a, b

    def add(self, a, b):
        a, b = self._pad_pair(a, b)
        return strip((a + b) % self.p)

    def sub(self, a, b):
        a, b = self._pad_pair(a, b)
        return strip((a - b) % self.p)

    def neg(self, a):
        return (-a) % self.p

    # -- multiplication ------------------------------------------------

    def mul(self, a, b) -> np.ndarray:
        if a.shape[0] == 0 or b.shape[0] == 0:
            return self.zero()
        if self.m == 1:
            return self._mul1(a, b)
        return self._mul_ext(a, b)

    def _mul1(self, a, b):
        p = self.p
        n = a.shape[0] + b.shape[0] - 1
        bound = min(a.shape[0], b.shape[0]) * (p - 1) * (p - 1)
        if n < _FFT_MIN:
            if bound < _INT64_SAFE:
                return _impl.mul_fp(np.ascontiguousarray(a), np.ascontiguousarray(b), p)
            return _mul_kron(a, b, p)
        size = 1 << (n - 1).bit_length()
        if bound * size <= _FFT_SAFE:
            return _mul_fft1(a, b, p, n)
        if bound < _INT64_SAFE:
            return np.convolve(a, b) % p
        return _mul_kron(a, b, p)

    def _reduce_digits(self, wide: np.ndarray) -> np.ndarray:
        # wide: (L, 2m-1) already reduced mod p; fold columns >= m via red rows.
        m = self.m
        out = wide[:, :m].astype(np.int64, copy=True)
        for t in range(m, 2 * m - 1):
            col = wide[:, t]
            if col.any():
                out += col[:, None] * self.red[t - m][None, :]
        return out % self.p

    def _mul_ext(self, a, b):
        p, m = self.p, self.m
        n = a.shape[0] + b.shape[0] - 1
        bound = min(a.shape[0], b.shape[0]) * (p - 1) * (p - 1) * m
        size = 1 << (n - 1).bit_length()
        if n >= _FFT_MIN and bound * size <= _FFT_SAFE:
            fa = np.fft.rfft(a, size, axis=0)
            fb = np.fft.rfft(b, size, axis=0)
            spec = np.zeros((fa.shape[0], 2 * m - 1), dtype=np.complex128)
            for u in range(m):
                for v in range(m):
                    spec[:, u + v] += fa[:, u] * fb[:, v]
            wide_f = np.fft.irfft(spec, size, axis=0)[:n]
            wide = np.rint(wide_f)
            if np.max(np.abs(wide_f - wide)) > 0.25:  # pragma: no cover
                raise ArithmeticError("FFT convolution lost exactness")
            wide = wide.astype(np.int64) % p
        else:
            wide = np.zeros((n, 2 * m - 1), dtype=np.int64)
            for u in range(m):
                au = a[:, u]
                if not au.any():
                    continue
                for v in range(m):
                    bv = b[:, v]
                    if bv.any():
                        wide[:, u + v] += np.convolve(au, bv)
            wide %= p
        return self._reduce_digits(wide)

    # -- scalar (single coefficient) helpers ----------------------------

    def el_mul(self, s, t):
        if self.m == 1:
            return int(s) * int(t) % self.p
        wide = np.zeros((1, 2 * self.m - 1), dtype=np.int64)
        for u in range(self.m):
            if s[u]:
                wide[0, u : u + self.m] += int(s[u]) * np.asarray(t, dtype=np.int64)
        wide %= self.p
        return self._reduce_digits(wide)[0]

    def el_inv(self, s):
        if self.m == 1:
            v = int(s) % self.p
            if v == 0:
                raise ZeroDivisionError("inverse of zero")
            return pow(v, self.p - 2, self.p)
        sv = strip(np.asarray(s, dtype=np.int64))
        if sv.shape[0] == 0:
            raise ZeroDivisionError("inverse of zero")
        g, u, _ = xgcd_fp(sv, self.modulus, self.p)
        if g.shape[0] != 1:
            raise ZeroDivisionError("element not invertible")
        out = np.zeros(self.m, dtype=np.int64)
        out[: u.shape[0]] = u
        return out

    def rowmul(self, mat: np.ndarray, s) -> np.ndarray:
        """Multiply every coefficient row of mat by the single element s."""
        if self.m == 1:
            return mat * (int(s) % self.p) % self.p
        L = mat.shape[0]
        wide = np.zeros((L, 2 * self.m - 1), dtype=np.int64)
        for u in range(self.m):
            if s[u]:
                wide[:, u : u + self.m] += int(s[u]) * mat
        wide %= self.p
        return self._reduce_digits(wide)

    # -- division / gcd --------------------------------------------------

    def divmod(self, a, b) -> tuple[np.ndarray, np.ndarray]:
        """Division with remainder; b need not be monic."""
        b = strip(b)
        if b.shape[0] == 0:
            raise ZeroDivisionError("polynomial division by zero")
        lead = b[-1]
        monic = int(lead) == 1 if self.m == 1 else (int(lead[0]) == 1 and not lead[1:].any())
        if monic:
            return self._divmod_monic(a, b)
        inv = self.el_inv(lead)
        bm = self.rowmul(b, inv)
        q, r = self._divmod_monic(a, bm)
        return strip(self.rowmul(q, inv)), r

    def _divmod_monic(self, a, b):
        if self.m == 1:
            q, r = _impl.divmod_fp(np.ascontiguousarray(a), np.ascontiguousarray(b), self.p)
            return strip(q), strip(r)
        db = b.shape[0] - 1
        la = a.shape[0]
        if la - 1 < db:
            return self.zero(), strip(a.copy())
        r = a.copy()
        q = np.zeros((la - db, self.m), dtype=np.int64)
        bt = b[:db]
        for i in range(la - db - 1, -1, -1):
            c = r[i + db]
            if c.any():
                q[i] = c
                if db:
                    r[i : i + db] = (r[i : i + db] - self.rowmul(bt, c)) % self.p
                r[i + db] = 0
        return strip(q), strip(r[:db] if db else r[:0])

    def rem(self, a, b) -> np.ndarray:
        return self.divmod(a, b)[1]

    def monic(self, a) -> np.ndarray:
        a = strip(a)
        if a.shape[0] == 0:
            return a
        lead = a[-1]
        is_one = int(lead) == 1 if self.m == 1 else (int(lead[0]) == 1 and not lead[1:].any())
        if is_one:
            return a
        return self.rowmul(a, self.el_inv(lead))

    def gcd(self, a, b) -> np.ndarray:
        a, b = strip(a), strip(b)
        if self.m == 1:
            return _impl.gcd_fp(np.ascontiguousarray(a), np.ascontiguousarray(b), self.p)
        x, y = a, b
        while y.shape[0]:
            x, y = y, self.rem(x, y)
        return self.monic(x)


class Modulus:
    """Precomputed reducer for repeated remainders by one monic polynomial."""

    _SPARSE_MAX_TERMS = 6
    _NEWTON_MIN_DEG = 48

    def __init__(self, ring: Ring, f: np.ndarray):
        f = strip(np.asarray(f))
        if f.shape[0] < 2:
            raise ValueError("modulus must have degree >= 1")
        lead = f[-1]
        monic = int(lead) == 1 if ring.m == 1 else (int(lead[0]) == 1 and not lead[1:].any())
        if not monic:
            raise ValueError("modulus must be monic")
        self.ring = ring
        self.f = f
        self.deg = f.shape[0] - 1
        self._inv: np.ndarray | None = None
        self._inv_prec = 0
        self._sparse: list[tuple[int, np.ndarray | int]] | None = None
        body = f[:-1]
        nz = np.nonzero(body)[0] if ring.m == 1 else np.nonzero(body.any(axis=1))[0]
        if (
            self.deg >= 64
            and nz.size <= self._SPARSE_MAX_TERMS
            and (nz.size == 0 or int(nz[-1]) <= self.deg - max(1, self.deg // 8))
        ):
            self._sparse = [(int(e), f[int(e)].copy() if ring.m > 1 else int(f[int(e)])) for e in nz]

    # x^deg == -(lower terms); fold overhanging blocks down until deg < deg(f).
    def _reduce_sparse(self, h: np.ndarray) -> np.ndarray:
        ring, p, D = self.ring, self.ring.p, self.deg
        cur = h
        while cur.shape[0] > D:
            over = cur[D:]
            maxlen = D
            if self._sparse:
                maxlen = max(D, max(e for e, _ in self._sparse) + over.shape[0])
            shape = (maxlen,) if ring.m == 1 else (maxlen, ring.m)
            nxt = np.zeros(shape, dtype=np.int64)
            nxt[:D] = cur[:D]
            for e, c in self._sparse:
                if ring.m == 1:
                    nxt[e : e + over.shape[0]] -= int(c) * over
                else:
                    nxt[e : e + over.shape[0]] -= ring.rowmul(over, c)
            cur = strip(nxt % p)
        return cur

    def _inv_to(self, k: int) -> np.ndarray:
        ring = self.ring
        if self._inv is None:
            self._inv = ring.one()
            self._inv_prec = 1
        rev = self.f[::-1]
        while self._inv_prec < k:
            prec = min(2 * self._inv_prec, 1 << (k - 1).bit_length())
            ri = ring.mul(rev[: min(rev.shape[0], prec)], self._inv)[:prec]
            t = (-ri) % ring.p
            if t.shape[0] == 0:
                t = ring.one()
                t[0] = (t[0] + 1) % ring.p  # (2 - 0) == 2? unreachable: ri has constant 1
            else:
                if ring.m == 1:
                    t[0] = (t[0] + 2) % ring.p
                else:
                    t[0, 0] = (t[0, 0] + 2) % ring.p
            self._inv = strip(ring.mul(self._inv, t)[:prec])
            self._inv_prec = prec
        return self._inv[: min(self._inv.shape[0], k)]

    def reduce(self, h: np.ndarray) -> np.ndarray:
        h = strip(h)
        D = self.deg
        if h.shape[0] - 1 < D:
            return h
        if self._sparse is not None:
            return self._reduce_sparse(h)
        if D < self._NEWTON_MIN_DEG or h.shape[0] - 1 >= 2 * D:
            return self.ring._divmod_monic(h, self.f)[1]
        ring = self.ring
        k = h.shape[0] - D
        inv = self._inv_to(k)
        hr = h[::-1][:k]
        qr = ring.mul(hr, inv)[:k]
        if qr.shape[0] < k:
            pad_shape = (k - qr.shape[0],) if ring.m == 1 else (k - qr.shape[0], ring.m)
            qr = np.concatenate([qr, np.zeros(pad_shape, dtype=np.int64)])
        q = strip(qr[::-1].copy())
        qf = ring.mul(q, self.f)
        lo = min(D, qf.shape[0])
        r = h[:D].copy()
        r[:lo] = (r[:lo] - qf[:lo]) % ring.p
        return strip(r)

    def mulmod(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.reduce(self.ring.mul(a, b))

    def powmod(self, a: np.ndarray, e: int) -> np.ndarray:
        if e < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self.reduce(a)
        while e:
            if e & 1:
                result = self.mulmod(result, base)
            e >>= 1
            if e:
                base = self.mulmod(base, base)
        return result
