# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled dense F_p[x] leaf kernels (prime fields only).

Same contracts as cyclofactor._kernels.fallback; selected at import time.
Coefficient vectors are 1-D int64 arrays, ascending degree, reduced mod p.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


cdef long long _modinv(long long a, long long p):
    # Fermat inverse; p prime, a != 0 mod p.
    cdef long long result = 1
    cdef long long base = a % p
    cdef long long e = p - 2
    while e > 0:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


def mul_fp(cnp.int64_t[::1] a, cnp.int64_t[::1] b, long long p):
    """Schoolbook product mod p; caller guarantees min(la,lb)*(p-1)^2 < 2^62."""
    cdef Py_ssize_t la = a.shape[0], lb = b.shape[0]
    if la == 0 or lb == 0:
        return np.zeros(0, dtype=np.int64)
    out = np.zeros(la + lb - 1, dtype=np.int64)
    cdef cnp.int64_t[::1] c = out
    cdef Py_ssize_t i, j
    cdef long long ai
    for i in range(la):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(lb):
            c[i + j] += ai * b[j]
    cdef Py_ssize_t n = la + lb - 1
    for i in range(n):
        c[i] = c[i] % p
    return out


def divmod_fp(cnp.int64_t[::1] a, cnp.int64_t[::1] b, long long p):
    """Long division by monic b: (quotient, remainder of length deg b)."""
    cdef Py_ssize_t la = a.shape[0]
    cdef Py_ssize_t db = b.shape[0] - 1
    if la - 1 < db:
        return np.zeros(0, dtype=np.int64), np.asarray(a).copy()
    r_arr = np.asarray(a).copy()
    q_arr = np.zeros(la - db, dtype=np.int64)
    cdef cnp.int64_t[::1] r = r_arr
    cdef cnp.int64_t[::1] q = q_arr
    cdef Py_ssize_t i, j
    cdef long long c
    for i in range(la - db - 1, -1, -1):
        c = r[i + db]
        if c:
            q[i] = c
            for j in range(db):
                r[i + j] = (r[i + j] - c * b[j]) % p
                if r[i + j] < 0:
                    r[i + j] += p
            r[i + db] = 0
    if db:
        return q_arr, r_arr[:db]
    return q_arr, np.zeros(0, dtype=np.int64)


def gcd_fp(cnp.int64_t[::1] a, cnp.int64_t[::1] b, long long p):
    """Monic gcd via the Euclidean cascade, entirely in C buffers."""
    cdef Py_ssize_t la = a.shape[0], lb = b.shape[0]
    x_arr = np.asarray(a).copy() if la else np.zeros(0, dtype=np.int64)
    y_arr = np.asarray(b).copy() if lb else np.zeros(0, dtype=np.int64)
    cdef cnp.int64_t[::1] x, y
    cdef Py_ssize_t dx, dy, i, j
    cdef long long inv, c
    dx = la - 1
    dy = lb - 1
    while dy >= 0:
        if dx < dy:
            x_arr, y_arr = y_arr, x_arr
            dx, dy = dy, dx
            continue
        x = x_arr
        y = y_arr
        # make y monic
        inv = y[dy]
        if inv != 1:
            inv = _modinv(inv, p)
            for i in range(dy + 1):
                y[i] = y[i] * inv % p
        # x <- x mod y
        for i in range(dx - dy, -1, -1):
            c = x[i + dy]
            if c:
                for j in range(dy):
                    x[i + j] = (x[i + j] - c * y[j]) % p
                    if x[i + j] < 0:
                        x[i + j] += p
                x[i + dy] = 0
        dx = -1
        for i in range(dy - 1, -1, -1):
            if x[i]:
                dx = i
                break
        x_arr, y_arr = y_arr[: dy + 1], x_arr[: dx + 1] if dx >= 0 else x_arr[:0]
        dx, dy = dy, dx
    cdef cnp.int64_t[::1] g
    if dx >= 0:
        g = x_arr
        inv = g[dx]
        if inv != 1:
            inv = _modinv(inv, p)
            for i in range(dx + 1):
                g[i] = g[i] * inv % p
        return x_arr[: dx + 1]
    return np.zeros(0, dtype=np.int64)
