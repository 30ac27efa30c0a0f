"""Numpy implementations of the dense F_p[x] leaf kernels.

These are the fallback used when the compiled extension is unavailable (and
they are also the reference the extension is tested against).  Coefficient
vectors are 1-D int64 arrays, ascending degree, entries already reduced into
[0, p).
"""

from __future__ import annotations

import numpy as np

# Accumulated convolution sums min(la, lb) * (p-1)^2 must stay below this for
# exact int64 convolution.
INT64_SAFE = 1 << 62


def mul_fp(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Schoolbook product of two coefficient vectors, reduced mod p."""
    if a.shape[0] == 0 or b.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    return np.convolve(a, b) % p


def divmod_fp(a: np.ndarray, b: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Long division by a monic b: returns (quotient, remainder).

    The remainder keeps length deg(b) (not stripped); the caller strips.
    """
    db = b.shape[0] - 1
    la = a.shape[0]
    if la - 1 < db:
        return np.zeros(0, dtype=np.int64), a.copy()
    r = a.copy()
    q = np.zeros(la - db, dtype=np.int64)
    bt = b[:db]
    for i in range(la - db - 1, -1, -1):
        c = r[i + db]
        if c:
            q[i] = c
            r[i : i + db] = (r[i : i + db] - c * bt) % p
    return q, r[:db] if db else np.zeros(0, dtype=np.int64)


def gcd_fp(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Monic gcd via the Euclidean cascade."""
    x, y = a, b
    while y.shape[0]:
        lead = int(y[-1])
        if lead != 1:
            y = y * pow(lead, p - 2, p) % p
        _, r = divmod_fp(x, y, p)
        nz = np.nonzero(r)[0]
        r = r[: nz[-1] + 1] if nz.size else r[:0]
        x, y = y, r
    if x.shape[0]:
        lead = int(x[-1])
        if lead != 1:
            x = x * pow(lead, p - 2, p) % p
    return x
