"""Small integer number theory helpers: primality, factoring, phi, Mobius.

Everything here is deterministic.  Primality uses the Miller-Rabin test with
the known-good witness set for 64-bit integers (and a slightly larger safety
set beyond that); factoring uses trial division plus Pollard's rho, which is
plenty for the q^d - 1 sizes this library works with.
"""

from __future__ import annotations

from math import gcd

_SMALL_PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
    71, 73, 79, 83, 89, 97,
)

# Deterministic for n < 3.3 * 10^24 (Sorenson & Webster).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """Find a nontrivial factor of composite odd n."""
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"pollard rho failed on {n}")


def factorint(n: int) -> dict[int, int]:
    """Prime factorization as {prime: exponent}.  n >= 1."""
    if n < 1:
        raise ValueError("factorint requires n >= 1")
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return out


def euler_phi(n: int) -> int:
    """Euler's totient."""
    if n < 1:
        raise ValueError("euler_phi requires n >= 1")
    out = n
    for p in factorint(n):
        out = out // p * (p - 1)
    return out


def moebius(n: int) -> int:
    """Mobius function: 0 on non-squarefree n, else (-1)^(number of primes)."""
    if n < 1:
        raise ValueError("moebius requires n >= 1")
    fac = factorint(n)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def v2(n: int) -> int:
    """2-adic valuation of n (n > 0)."""
    if n <= 0:
        raise ValueError("v2 requires n > 0")
    return (n & -n).bit_length() - 1


def divisors(n: int) -> list[int]:
    """All positive divisors of n, sorted ascending."""
    ds = [1]
    for p, e in factorint(n).items():
        ds = [d * p**i for d in ds for i in range(e + 1)]
    return sorted(ds)


def mult_order_int(a: int, n: int) -> int:
    """Multiplicative order of a modulo n (gcd(a, n) = 1)."""
    if gcd(a, n) != 1:
        raise ValueError("a must be a unit modulo n")
    if n == 1:
        return 1
    e = euler_phi(n)
    for p in factorint(e):
        while e % p == 0 and pow(a, e // p, n) == 1:
            e //= p
    return e
