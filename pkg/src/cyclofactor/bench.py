"""Benchmarks: explicit engine vs generic oracle, and compiled vs fallback kernels.

Timings are wall-clock medians of three repetitions.  The claim being
defended is ordinal (the closed-form engine beats generic factorization once
degrees grow), so no statistical machinery is used.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from ._kernels import Ring, backend_name
from .explicit import factor_explicit
from .ffield import FieldContext
from .fpoly import cyclotomic
from .oracle import factorize


@dataclass(frozen=True)
class BenchRow:
    n: int
    degree: int
    explicit_ms: float
    oracle_ms: float
    ratio: float
    equal: bool | None  # set equality of factor lists, checked for n <= 7


def _median3(fn) -> float:
    times = []
    for _ in range(3):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return sorted(times)[1] * 1e3


def bench_run(ctx: FieldContext, n_max: int, seed: int = 0) -> list[BenchRow]:
    """Explicit vs oracle wall time for n = 4..n_max (median of 3 runs)."""
    if n_max < 4:
        raise ValueError("n_max must be >= 4")
    rows: list[BenchRow] = []
    for n in range(4, n_max + 1):
        target = cyclotomic(ctx, (1 << n) * 5)
        explicit_ms = _median3(lambda: factor_explicit(ctx, n))
        oracle_ms = _median3(lambda: factorize(target, seed))
        equal: bool | None = None
        if n <= 7:
            ef = factor_explicit(ctx, n)
            rep = factorize(target, seed)
            equal = [f.sort_key() for f in ef.factors] == [
                f.sort_key() for f, _ in rep.factors
            ]
        rows.append(
            BenchRow(
                n=n,
                degree=target.degree,
                explicit_ms=explicit_ms,
                oracle_ms=oracle_ms,
                ratio=oracle_ms / explicit_ms if explicit_ms > 0 else float("inf"),
                equal=equal,
            )
        )
    return rows


def kernel_bench(sizes=(64, 256, 1024, 4096), p: int = 13, trials: int = 5) -> dict[str, float]:
    """Median ms per leaf-kernel call on the active backend.

    Run once normally and once with CYCLOFACTOR_PURE=1 to compare the
    compiled core against the numpy fallback.
    """
    ring = Ring(p)
    rng = np.random.default_rng(12345)
    out: dict[str, float] = {"backend": 0.0}
    for size in sizes:
        a = rng.integers(0, p, size).astype(np.int64)
        b = rng.integers(0, p, size).astype(np.int64)
        a[-1] = 1
        b[-1] = 1
        for name, fn in (
            (f"mul[{size}]", lambda: ring.mul(a, b)),
            (f"rem[{size}]", lambda: ring.rem(np.concatenate([a, b]), b)),
            (f"gcd[{size}]", lambda: ring.gcd(a, b)),
        ):
            times = []
            for _ in range(trials):
                t0 = time.perf_counter()
                fn()
                times.append(time.perf_counter() - t0)
            out[name] = sorted(times)[len(times) // 2] * 1e3
    del out["backend"]
    return out


def kernel_bench_label() -> str:
    return backend_name()
