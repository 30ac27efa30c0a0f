"""Command-line front end.

Subcommands: factor, irreducible, oracle, lift, bench, bench-kernels.
Text and JSON output are byte-stable across runs for fixed arguments and
seed.  Exit codes: 0 success, 1 verification failure, 2 usage or validation
error.  NO_COLOR is trivially honored (output is never colored).
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

from .bench import BenchRow, bench_run, kernel_bench, kernel_bench_label
from .errors import CyclofactorError
from .explicit import ExplicitFactorization, factor_explicit, lift_general, verify_factorization
from .ffield import FieldContext, make_context
from .fpoly import Poly
from .oracle import FactorizationReport, factorize
from .sparsegen import generate_sparse


def _parse_q(spec: str) -> FieldContext:
    """Parse 'p' or 'p^m' into a validated field context."""
    text = spec.strip()
    if "^" in text:
        base, _, exp = text.partition("^")
        p, m = int(base), int(exp)
    else:
        p, m = int(text), 1
    if p < 3 or m < 1:
        raise CyclofactorError(f"bad field spec {spec!r}: need an odd prime power")
    return make_context(p, m)


def _q_json(ctx: FieldContext):
    return ctx.q if ctx.m == 1 else f"{ctx.p}^{ctx.m}"


def _emit_factorization(ef: ExplicitFactorization, fmt: str, out) -> None:
    if fmt == "json":
        payload = {
            "q": _q_json(ef.ctx),
            "n": ef.n,
            "r": ef.r,
            "modulus": list(ef.ctx.modulus) if ef.ctx.modulus else None,
            "degree": ef.meta.degree,
            "order": ef.meta.order,
            "factors": [f.encodings() for f in ef.factors],
        }
        out.write(json.dumps(payload, separators=(",", ":")) + "\n")
        return
    out.write(
        f"q={_q_json(ef.ctx)} n={ef.n} r={ef.r} "
        f"count={ef.meta.count} degree={ef.meta.degree}\n"
    )
    for f in ef.factors:
        out.write(",".join(str(e) for e in f.encodings()) + "\n")


def _emit_polys(ctx: FieldContext, n: int, polys: list[Poly], fmt: str, out) -> None:
    if fmt == "json":
        payload = {
            "q": _q_json(ctx),
            "n": n,
            "modulus": list(ctx.modulus) if ctx.modulus else None,
            "polynomials": [f.encodings() for f in polys],
        }
        out.write(json.dumps(payload, separators=(",", ":")) + "\n")
        return
    out.write(f"q={_q_json(ctx)} n={n} count={len(polys)}\n")
    for f in polys:
        out.write(",".join(str(e) for e in f.encodings()) + "\n")


def _emit_oracle(rep: FactorizationReport, fmt: str, out) -> None:
    ctx = rep.input.ctx
    if fmt == "json":
        payload = {
            "q": _q_json(ctx),
            "input": rep.input.encodings(),
            "unit": rep.unit.enc,
            "factors": [f.encodings() for f, _ in rep.factors],
            "multiplicities": [m for _, m in rep.factors],
        }
        out.write(json.dumps(payload, separators=(",", ":")) + "\n")
        return
    out.write(f"q={_q_json(ctx)} degree={rep.input.degree} factors={len(rep.factors)}\n")
    for f, mult in rep.factors:
        suffix = f" ^{mult}" if mult > 1 else ""
        out.write(",".join(str(e) for e in f.encodings()) + suffix + "\n")


def _run_verify(ef: ExplicitFactorization, out) -> int:
    rep = verify_factorization(ef)
    for check in rep.checks:
        out.write(f"verify {check.name}: {'ok' if check.passed else 'FAIL'} ({check.detail})\n")
    return 0 if rep.passed else 1


def _cmd_factor(args, out) -> int:
    ctx = _parse_q(args.q)
    if args.r == 5:
        ef = factor_explicit(ctx, args.n)
    else:
        ef = lift_general(ctx, args.r, args.n, seed=args.seed)
    _emit_factorization(ef, args.format, out)
    if args.verify:
        return _run_verify(ef, out)
    return 0


def _cmd_irreducible(args, out) -> int:
    ctx = _parse_q(args.q)
    polys = generate_sparse(ctx, args.n, args.family)
    _emit_polys(ctx, args.n, polys, args.format, out)
    return 0


def _cmd_oracle(args, out) -> int:
    ctx = _parse_q(args.q)
    coeffs = [int(tok) for tok in args.poly.split(",")]
    f = Poly.from_encodings(ctx, coeffs)
    rep = factorize(f, seed=args.seed)
    _emit_oracle(rep, args.format, out)
    return 0


def _cmd_lift(args, out) -> int:
    ctx = _parse_q(args.q)
    ef = lift_general(ctx, args.r, args.n, seed=args.seed)
    _emit_factorization(ef, args.format, out)
    if args.verify:
        return _run_verify(ef, out)
    return 0


def _cmd_bench(args, out) -> int:
    ctx = _parse_q(args.q)
    rows = bench_run(ctx, args.n_max, seed=args.seed)
    out.write(f"q={_q_json(ctx)} backend={kernel_bench_label()}\n")
    out.write(f"{'n':>3} {'degree':>7} {'explicit_ms':>12} {'oracle_ms':>12} {'ratio':>9} {'equal':>6}\n")
    for row in rows:
        eq = "-" if row.equal is None else ("yes" if row.equal else "NO")
        out.write(
            f"{row.n:>3} {row.degree:>7} {row.explicit_ms:>12.3f} "
            f"{row.oracle_ms:>12.3f} {row.ratio:>9.1f} {eq:>6}\n"
        )
    if any(row.equal is False for row in rows):
        return 1
    return 0


def _cmd_bench_kernels(args, out) -> int:
    mine = kernel_bench()
    if args.inner:
        out.write(json.dumps(mine) + "\n")
        return 0
    rows = {kernel_bench_label(): mine}
    env = dict(os.environ, CYCLOFACTOR_PURE="1")
    proc = subprocess.run(
        [sys.executable, "-m", "cyclofactor.cli", "bench-kernels", "--inner"],
        capture_output=True,
        text=True,
        env=env,
    )
    if proc.returncode == 0:
        rows["fallback"] = json.loads(proc.stdout)
    names = sorted(mine)
    cols = list(rows)
    out.write(f"{'kernel':>12} " + " ".join(f"{c:>12}" for c in cols) + "\n")
    for name in names:
        out.write(
            f"{name:>12} "
            + " ".join(f"{rows[c].get(name, float('nan')):>12.4f}" for c in cols)
            + "\n"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclofactor",
        description="Explicit factorization of 2^n*r-th cyclotomic polynomials over F_q",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, seed=True, fmt=True):
        p.add_argument("--q", required=True, help="field size, p or p^m (odd prime power)")
        if seed:
            p.add_argument("--seed", type=int, default=0)
        if fmt:
            p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("factor", help="factor Q_{2^n * r} with the explicit engine")
    common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=5)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(fn=_cmd_factor)

    p = sub.add_parser("irreducible", help="emit a sparse irreducible family")
    common(p, seed=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", default="auto")
    p.set_defaults(fn=_cmd_irreducible)

    p = sub.add_parser("oracle", help="factor an arbitrary polynomial generically")
    common(p)
    p.add_argument("--poly", required=True, help="comma-separated ascending coefficient encodings")
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("lift", help="factor Q_{2^n * r} via the general lifting theorem")
    common(p)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(fn=_cmd_lift)

    p = sub.add_parser("bench", help="explicit engine vs oracle timings")
    common(p, fmt=False)
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(fn=_cmd_bench)

    p = sub.add_parser("bench-kernels", help="compiled vs fallback kernel timings")
    p.add_argument("--inner", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(fn=_cmd_bench_kernels)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.fn(args, sys.stdout)
    except CyclofactorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
