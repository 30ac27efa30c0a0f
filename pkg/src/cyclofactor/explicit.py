"""Closed-form factorization of Q_{2^n*5} over F_q and the general 2-power lift.

The engine works level by level in n.  At each level the common factor degree
d = ord(q mod 2^n*5) either doubles, in which case every factor f(x) simply
becomes f(x^2), or stays, in which case f(x^2) splits into a pair g(x),
g(-x) recoverable from square-root chains (linear and quadratic factors) or
from a quartic resolvent in the middle coefficient (quartic factors).  The
split formulas are exactly the witness equations of the q mod 20 case
theorems; every sign and branch combination they permit is enumerated and
checked against the parent via the coefficient-matching identities, so no
convention for pairing square roots with templates is ever assumed.  Counts
are asserted against phi(2^n*5)/d at every level, with d computed by direct
modular powering.

Levels keep splitting until the 2-adic stopping point derived from
v2(q^2 - 1) and v2(q^4 - 1); beyond it, factors are lifted in one jump by
x -> x^(2^(n - n0)).  The stopping point is computed, not assumed, which also
covers fields whose valuations exceed the generic ones (for example q = 23,
31, 47 or 79, where extra split levels are required).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import intutil
from .errors import (
    CharacteristicDividesR,
    CharacteristicUnsupported,
    CyclofactorError,
    EvenR,
    WitnessUnsolvable,
)
from .ffield import (
    FieldContext,
    FieldElement,
    Omega5,
    RhoChain,
    is_square,
    omega2,
    omega5,
    rho_chain,
    sqrt,
)
from .fpoly import Poly, compose_power, cyclotomic, is_irreducible, negate_arg, ord_mod, poly_order_is
from .intutil import euler_phi, v2
from .oracle import factorize, find_roots

_CASE_LABELS = {
    1: "q=1 (mod 20): binomial templates",
    9: "q=9 (mod 20): quadratic trace templates",
    11: "q=11 (mod 20): trinomial templates",
    19: "q=19 (mod 20): trinomial templates",
    13: "q=13,17 (mod 20): quartic rho templates",
    17: "q=13,17 (mod 20): quartic rho templates",
    3: "q=3,7 (mod 20): quartic witness refinement",
    7: "q=3,7 (mod 20): quartic witness refinement",
}


@dataclass(frozen=True)
class CaseParameters:
    """Residue class of q mod 20 plus the 2-adic valuations driving the engine."""

    q: int
    residue: int
    k: int
    L1: int
    L2: int
    L4: int
    L: int
    r: int


@dataclass(frozen=True)
class FactorMeta:
    degree: int
    order: int
    count: int


@dataclass(frozen=True)
class ExplicitFactorization:
    ctx: FieldContext
    r: int
    n: int
    factors: tuple[Poly, ...]
    meta: FactorMeta
    provenance: str


@dataclass
class WitnessSet:
    """Solved coefficient symbols backing a case theorem's factor templates."""

    rho: RhoChain
    omega: Omega5
    values: dict = field(default_factory=dict)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    checks: tuple[CheckResult, ...]

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]


def case_params(ctx: FieldContext, r: int = 5) -> CaseParameters:
    """2-adic valuations L_i = v2(q^i - 1) and the residue data for q mod 20."""
    if r < 3 or r % 2 == 0:
        raise EvenR("r must be an odd integer >= 3")
    if r % ctx.p == 0:
        raise CharacteristicDividesR(f"characteristic {ctx.p} divides r={r}")
    q = ctx.q
    return CaseParameters(
        q=q,
        residue=q % 20,
        k=q // 20,
        L1=v2(q - 1),
        L2=v2(q * q - 1),
        L4=v2(q**4 - 1),
        L=v2(q ** euler_phi(r) - 1),
        r=r,
    )


def _expected_meta(ctx: FieldContext, n: int, r: int) -> FactorMeta:
    e = (1 << n) * r
    d = ord_mod(ctx.q, e)
    return FactorMeta(degree=d, order=e, count=euler_phi(e) // d)


def _require_coprime_to_ten(ctx: FieldContext) -> None:
    if ctx.p in (2, 5):
        raise CharacteristicUnsupported("the r=5 engine requires gcd(10, q) = 1")


# ---------------------------------------------------------------------------
# split rules


def _split_linear(f: Poly) -> list[Poly]:
    """x^2 - v into (x - u)(x + u); the parent is x - v."""
    ctx = f.ctx
    vroot = -f.coeff(0)
    if vroot.enc == 0 or not is_square(vroot):
        raise WitnessUnsolvable("linear split expects a square root value")
    u, _ = sqrt(vroot)
    return [Poly(ctx, [-u, ctx.one]), Poly(ctx, [u, ctx.one])]


def _split_quadratic(f: Poly) -> list[Poly]:
    """x^4 + s x^2 + e into (x^2 + Sx + E)(x^2 - Sx + E) with E^2 = e, S^2 = 2E - s."""
    ctx = f.ctx
    s = f.coeff(1)
    e = f.coeff(0)
    if e.enc == 0 or not is_square(e):
        raise WitnessUnsolvable("quadratic split expects a square constant")
    out: list[Poly] = []
    r0, r1 = sqrt(e)
    for cap_e in {r0, r1}:
        s2 = 2 * cap_e - s
        if s2.enc == 0 or not is_square(s2):
            continue
        cap_s = sqrt(s2)[0]
        disc = cap_s * cap_s - 4 * cap_e
        if disc.enc == 0 or is_square(disc):
            continue  # children would be reducible
        out.extend(
            [Poly(ctx, [cap_e, cap_s, ctx.one]), Poly(ctx, [cap_e, -cap_s, ctx.one])]
        )
    if len(out) != 2:
        raise WitnessUnsolvable(f"quadratic split found {len(out)} children")
    return out


def _quartic_tuple(f: Poly) -> tuple[FieldElement, FieldElement, FieldElement, FieldElement]:
    return f.coeff(3), f.coeff(2), f.coeff(1), f.coeff(0)


def _quartic_from(ctx, a, b, c, e) -> Poly:
    return Poly(ctx, [e, c, b, a, ctx.one])


def _middle_resolvent(ctx, a, b, c, cap_e) -> Poly:
    """(B^2 + 2E - b)^2 = 4(2B - a)(2BE - c), expanded as a quartic in B."""
    c2 = -12 * cap_e - 2 * b
    c1 = 8 * (a * cap_e + c)
    c0 = (2 * cap_e - b) ** 2 - 4 * a * c
    return Poly(ctx, [c0, c1, c2, ctx.zero, ctx.one])


def _split_quartic(f: Poly) -> list[Poly]:
    """f(x^2) into the pair g(x) * g(-x) of quartics, via the B-resolvent.

    Enumerates every branch the witness equations allow: both square roots E
    of the constant term, every field root B of the resolvent, both signs of
    A = sqrt(2B - a), plus the degenerate A = 0 pairing that appears in
    characteristic 3.  Survivors are exactly the candidates satisfying all
    three coefficient-match identities.
    """
    ctx = f.ctx
    a, b, c, e = _quartic_tuple(f)
    if e.enc == 0 or not is_square(e):
        raise WitnessUnsolvable("quartic split expects a square constant")
    children: list[Poly] = []
    seen: set[tuple] = set()

    def _push(cap_a, cap_b, cap_c, cap_e):
        g = _quartic_from(ctx, cap_a, cap_b, cap_c, cap_e)
        key = tuple(g.encodings())
        if key not in seen:
            seen.add(key)
            children.append(g)

    e0, e1 = sqrt(e)
    for cap_e in {e0, e1}:
        resolvent = _middle_resolvent(ctx, a, b, c, cap_e)
        for cap_b in set(find_roots(resolvent)):
            a2 = 2 * cap_b - a
            if a2.enc == 0:
                continue  # degenerate; covered by the A = 0 route
            if not is_square(a2):
                continue
            cap_a = sqrt(a2)[0]
            num = cap_b * cap_b + 2 * cap_e - b
            cap_c = num / (2 * cap_a)
            if cap_c * cap_c != 2 * cap_b * cap_e - c:
                continue
            _push(cap_a, cap_b, cap_c, cap_e)
            _push(-cap_a, cap_b, -cap_c, cap_e)
    # A = 0 pairing: (x^4 + Bx^2 + Cx + E)(x^4 + Bx^2 - Cx + E)
    inv2 = ctx.scalar(2).inv()
    cap_b = a * inv2
    cap_e = (b - cap_b * cap_b) * inv2
    if cap_e * cap_e == e:
        c2 = 2 * cap_b * cap_e - c
        if c2.enc != 0 and is_square(c2):
            cap_c = sqrt(c2)[0]
            _push(ctx.zero, cap_b, cap_c, cap_e)
            _push(ctx.zero, cap_b, -cap_c, cap_e)
    if len(children) != 2:
        raise WitnessUnsolvable(f"quartic split found {len(children)} children")
    pair_product = children[0] * children[1]
    if pair_product != compose_power(f, 2):
        raise WitnessUnsolvable("quartic split pair does not reassemble the parent")
    return children


def _split_level(factors: list[Poly]) -> list[Poly]:
    out: list[Poly] = []
    for f in factors:
        if f.degree == 1:
            out.extend(_split_linear(f))
        elif f.degree == 2:
            out.extend(_split_quadratic(f))
        elif f.degree == 4:
            out.extend(_split_quartic(f))
        else:  # pragma: no cover - engine only tracks degrees 1, 2, 4
            raise WitnessUnsolvable(f"no split rule for degree {f.degree}")
    return out


# ---------------------------------------------------------------------------
# seeds and the level loop


def _seed_factors(ctx: FieldContext) -> list[Poly]:
    """The factorization of Q_5 itself."""
    om = omega5(ctx)
    if om.kind == "roots":
        return [Poly(ctx, [-w, ctx.one]) for w in om.elements]
    if om.kind == "traces":
        return [Poly(ctx, [ctx.one, -t, ctx.one]) for t in om.elements]
    return [cyclotomic(ctx, 5)]


def _stabilization_index(ctx: FieldContext, params: CaseParameters) -> int:
    # +-1 mod 5 classes stop splitting at L2, +-2 mod 5 classes at L4.
    return params.L2 if ctx.q % 5 in (1, 4) else params.L4


def factor_explicit(ctx: FieldContext, n: int) -> ExplicitFactorization:
    """All monic irreducible factors of Q_{2^n * 5} over F_q, closed form."""
    _require_coprime_to_ten(ctx)
    if n < 0:
        raise ValueError("n must be nonnegative")
    params = case_params(ctx, 5)
    n0 = _stabilization_index(ctx, params)
    factors = _seed_factors(ctx)
    d_prev = ord_mod(ctx.q, 5)
    if n >= 1:
        factors = [negate_arg(f).monic() for f in factors]
    top = min(n, n0)
    for level in range(2, top + 1):
        d_here = ord_mod(ctx.q, (1 << level) * 5)
        if d_here == 2 * d_prev:
            factors = [compose_power(f, 2) for f in factors]
        else:
            factors = _split_level(factors)
        d_prev = d_here
        expect = euler_phi((1 << level) * 5) // d_here
        if len(set(f.sort_key() for f in factors)) != expect:
            raise WitnessUnsolvable(
                f"level {level}: got {len(factors)} factors, expected {expect}"
            )
    if n > n0:
        factors = [compose_power(f, 1 << (n - n0)) for f in factors]
    meta = _expected_meta(ctx, n, 5)
    factors = sorted(factors, key=lambda f: f.sort_key())
    if len(factors) != meta.count or any(f.degree != meta.degree for f in factors):
        raise WitnessUnsolvable("factor census does not match the predicted meta")
    return ExplicitFactorization(
        ctx=ctx,
        r=5,
        n=n,
        factors=tuple(factors),
        meta=meta,
        provenance=_CASE_LABELS[params.residue],
    )


# ---------------------------------------------------------------------------
# paper-literal witness solvers (cross-checked against the engine in tests)


def solve_witness_1317(ctx: FieldContext, params: CaseParameters, rho: RhoChain) -> WitnessSet:
    """Witnesses for q = +-2 (mod 5), q = 1 (mod 4): a^2 = 5*rho_{L1} and the
    (2*rho_2 - 1)*a vs -(2*rho_2 + 1)*a square branch."""
    if params.residue not in (13, 17):
        raise WitnessUnsolvable("solve_witness_1317 needs residue 13 or 17")
    rho_l1 = rho[params.L1]
    rho2 = rho[2]
    five = ctx.scalar(5)
    a_sq = five * rho_l1
    if not is_square(a_sq):
        raise WitnessUnsolvable("5*rho_{L1} must be a square")
    a_pair = sqrt(a_sq)
    branches = {}
    lifts = {}
    for a in a_pair:
        plus = (2 * rho2 - 1) * a
        minus = -(2 * rho2 + 1) * a
        plus_sq = is_square(plus)
        minus_sq = is_square(minus)
        if plus_sq == minus_sq:
            raise WitnessUnsolvable("branch dichotomy violated")
        branches[a.enc] = "plus" if plus_sq else "minus"
        lifts[a.enc] = sqrt(plus if plus_sq else minus)
    return WitnessSet(
        rho=rho,
        omega=omega5(ctx),
        values={"aL2": a_pair, "branch": branches, "aL4": lifts},
    )


def _branch_sigma(ctx: FieldContext, a2: FieldElement) -> bool:
    """True on the cond4a side (2 - a2 square, alpha^2 = -2 exists)."""
    probe = 2 - a2
    if probe.enc != 0:
        return is_square(probe)
    # 2 - a2 = 0 only in characteristic 3; fall back to the square test on -2,
    # which is what the branch encodes.
    return is_square(ctx.scalar(-2))


def solve_witness_3mod20(ctx: FieldContext, params: CaseParameters) -> WitnessSet:
    """Level-2..4 witnesses for q = 3, 7 (mod 20), q > 3: a2^2 = -5, the
    2 - a2 square branch, b4 in {alpha +- a2} or {beta +- 1}, and the
    c4 = (b4^2 -+ 3)(2 a4)^(-1) filter, trial-divided into Q_80.

    Characteristic 3 is excluded: there a3 can vanish and the quotient
    formulas for c3/c4 stop making sense, so those fields (q = 3, 27, ...)
    are served by factor_explicit's resolvent machinery alone.
    """
    if params.residue not in (3, 7):
        raise WitnessUnsolvable("solve_witness_3mod20 needs residue 3 or 7")
    if ctx.p == 3:
        raise CharacteristicUnsupported(
            "witness quotient formulas degenerate in characteristic 3; "
            "use factor_explicit"
        )
    a2_sq = ctx.scalar(-5)
    if not is_square(a2_sq):
        raise WitnessUnsolvable("-5 must be a square")
    a2_pair = sqrt(a2_sq)
    sigma = _branch_sigma(ctx, a2_pair[0])
    values: dict = {"a2": a2_pair, "branch": "cond4a" if sigma else "cond4b"}
    b3 = ctx.one if sigma else -ctx.one
    values["b3"] = b3
    if sigma:
        alpha = sqrt(ctx.scalar(-2))[0]
        values["alpha"] = alpha
        b4_pool = {alpha + a2_pair[0], alpha - a2_pair[0], -alpha + a2_pair[0], -alpha - a2_pair[0]}
        e4 = -ctx.one
    else:
        beta = sqrt(ctx.scalar(2))[0]
        values["beta"] = beta
        b4_pool = {beta + 1, beta - 1, -beta + 1, -beta - 1}
        e4 = ctx.one
    target = cyclotomic(ctx, 80)
    inv2 = ctx.scalar(2).inv()
    quartets = []
    level3 = []
    for a2 in a2_pair:
        a3_sq = 2 * b3 - a2
        if a3_sq.enc == 0 or not is_square(a3_sq):
            continue
        for a3 in sqrt(a3_sq):
            c3 = 3 / a3
            level3.append((a2, a3, b3, c3))
            for b4 in b4_pool:
                a4_sq = 2 * b4 - a3
                if a4_sq.enc == 0:
                    # degenerate pairing with vanishing cubic coefficient
                    # (occurs e.g. over F_7); the quotient formula for c4
                    # does not apply, but c4^2 = 2 b4 e4 - c3 still does.
                    if (b3 - b4 * b4) * inv2 != e4:
                        continue
                    c4_sq = 2 * b4 * e4 - c3
                    if c4_sq.enc == 0 or not is_square(c4_sq):
                        continue
                    for c4 in sqrt(c4_sq):
                        quartic = _quartic_from(ctx, ctx.zero, b4, c4, e4)
                        if (target % quartic).is_zero():
                            quartets.append((ctx.zero, b4, c4, e4))
                    continue
                if not is_square(a4_sq):
                    continue
                for a4 in sqrt(a4_sq):
                    c4 = (b4 * b4 - (3 if sigma else -3)) / (2 * a4)
                    c4_sq_target = (-2 * b4 - c3) if sigma else (2 * b4 - c3)
                    if c4 * c4 != c4_sq_target:
                        continue
                    quartic = _quartic_from(ctx, a4, b4, c4, e4)
                    if (target % quartic).is_zero():
                        quartets.append((a4, b4, c4, e4))
    values["level3"] = level3
    values["quartets"] = sorted(
        set(quartets), key=lambda t: tuple(x.enc for x in t)
    )
    if not values["quartets"]:
        raise WitnessUnsolvable("no surviving level-4 witnesses")
    return WitnessSet(rho=rho_chain(ctx), omega=omega5(ctx), values=values)


def solve_witness_7mod20_n5(ctx: FieldContext, params: CaseParameters, w4: WitnessSet) -> WitnessSet:
    """The n = 5 resolvent stage: roots b5 of the two middle-coefficient
    quartics built from each (a4, b4, c4), then a5, c5 by the stated
    square-root and quotient formulas, filtered by division into Q_160."""
    target = cyclotomic(ctx, (1 << 5) * 5)
    inv2 = ctx.scalar(2).inv()
    quintets = []
    for a4, b4, c4, e4 in w4.values["quartets"]:
        if e4 != ctx.one:
            continue  # only the +1 constant splits again
        for cap_e in (ctx.one, -ctx.one):
            resolvent = _middle_resolvent(ctx, a4, b4, c4, cap_e)
            for b5 in set(find_roots(resolvent)):
                a5_sq = 2 * b5 - a4
                if a5_sq.enc == 0:
                    if (b4 - b5 * b5) * inv2 != cap_e:
                        continue
                    c5_sq = 2 * b5 * cap_e - c4
                    if c5_sq.enc == 0 or not is_square(c5_sq):
                        continue
                    for c5 in sqrt(c5_sq):
                        quartic = _quartic_from(ctx, ctx.zero, b5, c5, cap_e)
                        if (target % quartic).is_zero():
                            quintets.append((ctx.zero, b5, c5, cap_e))
                    continue
                if not is_square(a5_sq):
                    continue
                for a5 in sqrt(a5_sq):
                    c5 = (b5 * b5 + 2 * cap_e - b4) / (2 * a5)
                    if c5 * c5 != 2 * b5 * cap_e - c4:
                        continue
                    quartic = _quartic_from(ctx, a5, b5, c5, cap_e)
                    if (target % quartic).is_zero():
                        quintets.append((a5, b5, c5, cap_e))
    out = WitnessSet(rho=w4.rho, omega=w4.omega, values=dict(w4.values))
    out.values["quintets"] = sorted(set(quintets), key=lambda t: tuple(x.enc for x in t))
    if not out.values["quintets"]:
        raise WitnessUnsolvable("no surviving n=5 witnesses")
    return out


# ---------------------------------------------------------------------------
# general lifting theorem


def lift_general(ctx: FieldContext, r: int, n: int, seed: int = 0) -> ExplicitFactorization:
    """Factors of Q_{2^n * r} for any odd r >= 3 coprime to q.

    For n <= L = v2(q^phi(r) - 1) the oracle factors the cyclotomic directly;
    beyond L every irreducible factor is f(x^(2^(n-L))) for a base factor f
    of Q_{2^L * r}, with the lifting preconditions asserted numerically.
    """
    if r % 2 == 0 or r < 3:
        raise EvenR("r must be an odd integer >= 3")
    if r % ctx.p == 0:
        raise CharacteristicDividesR(f"characteristic {ctx.p} divides r={r}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    cap_l = v2(ctx.q ** euler_phi(r) - 1)
    if n <= cap_l:
        rep = factorize(cyclotomic(ctx, (1 << n) * r), seed)
        if any(mult != 1 for _, mult in rep.factors):
            raise WitnessUnsolvable("cyclotomic input was not squarefree")
        factors = [f for f, _ in rep.factors]
        provenance = f"oracle base case (n <= L = {cap_l})"
    else:
        base_order = (1 << cap_l) * r
        rep = factorize(cyclotomic(ctx, base_order), seed)
        base = [f for f, _ in rep.factors]
        m = base[0].degree
        if any(f.degree != m for f in base):
            raise WitnessUnsolvable("base factors are not equidegree")
        if v2(ctx.q**m - 1) != cap_l:
            raise WitnessUnsolvable("v2(q^m - 1) != L; lifting precondition broken")
        for f in base:
            if not poly_order_is(f, base_order):
                raise WitnessUnsolvable("base factor order is not 2^L * r")
        t = 1 << (n - cap_l)
        # t's prime factor 2 divides e = 2^L * r and not (q^m - 1)/e; and
        # q^m = 1 (mod 4) holds because L >= 2 whenever phi(r) is even.
        if cap_l < 2:
            raise WitnessUnsolvable("L < 2; lifting precondition broken")
        factors = [compose_power(f, t) for f in base]
        provenance = f"general 2-power lift from Q_{base_order}"
    meta = _expected_meta(ctx, n, r)
    factors = sorted(factors, key=lambda f: f.sort_key())
    if len(factors) != meta.count or any(f.degree != meta.degree for f in factors):
        raise WitnessUnsolvable("lifted census does not match the predicted meta")
    return ExplicitFactorization(
        ctx=ctx, r=r, n=n, factors=tuple(factors), meta=meta, provenance=provenance
    )


# ---------------------------------------------------------------------------
# verification


def verify_factorization(
    ef: ExplicitFactorization, order_degree_limit: int | None = 512
) -> VerificationReport:
    """Product, irreducibility, census, and order checks for a factorization.

    Failures are report entries, never exceptions.  The per-factor order
    check is skipped above order_degree_limit (None or a bound), since it is
    the most expensive of the four on very large factors.
    """
    ctx = ef.ctx
    checks: list[CheckResult] = []
    e = (1 << ef.n) * ef.r

    product = Poly.one(ctx)
    for f in ef.factors:
        product = product * f
    target = cyclotomic(ctx, e)
    ok = product == target
    checks.append(
        CheckResult(
            "product",
            ok,
            "product of factors equals the cyclotomic" if ok else "product mismatch",
        )
    )

    irr_ok = True
    bad = -1
    for idx, f in enumerate(ef.factors):
        try:
            good = f.is_monic() and is_irreducible(f)
        except CyclofactorError:
            good = False
        if not good:
            irr_ok = False
            bad = idx
            break
    checks.append(
        CheckResult(
            "irreducible",
            irr_ok,
            "all factors monic irreducible" if irr_ok else f"factor {bad} is reducible",
        )
    )

    d = ord_mod(ctx.q, e)
    count = euler_phi(e) // d
    distinct = len(set(f.sort_key() for f in ef.factors))
    census_ok = (
        len(ef.factors) == count
        and distinct == count
        and all(f.degree == d for f in ef.factors)
    )
    checks.append(
        CheckResult(
            "census",
            census_ok,
            f"{count} distinct factors of degree {d}"
            if census_ok
            else f"expected {count} x degree {d}, got {len(ef.factors)} ({distinct} distinct)",
        )
    )

    if order_degree_limit is None or d <= order_degree_limit:
        order_ok = True
        bad = -1
        for idx, f in enumerate(ef.factors):
            try:
                good = poly_order_is(f, e)
            except CyclofactorError:
                good = False
            if not good:
                order_ok = False
                bad = idx
                break
        checks.append(
            CheckResult(
                "order",
                order_ok,
                f"all factor orders equal {e}" if order_ok else f"factor {bad} order != {e}",
            )
        )
    else:
        checks.append(CheckResult("order", True, f"skipped (degree {d} above limit)"))

    return VerificationReport(passed=all(c.passed for c in checks), checks=checks)
