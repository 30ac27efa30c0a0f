"""Families of sparse irreducible polynomials harvested from Q_{2^n * 5}.

Once the factorization of Q_{2^n * 5} stabilizes, every factor is a binomial,
trinomial, quadrinomial, or pentanomial of degree d(n), and stays irreducible
for all larger n under x -> x^2 substitution.  Each residue class of q mod 20
is exposed as a named family:

  family              residue   members at level n          validity
  ------------------  -------   --------------------------  -----------
  irred-3             q = 3     8 quartic lifts              n > 4
  irred-mod-3         3 (q>3)   pentanomial-or-sparser       n >= v2(q^4-1)
  pentanomial-mod-7   7         pentanomial-or-sparser       n >= v2(q^4-1)
  irred-mod-13-17     13, 17    5-term quartic lifts         n >= v2(q^4-1)
  binomial-mod-1      1         x^(2^(n-L1)) - w*rho_L1      n >= v2(q^2-1)
  trinomial-mod-9     9         x^2-shape trace trinomials   n >= v2(q^2-1)
  trinomial-mod-11    11        x^2 + cwx - w^2 shapes       n >= v2(q^2-1)
  trinomial-mod-19    19        constant -1 trinomials       n >= v2(q^2-1)

"auto" picks the family matching q.  Fields whose 2-adic valuations exceed
the generic ones (say q = 23 or 47) still generate; their members have the
class-correct degree for that q rather than the generic 2^(n-2).
"""

from __future__ import annotations

from .errors import FamilyResidueMismatch, NBelowValidity, ZeroConstantTerm
from .explicit import case_params, factor_explicit
from .ffield import FieldContext
from .fpoly import Poly, is_irreducible

_FAMILIES = {
    "irred-3": (3,),
    "irred-mod-3": (3,),
    "pentanomial-mod-7": (7,),
    "irred-mod-13-17": (13, 17),
    "binomial-mod-1": (1,),
    "trinomial-mod-9": (9,),
    "trinomial-mod-11": (11,),
    "trinomial-mod-19": (19,),
}


def family_for(ctx: FieldContext) -> str:
    """The family label matching q's residue class."""
    if ctx.q == 3:
        return "irred-3"
    residue = ctx.q % 20
    for name, residues in _FAMILIES.items():
        if name == "irred-3":
            continue
        if residue in residues:
            return name
    raise FamilyResidueMismatch(f"q = {ctx.q} is not coprime to 10")


def _validity_floor(ctx: FieldContext, family: str) -> int:
    params = case_params(ctx, 5)
    if family == "irred-3":
        return 5  # the q = 3 corollary starts strictly above n = 4
    if family in ("irred-mod-3", "pentanomial-mod-7", "irred-mod-13-17"):
        return params.L4
    return params.L2


def generate_sparse(ctx: FieldContext, n: int, family: str = "auto", check: bool = True) -> list[Poly]:
    """All members of the sparse family at level n, canonically sorted.

    The members are exactly the irreducible factors of Q_{2^n * 5} at a
    stabilized level, so each has at most 5 terms.  With check=True every
    member is pushed through the deterministic irreducibility test before
    being returned.
    """
    if family == "auto":
        family = family_for(ctx)
    if family not in _FAMILIES:
        raise FamilyResidueMismatch(f"unknown family {family!r}")
    if ctx.q % 20 not in _FAMILIES[family] or (family == "irred-3") != (ctx.q == 3):
        raise FamilyResidueMismatch(f"family {family!r} does not match q = {ctx.q}")
    floor = _validity_floor(ctx, family)
    if n < floor:
        raise NBelowValidity(f"family {family!r} over F_{ctx.q} needs n >= {floor}")
    members = list(factor_explicit(ctx, n).factors)
    for f in members:
        if f.weight() > 5:
            raise AssertionError(f"family member has weight {f.weight()} > 5")
        if check and not is_irreducible(f):
            raise AssertionError("family member failed the irreducibility test")
    return members


def reciprocal(f: Poly) -> Poly:
    """f*(x) = f(0)^(-1) * x^deg(f) * f(1/x), monic; preserves irreducibility."""
    if f.is_zero() or f.coeff(0).enc == 0:
        raise ZeroConstantTerm("reciprocal needs a nonzero constant term")
    ctx = f.ctx
    rev = [f.coeff(f.degree - i) for i in range(f.degree + 1)]
    return Poly(ctx, rev).scale(f.coeff(0).inv())
