"""Exception types shared across the library.

Most errors are precondition violations and subclass ValueError so that
callers who do not care about the fine-grained type can still catch them
uniformly.
"""


class CyclofactorError(ValueError):
    """Base class for all library-specific errors."""


class NotPrime(CyclofactorError):
    """The requested characteristic is not a prime number."""


class BadModulus(CyclofactorError):
    """Extension modulus is reducible, non-monic, or has the wrong degree."""


class CharacteristicUnsupported(CyclofactorError):
    """Characteristic 2 or 5 requested where the r=5 engine needs gcd(10, q) = 1."""


class ContextMismatch(CyclofactorError):
    """Operands belong to different field contexts."""


class DivisionByZero(CyclofactorError, ZeroDivisionError):
    """Division or inversion of a zero element/polynomial."""


class ZeroInput(CyclofactorError):
    """Operation requires a nonzero element."""


class NonResidue(CyclofactorError):
    """Square root of a quadratic nonresidue requested."""


class CharacteristicFive(CharacteristicUnsupported):
    """Omega(5) requested in characteristic 5."""


class NonMonic(CyclofactorError):
    """Operation requires a monic polynomial."""


class ZeroDegree(CyclofactorError):
    """Operation requires positive degree."""


class NotIrreducible(CyclofactorError):
    """Operation requires an irreducible polynomial."""


class ZeroConstantTerm(CyclofactorError):
    """Operation requires a nonzero constant term."""


class ZeroPolynomial(CyclofactorError):
    """Operation is undefined for the zero polynomial."""


class CharacteristicDividesN(CyclofactorError):
    """Cyclotomic index shares a factor with the field characteristic."""


class EvenR(CyclofactorError):
    """The lifting theorems require an odd r."""


class CharacteristicDividesR(CyclofactorError):
    """gcd(r, q) must be 1."""


class WitnessUnsolvable(CyclofactorError):
    """Internal contradiction while solving witness equations.

    This must never fire for valid inputs; it indicates a bug, not bad data.
    """


class FamilyResidueMismatch(CyclofactorError):
    """Sparse family does not match the residue class of q."""


class NBelowValidity(CyclofactorError):
    """Sparse family requested below its validity range in n."""
