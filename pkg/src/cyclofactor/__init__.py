"""cyclofactor: explicit factorization of 2^n*r-th cyclotomic polynomials
over odd finite fields, sparse irreducible polynomial families, and an
independent generic factorization oracle to check everything against.
"""

from ._kernels import COMPILED, backend_name

__version__ = "0.1.0"

__all__ = ["COMPILED", "backend_name", "__version__"]
