"""Exact verification of A-infinity algebras and differential modules with
infinity-simplicial faces, together with the tensor functor relating them.

All arithmetic is over an exact field (rationals or an odd-prime field), so
every structural identity is checked to an exactly-zero residual; there are
no tolerances anywhere in the library.
"""

__version__ = "0.1.0"

from .scalars import Rationals, PrimeField
from .report import VerificationReport

__all__ = ["Rationals", "PrimeField", "VerificationReport", "__version__"]
