"""Exact computations with Weyl modules of type B_n in exterior powers.

The package builds the lattice of the fundamental-type Weyl modules inside
``wedge^k Z^{2n+1}``, reduces it modulo primes, and checks dimension formulas,
submodule chains and isomorphisms over F_2 by spinning.
"""

from .config import ScaleLimits
from .errors import (
    ContainmentError,
    DivisibilityError,
    ModulusError,
    PreconditionError,
    ScaleError,
)
from .report import Check, Report

__version__ = "0.1.0"

__all__ = [
    "Check",
    "ContainmentError",
    "DivisibilityError",
    "ModulusError",
    "PreconditionError",
    "Report",
    "ScaleError",
    "ScaleLimits",
    "__version__",
]
