"""Finite-dimensional algebraic quantum groups: structure, Haar functionals,
duality and their operator-algebraic realizations, all as executable checks."""

__version__ = "0.1.0"

from .algebra import FiniteStarAlgebra, TensorStarAlgebra
from .errors import EXIT_CODES, AQGError
from .generate import BUNDLED, generate_example
from .hopf import QuantumGroup
from .report import Report
from .deffile import load
from .duality import build_dual
from .gns import build_gns, build_fundamental_unitary
from .pipeline import run_command

__all__ = [
    "AQGError",
    "BUNDLED",
    "EXIT_CODES",
    "FiniteStarAlgebra",
    "QuantumGroup",
    "Report",
    "TensorStarAlgebra",
    "build_dual",
    "build_fundamental_unitary",
    "build_gns",
    "generate_example",
    "load",
    "run_command",
]
