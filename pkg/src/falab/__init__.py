"""falab: exact linear algebra over Q, F_p and cyclotomic fields, with
Frobenius/symmetric algebra machinery, Hopf algebra analysis, and fusion
(Grothendieck) ring arithmetic.

Everything is computed exactly; no floating point anywhere.
"""

__version__ = "0.1.0"

from .fields import FieldDescriptor, Scalar
from .linalg import MatrixE, char_poly, integer_roots, kernel_basis, solve_linear
from .intlattice import IntLattice, integer_kernel, lattice_meet_line
from .algebra import AlgebraSpec, Element
from .frobenius import FrobeniusStructure, build_frobenius
from .hopf import HopfSpec, check_hopf, dual_hopf
from .fusion import FusionRing, build_g0

__all__ = [
    "FieldDescriptor",
    "Scalar",
    "MatrixE",
    "solve_linear",
    "kernel_basis",
    "char_poly",
    "integer_roots",
    "IntLattice",
    "integer_kernel",
    "lattice_meet_line",
    "AlgebraSpec",
    "Element",
    "FrobeniusStructure",
    "build_frobenius",
    "HopfSpec",
    "check_hopf",
    "dual_hopf",
    "FusionRing",
    "build_g0",
    "__version__",
]
