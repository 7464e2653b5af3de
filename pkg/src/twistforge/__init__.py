"""twistforge: exact verification of classical r-matrices and Drinfeld
twists for the D=4 Lorentz and Poincare algebras.

The package is organized in layers:

- :mod:`twistforge.scalars` -- exact Gaussian-rational / rational-function
  coefficients and the hbar-grading specialization,
- :mod:`twistforge.lie` -- structure-constant Lie algebras, star structures
  and basis maps, with the Lorentz and Poincare algebras built in,
- :mod:`twistforge.rmatrix` -- bivector/trivector calculus: Schouten
  brackets, Yang-Baxter classification, momentum/boost decomposition,
  subordination and Jordanian recognition,
- :mod:`twistforge.uea` -- the enveloping algebra in PBW normal form with
  its tensor powers and undeformed Hopf structure,
- :mod:`twistforge.series` / :mod:`twistforge.twist` -- truncated graded
  series and the twist machinery (cocycle, counit, twisted coproducts,
  symmetrized twists),
- :mod:`twistforge.catalog` -- the full inventory of r-matrices and twist
  recipes,
- :mod:`twistforge.verify` / :mod:`twistforge.cli` -- batch checks, report
  files and the command-line front end.
"""

from .scalars import (
    GaussianRational,
    NonPolynomialSpecialization,
    ParamSymbol,
    Scalar,
    SpecializationMap,
    gr,
    rational,
    scalar_arith,
    specialize,
)
from .lie import (
    BasisMap,
    LieAlgebra,
    LieElement,
    apply_basis_map,
    bracket,
    check_jacobi,
    lorentz,
    lorentz_complex,
    lorentz_complex_map,
    poincare,
    poincare_map,
    poincare_physical,
    star,
    structure_table,
    subalgebra_closure,
)

__all__ = [
    "GaussianRational",
    "NonPolynomialSpecialization",
    "ParamSymbol",
    "Scalar",
    "SpecializationMap",
    "gr",
    "rational",
    "scalar_arith",
    "specialize",
    "BasisMap",
    "LieAlgebra",
    "LieElement",
    "apply_basis_map",
    "bracket",
    "check_jacobi",
    "lorentz",
    "lorentz_complex",
    "lorentz_complex_map",
    "poincare",
    "poincare_map",
    "poincare_physical",
    "star",
    "structure_table",
    "subalgebra_closure",
]
