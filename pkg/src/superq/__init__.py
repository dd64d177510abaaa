"""Exact symbolic computation for a Z2-graded q-deformed transformation
group, its quantum super 2-spheres, dual enveloping algebra, comodule
theory, invariant functional and orthogonality relations.

Everything is computed over the exact field Q(i)(t) (plus a fixed list of
formal radicals); equality of results is equality of canonical normal
forms, so every verified identity is a theorem at the checked truncation.
"""

from .algebra import (
    Element, MIXED, basis_monomials, bigrade, e_basis, multiply, normal_form,
    parity, project_00, zeta, zeta_power,
)
from .hopf import (
    PlaneElement, antipode, coaction, coproduct, counit, star, verify_coaction,
    verify_hopf,
)
from .qfun import QPolynomial, gauss_binomial, little_jacobi, pochhammer
from .dual import (
    Functional, calibrate_e_sign, eval_functional, pairing_gram_rank,
    verify_dual_hopf, verify_uq_relations,
)
from .repn import (
    CorepIndex, CorepMatrix, closed_form, comodule_vector, haar, inner,
    matrix_coefficients, moments, verify_integral, verify_peter_weyl,
)
from .scalars import Scalar, formal_sqrt, scalar_arith
from .spheres import (
    INFINITY, build_M, characters_of_S_infinity, find_relations,
    sphere_basis_check, verify_M, x_vector,
)

__all__ = [
    "Element", "MIXED", "basis_monomials", "bigrade", "e_basis", "multiply",
    "normal_form", "parity", "project_00", "zeta", "zeta_power",
    "PlaneElement", "antipode", "coaction", "coproduct", "counit", "star",
    "verify_coaction", "verify_hopf",
    "QPolynomial", "gauss_binomial", "little_jacobi", "pochhammer",
    "Functional", "calibrate_e_sign", "eval_functional", "pairing_gram_rank",
    "verify_dual_hopf", "verify_uq_relations",
    "CorepIndex", "CorepMatrix", "closed_form", "comodule_vector", "haar",
    "inner", "matrix_coefficients", "moments", "verify_integral",
    "verify_peter_weyl",
    "Scalar", "formal_sqrt", "scalar_arith",
    "INFINITY", "build_M", "characters_of_S_infinity", "find_relations",
    "sphere_basis_check", "verify_M", "x_vector",
]
