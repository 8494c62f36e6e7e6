"""Degree-2 Siegel modular forms: symplectic action, binary classes, Jacobi data, Maass lifts."""

from .expansion import (
    SiegelEvaluation,
    SiegelExpansion,
    build_chi,
    evaluate_siegel,
    maass_dirichlet,
    maass_lift,
    phi_operator,
)
from .jacobi import JacobiEisensteinTable, cohen_h, jacobi_cusp_form, jacobi_eisenstein
from .quadforms import HalfIntegralMatrix, epsilon_units, reduce_class, reduced_classes
from .symplectic import (
    SiegelPoint,
    SymplecticMatrix,
    automorphy_matrix,
    congruence_member,
    random_principal_congruence,
    sp_action,
    standard_generators,
)

__all__ = [
    "HalfIntegralMatrix",
    "JacobiEisensteinTable",
    "SiegelEvaluation",
    "SiegelExpansion",
    "SiegelPoint",
    "SymplecticMatrix",
    "automorphy_matrix",
    "build_chi",
    "cohen_h",
    "congruence_member",
    "epsilon_units",
    "evaluate_siegel",
    "jacobi_cusp_form",
    "jacobi_eisenstein",
    "maass_dirichlet",
    "maass_lift",
    "phi_operator",
    "random_principal_congruence",
    "reduce_class",
    "reduced_classes",
    "sp_action",
    "standard_generators",
]
