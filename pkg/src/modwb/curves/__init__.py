"""Point counting, Frobenius polynomials and L-functions of curves over Q."""

from .elliptic import (
    ApTable,
    EllipticCurveQ,
    ap_table,
    count_points,
    ec_ap,
    ec_local_factor,
    literal_ap,
    reduction_type,
)
from .genus2 import (
    FrobeniusPoly,
    Genus2CurveQ,
    abelian_local_lfactor,
    frobenius_poly,
    genus2_counts,
    root_modulus_defect,
)
from .lfunction import elliptic_local_factors, global_l_eval

__all__ = [
    "ApTable",
    "EllipticCurveQ",
    "FrobeniusPoly",
    "Genus2CurveQ",
    "abelian_local_lfactor",
    "ap_table",
    "count_points",
    "ec_ap",
    "ec_local_factor",
    "elliptic_local_factors",
    "frobenius_poly",
    "genus2_counts",
    "global_l_eval",
    "literal_ap",
    "reduction_type",
    "root_modulus_defect",
]
