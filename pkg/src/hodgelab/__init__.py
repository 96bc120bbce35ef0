"""Exact algebra for ideals of Hodge classes on hypersurfaces."""

__version__ = "0.1.0"

from .algebra import (GREVLEX, GRLEX, MonomialOrder, NuPoly, Polynomial, enumerate_monomials,
                      evaluate_parameter, parse_polynomial, partial_derivative, poly_multiply)
from .hodge import (AssociatedIdeal, LinearSpacePlane, associated_ideal_from_decomposition,
                    associated_ideal_general, associated_ideal_of_plane, check_gorenstein,
                    joint_tangent_codim, plane_decomposition, tangent_codim)
from .ideals import (GroebnerBasis, Ideal, IntersectionIdeal, buchberger, ideal_intersection_degreewise,
                     ideal_sum, intersection_by_elimination, is_smooth, jacobian_ideal)
from .pairing import (SoclePairing, critical_nu_values, excess_report, generic_rank, gram_matrix,
                      left_kernel_at, pairing_value, socle_generator, thmTsp_criterion)

__all__ = [
    "GREVLEX", "GRLEX", "MonomialOrder", "NuPoly", "Polynomial", "enumerate_monomials",
    "evaluate_parameter", "parse_polynomial", "partial_derivative", "poly_multiply",
    "AssociatedIdeal", "LinearSpacePlane", "associated_ideal_from_decomposition",
    "associated_ideal_general", "associated_ideal_of_plane", "check_gorenstein",
    "joint_tangent_codim", "plane_decomposition", "tangent_codim",
    "GroebnerBasis", "Ideal", "IntersectionIdeal", "buchberger", "ideal_intersection_degreewise",
    "ideal_sum", "intersection_by_elimination", "is_smooth", "jacobian_ideal",
    "SoclePairing", "critical_nu_values", "excess_report", "generic_rank", "gram_matrix",
    "left_kernel_at", "pairing_value", "socle_generator", "thmTsp_criterion",
]
