"""
Algebraic module.
Quadratic-field arithmetic, dependence witnesses and norm identities.
"""

from src.algebraic.quadratic import (
    QuadElem,
    canonical_alpha,
    canonical_beta,
    gamma_elem,
    check_gamma_representation,
)
from src.algebraic.cyclofield import (
    VStarMap,
    CyclotomicExtension,
    v_star,
    fundamental_discriminant,
    is_fundamental_discriminant,
    quad_in_cyclotomic,
    galois_split,
    cyclotomic_extension,
)
from src.algebraic.dependence import (
    DependenceWitness,
    CatalogueInstance,
    CATALOGUE_OPTIONS,
    torsion_bound,
    collapses,
    xi_value,
    xi_interval,
    certify_relation,
    find_dependence,
    find_dependence_escalating,
    catalogue_option,
    catalogue_instances,
    check_exceptional_catalogue,
)
from src.algebraic.norms import (
    NormIdentityReport,
    norm_identity_report,
    check_norm_identity,
    unit_difference_check,
)

__all__ = [
    "QuadElem",
    "canonical_alpha",
    "canonical_beta",
    "gamma_elem",
    "check_gamma_representation",
    "VStarMap",
    "CyclotomicExtension",
    "v_star",
    "fundamental_discriminant",
    "is_fundamental_discriminant",
    "quad_in_cyclotomic",
    "galois_split",
    "cyclotomic_extension",
    "DependenceWitness",
    "CatalogueInstance",
    "CATALOGUE_OPTIONS",
    "torsion_bound",
    "collapses",
    "xi_value",
    "xi_interval",
    "certify_relation",
    "find_dependence",
    "find_dependence_escalating",
    "catalogue_option",
    "catalogue_instances",
    "check_exceptional_catalogue",
    "NormIdentityReport",
    "norm_identity_report",
    "check_norm_identity",
    "unit_difference_check",
]
