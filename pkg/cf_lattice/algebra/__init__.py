"""
Algebra Package
Exports para el cuerpo base y los subgrupos de K*
"""

from .field import (
    FieldKind,
    FieldSpec,
    FieldElement,
    RationalFactorization,
    field_arith,
    factor_rational,
)
from .unit_groups import (
    UnitSubgroup,
    PairSubgroup,
    MembershipResult,
    UnitCoordinates,
    unit_membership,
    subgroup_join,
    pair_membership,
    pair_join,
    discrete_log,
    primitive_element,
)

__all__ = [
    # Field
    "FieldKind",
    "FieldSpec",
    "FieldElement",
    "RationalFactorization",
    "field_arith",
    "factor_rational",
    # Unit groups
    "UnitSubgroup",
    "PairSubgroup",
    "MembershipResult",
    "UnitCoordinates",
    "unit_membership",
    "subgroup_join",
    "pair_membership",
    "pair_join",
    "discrete_log",
    "primitive_element",
]
