"""
cf_lattice
Retículo de subgrupos normales de GL_cf(ℕ, K) con aritmética exacta sobre ℚ y GF(p)
"""

from .algebra import FieldSpec, FieldElement, UnitSubgroup, PairSubgroup
from .matrices import FinitaryMatrix, ScaledFinitary, StringMatrix, UpperTriangularOracle, GroupWord
from .lattice import (
    LatticeNode,
    NormalSubgroupDescriptor,
    classify_minimal_node,
    quotient_image,
    normal_closure,
    lattice_graph,
)
from .procedures import center_witness, transvection_witness, verify_witness
from .verify import run_suite

__version__ = "1.0.0"

__all__ = [
    # Algebra
    "FieldSpec",
    "FieldElement",
    "UnitSubgroup",
    "PairSubgroup",
    # Matrices
    "FinitaryMatrix",
    "ScaledFinitary",
    "StringMatrix",
    "UpperTriangularOracle",
    "GroupWord",
    # Lattice
    "LatticeNode",
    "NormalSubgroupDescriptor",
    "classify_minimal_node",
    "quotient_image",
    "normal_closure",
    "lattice_graph",
    # Procedures
    "center_witness",
    "transvection_witness",
    "verify_witness",
    # Verify
    "run_suite",
]
