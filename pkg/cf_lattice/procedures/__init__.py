"""
Procedures Package
Exports para descomposiciones, conjugación certificada y testigos
"""

from .decomposition import Element, DetDecomposition, as_product_element, scalar_split, d_alpha, det_decompose
from .conjugation import (
    ConjugationResult,
    ConjugatorKind,
    conjugate,
    conjugate_by_string,
    conjugate_by_triangular,
    conjugate_by_finitary,
    conjugate_scaled,
)
from .center import CenterWitness, center_witness
from .transvections import (
    TransvectionWitness,
    WitnessVerification,
    transvection_witness,
    replay_witness,
    verify_witness,
)

__all__ = [
    # Decomposition
    "Element",
    "DetDecomposition",
    "as_product_element",
    "scalar_split",
    "d_alpha",
    "det_decompose",
    # Conjugation
    "ConjugationResult",
    "ConjugatorKind",
    "conjugate",
    "conjugate_by_string",
    "conjugate_by_triangular",
    "conjugate_by_finitary",
    "conjugate_scaled",
    # Center
    "CenterWitness",
    "center_witness",
    # Transvections
    "TransvectionWitness",
    "WitnessVerification",
    "transvection_witness",
    "replay_witness",
    "verify_witness",
]
