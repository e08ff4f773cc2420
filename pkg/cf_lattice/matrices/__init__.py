"""
Matrices Package
Exports para representaciones finitamente presentables de GL_cf(ℕ, K)
"""

from .dense import DenseMatrix, SparseColumn, dense_det, dense_inverse, dense_mul, identity_dense
from .finitary import FinitaryMatrix, ScaledFinitary, finitary_mul, finitary_inv, corner_det, embed_window
from .strings import StringMatrix, IdentityTail, PeriodicTail, string_inverse
from .triangular import UpperTriangularOracle, ExplicitPrefix, BandedRule, banded_rule, BANDED_RULES
from .words import (
    GroupWord,
    Letter,
    TailCertificate,
    TailSplit,
    column_eval,
    window_project,
    tail_split,
    check_tail_certificate,
    as_word,
)

__all__ = [
    # Dense
    "DenseMatrix",
    "SparseColumn",
    "dense_det",
    "dense_inverse",
    "dense_mul",
    "identity_dense",
    # Finitary
    "FinitaryMatrix",
    "ScaledFinitary",
    "finitary_mul",
    "finitary_inv",
    "corner_det",
    "embed_window",
    # Strings
    "StringMatrix",
    "IdentityTail",
    "PeriodicTail",
    "string_inverse",
    # Triangular
    "UpperTriangularOracle",
    "ExplicitPrefix",
    "BandedRule",
    "banded_rule",
    "BANDED_RULES",
    # Words
    "GroupWord",
    "Letter",
    "TailCertificate",
    "TailSplit",
    "column_eval",
    "window_project",
    "tail_split",
    "check_tail_certificate",
    "as_word",
]
