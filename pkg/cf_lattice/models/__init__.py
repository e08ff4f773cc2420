"""
Models Package
Exports para errores y schemas de documentos
"""

from .errors import (
    LatticeError,
    FieldMismatch,
    DivisionByZero,
    ZeroInput,
    ContractViolation,
    InvalidMatrix,
    WindowUndetermined,
    Undecidable,
    CertificationFailed,
    NotInProduct,
    SearchExhausted,
    AmbientTooLarge,
    UnknownSuite,
    DocumentError,
)
from .schemas import (
    FinitaryDocument,
    ScaledDocument,
    StringDocument,
    TriangularDocument,
    WordDocument,
    LetterDocument,
    IdentityTailDocument,
    PeriodicTailDocument,
    TailCertificateDocument,
    ElementDocument,
    DescriptorDocument,
    WitnessDocument,
    WitnessLetterDocument,
    FailureRecord,
    SuiteReport,
)

__all__ = [
    # Errors
    "LatticeError",
    "FieldMismatch",
    "DivisionByZero",
    "ZeroInput",
    "ContractViolation",
    "InvalidMatrix",
    "WindowUndetermined",
    "Undecidable",
    "CertificationFailed",
    "NotInProduct",
    "SearchExhausted",
    "AmbientTooLarge",
    "UnknownSuite",
    "DocumentError",
    # Documents
    "FinitaryDocument",
    "ScaledDocument",
    "StringDocument",
    "TriangularDocument",
    "WordDocument",
    "LetterDocument",
    "IdentityTailDocument",
    "PeriodicTailDocument",
    "TailCertificateDocument",
    "ElementDocument",
    "DescriptorDocument",
    "WitnessDocument",
    "WitnessLetterDocument",
    # Reports
    "FailureRecord",
    "SuiteReport",
]
