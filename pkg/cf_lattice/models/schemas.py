"""
Schemas de Pydantic para documentos e informes
Centraliza los formatos de texto (JSON) de elementos, subgrupos, descriptores,
testigos e informes de suites para evitar imports circulares

Los escalares viajan como texto ("2/3", "-5") para no perder precisión.
"""

from typing import Annotated, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

ScalarText = Union[str, int]
EntryTriple = Tuple[int, int, ScalarText]
DenseRows = List[List[ScalarText]]


class DocumentModel(BaseModel):
    """Base de los documentos: campos desconocidos son un error de formato"""

    model_config = ConfigDict(extra="forbid")


# ========== ELEMENTOS ==========

class FieldHeader(DocumentModel):
    field: Optional[str] = Field(default=None, description="Q, Fp, F7, GF(7)...; si falta se usa --field")
    p: Optional[int] = Field(default=None, description="Primo cuando field = 'Fp'")


class FinitaryDocument(FieldHeader):
    """E + A con A dada por ternas (fila, columna, valor)"""
    kind: Literal["finitary"] = "finitary"
    entries: List[EntryTriple] = Field(default_factory=list, description="Deltas no nulos de A")


class ScaledDocument(FieldHeader):
    """α·(E + A)"""
    kind: Literal["scaled"] = "scaled"
    scalar: ScalarText = Field(description="α ∈ K*")
    entries: List[EntryTriple] = Field(default_factory=list, description="Deltas de la parte finitaria")


class IdentityTailDocument(DocumentModel):
    kind: Literal["identity"] = "identity"


class PeriodicTailDocument(DocumentModel):
    kind: Literal["periodic"] = "periodic"
    block: DenseRows = Field(description="Bloque repetido indefinidamente")


TailDocument = Annotated[Union[IdentityTailDocument, PeriodicTailDocument], Field(discriminator="kind")]


class StringDocument(FieldHeader):
    """B₁ ⊕ … ⊕ B_k seguido de una cola identidad o periódica"""
    kind: Literal["string"] = "string"
    blocks: List[DenseRows] = Field(default_factory=list, description="Bloques explícitos")
    tail: TailDocument = Field(default_factory=IdentityTailDocument, description="Cola")


class TriangularDocument(FieldHeader):
    """Prefijo triangular explícito o regla de banda con nombre"""
    kind: Literal["triangular"] = "triangular"
    prefix: Optional[DenseRows] = Field(default=None, description="Prefijo N×N")
    rule: Optional[str] = Field(default=None, description="bidiagonal, jordan, constant_band, geometric, full_upper")
    params: List[ScalarText] = Field(default_factory=list, description="Parámetros de la regla")
    bandwidth: Optional[int] = Field(default=None, description="Ancho de banda (constant_band, geometric)")


LetterElement = Annotated[
    Union[FinitaryDocument, ScaledDocument, StringDocument, TriangularDocument],
    Field(discriminator="kind"),
]


class LetterDocument(DocumentModel):
    element: LetterElement = Field(description="Generador de la letra")
    inverse: bool = Field(default=False, description="Letra invertida")


class TailCertificateDocument(DocumentModel):
    scalar: ScalarText = Field(description="c: a partir de la ventana el elemento es c·E")
    window: int = Field(ge=0, description="Columna desde la que rige el certificado")


class WordDocument(FieldHeader):
    """Producto ordenado de letras, con certificado de cola opcional"""
    kind: Literal["word"] = "word"
    letters: List[LetterDocument] = Field(default_factory=list)
    tail: Optional[TailCertificateDocument] = Field(default=None)


ElementDocument = Annotated[
    Union[FinitaryDocument, ScaledDocument, StringDocument, TriangularDocument, WordDocument],
    Field(discriminator="kind"),
]


# ========== SUBGRUPOS Y DESCRIPTORES ==========

class WitnessLetterDocument(DocumentModel):
    conjugator: List[EntryTriple] = Field(description="Deltas del conjugador finitario x")
    exponent: Literal[1, -1] = Field(description="Exponente de g en x⁻¹·g^e·x")


class WitnessDocument(FieldHeader):
    """Palabra de conjugados reproducible por verify-witness"""
    kind: Literal["transvection-witness"] = "transvection-witness"
    source: Union[FinitaryDocument, ScaledDocument] = Field(description="Elemento g")
    target: List[EntryTriple] = Field(description="Deltas de la transvección objetivo")
    word: List[WitnessLetterDocument] = Field(description="Letras en orden de producto")
    strategy: str = Field(default="commutator", description="identity, commutator o search")


class DescriptorDocument(FieldHeader):
    """Subgrupo normal: central(H), sandwich(S) o full"""
    variant: Literal["central", "sandwich", "full"]
    gens: List[Union[Tuple[ScalarText, ScalarText], ScalarText]] = Field(
        default_factory=list, description="Generadores de H (escalares) o de S (pares)"
    )
    full: bool = Field(default=False, description="H = K* (central)")
    alpha_full: bool = Field(default=False, description="K*×1 ⊆ S (sandwich)")
    delta_full: bool = Field(default=False, description="1×K* ⊆ S (sandwich)")
    node: Optional[str] = Field(default=None, description="Nodo con nombre, si coincide con uno")
    witness: Optional[WitnessDocument] = Field(default=None, description="Testigo de transvección")


# ========== INFORMES ==========

class FailureRecord(BaseModel):
    """Falsificación reproducible de una propiedad"""

    trial: int = Field(description="Índice del ensayo")
    trial_seed: str = Field(description="Semilla del generador del ensayo")
    property: str = Field(description="Propiedad falsificada")
    inputs: Dict[str, object] = Field(default_factory=dict, description="Entradas serializadas")
    expected: str = Field(default="", description="Valor esperado")
    actual: str = Field(default="", description="Valor obtenido")


class SuiteReport(BaseModel):
    """Informe de una ejecución de suite"""

    suite: str = Field(description="Identificador de la suite")
    field: str = Field(description="Cuerpo usado")
    seed: int = Field(description="Semilla de la suite")
    window: int = Field(description="Ventana máxima de los elementos aleatorios")
    exhaustive: bool = Field(default=False, description="Suite exhaustiva (criterio de aceptación)")
    trials: int = Field(default=0, description="Ensayos ejecutados")
    skipped: int = Field(default=0, description="Ensayos no aplicables al cuerpo")
    failures: List[FailureRecord] = Field(default_factory=list)
    counters: Dict[str, int] = Field(default_factory=dict, description="Contadores por resultado")
    wall_time: float = Field(default=0.0, description="Segundos de reloj")

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_lines(self) -> List[str]:
        status = "PASS" if self.passed else "FAIL"
        lines = [
            f"suite={self.suite} field={self.field} seed={self.seed} window={self.window} "
            f"trials={self.trials} skipped={self.skipped} failures={len(self.failures)} "
            f"time={self.wall_time:.2f}s {status}"
        ]
        for name, value in sorted(self.counters.items()):
            lines.append(f"  {name}={value}")
        for failure in self.failures:
            lines.append(
                f"  FAIL trial={failure.trial} seed={failure.trial_seed} {failure.property}: "
                f"expected {failure.expected} got {failure.actual}"
            )
        return lines
