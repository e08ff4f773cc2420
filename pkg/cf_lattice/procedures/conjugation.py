"""
Conjugación Certificada
Responsabilidad: Calcular c⁻¹·g·c para g finitaria y conjugadores string,
triangular o finitario, certificando la ventana resultante por sondeo

El resultado se comprueba columna a columna: en la ventana m el bloque
inferior izquierdo es nulo y las columnas siguientes son e_j.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from ..config import settings
from ..models.errors import CertificationFailed, FieldMismatch, InvalidMatrix, WindowUndetermined
from ..matrices.finitary import FinitaryMatrix, ScaledFinitary
from ..matrices.strings import StringMatrix
from ..matrices.triangular import UpperTriangularOracle
from ..matrices.words import GroupWord, Letter, column_eval

logger = logging.getLogger(__name__)

Conjugator = Union[StringMatrix, UpperTriangularOracle, FinitaryMatrix]


class ConjugatorKind(str, Enum):
    STRING = "String"
    UPPER_TRIANGULAR = "UpperTriangular"
    FINITARY = "Finitary"


@dataclass(frozen=True)
class ConjugationResult:
    """
    Resultado certificado de c⁻¹·g·c.

    result:           c⁻¹·g·c como matriz finitaria
    certified_window: m, el resultado pertenece a GL(m, ℕ, K)
    blocks_used:      t mínimo (solo strings)
    probed_columns:   columnas sondeadas en la certificación
    """

    result: FinitaryMatrix
    certified_window: int
    conjugator_kind: ConjugatorKind
    blocks_used: Optional[int] = None
    probed_columns: int = 0


# ========== CERTIFICACIÓN ==========

def _certify(word: GroupWord, m: int, margin: Optional[int] = None) -> FinitaryMatrix:
    """
    Evalúa las columnas 0..m+margin de la palabra y construye la matriz finitaria.

    Raises:
        CertificationFailed: entrada no nula bajo la fila m en columnas < m,
            o columna ≥ m distinta de e_j
    """
    margin = settings.PROBE_MARGIN if margin is None else margin
    spec = word.spec
    one = spec.one
    deltas = []
    for j in range(m):
        column = column_eval(word, j)
        for i, v in column.items():
            if i >= m:
                raise CertificationFailed(f"entrada ({i}, {j}) bajo la ventana certificada {m}")
            d = v - one if i == j else v
            if d.value:
                deltas.append((i, j, d))
    for j in range(m, m + margin + 1):
        if column_eval(word, j) != {j: one}:
            raise CertificationFailed(f"la columna {j} no es e_{j} tras la ventana {m}")
    return FinitaryMatrix(spec, tuple(deltas))


def _conjugation_word(g: FinitaryMatrix, c: Conjugator) -> GroupWord:
    if c.spec != g.spec:
        raise FieldMismatch(f"{g.spec.tag} vs {c.spec.tag}")
    return GroupWord(g.spec, (Letter(c, True), Letter(g), Letter(c)))


# ========== OPERACIONES ==========

def conjugate_by_string(g: FinitaryMatrix, s: StringMatrix) -> ConjugationResult:
    """
    s⁻¹·g·s con la ventana m = n₁ + … + n_t del menor t con m ≥ n.

    Args:
        g: Matriz finitaria de ventana n
        s: String conjugador

    Returns:
        ConjugationResult con certified_window = m

    Example:
        >>> q = FieldSpec.rationals()
        >>> s = StringMatrix.from_values(q, [[[0, 1], [1, 0]]])
        >>> r = conjugate_by_string(FinitaryMatrix.diagonal(q, [2]), s)
        >>> r.certified_window, str(r.result.entry(1, 1))
        (2, '2')
    """
    t, m = s.minimal_cover(g.window)
    result = _certify(_conjugation_word(g, s), m)
    logger.debug(f"Conjugación por string: t={t}, m={m}")
    return ConjugationResult(
        result=result,
        certified_window=m,
        conjugator_kind=ConjugatorKind.STRING,
        blocks_used=t,
        probed_columns=m + settings.PROBE_MARGIN + 1,
    )


def conjugate_by_triangular(g: FinitaryMatrix, u: UpperTriangularOracle) -> ConjugationResult:
    """
    u⁻¹·g·u con ventana acotada por la presentación de u.

    Raises:
        WindowUndetermined: si u es una banda sin ancho acotado
    """
    if u.spec != g.spec:
        raise FieldMismatch(f"{g.spec.tag} vs {u.spec.tag}")
    m = u.window_bound(g.window)
    if m is None:
        if g.is_identity():
            return ConjugationResult(result=g, certified_window=0, conjugator_kind=ConjugatorKind.UPPER_TRIANGULAR)
        raise WindowUndetermined(f"la regla '{u.presentation.name}' no tiene ancho de banda acotado")
    result = _certify(_conjugation_word(g, u), m)
    return ConjugationResult(
        result=result,
        certified_window=m,
        conjugator_kind=ConjugatorKind.UPPER_TRIANGULAR,
        probed_columns=m + settings.PROBE_MARGIN + 1,
    )


def conjugate_by_finitary(g: FinitaryMatrix, x: FinitaryMatrix) -> ConjugationResult:
    """x⁻¹·g·x en aritmética finitaria directa"""
    if x.spec != g.spec:
        raise FieldMismatch(f"{g.spec.tag} vs {x.spec.tag}")
    return ConjugationResult(
        result=g.conjugate(x),
        certified_window=max(g.window, x.window),
        conjugator_kind=ConjugatorKind.FINITARY,
    )


def conjugate(g: FinitaryMatrix, c: Conjugator) -> ConjugationResult:
    """Despacha según la clase del conjugador"""
    if isinstance(c, StringMatrix):
        return conjugate_by_string(g, c)
    if isinstance(c, UpperTriangularOracle):
        return conjugate_by_triangular(g, c)
    if isinstance(c, FinitaryMatrix):
        return conjugate_by_finitary(g, c)
    raise InvalidMatrix(f"conjugador no soportado: {type(c).__name__}")


def conjugate_scaled(g: ScaledFinitary, c: Conjugator) -> ScaledFinitary:
    """c⁻¹·(α·h)·c = α·(c⁻¹·h·c): el escalar es central"""
    return ScaledFinitary(g.scalar, conjugate(g.body, c).result)
