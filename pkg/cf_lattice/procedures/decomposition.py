"""
Descomposiciones
Responsabilidad: Separar la parte escalar y la parte finitaria de un elemento
de D_sc × GL_fr, y descomponer por determinante con d(α) = diag(α, 1, 1, …)
"""

import logging
from typing import NamedTuple, Optional, Tuple, Union

from ..algebra.field import FieldElement
from ..models.errors import NotInProduct, Undecidable
from ..matrices.dense import dense_scalar_value, dense_scale
from ..matrices.finitary import FinitaryMatrix, ScaledFinitary, corner_det
from ..matrices.strings import StringMatrix
from ..matrices.triangular import ExplicitPrefix, UpperTriangularOracle
from ..matrices.words import GroupWord, Letter, check_tail_certificate, tail_split

logger = logging.getLogger(__name__)

Element = Union[FinitaryMatrix, ScaledFinitary, StringMatrix, UpperTriangularOracle, GroupWord]


class DetDecomposition(NamedTuple):
    """g = d(alpha)·special con corner_det(special) = 1"""

    alpha: FieldElement
    special: FinitaryMatrix


# ========== PRODUCTO D_sc × GL_fr ==========

def _triangular_as_product(u: UpperTriangularOracle) -> Optional[ScaledFinitary]:
    presentation = u.presentation
    if isinstance(presentation, ExplicitPrefix):
        if not presentation.size:
            return ScaledFinitary(u.spec.one, FinitaryMatrix.identity(u.spec))
        return ScaledFinitary(u.spec.one, FinitaryMatrix.from_corner(presentation.matrix, u.spec, verify=False))
    if not u.is_toeplitz():
        raise Undecidable(f"regla de banda '{presentation.name}' sin estructura de Toeplitz")
    d = u.toeplitz_is_scalar()
    if d is None:
        return None
    return ScaledFinitary(d, FinitaryMatrix.identity(u.spec))


def _letter_as_product(letter: Letter) -> Optional[ScaledFinitary]:
    result = as_product_element(letter.generator)
    if result is None or not letter.inverted:
        return result
    return result.inverse()


def _word_as_product(w: GroupWord) -> Optional[ScaledFinitary]:
    if len(w.letters) == 1 and w.tail is None:
        return _letter_as_product(w.letters[0])

    split = tail_split(w)
    if split is not None:
        c = dense_scalar_value(split.block)
        if c is None:
            return None
        if not split.window:
            return ScaledFinitary(c, FinitaryMatrix.identity(w.spec))
        body = FinitaryMatrix.from_corner(dense_scale(c.inverse(), split.corner), w.spec, verify=False)
        return ScaledFinitary(c, body)

    if w.tail is None:
        raise Undecidable("palabra sin cola analizable ni certificado de cola")

    c = w.tail.scalar
    corner = check_tail_certificate(w)
    if not corner:
        return ScaledFinitary(c, FinitaryMatrix.identity(w.spec))
    logger.debug(f"Certificado de cola aceptado: {c}·E desde la columna {w.tail.window}")
    return ScaledFinitary(c, FinitaryMatrix.from_corner(dense_scale(c.inverse(), corner), w.spec))


def as_product_element(g: Element) -> Optional[ScaledFinitary]:
    """
    Presenta g como α·h ∈ D_sc × GL_fr.

    Returns:
        ScaledFinitary, o None si g está demostrablemente fuera del producto
        (cola periódica no escalar, banda de Toeplitz no diagonal)

    Raises:
        Undecidable: palabra sin cola analizable y sin certificado
    """
    if isinstance(g, ScaledFinitary):
        return g
    if isinstance(g, FinitaryMatrix):
        return g.to_scaled()
    if isinstance(g, StringMatrix):
        if g.tail_scalar() is None:
            return None
        return g.to_scaled_finitary()
    if isinstance(g, UpperTriangularOracle):
        return _triangular_as_product(g)
    if isinstance(g, GroupWord):
        return _word_as_product(g)
    raise TypeError(f"tipo de elemento no soportado: {type(g).__name__}")


def scalar_split(g: Element) -> Tuple[FieldElement, FinitaryMatrix]:
    """
    Única descomposición g = α·h con h finitaria.

    Raises:
        NotInProduct: si g tiene cola no escalar
        Undecidable: si la pregunta no es decidible con la presentación dada

    Example:
        >>> q = FieldSpec.rationals()
        >>> alpha, h = scalar_split(ScaledFinitary(q.element(3), FinitaryMatrix.elementary(q, 0, 1)))
        >>> str(alpha), h.is_transvection()
        ('3', True)
    """
    product = as_product_element(g)
    if product is None:
        raise NotInProduct("el elemento tiene cola no escalar: no pertenece a D_sc × GL_fr")
    return product.scalar, product.body


# ========== DESCOMPOSICIÓN POR DETERMINANTE ==========

def d_alpha(g: FinitaryMatrix, alpha: FieldElement) -> FinitaryMatrix:
    """d(α) = diag(α, 1, 1, …) sobre el cuerpo de g"""
    return FinitaryMatrix.scalar_d(g.spec, alpha)


def det_decompose(g: FinitaryMatrix) -> DetDecomposition:
    """
    g = d(α)·(d(α⁻¹)·g) con α = det(ĝ).

    Example:
        >>> q = FieldSpec.rationals()
        >>> alpha, s = det_decompose(FinitaryMatrix.diagonal(q, [2, 3]))
        >>> str(alpha), [str(v) for v in (s.entry(0, 0), s.entry(1, 1))]
        ('6', ['1/3', '3'])
    """
    alpha = corner_det(g)
    special = d_alpha(g, alpha.inverse()) * g
    return DetDecomposition(alpha=alpha, special=special)
