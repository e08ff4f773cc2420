"""
Testigos del Centro
Responsabilidad: Decidir si un elemento es escalar (central) y, si no lo es,
producir una matriz finitaria x y una columna donde g·x y x·g difieren
"""

import logging
from dataclasses import dataclass
from typing import Callable, Optional, Union

from ..algebra.field import FieldElement
from ..config import settings
from ..models.errors import CertificationFailed, Undecidable
from ..matrices.dense import SparseColumn
from ..matrices.finitary import FinitaryMatrix, ScaledFinitary
from ..matrices.strings import StringMatrix
from ..matrices.triangular import UpperTriangularOracle
from ..matrices.words import GroupWord, as_word, column_eval, tail_split
from .decomposition import Element, as_product_element

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CenterWitness:
    """
    Central, o bien testigo (x, columna) con (g·x)e_col ≠ (x·g)e_col.

    scalar solo se rellena cuando el elemento es central.
    """

    central: bool
    scalar: Optional[FieldElement] = None
    witness: Optional[FinitaryMatrix] = None
    column: Optional[int] = None

    def __bool__(self) -> bool:
        return self.central


# ========== COLUMNAS ==========

def _column_oracle(g: Element) -> Callable[[int], SparseColumn]:
    if isinstance(g, GroupWord):
        return lambda j: column_eval(g, j)
    return g.column


def _scan_bound(g: Element, product: Optional[ScaledFinitary]) -> int:
    if product is not None:
        return product.window + 1
    if isinstance(g, StringMatrix):
        return g.prefix_size + g.tail.size
    if isinstance(g, UpperTriangularOracle):
        width = g.bandwidth
        return (width if width is not None else 1) + 1
    if isinstance(g, GroupWord):
        split = tail_split(g)
        if split is not None:
            return split.window + split.period
    return settings.CENTER_SCAN_LIMIT


def _find_witness(g: Element, bound: int) -> Optional[CenterWitness]:
    """
    Recorre las columnas 0..bound−1 buscando una entrada que rompa la escalaridad.

    Entrada g_ij ≠ 0 con i ≠ j: x = E + e_ji, difieren en la columna i.
    Diagonal con g_jj ≠ g_00: x = intercambio (0, j), difieren en la columna 0.
    """
    spec = g.spec
    column = _column_oracle(g)
    first_diagonal = None
    for j in range(bound):
        col = column(j)
        for i in sorted(col):
            if i != j:
                return CenterWitness(central=False, witness=FinitaryMatrix.elementary(spec, j, i), column=i)
        diagonal = col.get(j, spec.zero)
        if first_diagonal is None:
            first_diagonal = diagonal
        elif diagonal != first_diagonal:
            return CenterWitness(central=False, witness=FinitaryMatrix.swap(spec, 0, j), column=0)
    return None


def _verify(g: Element, result: CenterWitness) -> None:
    x = result.witness
    left = column_eval(as_word(g) * as_word(x), result.column)
    right = column_eval(as_word(x) * as_word(g), result.column)
    if left == right:
        raise CertificationFailed(f"g·x y x·g coinciden en la columna {result.column}")


# ========== OPERACIÓN ==========

def center_witness(g: Union[Element, GroupWord]) -> CenterWitness:
    """
    Decide la pertenencia al centro D_sc.

    Args:
        g: Elemento finitario, escalado, string, triangular o palabra

    Returns:
        CenterWitness central, o con testigo verificado exactamente

    Raises:
        Undecidable: palabra sin cola analizable ni certificado y sin testigo
            en las primeras CENTER_SCAN_LIMIT columnas

    Example:
        >>> q = FieldSpec.rationals()
        >>> r = center_witness(FinitaryMatrix.diagonal(q, [2]))
        >>> r.central, r.witness.transvection_data(), r.column
        (False, None, 0)
    """
    undecidable = None
    try:
        product = as_product_element(g)
    except Undecidable as e:
        product, undecidable = None, e

    if product is not None and product.is_scalar():
        return CenterWitness(central=True, scalar=product.scalar)

    result = _find_witness(g, _scan_bound(g, product))
    if result is None:
        if undecidable is not None:
            raise Undecidable(f"sin testigo en {settings.CENTER_SCAN_LIMIT} columnas: {undecidable}") from undecidable
        raise CertificationFailed("elemento no escalar sin testigo en la cota de búsqueda")

    _verify(g, result)
    logger.debug(f"Testigo de no centralidad: columna {result.column}")
    return result
