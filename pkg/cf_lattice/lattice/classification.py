"""
Clasificación y Clausura Normal
Responsabilidad: Nodo mínimo de un elemento, imagen en K*×K*, clausura normal
de un conjunto de generadores y pertenencia a un subgrupo normal clasificado

La clausura de cualquier elemento no central de D_sc × GL_fr contiene a SL_fr
(SL_fr es simple) y la de un elemento fuera del producto es todo GL_cf (el
cociente superior es simple); ambos hechos se apoyan con testigos calculables.
"""

import logging
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from ..algebra.field import FieldElement, FieldSpec
from ..algebra.unit_groups import PairSubgroup, UnitSubgroup
from ..config import settings
from ..models.errors import FieldMismatch, LatticeError, NotInProduct
from ..matrices.dense import DenseMatrix
from ..matrices.finitary import FinitaryMatrix, ScaledFinitary, corner_det
from ..procedures.decomposition import Element, as_product_element
from ..procedures.transvections import TransvectionWitness, transvection_witness
from .descriptors import DescriptorVariant, NormalSubgroupDescriptor
from .nodes import LatticeNode

logger = logging.getLogger(__name__)


# ========== CLASIFICACIÓN ==========

def _node_of_product(product: Optional[ScaledFinitary]) -> LatticeNode:
    if product is None:
        return LatticeNode.GLCF
    if product.is_scalar():
        return LatticeNode.TRIVIAL if product.scalar.is_one() else LatticeNode.DSC
    determinant_one = corner_det(product.body).is_one()
    if product.is_finitary():
        return LatticeNode.SLFR if determinant_one else LatticeNode.GLFR
    return LatticeNode.DSC_SLFR if determinant_one else LatticeNode.DSC_GLFR


def classify_minimal_node(g: Element) -> LatticeNode:
    """
    Menor nodo con nombre que contiene a g.

    Raises:
        Undecidable: palabra sin cola analizable ni certificado

    Example:
        >>> q = FieldSpec.rationals()
        >>> classify_minimal_node(ScaledFinitary(q.element(3), FinitaryMatrix.elementary(q, 0, 1)))
        <LatticeNode.DSC_SLFR: 'DscSLfr'>
    """
    return _node_of_product(as_product_element(g))


def quotient_image(g: Element) -> Tuple[FieldElement, FieldElement]:
    """
    (α, δ) con g = α·h y δ = det(ĥ).

    Raises:
        NotInProduct: si g no pertenece a D_sc × GL_fr
    """
    product = as_product_element(g)
    if product is None:
        raise NotInProduct("quotient_image solo está definido en D_sc × GL_fr")
    return product.scalar, corner_det(product.body)


# ========== CLAUSURA NORMAL ==========

def _attach_witness(product: ScaledFinitary) -> Optional[TransvectionWitness]:
    try:
        return transvection_witness(product)
    except LatticeError as e:
        logger.warning(f"⚠️ Sin testigo de transvección para la clausura: {e}")
        return None


def normal_closure(
    gens: Sequence[Element],
    spec: Optional[FieldSpec] = None,
    attach_witness: Optional[bool] = None,
) -> NormalSubgroupDescriptor:
    """
    Subgrupo normal generado por gens.

    Args:
        gens: Elementos decidibles (finitarios, escalados, strings, triangulares, palabras)
        spec: Cuerpo base; obligatorio si gens está vacío
        attach_witness: Adjuntar testigo de transvección en la rama sandwich
            (ATTACH_WITNESS por defecto)

    Returns:
        Central(H) si todos los generadores son escalares, Sandwich(S) si todos
        están en D_sc × GL_fr, Full en otro caso

    Example:
        >>> q = FieldSpec.rationals()
        >>> normal_closure([FinitaryMatrix.diagonal(q, [2])])
        Sandwich(PairSubgroup(Q, ⟨(1, 2)⟩))
    """
    gens = list(gens)
    if spec is None:
        spec = gens[0].spec if gens else FieldSpec.parse(settings.DEFAULT_FIELD)
    attach = settings.ATTACH_WITNESS if attach_witness is None else attach_witness

    for g in gens:
        if g.spec != spec:
            raise FieldMismatch(f"generador sobre {g.spec.tag} en una clausura sobre {spec.tag}")
    products: List[Optional[ScaledFinitary]] = [as_product_element(g) for g in gens]

    if any(p is None for p in products):
        logger.debug("Clausura normal: generador fuera de D_sc × GL_fr → GL_cf")
        return NormalSubgroupDescriptor.full(spec)

    if all(p.is_scalar() for p in products):
        return NormalSubgroupDescriptor.central(UnitSubgroup(spec, tuple(p.scalar for p in products)))

    pairs = tuple((p.scalar, corner_det(p.body)) for p in products)
    witness = None
    if attach:
        witness = _attach_witness(next(p for p in products if not p.is_scalar()))
    descriptor = NormalSubgroupDescriptor.sandwich(PairSubgroup(spec, pairs), witness=witness)
    logger.debug(f"Clausura normal calculada: {descriptor!r}")
    return descriptor


# ========== PERTENENCIA ==========

def descriptor_contains(d: NormalSubgroupDescriptor, g: Element) -> bool:
    """
    g ∈ d.

    Example:
        >>> q = FieldSpec.rationals()
        >>> d = NormalSubgroupDescriptor.central(UnitSubgroup.generated_by(q, [2]))
        >>> descriptor_contains(d, ScaledFinitary.scalar_matrix(q, 8)), descriptor_contains(d, ScaledFinitary.scalar_matrix(q, 3))
        (True, False)
    """
    if d.variant is DescriptorVariant.FULL:
        return True
    product = as_product_element(g)
    if product is None:
        return False
    if d.variant is DescriptorVariant.CENTRAL:
        return product.is_scalar() and product.scalar in d.unit
    return (product.scalar, corner_det(product.body)) in d.pair


def predicted_window_set(d: NormalSubgroupDescriptor, ambient: Iterable[DenseMatrix]) -> Set[DenseMatrix]:
    """
    Elementos de un GL(n, F_p) enumerado que el descriptor predice en la
    ventana n (incrustados como matrices finitarias).
    """
    return {m for m in ambient if descriptor_contains(d, FinitaryMatrix.from_corner(m, d.spec, verify=False))}
