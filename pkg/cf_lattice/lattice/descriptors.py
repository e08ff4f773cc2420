"""
Descriptores de Subgrupos Normales
Responsabilidad: Representación canónica de todo subgrupo normal de GL_cf(ℕ, K)

- Central(H):  H·E con H ≤ K*  (subgrupos del centro)
- Sandwich(S): preimagen de S ≤ K*×K* en D_sc × GL_fr bajo (α, det);
               siempre contiene a SL_fr
- Full:        GL_cf(ℕ, K)
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from ..algebra.field import FieldSpec
from ..algebra.unit_groups import PairSubgroup, UnitSubgroup
from ..models.errors import FieldMismatch, InvalidMatrix
from ..procedures.transvections import TransvectionWitness
from .nodes import LatticeNode

logger = logging.getLogger(__name__)


class DescriptorVariant(str, Enum):
    CENTRAL = "central"
    SANDWICH = "sandwich"
    FULL = "full"


@dataclass(frozen=True, eq=False)
class NormalSubgroupDescriptor:
    """
    Subgrupo normal en forma canónica comparable.

    La igualdad compara la variante y la forma canónica del subgrupo de K*
    o de K*×K*; el testigo de transvección no participa.
    """

    variant: DescriptorVariant
    spec: FieldSpec
    unit: Optional[UnitSubgroup] = None
    pair: Optional[PairSubgroup] = None
    witness: Optional[TransvectionWitness] = field(default=None, repr=False)

    def __post_init__(self):
        if self.variant is DescriptorVariant.CENTRAL and (self.unit is None or self.pair is not None):
            raise InvalidMatrix("un descriptor central requiere exactamente un subgrupo de K*")
        if self.variant is DescriptorVariant.SANDWICH and (self.pair is None or self.unit is not None):
            raise InvalidMatrix("un descriptor sandwich requiere exactamente un subgrupo de K*×K*")
        if self.variant is DescriptorVariant.FULL and (self.unit is not None or self.pair is not None):
            raise InvalidMatrix("el descriptor full no lleva subgrupo")
        for subgroup in (self.unit, self.pair):
            if subgroup is not None and subgroup.spec != self.spec:
                raise FieldMismatch(f"subgrupo sobre {subgroup.spec.tag} en descriptor sobre {self.spec.tag}")

    # ---------- constructores ----------

    @classmethod
    def central(cls, H: UnitSubgroup) -> "NormalSubgroupDescriptor":
        return cls(DescriptorVariant.CENTRAL, H.spec, unit=H.canonical())

    @classmethod
    def sandwich(cls, S: PairSubgroup, witness: Optional[TransvectionWitness] = None) -> "NormalSubgroupDescriptor":
        return cls(DescriptorVariant.SANDWICH, S.spec, pair=S.canonical(), witness=witness)

    @classmethod
    def full(cls, spec: FieldSpec) -> "NormalSubgroupDescriptor":
        return cls(DescriptorVariant.FULL, spec)

    @classmethod
    def for_node(cls, node: LatticeNode, spec: FieldSpec) -> "NormalSubgroupDescriptor":
        """
        Descriptor del nodo con nombre.

        Example:
            >>> d = NormalSubgroupDescriptor.for_node(LatticeNode.GLFR, FieldSpec.rationals())
            >>> d.pair.delta_full, d.pair.alpha_full
            (True, False)
        """
        if node is LatticeNode.TRIVIAL:
            return cls.central(UnitSubgroup.trivial(spec))
        if node is LatticeNode.DSC:
            return cls.central(UnitSubgroup.whole(spec))
        if node is LatticeNode.SLFR:
            return cls.sandwich(PairSubgroup.trivial(spec))
        if node is LatticeNode.GLFR:
            return cls.sandwich(PairSubgroup.whole(spec, alpha=False, delta=True))
        if node is LatticeNode.DSC_SLFR:
            return cls.sandwich(PairSubgroup.whole(spec, alpha=True, delta=False))
        if node is LatticeNode.DSC_GLFR:
            return cls.sandwich(PairSubgroup.whole(spec))
        return cls.full(spec)

    # ---------- igualdad ----------

    def canonical_key(self):
        if self.variant is DescriptorVariant.CENTRAL:
            return (self.variant.value, self.unit.canonical_key())
        if self.variant is DescriptorVariant.SANDWICH:
            return (self.variant.value, self.pair.canonical_key())
        return (self.variant.value, self.spec.tag)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NormalSubgroupDescriptor):
            return NotImplemented
        return self.spec == other.spec and self.canonical_key() == other.canonical_key()

    def __hash__(self) -> int:
        return hash(self.canonical_key())

    def __repr__(self) -> str:
        if self.variant is DescriptorVariant.CENTRAL:
            return f"Central({self.unit!r})"
        if self.variant is DescriptorVariant.SANDWICH:
            return f"Sandwich({self.pair!r})"
        return f"Full({self.spec.tag})"

    def __le__(self, other: "NormalSubgroupDescriptor") -> bool:
        return descriptor_leq(self, other)


descriptor_for_node = NormalSubgroupDescriptor.for_node


# ========== ORDEN Y JOIN ==========

def node_of_descriptor(d: NormalSubgroupDescriptor) -> Optional[LatticeNode]:
    """El nodo con nombre igual a d, o None si d es un subgrupo intermedio sin nombre"""
    if d.variant is DescriptorVariant.FULL:
        return LatticeNode.GLCF
    if d.variant is DescriptorVariant.CENTRAL:
        if d.unit.is_trivial():
            return LatticeNode.TRIVIAL
        if d.unit.is_whole():
            return LatticeNode.DSC
        return None
    for node in (LatticeNode.SLFR, LatticeNode.GLFR, LatticeNode.DSC_SLFR, LatticeNode.DSC_GLFR):
        if d == NormalSubgroupDescriptor.for_node(node, d.spec):
            return node
    return None


def descriptor_leq(d1: NormalSubgroupDescriptor, d2: NormalSubgroupDescriptor) -> bool:
    """
    d1 ⊆ d2 como subgrupos normales.

    Un sandwich nunca está contenido en un subgrupo central: contiene a SL_fr.
    """
    if d1.spec != d2.spec:
        raise FieldMismatch(f"{d1.spec.tag} vs {d2.spec.tag}")
    if d2.variant is DescriptorVariant.FULL:
        return True
    if d1.variant is DescriptorVariant.FULL:
        return False
    if d1.variant is DescriptorVariant.CENTRAL:
        if d2.variant is DescriptorVariant.CENTRAL:
            return d1.unit.is_subgroup_of(d2.unit)
        return PairSubgroup.from_alpha(d1.unit).is_subgroup_of(d2.pair)
    if d2.variant is DescriptorVariant.CENTRAL:
        return False
    return d1.pair.is_subgroup_of(d2.pair)


def descriptor_join(d1: NormalSubgroupDescriptor, d2: NormalSubgroupDescriptor) -> NormalSubgroupDescriptor:
    """
    Subgrupo normal generado por d1 ∪ d2.

    Example:
        >>> q = FieldSpec.rationals()
        >>> a = NormalSubgroupDescriptor.for_node(LatticeNode.GLFR, q)
        >>> b = NormalSubgroupDescriptor.for_node(LatticeNode.DSC, q)
        >>> node_of_descriptor(descriptor_join(a, b))
        <LatticeNode.DSC_GLFR: 'DscGLfr'>
    """
    if d1.spec != d2.spec:
        raise FieldMismatch(f"{d1.spec.tag} vs {d2.spec.tag}")
    if DescriptorVariant.FULL in (d1.variant, d2.variant):
        return NormalSubgroupDescriptor.full(d1.spec)
    if d1.variant is DescriptorVariant.CENTRAL and d2.variant is DescriptorVariant.CENTRAL:
        return NormalSubgroupDescriptor.central(d1.unit.join(d2.unit))

    def as_pair(d: NormalSubgroupDescriptor) -> PairSubgroup:
        return d.pair if d.variant is DescriptorVariant.SANDWICH else PairSubgroup.from_alpha(d.unit)

    return NormalSubgroupDescriptor.sandwich(
        as_pair(d1).join(as_pair(d2)),
        witness=d1.witness if d1.witness is not None else d2.witness,
    )
