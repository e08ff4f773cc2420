"""
Muestreadores Aleatorios
Responsabilidad: Generar elementos de cada nodo del retículo y conjugadores
de las tres clases (string, triangular, finitario) a partir de un
random.Random explícito, para que cada ensayo sea reproducible

Toda muestra de nodo se reclasifica antes de devolverse.
"""

import logging
import random
from fractions import Fraction
from typing import List, Optional

from ..algebra.field import FieldElement, FieldSpec
from ..models.errors import CertificationFailed
from ..lattice.classification import classify_minimal_node
from ..lattice.nodes import LatticeNode
from ..matrices.dense import DenseMatrix, dense_det, dense_scalar_value
from ..matrices.finitary import FinitaryMatrix, ScaledFinitary
from ..matrices.strings import IdentityTail, PeriodicTail, StringMatrix
from ..matrices.triangular import ExplicitPrefix, UpperTriangularOracle
from ..procedures.decomposition import Element

logger = logging.getLogger(__name__)

RATIONAL_SCALARS = (Fraction(2), Fraction(3), Fraction(-1), Fraction(1, 2), Fraction(5, 3), Fraction(-2))
RATIONAL_COEFFICIENTS = (Fraction(1), Fraction(-1), Fraction(2), Fraction(-2), Fraction(1, 2), Fraction(3))

CONJUGATOR_CLASSES = ("string", "triangular", "finitary")
BOUNDED_RULES = ("bidiagonal", "jordan", "constant_band", "geometric")

_MAX_RETRIES = 100


class ElementSampler:
    """
    Elementos aleatorios de GL_cf(ℕ, K) por nodo.

    Args:
        spec: Cuerpo base
        rng: Generador (uno por ensayo)
        window: Ventana máxima de las partes finitarias (≥ 2)

    Example:
        >>> sampler = ElementSampler(FieldSpec.rationals(), random.Random(7), window=4)
        >>> classify_minimal_node(sampler.sample(LatticeNode.GLFR))
        <LatticeNode.GLFR: 'GLfr'>
    """

    def __init__(self, spec: FieldSpec, rng: random.Random, window: int = 8):
        if window < 2:
            raise ValueError("la ventana de muestreo debe ser ≥ 2")
        self.spec = spec
        self.rng = rng
        self.window = window

    # ========== ESCALARES ==========

    def scalar(self) -> FieldElement:
        """α ∈ K* con α ≠ 1"""
        if self.spec.is_rational:
            return self.spec.element(self.rng.choice(RATIONAL_SCALARS))
        if self.spec.modulus == 2:
            raise ValueError("GF(2)* es trivial: no hay escalares distintos de 1")
        return self.spec.element(self.rng.randrange(2, self.spec.modulus))

    def coefficient(self) -> FieldElement:
        """c ∈ K* cualquiera"""
        if self.spec.is_rational:
            return self.spec.element(self.rng.choice(RATIONAL_COEFFICIENTS))
        return self.spec.element(self.rng.randrange(1, self.spec.modulus))

    def unit(self) -> FieldElement:
        """Elemento de K*, 1 incluido"""
        return self.spec.one if self.rng.random() < 0.25 else self.coefficient()

    def _size(self) -> int:
        return self.rng.randint(2, self.window)

    # ========== FINITARIAS ==========

    def transvection(self, n: int) -> FinitaryMatrix:
        i, j = self.rng.sample(range(n), 2)
        return FinitaryMatrix.elementary(self.spec, i, j, self.coefficient())

    def special(self, n: Optional[int] = None) -> FinitaryMatrix:
        """Producto de transvecciones en la ventana n, distinto de E"""
        n = self._size() if n is None else n
        for _ in range(_MAX_RETRIES):
            g = FinitaryMatrix.identity(self.spec)
            for _ in range(self.rng.randint(1, 2 * n)):
                g = g * self.transvection(n)
            if not g.is_identity():
                return g
        raise CertificationFailed("no se obtuvo un elemento de SL_fr distinto de E")

    def general(self, n: Optional[int] = None) -> FinitaryMatrix:
        """Elemento de GL_fr con det ≠ 1"""
        beta = self.scalar()
        return self.special(n) * FinitaryMatrix.scalar_d(self.spec, beta)

    def finitary(self) -> FinitaryMatrix:
        if self.spec.is_finite and self.spec.modulus == 2:
            return self.special()
        return self.general() if self.rng.random() < 0.5 else self.special()

    def desk_element(self, max_window: int = 4, height: int = 4) -> FinitaryMatrix:
        """
        Matriz finitaria no escalar de ventana ≤ max_window con entradas
        enteras de altura ≤ height.
        """
        for _ in range(_MAX_RETRIES):
            n = self.rng.randint(2, max_window)
            corner = tuple(
                tuple(self.spec.element(self.rng.randint(-height, height)) for _ in range(n))
                for _ in range(n)
            )
            if not dense_det(corner).value or dense_scalar_value(corner) is not None:
                continue
            g = FinitaryMatrix.from_corner(corner, self.spec, verify=False)
            if not g.is_identity():
                return g
        raise CertificationFailed("no se obtuvo una matriz invertible no escalar")

    def block(self, size: int, non_scalar: bool = False) -> DenseMatrix:
        """Bloque invertible size×size (no escalar si se pide y size ≥ 2)"""
        for _ in range(_MAX_RETRIES):
            if size == 1:
                block = ((self.unit(),),)
            else:
                g = self.special(size) * FinitaryMatrix.scalar_d(self.spec, self.unit())
                block = g.corner(size)
            if not (non_scalar and dense_scalar_value(block) is not None):
                return block
        raise CertificationFailed(f"no se obtuvo un bloque {size}×{size} adecuado")

    # ========== NODOS ==========

    def _build(self, node: LatticeNode) -> Element:
        spec = self.spec
        if node is LatticeNode.TRIVIAL:
            return FinitaryMatrix.identity(spec)
        if node is LatticeNode.DSC:
            return ScaledFinitary.scalar_matrix(spec, self.scalar())
        if node is LatticeNode.SLFR:
            return self.special()
        if node is LatticeNode.GLFR:
            return self.general()
        if node is LatticeNode.DSC_SLFR:
            return ScaledFinitary(self.scalar(), self.special())
        if node is LatticeNode.DSC_GLFR:
            return ScaledFinitary(self.scalar(), self.general())
        tail = PeriodicTail(self.block(2, non_scalar=True))
        blocks = tuple(self.block(self.rng.randint(1, 3)) for _ in range(self.rng.randint(0, 2)))
        return StringMatrix(spec, blocks, tail)

    def sample(self, node: LatticeNode) -> Element:
        """
        Elemento cuyo nodo mínimo es exactamente `node`.

        Raises:
            ValueError: si el nodo no es realizable sobre el cuerpo (p. ej. Dsc sobre GF(2))
            CertificationFailed: si la muestra no se reclasifica en `node`
        """
        g = self._build(node)
        found = classify_minimal_node(g)
        if found is not node:
            raise CertificationFailed(f"muestra de {node.value} clasificada como {found.value}")
        return g

    # ========== CONJUGADORES ==========

    def string_conjugator(self, periodic: Optional[bool] = None) -> StringMatrix:
        periodic = self.rng.random() < 0.5 if periodic is None else periodic
        blocks = tuple(self.block(self.rng.randint(1, 3)) for _ in range(self.rng.randint(1, 3)))
        tail = PeriodicTail(self.block(self.rng.randint(1, 2))) if periodic else IdentityTail()
        return StringMatrix(self.spec, blocks, tail)

    def triangular_conjugator(self, prefix: Optional[bool] = None) -> UpperTriangularOracle:
        """Prefijo explícito o regla de banda acotada"""
        prefix = self.rng.random() < 0.5 if prefix is None else prefix
        if prefix:
            n = self._size()
            zero = self.spec.zero
            rows = tuple(
                tuple(
                    self.coefficient() if i == j else (self.unit() if j > i and self.rng.random() < 0.6 else zero)
                    for j in range(n)
                )
                for i in range(n)
            )
            return UpperTriangularOracle(self.spec, ExplicitPrefix(rows))
        name = self.rng.choice(BOUNDED_RULES)
        if name == "bidiagonal":
            return UpperTriangularOracle.from_rule(self.spec, name, [self.coefficient(), self.unit()])
        if name == "jordan":
            return UpperTriangularOracle.from_rule(self.spec, name, [self.coefficient()])
        bandwidth = self.rng.randint(0, 3)
        if name == "constant_band":
            return UpperTriangularOracle.from_rule(self.spec, name, [self.coefficient(), self.unit()], bandwidth)
        return UpperTriangularOracle.from_rule(self.spec, name, [self.coefficient()], bandwidth)

    def conjugator(self, kind: str):
        if kind == "string":
            return self.string_conjugator()
        if kind == "triangular":
            return self.triangular_conjugator()
        if kind == "finitary":
            return self.finitary()
        raise ValueError(f"clase de conjugador desconocida: {kind}")


def realizable_nodes(spec: FieldSpec) -> List[LatticeNode]:
    """Nodos con muestras sobre spec (GF(2)* es trivial)"""
    if spec.is_finite and spec.modulus == 2:
        return [LatticeNode.TRIVIAL, LatticeNode.SLFR, LatticeNode.GLCF]
    return list(LatticeNode)
