"""
Strings
Responsabilidad: Matrices diagonales por bloques B₁ ⊕ B₂ ⊕ … con un número
finito de bloques explícitos y una cola identidad o periódica
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import count, islice
from typing import Iterator, Optional, Sequence, Tuple, Union

from ..algebra.field import FieldElement, FieldSpec, Scalar
from ..models.errors import InvalidMatrix, NotInProduct
from .dense import (
    DenseMatrix,
    SparseColumn,
    add_scaled,
    block_diagonal,
    check_dense_spec,
    dense_det,
    dense_from_values,
    dense_inverse,
    dense_scalar_value,
    dense_scale,
)
from .finitary import FinitaryMatrix, ScaledFinitary

logger = logging.getLogger(__name__)


# ========== COLAS ==========

@dataclass(frozen=True)
class IdentityTail:
    """Bloques 1×1 iguales a 1 para siempre"""

    @property
    def size(self) -> int:
        return 1


@dataclass(frozen=True)
class PeriodicTail:
    """El bloque `block` repetido indefinidamente"""

    block: DenseMatrix

    @property
    def size(self) -> int:
        return len(self.block)


Tail = Union[IdentityTail, PeriodicTail]


# ========== STRING ==========

@dataclass(frozen=True)
class StringMatrix:
    """
    String con forma (n₁, n₂, …).

    Example:
        >>> q = FieldSpec.rationals()
        >>> s = StringMatrix.from_values(q, [[[0, 1], [1, 0]]])
        >>> list(s.shape_prefix(3))
        [2, 1, 1]
    """

    spec: FieldSpec
    blocks: Tuple[DenseMatrix, ...] = ()
    tail: Tail = IdentityTail()

    def __post_init__(self):
        for index, block in enumerate(self.blocks):
            self._check_block(block, f"bloque {index}")
        if isinstance(self.tail, PeriodicTail):
            self._check_block(self.tail.block, "bloque de cola")
        elif not isinstance(self.tail, IdentityTail):
            raise InvalidMatrix(f"cola no soportada: {type(self.tail).__name__}")

    def _check_block(self, block: DenseMatrix, name: str) -> None:
        if not block:
            raise InvalidMatrix(f"{name} vacío")
        if any(len(row) != len(block) for row in block):
            raise InvalidMatrix(f"{name} no es cuadrado")
        check_dense_spec(block, self.spec)
        if not dense_det(block).value:
            raise InvalidMatrix(f"{name} no es invertible")

    @classmethod
    def from_values(
        cls,
        spec: FieldSpec,
        blocks: Sequence[Sequence[Sequence[Scalar]]],
        periodic: Optional[Sequence[Sequence[Scalar]]] = None,
    ) -> "StringMatrix":
        tail = IdentityTail() if periodic is None else PeriodicTail(dense_from_values(spec, periodic))
        return cls(spec, tuple(dense_from_values(spec, b) for b in blocks), tail)

    # ========== FORMA ==========

    @property
    def prefix_size(self) -> int:
        return sum(len(b) for b in self.blocks)

    def shape(self) -> Iterator[int]:
        """Secuencia infinita de tamaños de bloque"""
        for block in self.blocks:
            yield len(block)
        while True:
            yield self.tail.size

    def shape_prefix(self, k: int) -> Iterator[int]:
        return islice(self.shape(), k)

    def partial_sums(self) -> Iterator[int]:
        total = 0
        for size in self.shape():
            total += size
            yield total

    def minimal_cover(self, n: int) -> Tuple[int, int]:
        """
        Menor t ≥ 1 con m = n₁ + … + n_t ≥ n.

        Returns:
            (t, m)
        """
        for t, m in zip(count(1), self.partial_sums()):
            if m >= n:
                return t, m
        raise AssertionError("unreachable")

    def block_containing(self, j: int) -> Tuple[int, DenseMatrix]:
        """(inicio, bloque) del bloque diagonal que contiene al índice j"""
        offset = 0
        for block in self.blocks:
            if j < offset + len(block):
                return offset, block
            offset += len(block)
        if isinstance(self.tail, IdentityTail):
            return j, ((self.spec.one,),)
        b = self.tail.size
        return offset + ((j - offset) // b) * b, self.tail.block

    # ========== COLUMNAS ==========

    def column(self, j: int) -> SparseColumn:
        start, block = self.block_containing(j)
        local = j - start
        return {start + i: row[local] for i, row in enumerate(block) if row[local].value}

    def inverse_column(self, j: int) -> SparseColumn:
        return self.inverse().column(j)

    def apply(self, vector: SparseColumn) -> SparseColumn:
        result: SparseColumn = {}
        for j, coefficient in vector.items():
            add_scaled(result, self.column(j), coefficient)
        return result

    def corner(self, n: int) -> DenseMatrix:
        zero = self.spec.zero
        rows = [[zero] * n for _ in range(n)]
        for j in range(n):
            for i, v in self.column(j).items():
                if i < n:
                    rows[i][j] = v
        return tuple(tuple(r) for r in rows)

    # ========== GRUPO ==========

    def inverse(self) -> "StringMatrix":
        return self._inverse

    @cached_property
    def _inverse(self) -> "StringMatrix":
        tail = self.tail
        if isinstance(tail, PeriodicTail):
            tail = PeriodicTail(dense_inverse(tail.block))
        return StringMatrix(self.spec, tuple(dense_inverse(b) for b in self.blocks), tail)

    def tail_scalar(self) -> Optional[FieldElement]:
        """c si la cola es c·I (1 para IdentityTail), None si no es escalar"""
        if isinstance(self.tail, IdentityTail):
            return self.spec.one
        return dense_scalar_value(self.tail.block)

    def to_scaled_finitary(self) -> ScaledFinitary:
        """
        c·h con h finitaria cuando la cola es c·I.

        Raises:
            NotInProduct: si el bloque de cola no es escalar
        """
        c = self.tail_scalar()
        if c is None:
            raise NotInProduct("la cola periódica no es escalar")
        if not self.blocks:
            return ScaledFinitary(c, FinitaryMatrix.identity(self.spec))
        corner = dense_scale(c.inverse(), block_diagonal(self.spec, self.blocks))
        return ScaledFinitary(c, FinitaryMatrix.from_corner(corner, self.spec, verify=False))


def string_inverse(s: StringMatrix) -> StringMatrix:
    """
    Inversa bloque a bloque, misma forma y mismo tipo de cola.

    Example:
        >>> q = FieldSpec.rationals()
        >>> StringMatrix.from_values(q, [[[2]]]).inverse().blocks[0][0][0]
        FieldElement(Q, 1/2)
    """
    return s.inverse()
