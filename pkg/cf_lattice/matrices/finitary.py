"""
Matrices Finitarias
Responsabilidad: Elementos E + A de GL_fr con A de soporte finito, y sus
múltiplos escalares α·(E + A) en D_sc × GL_fr

La forma normal es la lista ordenada de deltas no nulos; la ventana es el
menor n con todo el soporte dentro de [0, n)×[0, n). Dos matrices son iguales
si y solo si sus deltas coinciden.
"""

import logging
from dataclasses import InitVar, dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..algebra.field import FieldElement, FieldSpec, Scalar
from ..models.errors import FieldMismatch, InvalidMatrix
from .dense import (
    DenseMatrix,
    SparseColumn,
    add_scaled,
    dense_det,
    dense_inverse,
    dense_mul,
    dense_pad,
    identity_dense,
    scale_column,
)

logger = logging.getLogger(__name__)

Delta = Tuple[int, int, FieldElement]


@dataclass(frozen=True)
class FinitaryMatrix:
    """
    Matriz E + A con A de soporte finito.

    Args:
        spec: Cuerpo base
        deltas: Entradas (fila, columna, valor) de A; se ordenan y se descartan ceros
        verify: Comprobar invertibilidad de la esquina ĝ (desactivar solo para
            productos e inversas de matrices ya válidas)

    Example:
        >>> q = FieldSpec.rationals()
        >>> t = FinitaryMatrix.elementary(q, 0, 1, 1)
        >>> (t * t.inverse()).is_identity()
        True
    """

    spec: FieldSpec
    deltas: Tuple[Delta, ...] = ()
    verify: InitVar[bool] = True
    window: int = field(init=False, compare=False)

    def __post_init__(self, verify: bool):
        entries: Dict[Tuple[int, int], FieldElement] = {}
        for i, j, v in self.deltas:
            if i < 0 or j < 0:
                raise InvalidMatrix(f"índice negativo ({i}, {j})")
            v = self.spec.element(v)
            if v.value:
                entries[(int(i), int(j))] = v
            else:
                entries.pop((int(i), int(j)), None)
        deltas = tuple((i, j, v) for (i, j), v in sorted(entries.items()))
        object.__setattr__(self, "deltas", deltas)
        window = max((max(i, j) + 1 for i, j, _ in deltas), default=0)
        object.__setattr__(self, "window", window)
        if verify and window and not dense_det(self.corner()).value:
            raise InvalidMatrix("la esquina ĝ no es invertible")

    # ========== CONSTRUCTORES ==========

    @classmethod
    def identity(cls, spec: FieldSpec) -> "FinitaryMatrix":
        return cls(spec)

    @classmethod
    def from_deltas(cls, spec: FieldSpec, deltas: Mapping[Tuple[int, int], Scalar]) -> "FinitaryMatrix":
        return cls(spec, tuple((i, j, spec.element(v)) for (i, j), v in deltas.items()))

    @classmethod
    def from_corner(cls, corner: DenseMatrix, spec: Optional[FieldSpec] = None, verify: bool = True) -> "FinitaryMatrix":
        """Matriz cuya esquina n×n es `corner` e identidad fuera (re-minimiza la ventana)"""
        if spec is None:
            if not corner:
                raise InvalidMatrix("esquina vacía sin cuerpo")
            spec = corner[0][0].spec
        one = spec.one
        deltas = []
        for i, row in enumerate(corner):
            for j, v in enumerate(row):
                d = v - one if i == j else v
                if d.value:
                    deltas.append((i, j, d))
        return cls(spec, tuple(deltas), verify)

    @classmethod
    def elementary(cls, spec: FieldSpec, i: int, j: int, c: Scalar = 1) -> "FinitaryMatrix":
        """Transvección E + c·e_ij (i ≠ j)"""
        if i == j:
            raise InvalidMatrix("una transvección requiere i ≠ j")
        c = spec.element(c)
        if not c.value:
            raise InvalidMatrix("una transvección requiere c ≠ 0")
        return cls(spec, ((i, j, c),), False)

    @classmethod
    def diagonal(cls, spec: FieldSpec, values: Sequence[Scalar]) -> "FinitaryMatrix":
        one = spec.one
        deltas = [(i, i, spec.element(v) - one) for i, v in enumerate(values)]
        return cls(spec, tuple(deltas))

    @classmethod
    def scalar_d(cls, spec: FieldSpec, alpha: Scalar) -> "FinitaryMatrix":
        """d(α) = diag(α, 1, 1, …)"""
        return cls.diagonal(spec, [alpha])

    @classmethod
    def permutation(cls, spec: FieldSpec, images: Sequence[int]) -> "FinitaryMatrix":
        """Matriz de permutación que envía e_j a e_{images[j]}"""
        if sorted(images) != list(range(len(images))):
            raise InvalidMatrix(f"{list(images)} no es una permutación")
        one = spec.one
        deltas = []
        for j, i in enumerate(images):
            if i != j:
                deltas.append((i, j, one))
                deltas.append((j, j, -one))
        return cls(spec, tuple(deltas), False)

    @classmethod
    def swap(cls, spec: FieldSpec, i: int, j: int) -> "FinitaryMatrix":
        n = max(i, j) + 1
        images = list(range(n))
        images[i], images[j] = j, i
        return cls.permutation(spec, images)

    # ========== ACCESO ==========

    def entry(self, i: int, j: int) -> FieldElement:
        base = self.spec.one if i == j else self.spec.zero
        return base + self._delta_map.get((i, j), self.spec.zero)

    @cached_property
    def _delta_map(self) -> Dict[Tuple[int, int], FieldElement]:
        return {(i, j): v for i, j, v in self.deltas}

    @cached_property
    def _columns(self) -> Dict[int, SparseColumn]:
        columns: Dict[int, SparseColumn] = {}
        for i, j, v in self.deltas:
            columns.setdefault(j, {})[i] = v
        for j, col in columns.items():
            value = col.get(j, self.spec.zero) + self.spec.one
            if value.value:
                col[j] = value
            else:
                col.pop(j, None)
        return columns

    def column(self, j: int) -> SparseColumn:
        """Columna j como vector disperso"""
        col = self._columns.get(j)
        if col is None:
            return {j: self.spec.one}
        return dict(col)

    def inverse_column(self, j: int) -> SparseColumn:
        return self.inverse().column(j)

    def corner(self, n: Optional[int] = None) -> DenseMatrix:
        """Esquina superior izquierda n×n (por defecto la ventana mínima)"""
        n = self.window if n is None else n
        rows = [list(r) for r in identity_dense(self.spec, n)]
        for i, j, v in self.deltas:
            if i < n and j < n:
                rows[i][j] = rows[i][j] + v
        return tuple(tuple(r) for r in rows)

    def apply(self, vector: SparseColumn) -> SparseColumn:
        """g·v para un vector disperso"""
        result: SparseColumn = {}
        for j, coefficient in vector.items():
            add_scaled(result, self.column(j), coefficient)
        return result

    # ========== PREDICADOS ==========

    def is_identity(self) -> bool:
        return not self.deltas

    def transvection_data(self) -> Optional[Tuple[int, int, FieldElement]]:
        """(i, j, c) si la matriz es E + c·e_ij con i ≠ j"""
        if len(self.deltas) == 1:
            i, j, c = self.deltas[0]
            if i != j:
                return i, j, c
        return None

    def is_transvection(self) -> bool:
        return self.transvection_data() is not None

    def rows_support(self) -> int:
        """Menor n tal que la matriz difiere de E solo en las primeras n filas"""
        return max((i + 1 for i, _, _ in self.deltas), default=0)

    # ========== GRUPO ==========

    def _check(self, other: "FinitaryMatrix") -> None:
        if other.spec is not self.spec and other.spec != self.spec:
            raise FieldMismatch(f"{self.spec.tag} vs {other.spec.tag}")

    def __mul__(self, other):
        if isinstance(other, FinitaryMatrix):
            return finitary_mul(self, other)
        if isinstance(other, ScaledFinitary):
            return ScaledFinitary(other.scalar, finitary_mul(self, other.body))
        return NotImplemented

    def inverse(self) -> "FinitaryMatrix":
        return self._inverse

    @cached_property
    def _inverse(self) -> "FinitaryMatrix":
        if not self.deltas:
            return self
        return FinitaryMatrix.from_corner(dense_inverse(self.corner()), self.spec, verify=False)

    def __pow__(self, k: int) -> "FinitaryMatrix":
        base = self if k >= 0 else self.inverse()
        result = FinitaryMatrix.identity(self.spec)
        for _ in range(abs(k)):
            result = result * base
        return result

    def conjugate(self, x: "FinitaryMatrix") -> "FinitaryMatrix":
        """x⁻¹·g·x"""
        return x.inverse() * self * x

    def det(self) -> FieldElement:
        return corner_det(self)

    def to_scaled(self) -> "ScaledFinitary":
        return ScaledFinitary(self.spec.one, self)

    def __repr__(self) -> str:
        inner = ", ".join(f"({i},{j}):{v}" for i, j, v in self.deltas)
        return f"FinitaryMatrix({self.spec.tag}, E + {{{inner}}})"


@dataclass(frozen=True)
class ScaledFinitary:
    """
    Elemento α·h de D_sc × GL_fr con α ∈ K* y h finitaria.

    La descomposición es única: la única matriz escalar finitaria es E.
    """

    scalar: FieldElement
    body: FinitaryMatrix

    def __post_init__(self):
        if self.scalar.spec != self.body.spec:
            raise FieldMismatch(f"{self.scalar.spec.tag} vs {self.body.spec.tag}")
        if not self.scalar.value:
            raise InvalidMatrix("el escalar de D_sc debe ser no nulo")

    @classmethod
    def scalar_matrix(cls, spec: FieldSpec, alpha: Scalar) -> "ScaledFinitary":
        return cls(spec.element(alpha), FinitaryMatrix.identity(spec))

    @property
    def spec(self) -> FieldSpec:
        return self.body.spec

    @property
    def window(self) -> int:
        return self.body.window

    def is_scalar(self) -> bool:
        return self.body.is_identity()

    def is_finitary(self) -> bool:
        return self.scalar.is_one()

    def column(self, j: int) -> SparseColumn:
        return scale_column(self.body.column(j), self.scalar)

    def inverse_column(self, j: int) -> SparseColumn:
        return scale_column(self.body.inverse().column(j), self.scalar.inverse())

    def apply(self, vector: SparseColumn) -> SparseColumn:
        return scale_column(self.body.apply(vector), self.scalar)

    def corner(self, n: Optional[int] = None) -> DenseMatrix:
        return tuple(tuple(self.scalar * v for v in row) for row in self.body.corner(n))

    def __mul__(self, other):
        if isinstance(other, ScaledFinitary):
            return ScaledFinitary(self.scalar * other.scalar, self.body * other.body)
        if isinstance(other, FinitaryMatrix):
            return ScaledFinitary(self.scalar, self.body * other)
        return NotImplemented

    def inverse(self) -> "ScaledFinitary":
        return ScaledFinitary(self.scalar.inverse(), self.body.inverse())

    def __pow__(self, k: int) -> "ScaledFinitary":
        return ScaledFinitary(self.scalar ** k, self.body ** k)

    def conjugate(self, x: FinitaryMatrix) -> "ScaledFinitary":
        return ScaledFinitary(self.scalar, self.body.conjugate(x))

    def __repr__(self) -> str:
        return f"ScaledFinitary({self.scalar}·{self.body!r})"


# ========== OPERACIONES ==========

def finitary_mul(a: FinitaryMatrix, b: FinitaryMatrix) -> FinitaryMatrix:
    """
    Producto exacto en GL_fr; la ventana del resultado se re-minimiza.

    Example:
        >>> q = FieldSpec.rationals()
        >>> finitary_mul(FinitaryMatrix.diagonal(q, [2]), FinitaryMatrix.diagonal(q, [3])).deltas
        ((0, 0, FieldElement(Q, 5)),)
    """
    a._check(b)
    if a.is_identity():
        return b
    if b.is_identity():
        return a
    n = max(a.window, b.window)
    return FinitaryMatrix.from_corner(dense_mul(a.corner(n), b.corner(n)), a.spec, verify=False)


def finitary_inv(a: FinitaryMatrix) -> FinitaryMatrix:
    return a.inverse()


def corner_det(a: FinitaryMatrix) -> FieldElement:
    """
    det(ĝ) sobre la ventana mínima; ampliar la ventana no lo cambia.

    Example:
        >>> q = FieldSpec.rationals()
        >>> str(corner_det(FinitaryMatrix.diagonal(q, [2, 3])))
        '6'
    """
    if a.is_identity():
        return a.spec.one
    return dense_det(a.corner())


def embed_window(a: FinitaryMatrix, n: int) -> DenseMatrix:
    """Incrustación GL(w, ℕ, K) ⊆ GL(n, ℕ, K) para n ≥ ventana"""
    if n < a.window:
        raise InvalidMatrix(f"ventana {n} menor que la ventana mínima {a.window}")
    return dense_pad(a.corner(), n, a.spec)


def product(factors: Iterable[FinitaryMatrix], spec: FieldSpec) -> FinitaryMatrix:
    result = FinitaryMatrix.identity(spec)
    for factor in factors:
        result = result * factor
    return result


def deltas_list(a: FinitaryMatrix) -> List[Tuple[int, int, str]]:
    return [(i, j, str(v)) for i, j, v in a.deltas]
