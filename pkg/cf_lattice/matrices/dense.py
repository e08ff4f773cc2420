"""
Álgebra Lineal Densa Exacta
Responsabilidad: Matrices cuadradas pequeñas de FieldElement y columnas dispersas

Las esquinas ĝ de las matrices finitarias, los bloques de las strings y los
prefijos triangulares se manejan como tuplas de tuplas inmutables.
"""

import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..algebra.field import FieldElement, FieldSpec, Scalar
from ..models.errors import FieldMismatch, InvalidMatrix

logger = logging.getLogger(__name__)

DenseMatrix = Tuple[Tuple[FieldElement, ...], ...]
SparseColumn = Dict[int, FieldElement]


# ========== CONSTRUCCIÓN ==========

def identity_dense(spec: FieldSpec, n: int) -> DenseMatrix:
    zero, one = spec.zero, spec.one
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def dense_from_values(spec: FieldSpec, rows: Sequence[Sequence[Scalar]]) -> DenseMatrix:
    """
    Convierte una lista de filas (int, str, Fraction o FieldElement) en matriz cuadrada.

    Raises:
        InvalidMatrix: si la matriz no es cuadrada
    """
    n = len(rows)
    result = []
    for row in rows:
        if len(row) != n:
            raise InvalidMatrix(f"matriz no cuadrada: fila de longitud {len(row)} en tamaño {n}")
        result.append(tuple(spec.element(v) for v in row))
    return tuple(result)


def dense_spec(a: DenseMatrix, fallback: Optional[FieldSpec] = None) -> FieldSpec:
    if a and a[0]:
        return a[0][0].spec
    if fallback is None:
        raise InvalidMatrix("no se puede inferir el cuerpo de una matriz vacía")
    return fallback


def check_dense_spec(a: DenseMatrix, spec: FieldSpec) -> None:
    for row in a:
        for v in row:
            if v.spec is not spec and v.spec != spec:
                raise FieldMismatch(f"entrada de {v.spec.tag} en matriz sobre {spec.tag}")


def block_diagonal(spec: FieldSpec, blocks: Iterable[DenseMatrix]) -> DenseMatrix:
    blocks = list(blocks)
    n = sum(len(b) for b in blocks)
    rows: List[List[FieldElement]] = [[spec.zero] * n for _ in range(n)]
    offset = 0
    for block in blocks:
        size = len(block)
        for i in range(size):
            for j in range(size):
                rows[offset + i][offset + j] = block[i][j]
        offset += size
    return tuple(tuple(r) for r in rows)


def dense_pad(a: DenseMatrix, n: int, spec: Optional[FieldSpec] = None) -> DenseMatrix:
    """Incrusta a en la esquina de una identidad n×n (o trunca si n < tamaño)"""
    spec = dense_spec(a, spec)
    size = len(a)
    zero, one = spec.zero, spec.one
    return tuple(
        tuple(
            a[i][j] if i < size and j < size else (one if i == j else zero)
            for j in range(n)
        )
        for i in range(n)
    )


# ========== OPERACIONES ==========

def dense_mul(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    n = len(a)
    if len(b) != n:
        raise InvalidMatrix(f"tamaños incompatibles {n} y {len(b)}")
    if n == 0:
        return ()
    zero = a[0][0].spec.zero
    columns = list(zip(*b))
    result = []
    for row in a:
        out = []
        for col in columns:
            acc = zero
            for x, y in zip(row, col):
                if x.value and y.value:
                    acc = acc + x * y
            out.append(acc)
        result.append(tuple(out))
    return tuple(result)


def dense_scale(c: FieldElement, a: DenseMatrix) -> DenseMatrix:
    return tuple(tuple(c * v for v in row) for row in a)


def dense_det(a: DenseMatrix) -> FieldElement:
    """
    Determinante exacto por eliminación gaussiana.

    Example:
        >>> q = FieldSpec.rationals()
        >>> str(dense_det(dense_from_values(q, [[2, 0], [0, 3]])))
        '6'
    """
    n = len(a)
    if n == 0:
        raise InvalidMatrix("el determinante de la matriz vacía requiere un cuerpo; usar corner_det")
    spec = a[0][0].spec
    rows = [list(r) for r in a]
    det = spec.one
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col].value), None)
        if pivot is None:
            return spec.zero
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        p = rows[col][col]
        det = det * p
        inv = p.inverse()
        for r in range(col + 1, n):
            factor = rows[r][col]
            if factor.value:
                factor = factor * inv
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return det


def dense_inverse(a: DenseMatrix) -> DenseMatrix:
    """
    Inversa exacta por Gauss-Jordan.

    Raises:
        InvalidMatrix: si a es singular
    """
    n = len(a)
    if n == 0:
        return ()
    spec = a[0][0].spec
    zero, one = spec.zero, spec.one
    rows = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col].value), None)
        if pivot is None:
            raise InvalidMatrix("matriz singular")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = rows[col][col].inverse()
        rows[col] = [x * inv for x in rows[col]]
        for r in range(n):
            if r == col:
                continue
            factor = rows[r][col]
            if factor.value:
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return tuple(tuple(r[n:]) for r in rows)


def dense_scalar_value(a: DenseMatrix) -> Optional[FieldElement]:
    """c si a = c·I, None en otro caso"""
    if not a:
        return None
    c = a[0][0]
    for i, row in enumerate(a):
        for j, v in enumerate(row):
            if v != (c if i == j else 0):
                return None
    return c


def is_upper_triangular(a: DenseMatrix) -> bool:
    return all(not a[i][j].value for i in range(len(a)) for j in range(i))


def dense_column(a: DenseMatrix, j: int) -> SparseColumn:
    return {i: row[j] for i, row in enumerate(a) if row[j].value}


# ========== COLUMNAS DISPERSAS ==========

def unit_column(spec: FieldSpec, j: int) -> SparseColumn:
    return {j: spec.one}


def add_scaled(acc: SparseColumn, column: SparseColumn, coefficient: FieldElement) -> None:
    """acc += coefficient·column, eliminando ceros"""
    for i, v in column.items():
        current = acc.get(i)
        value = v * coefficient if current is None else current + v * coefficient
        if value.value:
            acc[i] = value
        elif current is not None:
            del acc[i]


def scale_column(column: SparseColumn, c: FieldElement) -> SparseColumn:
    if not c.value:
        return {}
    return {i: v * c for i, v in column.items()}


def format_dense(a: DenseMatrix) -> str:
    return "[" + ", ".join("[" + ", ".join(str(v) for v in row) + "]" for row in a) + "]"
