"""
Retículos Enteros
Responsabilidad: Forma normal de Hermite por filas con transformación unimodular
y pertenencia a retículos ℤ^k ⊕ ⊕ ℤ/m

Es el motor de los subgrupos finitamente generados de K*: cada generador se
codifica como vector de exponentes y la pertenencia se reduce a resolver
x·G = t sobre los enteros.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)

IntMatrix = List[List[int]]


# ========== ARITMÉTICA ENTERA ==========

def extended_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """
    Algoritmo de Euclides extendido.

    Returns:
        (g, x, y) con g = gcd(a, b) ≥ 0 y x·a + y·b = g

    Example:
        >>> extended_gcd(4, 6)
        (2, -1, 1)
    """
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _combine(rows: IntMatrix, i: int, j: int, a: int, b: int, c: int, d: int) -> None:
    """rows[i], rows[j] ← a·rows[i] + b·rows[j], c·rows[i] + d·rows[j]"""
    ri, rj = rows[i], rows[j]
    rows[i] = [a * x + b * y for x, y in zip(ri, rj)]
    rows[j] = [c * x + d * y for x, y in zip(ri, rj)]


# ========== FORMA DE HERMITE ==========

@dataclass(frozen=True)
class HermiteForm:
    """
    Resultado de hermite_normal_form.

    basis:     filas no nulas de H (pivotes positivos, entradas sobre cada
               pivote reducidas a [0, pivote))
    transform: U unimodular con U·A = H (H incluye las filas nulas)
    pivots:    columna del pivote de cada fila de basis
    """

    basis: Tuple[Tuple[int, ...], ...]
    transform: Tuple[Tuple[int, ...], ...]
    pivots: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def kernel(self) -> Tuple[Tuple[int, ...], ...]:
        """Filas de U que anulan A (relaciones entre generadores)"""
        return self.transform[self.rank:]


def hermite_normal_form(rows: Sequence[Sequence[int]], ncols: Optional[int] = None) -> HermiteForm:
    """
    Forma normal de Hermite por filas con transformación.

    Args:
        rows: Matriz entera m×k (una fila por generador)
        ncols: Número de columnas si rows está vacía

    Returns:
        HermiteForm con la base canónica del retículo generado por las filas

    Example:
        >>> hermite_normal_form([[2], [1]]).basis
        ((1,),)
    """
    A: IntMatrix = [list(map(int, r)) for r in rows]
    m = len(A)
    k = len(A[0]) if A else (ncols or 0)
    U: IntMatrix = [[int(r == c) for c in range(m)] for r in range(m)]

    pivot_row = 0
    pivots: List[int] = []
    for col in range(k):
        if pivot_row >= m:
            break
        for r in range(pivot_row + 1, m):
            b = A[r][col]
            if not b:
                continue
            a = A[pivot_row][col]
            g, x, y = extended_gcd(a, b)
            # [[x, y], [−b/g, a/g]] tiene determinante 1
            _combine(A, pivot_row, r, x, y, -b // g, a // g)
            _combine(U, pivot_row, r, x, y, -b // g, a // g)
        pivot = A[pivot_row][col]
        if not pivot:
            continue
        if pivot < 0:
            A[pivot_row] = [-v for v in A[pivot_row]]
            U[pivot_row] = [-v for v in U[pivot_row]]
            pivot = -pivot
        for r in range(pivot_row):
            q = A[r][col] // pivot
            if q:
                A[r] = [v - q * w for v, w in zip(A[r], A[pivot_row])]
                U[r] = [v - q * w for v, w in zip(U[r], U[pivot_row])]
        pivots.append(col)
        pivot_row += 1

    return HermiteForm(
        basis=tuple(tuple(r) for r in A[:pivot_row]),
        transform=tuple(tuple(r) for r in U),
        pivots=tuple(pivots),
    )


# ========== RETÍCULOS CON COORDENADAS MODULARES ==========

def relation_rows(moduli: Sequence[int]) -> IntMatrix:
    """Filas m·e_c para cada coordenada con módulo m > 0"""
    k = len(moduli)
    return [[m if c == i else 0 for c in range(k)] for i, m in enumerate(moduli) if m]


def lattice_basis(generators: Sequence[Sequence[int]], moduli: Sequence[int]) -> Tuple[Tuple[int, ...], ...]:
    """
    Base canónica del subgrupo de ℤ^k ⊕ ⊕ ℤ/m generado.

    Args:
        generators: Vectores de exponentes
        moduli: Módulo de cada coordenada (0 = coordenada libre)

    Returns:
        Filas de Hermite del retículo generadores + relaciones
    """
    rows = [list(g) for g in generators] + relation_rows(moduli)
    return hermite_normal_form(rows, ncols=len(moduli)).basis


def solve_in_lattice(
    generators: Sequence[Sequence[int]],
    moduli: Sequence[int],
    target: Sequence[int],
) -> Optional[List[int]]:
    """
    Resuelve Σ xᵢ·generatorsᵢ ≡ target (módulo las coordenadas modulares).

    Args:
        generators: Vectores de exponentes (filas)
        moduli: Módulo de cada coordenada (0 = libre)
        target: Vector buscado

    Returns:
        Coeficientes x sobre los generadores, o None si target no pertenece

    Example:
        >>> solve_in_lattice([[1, 0, 0], [0, 1, 0]], [0, 0, 2], [3, -2, 0])
        [3, -2]
    """
    k = len(moduli)
    if len(target) != k:
        raise ValueError(f"target de longitud {len(target)} en retículo de rango ambiente {k}")

    rows = [list(g) for g in generators] + relation_rows(moduli)
    if not rows:
        return [] if not any(target) else None

    form = hermite_normal_form(rows, ncols=k)
    residual = list(target)
    coefficients = [0] * form.rank
    for index, (row, col) in enumerate(zip(form.basis, form.pivots)):
        value = residual[col]
        if not value:
            continue
        pivot = row[col]
        if value % pivot:
            return None
        q = value // pivot
        coefficients[index] = q
        residual = [v - q * w for v, w in zip(residual, row)]

    if any(residual):
        return None

    combination = [0] * len(rows)
    for q, u_row in zip(coefficients, form.transform):
        if q:
            combination = [c + q * u for c, u in zip(combination, u_row)]

    witness = combination[:len(generators)]
    logger.debug(f"Solución en retículo: {witness}")
    return witness


def lattice_contains(basis: Sequence[Sequence[int]], target: Sequence[int]) -> bool:
    """Pertenencia directa a un retículo dado por su base de Hermite"""
    residual = list(target)
    for row in basis:
        col = next(c for c, v in enumerate(row) if v)
        if residual[col] % row[col]:
            return False
        q = residual[col] // row[col]
        if q:
            residual = [v - q * w for v, w in zip(residual, row)]
    return not any(residual)
