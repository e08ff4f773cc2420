"""
Oráculos de Fuerza Bruta
Responsabilidad: Enumeración exhaustiva de GL(n, F_p) a escala de escritorio y
clausuras normales por punto fijo, independientes de la teoría del retículo

Las matrices son tuplas de tuplas de enteros en [0, p); no dependen de
FieldElement para que el oráculo no comparta código con lo que verifica.
"""

import logging
from collections import deque
from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from sympy import isprime

from ..algebra.field import FieldSpec
from ..algebra.unit_groups import primitive_element
from ..config import settings
from ..models.errors import AmbientTooLarge, ContractViolation, InvalidMatrix
from ..matrices.dense import DenseMatrix

logger = logging.getLogger(__name__)

IntMatrix = Tuple[Tuple[int, ...], ...]


# ========== ARITMÉTICA MOD p ==========

def identity_mod(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a: IntMatrix, b: IntMatrix, p: int) -> IntMatrix:
    n = len(a)
    columns = list(zip(*b))
    return tuple(
        tuple(sum(a[i][k] * columns[j][k] for k in range(n)) % p for j in range(n))
        for i in range(n)
    )


def det_mod(a: IntMatrix, p: int) -> int:
    rows = [list(r) for r in a]
    n = len(rows)
    det = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] % p), None)
        if pivot is None:
            return 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det = det * rows[col][col] % p
        inv = pow(rows[col][col], -1, p)
        for r in range(col + 1, n):
            factor = rows[r][col] * inv % p
            if factor:
                rows[r] = [(x - factor * y) % p for x, y in zip(rows[r], rows[col])]
    return det % p


def inv_mod(a: IntMatrix, p: int) -> IntMatrix:
    n = len(a)
    rows = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] % p), None)
        if pivot is None:
            raise InvalidMatrix("matriz singular módulo p")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = pow(rows[col][col], -1, p)
        rows[col] = [x * inv % p for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [(x - factor * y) % p for x, y in zip(rows[r], rows[col])]
    return tuple(tuple(r[n:]) for r in rows)


def conjugate_mod(g: IntMatrix, x: IntMatrix, p: int, x_inv: IntMatrix = None) -> IntMatrix:
    """x⁻¹·g·x"""
    x_inv = inv_mod(x, p) if x_inv is None else x_inv
    return mat_mul(mat_mul(x_inv, g, p), x, p)


# ========== CONVERSIÓN ==========

def to_dense(m: IntMatrix, spec: FieldSpec) -> DenseMatrix:
    return tuple(tuple(spec.element(v) for v in row) for row in m)


def from_dense(m: DenseMatrix) -> IntMatrix:
    return tuple(tuple(int(v.value) for v in row) for row in m)


# ========== GRUPO AMBIENTE ==========

def gl_order(n: int, p: int) -> int:
    """
    |GL(n, F_p)| = ∏ (pⁿ − pⁱ).

    Example:
        >>> gl_order(3, 2)
        168
    """
    order = 1
    for i in range(n):
        order *= p ** n - p ** i
    return order


def _check_ambient(n: int, p: int) -> None:
    if n < 1 or not isprime(p):
        raise ContractViolation(f"GL({n}, F_{p}) requiere n ≥ 1 y p primo")
    order = gl_order(n, p)
    if order > settings.MAX_AMBIENT_ORDER:
        raise AmbientTooLarge(f"|GL({n}, F_{p})| = {order} supera {settings.MAX_AMBIENT_ORDER}")


def enumerate_gl(n: int, p: int) -> List[IntMatrix]:
    """
    Todos los elementos de GL(n, F_p) en orden lexicográfico.

    Raises:
        AmbientTooLarge: si |GL(n, F_p)| > MAX_AMBIENT_ORDER
    """
    _check_ambient(n, p)
    elements = []
    for values in product(range(p), repeat=n * n):
        m = tuple(tuple(values[i * n:(i + 1) * n]) for i in range(n))
        if det_mod(m, p):
            elements.append(m)
    logger.debug(f"GL({n}, F_{p}) enumerado: {len(elements)} elementos")
    return elements


def enumerate_sl(n: int, p: int) -> List[IntMatrix]:
    return [m for m in enumerate_gl(n, p) if det_mod(m, p) == 1]


def ambient_generators(n: int, p: int) -> List[IntMatrix]:
    """Transvecciones E + e_ij y diag(ω, 1, …, 1): generan GL(n, F_p)"""
    generators = []
    for i in range(n):
        for j in range(n):
            if i != j:
                rows = [list(r) for r in identity_mod(n)]
                rows[i][j] = 1
                generators.append(tuple(tuple(r) for r in rows))
    omega = int(primitive_element(FieldSpec.prime_field(p)).value)
    if omega != 1:
        rows = [list(r) for r in identity_mod(n)]
        rows[0][0] = omega
        generators.append(tuple(tuple(r) for r in rows))
    return generators


# ========== SUBGRUPOS ==========

def generated_subgroup(gens: Iterable[IntMatrix], n: int, p: int) -> FrozenSet[IntMatrix]:
    """
    Subgrupo generado por BFS con multiplicación por la derecha.

    En un grupo finito el cierre bajo productos ya es cerrado bajo inversos.
    """
    gens = [g for g in gens]
    identity = identity_mod(n)
    visited: Set[IntMatrix] = {identity}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for g in gens:
            nxt = mat_mul(current, g, p)
            if nxt not in visited:
                visited.add(nxt)
                queue.append(nxt)
    return frozenset(visited)


def closure_with_generators(n: int, p: int, gens: Sequence[IntMatrix]) -> Tuple[FrozenSet[IntMatrix], List[IntMatrix]]:
    """Clausura normal y el sistema generador acumulado durante el punto fijo"""
    _check_ambient(n, p)
    for g in gens:
        if len(g) != n or det_mod(g, p) == 0:
            raise InvalidMatrix(f"generador no invertible de tamaño {n}")
    ambient = [(a, inv_mod(a, p)) for a in ambient_generators(n, p)]
    generators = list(dict.fromkeys(tuple(tuple(v % p for v in row) for row in g) for g in gens))
    subgroup = generated_subgroup(generators, n, p)

    grew = True
    while grew:
        grew = False
        for s in list(generators):
            for a, a_inv in ambient:
                c = mat_mul(mat_mul(a_inv, s, p), a, p)
                if c not in subgroup:
                    generators.append(c)
                    subgroup = generated_subgroup(generators, n, p)
                    grew = True
    return subgroup, generators


def brute_force_closure(n: int, p: int, gens: Sequence[IntMatrix]) -> FrozenSet[IntMatrix]:
    """
    Menor subconjunto de GL(n, F_p) que contiene gens y es cerrado bajo
    productos, inversos y conjugación por todo el grupo.

    Punto fijo: se añaden a los generadores los conjugados por los
    generadores del grupo ambiente que aún no están en el subgrupo.

    Raises:
        AmbientTooLarge: si |GL(n, F_p)| > MAX_AMBIENT_ORDER

    Example:
        >>> len(brute_force_closure(3, 2, [((1, 1, 0), (0, 1, 0), (0, 0, 1))]))
        168
    """
    return closure_with_generators(n, p, gens)[0]


def is_normal_subgroup(
    subgroup: FrozenSet[IntMatrix], n: int, p: int, generators: Optional[Sequence[IntMatrix]] = None
) -> bool:
    """
    Autocomprobación: una pasada más de productos (por los generadores dados,
    o por todo el subgrupo) y de conjugaciones por el grupo ambiente no añade nada.
    """
    if identity_mod(n) not in subgroup:
        return False
    ambient = [(a, inv_mod(a, p)) for a in ambient_generators(n, p)]
    multipliers = list(subgroup) if generators is None else list(generators)
    for h in subgroup:
        if any(mat_mul(h, s, p) not in subgroup for s in multipliers):
            return False
        if any(mat_mul(mat_mul(a_inv, h, p), a, p) not in subgroup for a, a_inv in ambient):
            return False
    return True


# ========== CLASES DE CONJUGACIÓN ==========

def conjugacy_classes(elements: Iterable[IntMatrix], n: int, p: int) -> Dict[IntMatrix, IntMatrix]:
    """
    Representante de la clase de conjugación en GL(n, F_p) de cada elemento.

    Returns:
        dict elemento → representante (primer elemento de su órbita en el orden dado)
    """
    ambient = [(a, inv_mod(a, p)) for a in ambient_generators(n, p)]
    representative: Dict[IntMatrix, IntMatrix] = {}
    for g in elements:
        if g in representative:
            continue
        representative[g] = g
        queue = deque([g])
        while queue:
            current = queue.popleft()
            for a, a_inv in ambient:
                c = mat_mul(mat_mul(a_inv, current, p), a, p)
                if c not in representative:
                    representative[c] = g
                    queue.append(c)
    return representative
