"""
Oráculos Triangulares Superiores
Responsabilidad: Matrices triangulares superiores con diagonal no nula dadas
por un prefijo explícito o por una regla de banda

Cada columna j tiene soporte en las filas 0..j; la columna j de la inversa se
obtiene por sustitución hacia atrás sobre el bloque (j+1)×(j+1).
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Sequence, Tuple, Union

from ..algebra.field import FieldElement, FieldSpec, Scalar
from ..models.errors import InvalidMatrix
from .dense import DenseMatrix, SparseColumn, add_scaled, check_dense_spec, dense_from_values, is_upper_triangular

logger = logging.getLogger(__name__)

EntryRule = Callable[[int, int], FieldElement]


# ========== PRESENTACIONES ==========

@dataclass(frozen=True)
class ExplicitPrefix:
    """Prefijo triangular N×N denso; identidad a partir de N"""

    matrix: DenseMatrix

    @property
    def size(self) -> int:
        return len(self.matrix)


@dataclass(frozen=True)
class BandedRule:
    """
    Regla u_ij = entry(i, j) para 0 ≤ j − i ≤ bandwidth (None = sin banda).

    Las reglas con nombre son de Toeplitz (constantes por diagonales) y se
    serializan por nombre y parámetros; las reglas custom no se serializan.
    """

    name: str
    bandwidth: Optional[int]
    params: Tuple[FieldElement, ...] = ()
    entry: EntryRule = field(default=None, compare=False, repr=False)
    toeplitz: bool = True
    custom: bool = False

    @classmethod
    def custom_rule(cls, name: str, bandwidth: Optional[int], entry: EntryRule) -> "BandedRule":
        return cls(name=name, bandwidth=bandwidth, entry=entry, toeplitz=False, custom=True)


Presentation = Union[ExplicitPrefix, BandedRule]


# ========== REGLAS CON NOMBRE ==========

def _band_entry(spec: FieldSpec, diagonal: FieldElement, off: Callable[[int], FieldElement]) -> EntryRule:
    zero = spec.zero

    def entry(i: int, j: int) -> FieldElement:
        if j < i:
            return zero
        if j == i:
            return diagonal
        return off(j - i)

    return entry


def _bidiagonal(spec: FieldSpec, params, bandwidth):
    d, s = params
    zero = spec.zero
    return 1, _band_entry(spec, d, lambda k: s if k == 1 else zero)


def _jordan(spec: FieldSpec, params, bandwidth):
    (eigenvalue,) = params
    return _bidiagonal(spec, (eigenvalue, spec.one), bandwidth)


def _constant_band(spec: FieldSpec, params, bandwidth):
    d, v = params
    if bandwidth is None or bandwidth < 0:
        raise InvalidMatrix("constant_band requiere un ancho de banda ≥ 0")
    zero = spec.zero
    return bandwidth, _band_entry(spec, d, lambda k: v if k <= bandwidth else zero)


def _geometric(spec: FieldSpec, params, bandwidth):
    (ratio,) = params
    if bandwidth is None or bandwidth < 0:
        raise InvalidMatrix("geometric requiere un ancho de banda ≥ 0")
    zero = spec.zero
    return bandwidth, _band_entry(spec, spec.one, lambda k: ratio ** k if k <= bandwidth else zero)


def _full_upper(spec: FieldSpec, params, bandwidth):
    (value,) = params
    return None, _band_entry(spec, spec.one, lambda k: value)


BANDED_RULES: Dict[str, Tuple[int, Callable]] = {
    # nombre → (número de parámetros, constructor)
    "bidiagonal": (2, _bidiagonal),
    "jordan": (1, _jordan),
    "constant_band": (2, _constant_band),
    "geometric": (1, _geometric),
    "full_upper": (1, _full_upper),
}


def banded_rule(spec: FieldSpec, name: str, params: Sequence[Scalar] = (), bandwidth: Optional[int] = None) -> BandedRule:
    """
    Construye una regla de banda con nombre.

    Args:
        spec: Cuerpo base
        name: bidiagonal, jordan, constant_band, geometric o full_upper
        params: Parámetros de la regla (ver BANDED_RULES)
        bandwidth: Ancho de banda (obligatorio en constant_band y geometric)

    Example:
        >>> rule = banded_rule(FieldSpec.rationals(), "jordan", [2])
        >>> rule.bandwidth, str(rule.entry(3, 4))
        (1, '1')
    """
    if name not in BANDED_RULES:
        raise InvalidMatrix(f"regla de banda desconocida: {name}")
    arity, build = BANDED_RULES[name]
    if len(params) != arity:
        raise InvalidMatrix(f"{name} espera {arity} parámetros, recibió {len(params)}")
    values = tuple(spec.element(p) for p in params)
    width, entry = build(spec, values, bandwidth)
    if not entry(0, 0).value:
        raise InvalidMatrix(f"{name}: la diagonal debe ser no nula")
    return BandedRule(name=name, bandwidth=width, params=values, entry=entry)


# ========== ORÁCULO ==========

@dataclass(frozen=True)
class UpperTriangularOracle:
    """
    Matriz triangular superior columna-finita con diagonal no nula.

    Example:
        >>> q = FieldSpec.rationals()
        >>> u = UpperTriangularOracle.from_prefix(q, [[1, 1], [0, 1]])
        >>> {i: str(v) for i, v in u.inverse_column(1).items()}
        {0: '-1', 1: '1'}
    """

    spec: FieldSpec
    presentation: Presentation

    def __post_init__(self):
        presentation = self.presentation
        if isinstance(presentation, ExplicitPrefix):
            m = presentation.matrix
            if any(len(row) != len(m) for row in m):
                raise InvalidMatrix("el prefijo triangular debe ser cuadrado")
            check_dense_spec(m, self.spec)
            if not is_upper_triangular(m):
                raise InvalidMatrix("el prefijo no es triangular superior")
            if any(not m[i][i].value for i in range(len(m))):
                raise InvalidMatrix("el prefijo tiene un cero en la diagonal")
        elif isinstance(presentation, BandedRule):
            if presentation.entry is None:
                raise InvalidMatrix("regla de banda sin función de entradas")
        else:
            raise InvalidMatrix(f"presentación no soportada: {type(presentation).__name__}")

    @classmethod
    def from_prefix(cls, spec: FieldSpec, rows: Sequence[Sequence[Scalar]]) -> "UpperTriangularOracle":
        return cls(spec, ExplicitPrefix(dense_from_values(spec, rows)))

    @classmethod
    def from_rule(cls, spec: FieldSpec, name: str, params: Sequence[Scalar] = (), bandwidth: Optional[int] = None) -> "UpperTriangularOracle":
        return cls(spec, banded_rule(spec, name, params, bandwidth))

    # ========== ENTRADAS ==========

    def _lowest_row(self, j: int) -> int:
        presentation = self.presentation
        if isinstance(presentation, BandedRule) and presentation.bandwidth is not None:
            return max(0, j - presentation.bandwidth)
        return 0

    def entry(self, i: int, j: int) -> FieldElement:
        presentation = self.presentation
        if isinstance(presentation, ExplicitPrefix):
            n = presentation.size
            if i < n and j < n:
                return presentation.matrix[i][j]
            return self.spec.one if i == j else self.spec.zero
        if j < i or (presentation.bandwidth is not None and j - i > presentation.bandwidth):
            return self.spec.zero
        value = self.spec.element(presentation.entry(i, j))
        if i == j and not value.value:
            raise InvalidMatrix(f"{presentation.name}: diagonal nula en la posición {i}")
        return value

    def column(self, j: int) -> SparseColumn:
        if isinstance(self.presentation, ExplicitPrefix) and j >= self.presentation.size:
            return {j: self.spec.one}
        column: SparseColumn = {}
        for i in range(self._lowest_row(j), j + 1):
            value = self.entry(i, j)
            if value.value:
                column[i] = value
        return column

    def inverse_column(self, j: int) -> SparseColumn:
        """Columna j de u⁻¹ por sustitución hacia atrás en el bloque (j+1)×(j+1)"""
        presentation = self.presentation
        if isinstance(presentation, ExplicitPrefix) and j >= presentation.size:
            return {j: self.spec.one}
        bandwidth = presentation.bandwidth if isinstance(presentation, BandedRule) else None
        x: Dict[int, FieldElement] = {j: self.entry(j, j).inverse()}
        for i in range(j - 1, -1, -1):
            upper = j if bandwidth is None else min(j, i + bandwidth)
            acc = self.spec.zero
            for k in range(i + 1, upper + 1):
                xk = x.get(k)
                if xk is not None:
                    acc = acc + self.entry(i, k) * xk
            if acc.value:
                x[i] = -acc / self.entry(i, i)
        return x

    def apply(self, vector: SparseColumn, inverted: bool = False) -> SparseColumn:
        result: SparseColumn = {}
        for j, coefficient in vector.items():
            add_scaled(result, self.inverse_column(j) if inverted else self.column(j), coefficient)
        return result

    # ========== COTAS ==========

    @property
    def bandwidth(self) -> Optional[int]:
        presentation = self.presentation
        if isinstance(presentation, ExplicitPrefix):
            return max((j - i for i in range(presentation.size) for j in range(i, presentation.size)
                        if presentation.matrix[i][j].value), default=0)
        return presentation.bandwidth

    def window_bound(self, n: int) -> Optional[int]:
        """
        Ventana m tal que u⁻¹·g·u ∈ GL(m, ℕ, K) con soporte finito para g de ventana n.

        Returns:
            max(n, N) para prefijos explícitos, n + b para bandas de ancho b,
            None si la banda no está acotada
        """
        presentation = self.presentation
        if isinstance(presentation, ExplicitPrefix):
            return max(n, presentation.size)
        if presentation.bandwidth is None:
            return None
        return n + presentation.bandwidth

    def boundary(self) -> Optional[Tuple[int, DenseMatrix]]:
        """(inicio, bloque 1×1) a partir del cual u es diagonal y constante, si existe"""
        presentation = self.presentation
        if isinstance(presentation, ExplicitPrefix):
            return presentation.size, ((self.spec.one,),)
        if presentation.bandwidth == 0 and presentation.toeplitz:
            return 0, ((self.entry(0, 0),),)
        return None

    def is_toeplitz(self) -> bool:
        return isinstance(self.presentation, BandedRule) and self.presentation.toeplitz

    def toeplitz_is_scalar(self) -> Optional[FieldElement]:
        """Para reglas de Toeplitz: el escalar d si u = d·I, None si tiene diagonales no nulas"""
        presentation = self.presentation
        if not self.is_toeplitz():
            raise InvalidMatrix("solo aplicable a reglas de Toeplitz")
        width = presentation.bandwidth
        # full_upper es la única regla sin banda y repite el mismo valor en todas sus diagonales
        offsets = range(1, (width if width is not None else 1) + 1)
        if any(self.entry(0, k).value for k in offsets):
            return None
        return self.entry(0, 0)
