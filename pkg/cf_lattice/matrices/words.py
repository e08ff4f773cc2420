"""
Palabras de Grupo
Responsabilidad: Elementos generales de GL_cf como productos de generadores,
evaluación perezosa por columnas y análisis de cola

Una matriz columna-finita es un oráculo de columnas: column_eval propaga un
vector disperso de derecha a izquierda y solo consulta las columnas de cada
letra que aparecen en el soporte intermedio.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from math import lcm
from typing import List, Optional, Tuple, Union

from ..algebra.field import FieldElement, FieldSpec
from ..config import settings
from ..models.errors import CertificationFailed, FieldMismatch, InvalidMatrix
from .dense import DenseMatrix, SparseColumn, add_scaled, block_diagonal, dense_inverse, dense_mul, identity_dense
from .finitary import FinitaryMatrix, ScaledFinitary
from .strings import IdentityTail, StringMatrix
from .triangular import UpperTriangularOracle

logger = logging.getLogger(__name__)

Generator = Union[FinitaryMatrix, ScaledFinitary, StringMatrix, UpperTriangularOracle]
GENERATOR_TYPES = (FinitaryMatrix, ScaledFinitary, StringMatrix, UpperTriangularOracle)


# ========== TIPOS ==========

@dataclass(frozen=True)
class Letter:
    """Generador elevado a ±1"""

    generator: Generator
    inverted: bool = False

    def column(self, j: int) -> SparseColumn:
        if self.inverted:
            return self.generator.inverse_column(j)
        return self.generator.column(j)


@dataclass(frozen=True)
class TailCertificate:
    """Declaración: a partir de la columna `window` el elemento es scalar·E"""

    scalar: FieldElement
    window: int


@dataclass(frozen=True)
class GroupWord:
    """
    Producto ordenado de letras; denota un elemento de GL_cf(ℕ, K).

    Example:
        >>> q = FieldSpec.rationals()
        >>> t = FinitaryMatrix.elementary(q, 0, 1, 1)
        >>> w = GroupWord.of(q, t, (t, True))
        >>> window_project(w, 2) == identity_dense(q, 2)
        True
    """

    spec: FieldSpec
    letters: Tuple[Letter, ...] = ()
    tail: Optional[TailCertificate] = None

    def __post_init__(self):
        for letter in self.letters:
            if not isinstance(letter.generator, GENERATOR_TYPES):
                raise InvalidMatrix(f"letra no soportada: {type(letter.generator).__name__}")
            if letter.generator.spec != self.spec:
                raise FieldMismatch(f"letra sobre {letter.generator.spec.tag} en palabra sobre {self.spec.tag}")
        if self.tail is not None:
            if self.tail.scalar.spec != self.spec or not self.tail.scalar.value:
                raise InvalidMatrix("el certificado de cola requiere un escalar no nulo del mismo cuerpo")
            if self.tail.window < 0:
                raise InvalidMatrix("ventana de certificado negativa")

    @classmethod
    def of(cls, spec: FieldSpec, *items: Union[Generator, Tuple[Generator, bool]], tail: Optional[TailCertificate] = None) -> "GroupWord":
        letters = []
        for item in items:
            if isinstance(item, tuple):
                letters.append(Letter(item[0], bool(item[1])))
            else:
                letters.append(Letter(item))
        return cls(spec, tuple(letters), tail)

    def inverse(self) -> "GroupWord":
        tail = None
        if self.tail is not None:
            tail = TailCertificate(self.tail.scalar.inverse(), self.tail.window)
        return GroupWord(self.spec, tuple(Letter(l.generator, not l.inverted) for l in reversed(self.letters)), tail)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        if not isinstance(other, GroupWord):
            return NotImplemented
        tail = None
        if self.tail is not None and other.tail is not None:
            tail = TailCertificate(self.tail.scalar * other.tail.scalar, max(self.tail.window, other.tail.window))
        return GroupWord(self.spec, self.letters + other.letters, tail)

    def with_tail(self, scalar: FieldElement, window: int) -> "GroupWord":
        return GroupWord(self.spec, self.letters, TailCertificate(self.spec.element(scalar), window))

    def __len__(self) -> int:
        return len(self.letters)


# ========== EVALUACIÓN ==========

def column_eval(w: GroupWord, j: int, probe_log: Optional[Counter] = None) -> SparseColumn:
    """
    Columna j exacta del producto denotado por w.

    Args:
        w: Palabra
        j: Índice de columna
        probe_log: Counter opcional; cuenta las columnas consultadas por letra

    Returns:
        Vector disperso {fila: valor}
    """
    vector: SparseColumn = {j: w.spec.one}
    for index in range(len(w.letters) - 1, -1, -1):
        letter = w.letters[index]
        out: SparseColumn = {}
        for k, coefficient in vector.items():
            if probe_log is not None:
                probe_log[index] += 1
            add_scaled(out, letter.column(k), coefficient)
        vector = out
    return vector


def window_project(w: GroupWord, n: int) -> DenseMatrix:
    """
    Submatriz n×n superior izquierda del producto.

    Example:
        >>> q = FieldSpec.rationals()
        >>> w = GroupWord.of(q, FinitaryMatrix.elementary(q, 0, 1), FinitaryMatrix.elementary(q, 1, 0))
        >>> [[str(v) for v in row] for row in window_project(w, 2)]
        [['2', '1'], ['1', '1']]
    """
    if n < 1:
        raise ValueError("window_project requiere n ≥ 1")
    zero = w.spec.zero
    rows = [[zero] * n for _ in range(n)]
    for j in range(n):
        for i, v in column_eval(w, j).items():
            if i < n:
                rows[i][j] = v
    return tuple(tuple(r) for r in rows)


def as_word(element: Union[Generator, GroupWord]) -> GroupWord:
    """Envuelve un generador suelto como palabra de una letra"""
    if isinstance(element, GroupWord):
        return element
    return GroupWord(element.spec, (Letter(element),))


# ========== ANÁLISIS DE COLA ==========

@dataclass(frozen=True)
class LetterTail:
    """A partir de `start` la letra es diagonal por bloques `block` de tamaño `period`"""

    start: int
    period: int
    block: DenseMatrix


@dataclass(frozen=True)
class TailSplit:
    """
    El producto es corner ⊕ block ⊕ block ⊕ … con corner de tamaño `window`.
    """

    window: int
    period: int
    corner: DenseMatrix
    block: DenseMatrix


def letter_tail(letter: Letter) -> Optional[LetterTail]:
    g = letter.generator
    spec = g.spec
    one_block = ((spec.one,),)
    if isinstance(g, FinitaryMatrix):
        tail = LetterTail(g.window, 1, one_block)
    elif isinstance(g, ScaledFinitary):
        tail = LetterTail(g.window, 1, ((g.scalar,),))
    elif isinstance(g, StringMatrix):
        if isinstance(g.tail, IdentityTail):
            tail = LetterTail(g.prefix_size, 1, one_block)
        else:
            tail = LetterTail(g.prefix_size, g.tail.size, g.tail.block)
    else:
        boundary = g.boundary()
        if boundary is None:
            return None
        tail = LetterTail(boundary[0], 1, boundary[1])
    if letter.inverted:
        tail = LetterTail(tail.start, tail.period, dense_inverse(tail.block))
    return tail


def tail_split(w: GroupWord) -> Optional[TailSplit]:
    """
    Divide el producto en una esquina finita y un bloque periódico.

    Busca N ≥ el inicio de cola de todas las letras con N alineado con el
    periodo de cada cola periódica; el bloque de cola tiene tamaño
    mcm de los periodos.

    Returns:
        TailSplit, o None si alguna letra no tiene cola diagonal por bloques
        o si las colas no admiten una frontera común
    """
    tails: List[LetterTail] = []
    for letter in w.letters:
        tail = letter_tail(letter)
        if tail is None:
            return None
        tails.append(tail)

    period = lcm(*(t.period for t in tails)) if tails else 1
    start = max((t.start for t in tails), default=0)
    window = next(
        (n for n in range(start, start + period) if all((n - t.start) % t.period == 0 for t in tails)),
        None,
    )
    if window is None:
        logger.debug(f"Colas sin frontera común (periodo {period}, inicio {start})")
        return None

    block = identity_dense(w.spec, period)
    for t in tails:
        block = dense_mul(block, block_diagonal(w.spec, [t.block] * (period // t.period)))
    corner = window_project(w, window) if window else ()
    return TailSplit(window=window, period=period, corner=corner, block=block)


def check_tail_certificate(w: GroupWord, margin: Optional[int] = None) -> DenseMatrix:
    """
    Comprueba por sondeo el certificado de cola de w.

    Columnas < W deben tener soporte en filas < W y las columnas
    W..W+margin deben ser scalar·e_j.

    Returns:
        La esquina W×W

    Raises:
        CertificationFailed: si un sondeo refuta el certificado
    """
    if w.tail is None:
        raise CertificationFailed("la palabra no declara certificado de cola")
    margin = settings.PROBE_MARGIN if margin is None else margin
    window, scalar = w.tail.window, w.tail.scalar
    zero = w.spec.zero
    rows = [[zero] * window for _ in range(window)]
    for j in range(window):
        for i, v in column_eval(w, j).items():
            if i >= window:
                raise CertificationFailed(f"columna {j} tiene la entrada ({i}, {j}) fuera de la ventana {window}")
            rows[i][j] = v
    for j in range(window, window + max(margin, 1)):
        if column_eval(w, j) != {j: scalar}:
            raise CertificationFailed(f"la columna {j} no es {scalar}·e_{j}")
    return tuple(tuple(r) for r in rows)
