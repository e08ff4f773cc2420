"""
Testigos de Transvección
Responsabilidad: Construir palabras de conjugados x⁻¹·g^{±1}·x cuyo producto
es una transvección elemental E + c·e_ij, y reproducirlas para verificarlas

Estrategias:
- commutator: construcción cerrada con cuatro conjugados para cualquier
  elemento de D_sc × GL_fr con parte finitaria distinta de E
- search: búsqueda en anchura acotada sobre un pool fijo de conjugadores
  elementales y de permutación (fallback)
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, Field

from ..algebra.field import FieldElement
from ..config import settings
from ..models.errors import CertificationFailed, InvalidMatrix, SearchExhausted
from ..matrices.finitary import FinitaryMatrix, ScaledFinitary

logger = logging.getLogger(__name__)

Source = Union[FinitaryMatrix, ScaledFinitary]
WordLetter = Tuple[FinitaryMatrix, int]

STRATEGIES = ("auto", "commutator", "search")


@dataclass(frozen=True)
class TransvectionWitness:
    """
    Palabra ((x₁, e₁), …, (x_k, e_k)) con ∏ x_r⁻¹·g^{e_r}·x_r = target.

    target es siempre E + c·e_ij con i ≠ j y c ≠ 0.
    """

    source: Source
    target: FinitaryMatrix
    word: Tuple[WordLetter, ...]
    strategy: str

    def __len__(self) -> int:
        return len(self.word)


class WitnessVerification(BaseModel):
    """Resultado de reproducir un testigo contra su elemento fuente"""

    valid: bool = Field(description="El producto reproducido coincide con el objetivo")
    first_difference: Optional[Tuple[int, int, str, str]] = Field(
        default=None, description="(fila, columna, esperado, obtenido) de la primera entrada distinta"
    )
    message: str = Field(default="", description="Detalle legible")


# ========== REPRODUCCIÓN ==========

def _scaled(g: Source) -> ScaledFinitary:
    return g if isinstance(g, ScaledFinitary) else g.to_scaled()


def _conjugate_power(g: ScaledFinitary, x: FinitaryMatrix, exponent: int) -> ScaledFinitary:
    if exponent not in (1, -1):
        raise InvalidMatrix(f"exponente {exponent} fuera de ±1")
    return (g if exponent == 1 else g.inverse()).conjugate(x)


def replay_witness(witness: TransvectionWitness, source: Optional[Source] = None) -> ScaledFinitary:
    """Evalúa ∏ x⁻¹·g^e·x en orden sobre la fuente dada (o la del testigo)"""
    g = _scaled(witness.source if source is None else source)
    result = ScaledFinitary.scalar_matrix(g.spec, 1)
    for x, exponent in witness.word:
        result = result * _conjugate_power(g, x, exponent)
    return result


def _entry(g: ScaledFinitary, i: int, j: int):
    return g.scalar * g.body.entry(i, j)


def verify_witness(witness: TransvectionWitness, source: Optional[Source] = None) -> WitnessVerification:
    """
    Reproduce el testigo y compara entrada a entrada con el objetivo.

    Example:
        >>> q = FieldSpec.rationals()
        >>> w = transvection_witness(FinitaryMatrix.diagonal(q, [2]))
        >>> verify_witness(w).valid
        True
    """
    target = witness.target
    if not target.is_transvection():
        return WitnessVerification(valid=False, message="el objetivo no es una transvección elemental")
    replayed = replay_witness(witness, source)
    expected = target.to_scaled()
    n = max(replayed.window, target.window, 1)
    for i in range(n):
        for j in range(n):
            a, b = _entry(expected, i, j), _entry(replayed, i, j)
            if a != b:
                return WitnessVerification(
                    valid=False,
                    first_difference=(i, j, str(a), str(b)),
                    message=f"entrada ({i}, {j}): esperado {a}, obtenido {b}",
                )
    return WitnessVerification(valid=True, message=f"{len(witness)} conjugados reproducen {target!r}")


# ========== CONSTRUCCIÓN POR CONMUTADORES ==========

def _commutator_word(g: ScaledFinitary) -> Tuple[Tuple[WordLetter, ...], FinitaryMatrix]:
    """
    Con n = ventana de h, j = n, i la primera columna con h·e_i ≠ e_i y
    t = E + e_ij:  t⁻¹g⁻¹t·g = E − w·e_jᵀ con w = e_i − h⁻¹e_i.
    Si w tiene una sola entrada es ya una transvección; si no, con w_l ≠ 0,
    k ∉ {l, j} y P = E + e_kl el conmutador con P da E + w_l·e_kj.
    """
    spec = g.spec
    h = g.body
    identity = FinitaryMatrix.identity(spec)
    j = h.window
    i = next(c for c in range(j) if h.column(c) != {c: spec.one})
    t = FinitaryMatrix.elementary(spec, i, j)

    w: Dict[int, FieldElement] = {i: spec.one}
    for row, value in h.inverse().column(i).items():
        w[row] = w.get(row, spec.zero) - value
    w = {row: value for row, value in w.items() if value.value}

    if len(w) == 1:
        ((l, wl),) = w.items()
        return ((t, -1), (identity, 1)), FinitaryMatrix.elementary(spec, l, j, -wl)

    l = min(w)
    k = next(c for c in range(j + 2) if c not in (l, j))
    p = FinitaryMatrix.elementary(spec, k, l)
    word = ((identity, -1), (t, 1), (t * p, -1), (p, 1))
    return word, FinitaryMatrix.elementary(spec, k, j, w[l])


# ========== BÚSQUEDA ACOTADA ==========

def _conjugator_pool(spec, window: int) -> List[FinitaryMatrix]:
    """E, E ± e_ij e intercambios dentro de la ventana, en orden canónico sin repetidos"""
    pool: List[FinitaryMatrix] = [FinitaryMatrix.identity(spec)]
    for i in range(window):
        for j in range(window):
            if i != j:
                pool.append(FinitaryMatrix.elementary(spec, i, j, 1))
                pool.append(FinitaryMatrix.elementary(spec, i, j, -1))
    for i in range(window):
        for j in range(i + 1, window):
            pool.append(FinitaryMatrix.swap(spec, i, j))
    return list(dict.fromkeys(pool))


def _search_word(g: ScaledFinitary, depth: int, max_states: int) -> Tuple[Tuple[WordLetter, ...], FinitaryMatrix]:
    window = max(g.window, 3)
    letters: Dict[ScaledFinitary, WordLetter] = {}
    for x in _conjugator_pool(g.spec, window):
        for exponent in (1, -1):
            letters.setdefault(_conjugate_power(g, x, exponent), (x, exponent))

    start = ScaledFinitary.scalar_matrix(g.spec, 1)
    parents: Dict[ScaledFinitary, Optional[Tuple[ScaledFinitary, WordLetter]]] = {start: None}
    queue = deque([(start, 0)])
    while queue:
        state, level = queue.popleft()
        if level == depth:
            continue
        for value, letter in letters.items():
            nxt = state * value
            if nxt in parents:
                continue
            parents[nxt] = (state, letter)
            if nxt.is_finitary() and nxt.body.is_transvection():
                word: List[WordLetter] = []
                node = nxt
                while parents[node] is not None:
                    node, step = parents[node]
                    word.append(step)
                logger.info(f"🔄 Búsqueda acotada: transvección a profundidad {level + 1} ({len(parents)} estados)")
                return tuple(reversed(word)), nxt.body
            if len(parents) >= max_states:
                raise SearchExhausted(f"límite de {max_states} estados alcanzado sin transvección")
            queue.append((nxt, level + 1))
    raise SearchExhausted(f"ninguna transvección con ≤ {depth} conjugados en la ventana {window}")


# ========== OPERACIÓN ==========

def transvection_witness(
    g: Source,
    strategy: str = "auto",
    depth: Optional[int] = None,
    max_states: Optional[int] = None,
) -> TransvectionWitness:
    """
    Testigo verificado de que la clausura normal de g contiene una transvección.

    Args:
        g: Elemento de D_sc × GL_fr no escalar
        strategy: auto (conmutadores y búsqueda como fallback), commutator o search
        depth: Profundidad máxima de la búsqueda (SEARCH_DEPTH por defecto)
        max_states: Límite de estados de la búsqueda (SEARCH_MAX_STATES por defecto)

    Returns:
        TransvectionWitness reproducido y verificado

    Raises:
        InvalidMatrix: si g es escalar (su clausura normal es central)
        SearchExhausted: si la búsqueda acotada no encuentra transvección
        CertificationFailed: si la palabra construida no reproduce el objetivo
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"estrategia desconocida: {strategy}")
    scaled = _scaled(g)
    if scaled.is_scalar():
        raise InvalidMatrix("un elemento escalar no genera transvecciones")

    if scaled.is_finitary() and scaled.body.is_transvection() and strategy != "search":
        witness = TransvectionWitness(g, scaled.body, ((FinitaryMatrix.identity(g.spec), 1),), "identity")
    else:
        witness = None
        if strategy in ("auto", "commutator"):
            word, target = _commutator_word(scaled)
            witness = TransvectionWitness(g, target, word, "commutator")
            if not verify_witness(witness).valid:
                if strategy == "commutator":
                    raise CertificationFailed("la construcción por conmutadores no reproduce el objetivo")
                logger.warning("⚠️ Construcción por conmutadores refutada, usando búsqueda acotada")
                witness = None
        if witness is None:
            word, target = _search_word(
                scaled,
                settings.SEARCH_DEPTH if depth is None else depth,
                settings.SEARCH_MAX_STATES if max_states is None else max_states,
            )
            witness = TransvectionWitness(g, target, word, "search")

    check = verify_witness(witness)
    if not check.valid:
        raise CertificationFailed(f"testigo de transvección inválido: {check.message}")
    logger.debug(f"Testigo de transvección ({witness.strategy}): {len(witness)} conjugados → {witness.target!r}")
    return witness
