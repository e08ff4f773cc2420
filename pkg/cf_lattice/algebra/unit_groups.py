"""
Subgrupos de K* y K*×K*
Responsabilidad: Pertenencia, forma canónica y joins de subgrupos finitamente
generados del grupo multiplicativo

Codificación:
- ℚ* ≅ ℤ/2 ⊕ ⊕_p ℤ: un exponente por primo de los generadores más una
  coordenada de signo módulo 2.
- GF(p)* ≅ ℤ/(p−1): logaritmo discreto respecto de una raíz primitiva.

La pertenencia se resuelve con la forma de Hermite de utils.integer_lattice.
K* completo sobre ℚ no es finitamente generado y se marca con banderas `full`.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field
from sympy import primitive_root

from ..config import settings
from ..models.errors import ContractViolation, FieldMismatch, ZeroInput
from ..utils.integer_lattice import lattice_basis, solve_in_lattice
from .field import FieldElement, FieldSpec, Scalar, factor_rational

logger = logging.getLogger(__name__)

Pair = Tuple[FieldElement, FieldElement]


# ========== LOGARITMO DISCRETO ==========

@lru_cache(maxsize=16)
def discrete_log_table(p: int) -> Tuple[int, Dict[int, int]]:
    """
    Tabla exhaustiva de logaritmos en GF(p)*.

    Returns:
        (raíz primitiva ω, dict residuo → exponente en [0, p−1))

    Raises:
        ContractViolation: si p ≥ DLOG_MAX_PRIME
    """
    if p >= settings.DLOG_MAX_PRIME:
        raise ContractViolation(f"logaritmo discreto exhaustivo requiere p < {settings.DLOG_MAX_PRIME}")
    omega = int(primitive_root(p)) if p > 2 else 1
    table: Dict[int, int] = {}
    power = 1
    for exponent in range(p - 1):
        table[power] = exponent
        power = power * omega % p
    logger.debug(f"🔄 Tabla de logaritmos GF({p}) con raíz primitiva {omega}")
    return omega, table


def discrete_log(x: FieldElement) -> int:
    """
    Exponente e con ω^e = x en GF(p).

    Example:
        >>> f7 = FieldSpec.prime_field(7)
        >>> discrete_log(f7.element(2))  # ω = 3, 3² = 2
        2
    """
    if x.spec.is_rational:
        raise FieldMismatch("logaritmo discreto solo en GF(p)")
    if x.is_zero():
        raise ZeroInput("log(0) no está definido")
    return discrete_log_table(x.spec.modulus)[1][x.value]


def primitive_element(spec: FieldSpec) -> FieldElement:
    """Generador de GF(p)*"""
    return spec.element(discrete_log_table(spec.modulus)[0])


# ========== COORDENADAS DE EXPONENTES ==========

@dataclass(frozen=True)
class UnitCoordinates:
    """
    Sistema de coordenadas de exponentes para K*.

    Sobre ℚ: primos fijados + signo (ℤ/2). Sobre GF(p): un logaritmo (ℤ/(p−1)).
    """

    spec: FieldSpec
    primes: Tuple[int, ...] = ()

    @classmethod
    def for_elements(cls, spec: FieldSpec, elements: Iterable[FieldElement]) -> "UnitCoordinates":
        if not spec.is_rational:
            return cls(spec)
        primes = set()
        for x in elements:
            primes.update(factor_rational(x).exponents)
        return cls(spec, tuple(sorted(primes)))

    @property
    def labels(self) -> Tuple:
        if self.spec.is_rational:
            return self.primes + ("sign",)
        return ("log",)

    @property
    def moduli(self) -> Tuple[int, ...]:
        if self.spec.is_rational:
            return (0,) * len(self.primes) + (2,)
        return (self.spec.modulus - 1,)

    def encode(self, x: FieldElement) -> Optional[List[int]]:
        """Vector de exponentes de x, o None si usa primos fuera del sistema"""
        if not self.spec.is_rational:
            return [discrete_log(x)]
        factorization = factor_rational(x)
        if any(prime not in self.primes for prime in factorization.exponents):
            return None
        vector = [factorization.exponents.get(prime, 0) for prime in self.primes]
        vector.append(0 if factorization.sign > 0 else 1)
        return vector

    def decode(self, vector: Sequence[int]) -> FieldElement:
        if not self.spec.is_rational:
            return primitive_element(self.spec) ** (vector[0] % (self.spec.modulus - 1))
        value = self.spec.one
        for prime, exponent in zip(self.primes, vector):
            value = value * self.spec.element(prime) ** exponent
        return -value if vector[-1] % 2 else value


# ========== RESULTADOS ==========

class MembershipResult(BaseModel):
    """Resultado de una prueba de pertenencia"""

    member: bool = Field(description="True si el elemento pertenece al subgrupo")
    witness: Optional[List[int]] = Field(
        default=None,
        description="Exponentes sobre los generadores (None si no pertenece o si decide una componente completa)",
    )

    def __bool__(self) -> bool:
        return self.member


def _check_units(spec: FieldSpec, values: Iterable[Scalar]) -> Tuple[FieldElement, ...]:
    result = []
    for value in values:
        x = spec.element(value)
        if x.is_zero():
            raise ZeroInput("los generadores de K* deben ser no nulos")
        result.append(x)
    return tuple(result)


def _reduce_witness(spec: FieldSpec, generators: Sequence[FieldElement], witness: List[int]) -> List[int]:
    """En GF(p) reduce cada exponente módulo el orden de su generador"""
    if spec.is_rational:
        return witness
    return [e % spec.multiplicative_order(g) for g, e in zip(generators, witness)]


# ========== SUBGRUPOS DE K* ==========

@dataclass(frozen=True, eq=False)
class UnitSubgroup:
    """
    Subgrupo de K* generado por `generators`, o K* entero si `full`.

    Sobre GF(p) la bandera full se normaliza al generador ω. La igualdad
    compara formas canónicas.
    """

    spec: FieldSpec
    generators: Tuple[FieldElement, ...] = ()
    full: bool = False

    def __post_init__(self):
        generators = _check_units(self.spec, self.generators)
        if self.full and not self.spec.is_rational:
            generators = (primitive_element(self.spec),)
            object.__setattr__(self, "full", False)
        object.__setattr__(self, "generators", generators)

    # ---------- constructores ----------

    @classmethod
    def generated_by(cls, spec: FieldSpec, generators: Iterable[Scalar]) -> "UnitSubgroup":
        return cls(spec, tuple(spec.element(g) for g in generators))

    @classmethod
    def trivial(cls, spec: FieldSpec) -> "UnitSubgroup":
        return cls(spec)

    @classmethod
    def whole(cls, spec: FieldSpec) -> "UnitSubgroup":
        return cls(spec, full=True)

    # ---------- forma canónica ----------

    def coordinates(self) -> UnitCoordinates:
        return UnitCoordinates.for_elements(self.spec, self.generators)

    def _vectors(self, coords: UnitCoordinates) -> List[List[int]]:
        return [coords.encode(g) for g in self.generators]

    def canonical_key(self) -> Tuple:
        if self.full:
            return (self.spec.tag, True)
        coords = self.coordinates()
        return (self.spec.tag, False, coords.labels, lattice_basis(self._vectors(coords), coords.moduli))

    def canonical(self) -> "UnitSubgroup":
        """Subgrupo igual con generadores decodificados de la base de Hermite"""
        if self.full:
            return self
        coords = self.coordinates()
        generators = []
        for row in lattice_basis(self._vectors(coords), coords.moduli):
            g = coords.decode(row)
            if not g.is_one():
                generators.append(g)
        return UnitSubgroup(self.spec, tuple(generators))

    def is_trivial(self) -> bool:
        return not self.full and all(g.is_one() for g in self.generators)

    def is_whole(self) -> bool:
        if self.full:
            return True
        if self.spec.is_rational:
            return False
        return self.order() == self.spec.modulus - 1

    def order(self) -> int:
        """Orden del subgrupo (solo GF(p)); divide a p−1"""
        if self.spec.is_rational:
            raise ContractViolation("orden solo definido para subgrupos de GF(p)*")
        n = self.spec.modulus - 1
        d = n
        for g in self.generators:
            d = gcd(d, discrete_log(g))
        return n // d

    def index(self) -> int:
        """Índice [GF(p)* : H]"""
        return (self.spec.modulus - 1) // self.order()

    # ---------- operaciones ----------

    def membership(self, x: Scalar) -> MembershipResult:
        return unit_membership(x, self)

    def __contains__(self, x: Scalar) -> bool:
        return unit_membership(x, self).member

    def join(self, other: "UnitSubgroup") -> "UnitSubgroup":
        return subgroup_join(self, other)

    def is_subgroup_of(self, other: "UnitSubgroup") -> bool:
        if self.spec != other.spec:
            raise FieldMismatch("subgrupos de cuerpos distintos")
        if other.full:
            return True
        if self.full:
            return False
        return all(g in other for g in self.generators)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UnitSubgroup):
            return NotImplemented
        return self.spec == other.spec and self.canonical_key() == other.canonical_key()

    def __hash__(self) -> int:
        return hash(self.canonical_key())

    def __repr__(self) -> str:
        if self.full:
            return f"UnitSubgroup({self.spec.tag}, K*)"
        return f"UnitSubgroup({self.spec.tag}, ⟨{', '.join(map(str, self.generators))}⟩)"


def unit_membership(x: Scalar, H: UnitSubgroup) -> MembershipResult:
    """
    Decide x ∈ H y devuelve exponentes testigo.

    Args:
        x: Elemento no nulo de K
        H: Subgrupo finitamente generado (o K* completo)

    Returns:
        MembershipResult; si es miembro, ∏ gᵢ^{eᵢ} = x exactamente

    Raises:
        ZeroInput: si x = 0
        FieldMismatch: si x y H viven en cuerpos distintos

    Example:
        >>> q = FieldSpec.rationals()
        >>> unit_membership("8/9", UnitSubgroup.generated_by(q, [2, 3])).witness
        [3, -2]
    """
    if isinstance(x, FieldElement) and x.spec != H.spec:
        raise FieldMismatch(f"{x.spec.tag} vs {H.spec.tag}")
    x = H.spec.element(x)
    if x.is_zero():
        raise ZeroInput("0 no pertenece a K*")
    if H.full:
        return MembershipResult(member=True)

    coords = UnitCoordinates.for_elements(H.spec, H.generators)
    target = coords.encode(x)
    if target is None:
        return MembershipResult(member=False)

    witness = solve_in_lattice(H._vectors(coords), coords.moduli, target)
    if witness is None:
        return MembershipResult(member=False)
    return MembershipResult(member=True, witness=_reduce_witness(H.spec, H.generators, witness))


def subgroup_join(H1: UnitSubgroup, H2: UnitSubgroup) -> UnitSubgroup:
    """
    Subgrupo generado por H1 ∪ H2, en forma canónica.

    Example:
        >>> q = FieldSpec.rationals()
        >>> subgroup_join(UnitSubgroup.generated_by(q, [4]), UnitSubgroup.generated_by(q, [2])).generators
        (FieldElement(Q, 2),)
    """
    if H1.spec != H2.spec:
        raise FieldMismatch(f"{H1.spec.tag} vs {H2.spec.tag}")
    if H1.full or H2.full:
        return UnitSubgroup.whole(H1.spec)
    return UnitSubgroup(H1.spec, H1.generators + H2.generators).canonical()


# ========== SUBGRUPOS DE K*×K* ==========

@dataclass(frozen=True, eq=False)
class PairSubgroup:
    """
    Subgrupo de K*×K* generado por pares (α, δ).

    alpha_full / delta_full añaden K*×1 / 1×K* (solo ℚ; en GF(p) se
    normalizan a los generadores (ω, 1) / (1, ω)).
    """

    spec: FieldSpec
    generators: Tuple[Pair, ...] = ()
    alpha_full: bool = False
    delta_full: bool = False

    def __post_init__(self):
        pairs = []
        for pair in self.generators:
            alpha, delta = _check_units(self.spec, pair)
            pairs.append((alpha, delta))
        if not self.spec.is_rational:
            omega, one = primitive_element(self.spec), self.spec.one
            if self.alpha_full:
                pairs.append((omega, one))
            if self.delta_full:
                pairs.append((one, omega))
            object.__setattr__(self, "alpha_full", False)
            object.__setattr__(self, "delta_full", False)
        object.__setattr__(self, "generators", tuple(pairs))

    # ---------- constructores ----------

    @classmethod
    def generated_by(cls, spec: FieldSpec, generators: Iterable[Tuple[Scalar, Scalar]]) -> "PairSubgroup":
        return cls(spec, tuple((spec.element(a), spec.element(d)) for a, d in generators))

    @classmethod
    def trivial(cls, spec: FieldSpec) -> "PairSubgroup":
        return cls(spec)

    @classmethod
    def whole(cls, spec: FieldSpec, alpha: bool = True, delta: bool = True) -> "PairSubgroup":
        return cls(spec, alpha_full=alpha, delta_full=delta)

    @classmethod
    def from_alpha(cls, H: UnitSubgroup) -> "PairSubgroup":
        """Incrusta H como H×1"""
        one = H.spec.one
        return cls(H.spec, tuple((g, one) for g in H.generators), alpha_full=H.full)

    # ---------- coordenadas ----------

    def _systems(self) -> Tuple[Optional[UnitCoordinates], Optional[UnitCoordinates]]:
        alpha = None if self.alpha_full else UnitCoordinates.for_elements(self.spec, (a for a, _ in self.generators))
        delta = None if self.delta_full else UnitCoordinates.for_elements(self.spec, (d for _, d in self.generators))
        return alpha, delta

    @staticmethod
    def _encode(systems, pair: Pair) -> Optional[List[int]]:
        vector: List[int] = []
        for coords, x in zip(systems, pair):
            if coords is None:
                continue
            part = coords.encode(x)
            if part is None:
                return None
            vector.extend(part)
        return vector

    @staticmethod
    def _moduli(systems) -> Tuple[int, ...]:
        return tuple(m for coords in systems if coords is not None for m in coords.moduli)

    def canonical_key(self) -> Tuple:
        systems = self._systems()
        labels = tuple(
            (side, label)
            for side, coords in zip(("alpha", "delta"), systems) if coords is not None
            for label in coords.labels
        )
        vectors = [self._encode(systems, g) for g in self.generators]
        return (
            self.spec.tag, self.alpha_full, self.delta_full, labels,
            lattice_basis(vectors, self._moduli(systems)),
        )

    def canonical(self) -> "PairSubgroup":
        systems = self._systems()
        vectors = [self._encode(systems, g) for g in self.generators]
        one = self.spec.one
        split = len(systems[0].moduli) if systems[0] is not None else 0
        generators = []
        for row in lattice_basis(vectors, self._moduli(systems)):
            alpha = systems[0].decode(row[:split]) if systems[0] is not None else one
            delta = systems[1].decode(row[split:]) if systems[1] is not None else one
            if not (alpha.is_one() and delta.is_one()):
                generators.append((alpha, delta))
        return PairSubgroup(self.spec, tuple(generators), self.alpha_full, self.delta_full)

    # ---------- proyecciones ----------

    def alpha_projection(self) -> UnitSubgroup:
        return UnitSubgroup(self.spec, tuple(a for a, _ in self.generators), full=self.alpha_full)

    def delta_projection(self) -> UnitSubgroup:
        return UnitSubgroup(self.spec, tuple(d for _, d in self.generators), full=self.delta_full)

    def contains_alpha_axis(self) -> bool:
        """K*×1 ⊆ S"""
        if self.alpha_full:
            return True
        if self.spec.is_rational:
            return False
        one = self.spec.one
        return (primitive_element(self.spec), one) in self

    def contains_delta_axis(self) -> bool:
        """1×K* ⊆ S"""
        if self.delta_full:
            return True
        if self.spec.is_rational:
            return False
        return (self.spec.one, primitive_element(self.spec)) in self

    def is_trivial(self) -> bool:
        return (not self.alpha_full and not self.delta_full
                and all(a.is_one() and d.is_one() for a, d in self.generators))

    # ---------- operaciones ----------

    def membership(self, x: Tuple[Scalar, Scalar]) -> MembershipResult:
        return pair_membership(x, self)

    def __contains__(self, x: Tuple[Scalar, Scalar]) -> bool:
        return pair_membership(x, self).member

    def join(self, other: "PairSubgroup") -> "PairSubgroup":
        return pair_join(self, other)

    def is_subgroup_of(self, other: "PairSubgroup") -> bool:
        if self.spec != other.spec:
            raise FieldMismatch("subgrupos de cuerpos distintos")
        if self.alpha_full and not other.contains_alpha_axis():
            return False
        if self.delta_full and not other.contains_delta_axis():
            return False
        return all(g in other for g in self.generators)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PairSubgroup):
            return NotImplemented
        return self.spec == other.spec and self.canonical_key() == other.canonical_key()

    def __hash__(self) -> int:
        return hash(self.canonical_key())

    def __repr__(self) -> str:
        parts = [f"({a}, {d})" for a, d in self.generators]
        if self.alpha_full:
            parts.append("K*×1")
        if self.delta_full:
            parts.append("1×K*")
        return f"PairSubgroup({self.spec.tag}, ⟨{', '.join(parts)}⟩)"


def pair_membership(x: Tuple[Scalar, Scalar], S: PairSubgroup) -> MembershipResult:
    """
    Decide (α, δ) ∈ S con un único vector de exponentes para ambas coordenadas.

    Las componentes completas (alpha_full/delta_full) se proyectan fuera:
    el testigo solo explica las coordenadas restantes.

    Example:
        >>> q = FieldSpec.rationals()
        >>> S = PairSubgroup.generated_by(q, [(2, 2)])
        >>> pair_membership((4, 8), S).member, pair_membership((4, 4), S).witness
        (False, [2])
    """
    alpha, delta = x
    for value in (alpha, delta):
        if isinstance(value, FieldElement) and value.spec != S.spec:
            raise FieldMismatch(f"{value.spec.tag} vs {S.spec.tag}")
    pair = _check_units(S.spec, (alpha, delta))

    systems = S._systems()
    if systems == (None, None):
        return MembershipResult(member=True)
    target = S._encode(systems, pair)
    if target is None:
        return MembershipResult(member=False)

    vectors = [S._encode(systems, g) for g in S.generators]
    witness = solve_in_lattice(vectors, S._moduli(systems), target)
    if witness is None:
        return MembershipResult(member=False)
    if not S.spec.is_rational:
        orders = []
        for a, d in S.generators:
            # orden de (a, d) = mcm de los órdenes de sus componentes
            oa, od = S.spec.multiplicative_order(a), S.spec.multiplicative_order(d)
            orders.append(oa * od // gcd(oa, od))
        witness = [e % order for e, order in zip(witness, orders)]
    return MembershipResult(member=True, witness=witness)


def pair_join(S1: PairSubgroup, S2: PairSubgroup) -> PairSubgroup:
    """Subgrupo de K*×K* generado por S1 ∪ S2, en forma canónica"""
    if S1.spec != S2.spec:
        raise FieldMismatch(f"{S1.spec.tag} vs {S2.spec.tag}")
    return PairSubgroup(
        S1.spec,
        S1.generators + S2.generators,
        alpha_full=S1.alpha_full or S2.alpha_full,
        delta_full=S1.delta_full or S2.delta_full,
    ).canonical()
