"""
Cuerpo Base K
Responsabilidad: Aritmética exacta sobre ℚ y GF(p) y factorización de racionales

Todos los coeficientes de matrices son FieldElement. No hay coma flotante en
ningún punto: ℚ usa Fraction (enteros de precisión arbitraria) y GF(p) usa
residuos en [0, p).
"""

import logging
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from sympy import factorint, isprime
from sympy.ntheory import n_order

from ..config import settings
from ..models.errors import ContractViolation, DivisionByZero, FieldMismatch, ZeroInput

logger = logging.getLogger(__name__)


# ========== ESPECIFICACIÓN DEL CUERPO ==========

class FieldKind(str, Enum):
    """Tipos de cuerpo soportados"""
    RATIONALS = "Q"
    PRIME = "Fp"


_FIELD_TAG = re.compile(r"^\s*(?:G?F)\s*(?:p\s*:\s*|\(\s*)?(\d+)\s*\)?\s*$", re.IGNORECASE)


class FieldSpec(BaseModel):
    """
    Cuerpo base K: ℚ o GF(p) con p primo < 2^31.

    Las instancias son inmutables y comparables; usar FieldSpec.rationals() y
    FieldSpec.prime_field(p) para obtener las instancias compartidas.
    """

    model_config = ConfigDict(frozen=True)

    kind: FieldKind = Field(description="Q (racionales) o Fp (cuerpo primo)")
    modulus: Optional[int] = Field(default=None, description="Primo p, solo para Fp")

    @model_validator(mode="after")
    def _check_modulus(self) -> "FieldSpec":
        if self.kind is FieldKind.RATIONALS:
            if self.modulus is not None:
                raise ValueError("ℚ no admite módulo")
            return self
        if self.modulus is None:
            raise ValueError("Fp requiere el módulo p")
        if self.modulus >= settings.PRIME_MODULUS_BOUND:
            raise ValueError(f"módulo {self.modulus} fuera de escala (< {settings.PRIME_MODULUS_BOUND})")
        if not isprime(self.modulus):
            raise ValueError(f"módulo {self.modulus} no es primo")
        return self

    # ---------- constructores ----------

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return RATIONALS

    @classmethod
    def prime_field(cls, p: int) -> "FieldSpec":
        """
        Devuelve GF(p) (instancia compartida).

        Raises:
            ContractViolation: si p no es primo o supera PRIME_MODULUS_BOUND
        """
        if not isinstance(p, int) or p < 2 or p >= settings.PRIME_MODULUS_BOUND or not isprime(p):
            raise ContractViolation(f"GF({p}): se requiere un primo menor que {settings.PRIME_MODULUS_BOUND}")
        return _prime_field(p)

    @classmethod
    def parse(cls, text: str, p: Optional[int] = None) -> "FieldSpec":
        """
        Interpreta etiquetas de cuerpo.

        Example:
            >>> FieldSpec.parse("Q").tag
            'Q'
            >>> FieldSpec.parse("GF(7)").tag
            'F7'
            >>> FieldSpec.parse("Fp", p=5).tag
            'F5'
        """
        raw = (text or "").strip()
        if raw.upper() in ("Q", "QQ", "RATIONALS"):
            return RATIONALS
        if raw.lower() == "fp":
            if p is None:
                raise ContractViolation("el cuerpo 'Fp' necesita el primo p")
            return cls.prime_field(int(p))
        match = _FIELD_TAG.match(raw)
        if not match:
            raise ContractViolation(f"cuerpo desconocido: {text!r}")
        return cls.prime_field(int(match.group(1)))

    # ---------- propiedades ----------

    @property
    def is_rational(self) -> bool:
        return self.kind is FieldKind.RATIONALS

    @property
    def is_finite(self) -> bool:
        return self.kind is FieldKind.PRIME

    @property
    def tag(self) -> str:
        return "Q" if self.is_rational else f"F{self.modulus}"

    @property
    def characteristic(self) -> int:
        return 0 if self.is_rational else self.modulus

    @property
    def zero(self) -> "FieldElement":
        return self.element(0)

    @property
    def one(self) -> "FieldElement":
        return self.element(1)

    def to_document(self) -> Dict[str, Union[str, int]]:
        if self.is_rational:
            return {"field": "Q"}
        return {"field": "Fp", "p": self.modulus}

    # ---------- elementos ----------

    def element(self, value: "Scalar") -> "FieldElement":
        """
        Convierte int, Fraction, str ("2/3", "-5") o FieldElement a este cuerpo.

        Raises:
            FieldMismatch: si value es un FieldElement de otro cuerpo
            DivisionByZero: si el denominador se anula en GF(p)
        """
        if isinstance(value, FieldElement):
            if value.spec is not self and value.spec != self:
                raise FieldMismatch(f"elemento de {value.spec.tag} usado en {self.tag}")
            return value
        if isinstance(value, str):
            try:
                value = Fraction(value.strip())
            except (ValueError, ZeroDivisionError) as e:
                raise ValueError(f"escalar inválido {value!r}: {e}") from e
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise TypeError(f"no se puede convertir {type(value).__name__} a {self.tag}")
        return FieldElement(self, value)

    def elements(self) -> Iterator["FieldElement"]:
        """Enumera GF(p) en orden 0, 1, ..., p−1"""
        if self.is_rational:
            raise ContractViolation("ℚ no es enumerable de forma finita")
        for v in range(self.modulus):
            yield FieldElement(self, v)

    def nonzero_elements(self) -> Iterator["FieldElement"]:
        for x in self.elements():
            if x.value:
                yield x

    def multiplicative_order(self, x: "FieldElement") -> int:
        """Orden de x en GF(p)*"""
        x = self.element(x)
        if self.is_rational:
            raise ContractViolation("orden multiplicativo solo definido en GF(p)")
        if x.is_zero():
            raise ZeroInput("0 no tiene orden multiplicativo")
        return int(n_order(x.value, self.modulus))


@lru_cache(maxsize=None)
def _prime_field(p: int) -> FieldSpec:
    return FieldSpec(kind=FieldKind.PRIME, modulus=p)


RATIONALS = FieldSpec(kind=FieldKind.RATIONALS)


# ========== ELEMENTOS ==========

@dataclass(frozen=True, eq=False)
class FieldElement:
    """
    Escalar exacto de K.

    En ℚ el valor es una Fraction (siempre normalizada); en GF(p) un entero
    en [0, p). Soporta + − × ÷ ** y la coerción desde int/Fraction.
    """

    spec: FieldSpec
    value: Union[Fraction, int]

    def __post_init__(self):
        spec = self.spec
        value = self.value
        if spec.kind is FieldKind.RATIONALS:
            if type(value) is not Fraction:
                object.__setattr__(self, "value", Fraction(value))
            return
        p = spec.modulus
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise DivisionByZero(f"denominador {value.denominator} se anula en GF({p})")
            value = value.numerator * pow(value.denominator, -1, p)
        if not 0 <= value < p:
            value %= p
        object.__setattr__(self, "value", int(value))

    # ---------- predicados ----------

    def is_zero(self) -> bool:
        return not self.value

    def is_one(self) -> bool:
        return self.value == 1

    def __bool__(self) -> bool:
        return bool(self.value)

    # ---------- coerción ----------

    def _coerce(self, other) -> Optional["FieldElement"]:
        if isinstance(other, FieldElement):
            if other.spec is not self.spec and other.spec != self.spec:
                raise FieldMismatch(f"{self.spec.tag} vs {other.spec.tag}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return FieldElement(self.spec, other)
        return None

    def _new(self, value) -> "FieldElement":
        return FieldElement(self.spec, value)

    # ---------- operaciones ----------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.spec.is_rational:
            return self._new(self.value + other.value)
        return self._new((self.value + other.value) % self.spec.modulus)

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        if self.spec.is_rational:
            return self._new(-self.value)
        return self._new((-self.value) % self.spec.modulus)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.spec.is_rational:
            return self._new(self.value * other.value)
        return self._new((self.value * other.value) % self.spec.modulus)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if not self.value:
            raise DivisionByZero(f"0 no es invertible en {self.spec.tag}")
        if self.spec.is_rational:
            return self._new(1 / self.value)
        return self._new(pow(self.value, -1, self.spec.modulus))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "FieldElement":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        if self.spec.is_rational:
            return self._new(self.value ** exponent)
        return self._new(pow(self.value, exponent, self.spec.modulus))

    # ---------- igualdad ----------

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return (other.spec is self.spec or other.spec == self.spec) and other.value == self.value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.value == FieldElement(self.spec, other).value
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.spec.kind, self.spec.modulus, self.value))

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"FieldElement({self.spec.tag}, {self.value})"


Scalar = Union[FieldElement, int, Fraction, str]


# ========== DISPATCH DE OPERACIONES ==========

_BINARY_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
    "eq": lambda a, b: a == b,
}

_UNARY_OPS = {
    "inv": lambda a: a.inverse(),
    "neg": lambda a: -a,
}


def field_arith(op: str, a: FieldElement, b: Optional[FieldElement] = None) -> Union[FieldElement, bool]:
    """
    Operación de cuerpo por nombre.

    Args:
        op: add, sub, mul, div, inv, neg o eq
        a: Primer operando
        b: Segundo operando (omitido en inv/neg)

    Returns:
        FieldElement normalizado, o bool para eq

    Example:
        >>> q = FieldSpec.rationals()
        >>> field_arith("add", q.element("1/2"), q.element("1/3"))
        FieldElement(Q, 5/6)
    """
    if op in _UNARY_OPS:
        return _UNARY_OPS[op](a)
    if op not in _BINARY_OPS:
        raise ValueError(f"operación desconocida: {op}")
    if b is None:
        raise ValueError(f"{op} requiere dos operandos")
    if not isinstance(b, FieldElement) or (b.spec is not a.spec and b.spec != a.spec):
        raise FieldMismatch(f"{op}: operandos de cuerpos distintos")
    return _BINARY_OPS[op](a, b)


# ========== FACTORIZACIÓN ==========

class RationalFactorization(BaseModel):
    """Signo y exponentes primos de un racional no nulo"""

    sign: int = Field(description="+1 o −1")
    exponents: Dict[int, int] = Field(default_factory=dict, description="primo → exponente no nulo")

    @field_validator("sign")
    @classmethod
    def _check_sign(cls, v: int) -> int:
        if v not in (1, -1):
            raise ValueError("el signo debe ser ±1")
        return v

    @field_validator("exponents")
    @classmethod
    def _check_exponents(cls, v: Dict[int, int]) -> Dict[int, int]:
        for prime, exponent in v.items():
            if exponent == 0:
                raise ValueError(f"exponente cero para {prime}")
            if not isprime(prime):
                raise ValueError(f"{prime} no es primo")
        return dict(sorted(v.items()))

    @property
    def primes(self) -> List[int]:
        return list(self.exponents)

    def reconstruct(self) -> FieldElement:
        value = Fraction(self.sign)
        for prime, exponent in self.exponents.items():
            value *= Fraction(prime) ** exponent
        return RATIONALS.element(value)


def factor_rational(q: Scalar) -> RationalFactorization:
    """
    Factoriza un racional no nulo por división de prueba.

    Args:
        q: Racional (FieldElement de ℚ, int, Fraction o str)

    Returns:
        RationalFactorization con reconstrucción exacta

    Raises:
        ZeroInput: si q = 0
        FieldMismatch: si q pertenece a GF(p)

    Example:
        >>> factor_rational("8/9").exponents
        {2: 3, 3: -2}
    """
    if isinstance(q, FieldElement) and not q.spec.is_rational:
        raise FieldMismatch("factor_rational solo está definido sobre ℚ")
    q = RATIONALS.element(q)
    if q.is_zero():
        raise ZeroInput("0 no admite factorización")

    numerator, denominator = q.value.numerator, q.value.denominator
    if abs(numerator) > settings.FACTOR_BOUND or denominator > settings.FACTOR_BOUND:
        logger.warning(f"⚠️ Factorizando {q} fuera de la cota {settings.FACTOR_BOUND}")

    exponents: Dict[int, int] = {}
    for prime, e in factorint(abs(numerator)).items():
        exponents[int(prime)] = int(e)
    for prime, e in factorint(denominator).items():
        exponents[int(prime)] = exponents.get(int(prime), 0) - int(e)

    return RationalFactorization(sign=1 if numerator > 0 else -1, exponents=exponents)
