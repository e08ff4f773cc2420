"""
Fixtures compartidos de la suite de tests
Cuerpos base y constructores cortos de matrices finitarias
"""

import pytest
from hypothesis import HealthCheck, settings

from cf_lattice.algebra.field import FieldSpec
from cf_lattice.matrices.finitary import FinitaryMatrix, ScaledFinitary

# Ejemplos reproducibles: la misma semilla en cada ejecución
settings.register_profile(
    "cf_lattice",
    max_examples=40,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.function_scoped_fixture, HealthCheck.filter_too_much],
)
settings.load_profile("cf_lattice")


# ========== CUERPOS ==========

@pytest.fixture
def q() -> FieldSpec:
    return FieldSpec.rationals()


@pytest.fixture
def f2() -> FieldSpec:
    return FieldSpec.prime_field(2)


@pytest.fixture
def f3() -> FieldSpec:
    return FieldSpec.prime_field(3)


@pytest.fixture
def f5() -> FieldSpec:
    return FieldSpec.prime_field(5)


@pytest.fixture
def f7() -> FieldSpec:
    return FieldSpec.prime_field(7)


# ========== CONSTRUCTORES ==========

@pytest.fixture
def fin():
    """fin(spec, {(i, j): valor}) → E + A"""

    def build(spec: FieldSpec, deltas=None) -> FinitaryMatrix:
        return FinitaryMatrix.from_deltas(spec, deltas or {})

    return build


@pytest.fixture
def scaled():
    """scaled(spec, α, {(i, j): valor}) → α·(E + A)"""

    def build(spec: FieldSpec, alpha, deltas=None) -> ScaledFinitary:
        return ScaledFinitary(spec.element(alpha), FinitaryMatrix.from_deltas(spec, deltas or {}))

    return build
