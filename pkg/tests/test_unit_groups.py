"""
Suite de Testing para Subgrupos de K* y K*×K*
==============================================

Valida:
- unit_membership: testigos de exponentes sobre ℚ (primos + signo) y GF(p) (logaritmo)
- Forma canónica: igualdad de subgrupos con generadores distintos
- subgroup_join / pair_join y relación de inclusión
- pair_membership con componentes completas (K*×1, 1×K*)
- Errores: generadores nulos, cuerpos distintos
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cf_lattice.algebra.field import FieldSpec
from cf_lattice.algebra.unit_groups import (
    PairSubgroup,
    UnitSubgroup,
    discrete_log,
    pair_join,
    pair_membership,
    primitive_element,
    subgroup_join,
    unit_membership,
)
from cf_lattice.models.errors import FieldMismatch, ZeroInput
from tests.strategies import F7, Q


# ========== CONFIGURACIÓN ==========

@dataclass
class MembershipCase:
    """x ∈ ⟨generators⟩ con el testigo esperado (None = no comprobar el testigo)"""
    field: str
    generators: List[str]
    x: str
    member: bool
    witness: Optional[List[int]] = None
    description: str = ""


# ========== TEST CASES ==========

MEMBERSHIP_CASES = [
    MembershipCase("Q", ["2", "3"], "8/9", True, [3, -2], "8/9 = 2³·3⁻²"),
    MembershipCase("Q", ["2", "3"], "5", False, description="primo fuera del sistema"),
    MembershipCase("Q", ["2"], "-2", False, description="el signo no se alcanza"),
    MembershipCase("Q", ["-1"], "-1", True, [1], "signo como generador"),
    MembershipCase("Q", ["4"], "2", False, description="raíz cuadrada fuera de ⟨4⟩"),
    MembershipCase("Q", ["4"], "1/16", True, [-2], "exponente negativo"),
    MembershipCase("Q", [], "1", True, [], "subgrupo trivial contiene a 1"),
    MembershipCase("Q", [], "3", False, description="subgrupo trivial"),
    MembershipCase("F7", ["2"], "4", True, [2], "⟨2⟩ = {1, 2, 4} en GF(7)"),
    MembershipCase("F7", ["2"], "3", False, description="3 genera GF(7)*"),
    MembershipCase("F7", ["3"], "5", True, [5], "3⁵ ≡ 5"),
    MembershipCase("F5", ["4"], "4", True, [1], "−1 en GF(5)"),
]


# ========== PERTENENCIA ==========

@pytest.mark.parametrize("case", MEMBERSHIP_CASES, ids=lambda c: c.description)
def test_unit_membership_cases(case: MembershipCase):
    spec = FieldSpec.parse(case.field)
    H = UnitSubgroup.generated_by(spec, case.generators)
    result = unit_membership(case.x, H)
    assert result.member is case.member
    assert bool(result) is case.member
    if case.witness is not None:
        assert result.witness == case.witness
    if result.member:
        value = spec.one
        for g, e in zip(H.generators, result.witness):
            value = value * g ** e
        assert value == spec.element(case.x)


def test_whole_group_membership(q, f7):
    assert unit_membership("17/3", UnitSubgroup.whole(q)).member
    assert unit_membership("17/3", UnitSubgroup.whole(q)).witness is None
    assert 6 in UnitSubgroup.whole(f7)


def test_membership_errors(q, f5):
    with pytest.raises(ZeroInput):
        unit_membership(0, UnitSubgroup.generated_by(q, [2]))
    with pytest.raises(ZeroInput):
        UnitSubgroup.generated_by(q, [0])
    with pytest.raises(FieldMismatch):
        unit_membership(f5.element(2), UnitSubgroup.generated_by(q, [2]))


@given(st.lists(st.integers(min_value=-4, max_value=4), min_size=3, max_size=3))
def test_rational_membership_witness_replays(exponents):
    generators = [Q.element(2), Q.element("-3/5"), Q.element(6)]
    x = Q.one
    for g, e in zip(generators, exponents):
        x = x * g ** e
    result = unit_membership(x, UnitSubgroup(Q, tuple(generators)))
    assert result.member
    replay = Q.one
    for g, e in zip(generators, result.witness):
        replay = replay * g ** e
    assert replay == x


@given(st.integers(min_value=1, max_value=6), st.integers(min_value=1, max_value=6))
def test_prime_membership_matches_enumeration(g, x):
    H = UnitSubgroup.generated_by(F7, [g])
    powers = {pow(g, k, 7) for k in range(6)}
    assert (x in H) is (x in powers)


# ========== FORMA CANÓNICA ==========

def test_canonical_equality(q, f7):
    assert UnitSubgroup.generated_by(q, [2, 4]) == UnitSubgroup.generated_by(q, [2])
    assert UnitSubgroup.generated_by(q, [6, 3]) == UnitSubgroup.generated_by(q, [2, 3])
    assert UnitSubgroup.generated_by(q, [2]) != UnitSubgroup.generated_by(q, [4])
    assert UnitSubgroup.generated_by(f7, [3]) == UnitSubgroup.whole(f7)
    assert UnitSubgroup.generated_by(f7, [2]) == UnitSubgroup.generated_by(f7, [4])
    assert hash(UnitSubgroup.generated_by(q, [2, 4])) == hash(UnitSubgroup.generated_by(q, [2]))


def test_trivial_and_whole(q, f2, f7):
    assert UnitSubgroup.trivial(q).is_trivial()
    assert UnitSubgroup.generated_by(q, [1]).is_trivial()
    assert UnitSubgroup.whole(q).is_whole()
    assert not UnitSubgroup.generated_by(q, [2, 3, 5, -1]).is_whole()
    assert UnitSubgroup.whole(f7).order() == 6
    assert UnitSubgroup.generated_by(f7, [2]).order() == 3
    assert UnitSubgroup.generated_by(f7, [2]).index() == 2
    assert UnitSubgroup.whole(f2).is_trivial() and UnitSubgroup.whole(f2).is_whole()


def test_discrete_log_uses_primitive_root(f7):
    omega = primitive_element(f7)
    assert omega == 3
    assert discrete_log(f7.element(2)) == 2
    assert omega ** discrete_log(f7.element(6)) == 6


def test_subgroup_join(q, f7):
    assert subgroup_join(UnitSubgroup.generated_by(q, [4]), UnitSubgroup.generated_by(q, [2])).generators == (q.element(2),)
    assert subgroup_join(UnitSubgroup.generated_by(q, [2]), UnitSubgroup.whole(q)).full
    joined = subgroup_join(UnitSubgroup.generated_by(f7, [2]), UnitSubgroup.generated_by(f7, [6]))
    assert joined.is_whole()


def test_subgroup_inclusion(q):
    small = UnitSubgroup.generated_by(q, [4, 9])
    big = UnitSubgroup.generated_by(q, [2, 3])
    assert small.is_subgroup_of(big)
    assert not big.is_subgroup_of(small)
    assert big.is_subgroup_of(UnitSubgroup.whole(q))
    assert not UnitSubgroup.whole(q).is_subgroup_of(big)


# ========== PARES ==========

def test_pair_membership_single_witness(q):
    S = PairSubgroup.generated_by(q, [(2, 2)])
    assert not pair_membership((4, 8), S).member
    assert pair_membership((4, 4), S).witness == [2]
    assert pair_membership(("1/2", "1/2"), S).witness == [-1]


def test_pair_membership_with_full_components(q):
    S = PairSubgroup.whole(q, alpha=True, delta=False)
    assert (3, 1) in S
    assert ("-7/2", 1) in S
    assert (1, 3) not in S
    assert S.contains_alpha_axis() and not S.contains_delta_axis()

    T = PairSubgroup(q, ((q.element(1), q.element(2)),), alpha_full=True)
    assert (5, 4) in T
    assert (5, 3) not in T


def test_pair_full_flags_normalize_over_prime_fields(f5):
    S = PairSubgroup.whole(f5, alpha=False, delta=True)
    assert not S.alpha_full and not S.delta_full
    assert S.contains_delta_axis()
    assert not S.contains_alpha_axis()
    assert (1, 3) in S and (2, 1) not in S


def test_pair_projections_and_join(q):
    S = PairSubgroup.generated_by(q, [(2, 3)])
    assert S.alpha_projection() == UnitSubgroup.generated_by(q, [2])
    assert S.delta_projection() == UnitSubgroup.generated_by(q, [3])
    joined = pair_join(S, PairSubgroup.generated_by(q, [(2, 1)]))
    assert (1, 3) in joined
    assert joined == PairSubgroup.generated_by(q, [(2, 1), (1, 3)])


def test_pair_inclusion(q):
    small = PairSubgroup.generated_by(q, [(4, 1)])
    big = PairSubgroup.generated_by(q, [(2, 1)])
    assert small.is_subgroup_of(big)
    assert not big.is_subgroup_of(small)
    assert big.is_subgroup_of(PairSubgroup.whole(q))
    assert PairSubgroup.from_alpha(UnitSubgroup.generated_by(q, [2])) == big


def test_pair_errors(q, f5):
    with pytest.raises(ZeroInput):
        PairSubgroup.generated_by(q, [(0, 1)])
    with pytest.raises(FieldMismatch):
        pair_membership((f5.element(1), 1), PairSubgroup.trivial(q))


@given(st.lists(st.integers(min_value=-3, max_value=3), min_size=2, max_size=2))
def test_pair_witness_replays(exponents):
    generators = [(Q.element(2), Q.element(3)), (Q.element(-1), Q.element(Fraction(1, 2)))]
    target = [Q.one, Q.one]
    for (a, d), e in zip(generators, exponents):
        target = [target[0] * a ** e, target[1] * d ** e]
    result = pair_membership(tuple(target), PairSubgroup(Q, tuple(generators)))
    assert result.member
    replay = [Q.one, Q.one]
    for (a, d), e in zip(generators, result.witness):
        replay = [replay[0] * a ** e, replay[1] * d ** e]
    assert replay == target
