"""
Suite de Testing para Representaciones de Matrices
==================================================

Valida:
- FinitaryMatrix: forma normal, ventana mínima, producto, inversa, determinante
- ScaledFinitary: α·h con α central
- StringMatrix: forma, cobertura mínima, columnas, inversa bloque a bloque, cola escalar
- UpperTriangularOracle: prefijos, reglas de banda, sustitución hacia atrás
- GroupWord: evaluación por columnas, proyección de ventana, análisis de cola, certificados
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional

import pytest
from hypothesis import given

from cf_lattice.matrices.dense import dense_from_values, dense_pad, identity_dense
from cf_lattice.matrices.finitary import FinitaryMatrix, ScaledFinitary, corner_det, embed_window, finitary_mul
from cf_lattice.matrices.strings import StringMatrix
from cf_lattice.matrices.triangular import UpperTriangularOracle, banded_rule
from cf_lattice.matrices.words import GroupWord, check_tail_certificate, column_eval, tail_split, window_project
from cf_lattice.models.errors import CertificationFailed, FieldMismatch, InvalidMatrix, NotInProduct
from tests.strategies import Q, finitary_matrices


# ========== CONFIGURACIÓN ==========

@dataclass
class RuleCase:
    """Regla de banda con parámetros y una columna esperada"""
    name: str
    params: tuple
    bandwidth: Optional[int]
    column: int
    expected: Dict[int, str]
    description: str = ""


def _text(column):
    return {i: str(v) for i, v in column.items()}


# ========== TEST CASES ==========

RULE_CASES = [
    RuleCase("jordan", (2,), None, 3, {2: "1", 3: "2"}, "bloque de Jordan"),
    RuleCase("bidiagonal", (1, -1), None, 1, {0: "-1", 1: "1"}, "bidiagonal"),
    RuleCase("constant_band", (1, 3), 2, 3, {1: "3", 2: "3", 3: "1"}, "banda constante de ancho 2"),
    RuleCase("geometric", (2,), 2, 2, {0: "4", 1: "2", 2: "1"}, "banda geométrica"),
    RuleCase("full_upper", (5,), None, 2, {0: "5", 1: "5", 2: "1"}, "triangular completa"),
]


# ========== FINITARIAS ==========

def test_normal_form_drops_zeros(q):
    g = FinitaryMatrix(q, ((2, 0, q.element(0)), (0, 1, q.element(3)), (0, 1, q.element(1))))
    assert g.deltas == ((0, 1, q.element(1)),)
    assert g.window == 2
    assert FinitaryMatrix.identity(q).window == 0


def test_entries_and_columns(q, fin):
    g = fin(q, {(0, 1): 2, (1, 1): 1})
    assert g.entry(0, 1) == 2 and g.entry(1, 1) == 2 and g.entry(5, 5) == 1
    assert _text(g.column(1)) == {0: "2", 1: "2"}
    assert g.column(7) == {7: q.one}
    assert g.rows_support() == 2


def test_product_and_inverse(q):
    t = FinitaryMatrix.elementary(q, 0, 1, 1)
    assert (t * t.inverse()).is_identity()
    assert (t ** 3) == FinitaryMatrix.elementary(q, 0, 1, 3)
    assert (t ** -2) == FinitaryMatrix.elementary(q, 0, 1, -2)
    assert finitary_mul(FinitaryMatrix.diagonal(q, [2]), FinitaryMatrix.diagonal(q, [3])).deltas == ((0, 0, q.element(5)),)


def test_window_is_reminimized(q):
    a = FinitaryMatrix.elementary(q, 0, 3, 1)
    assert a.window == 4
    assert (a * a.inverse()).window == 0
    assert FinitaryMatrix.from_corner(identity_dense(q, 3), q).is_identity()


def test_transvection_data(q, fin):
    assert FinitaryMatrix.elementary(q, 2, 0, "1/2").transvection_data() == (2, 0, q.element("1/2"))
    assert fin(q, {(0, 0): 1}).transvection_data() is None
    assert not FinitaryMatrix.identity(q).is_transvection()


def test_permutations(q):
    s = FinitaryMatrix.swap(q, 0, 2)
    assert s.window == 3
    assert (s * s).is_identity()
    assert corner_det(s) == -1
    cycle = FinitaryMatrix.permutation(q, [1, 2, 0])
    assert (cycle ** 3).is_identity()
    assert cycle.column(0) == {1: q.one}


def test_corner_determinant(q):
    assert corner_det(FinitaryMatrix.diagonal(q, [2, 3])) == 6
    assert corner_det(FinitaryMatrix.identity(q)) == 1
    assert corner_det(FinitaryMatrix.elementary(q, 0, 1, 7)) == 1


def test_invalid_finitary_matrices(q, f5):
    with pytest.raises(InvalidMatrix):
        FinitaryMatrix.elementary(q, 1, 1)
    with pytest.raises(InvalidMatrix):
        FinitaryMatrix.elementary(q, 0, 1, 0)
    with pytest.raises(InvalidMatrix):
        FinitaryMatrix(q, ((-1, 0, q.one),))
    with pytest.raises(InvalidMatrix):
        FinitaryMatrix.from_deltas(q, {(0, 0): -1})
    with pytest.raises(InvalidMatrix):
        FinitaryMatrix.permutation(q, [0, 0])
    with pytest.raises(FieldMismatch):
        FinitaryMatrix.elementary(q, 0, 1) * FinitaryMatrix.elementary(f5, 0, 1)


def test_embedding(q):
    g = FinitaryMatrix.diagonal(q, [2, 3])
    assert embed_window(g, 3) == dense_pad(g.corner(), 3, q)
    assert embed_window(g, 3) == g.corner(3)
    with pytest.raises(InvalidMatrix):
        embed_window(g, 1)


@given(finitary_matrices(Q), finitary_matrices(Q), finitary_matrices(Q))
def test_group_laws(g, h, k):
    assert (g * h) * k == g * (h * k)
    assert (g * g.inverse()).is_identity()
    assert corner_det(g * h) == corner_det(g) * corner_det(h)


# ========== ESCALADAS ==========

def test_scaled_arithmetic(q, scaled):
    a = scaled(q, 3, {(0, 1): 1})
    b = scaled(q, "1/3", {(0, 1): -1})
    assert (a * b) == ScaledFinitary.scalar_matrix(q, 1)
    assert a.inverse() == b
    assert _text(a.column(1)) == {0: "3", 1: "3"}
    assert a.window == 2
    assert ScaledFinitary.scalar_matrix(q, 2).is_scalar()
    assert not a.is_finitary() and a.body.to_scaled().is_finitary()
    assert a.corner() == tuple(tuple(a.scalar * v for v in row) for row in a.body.corner())


def test_scaled_requires_unit(q, f5):
    with pytest.raises(InvalidMatrix):
        ScaledFinitary(q.zero, FinitaryMatrix.identity(q))
    with pytest.raises(FieldMismatch):
        ScaledFinitary(f5.one, FinitaryMatrix.identity(q))


# ========== STRINGS ==========

def test_string_shape(q):
    s = StringMatrix.from_values(q, [[[0, 1], [1, 0]]])
    assert list(s.shape_prefix(3)) == [2, 1, 1]
    assert s.minimal_cover(1) == (1, 2)
    assert s.minimal_cover(3) == (2, 3)
    assert s.column(0) == {1: q.one}
    assert s.column(5) == {5: q.one}


def test_string_periodic_tail_columns(q):
    s = StringMatrix.from_values(q, [[[3]]], periodic=[[1, 1], [0, 1]])
    assert list(s.shape_prefix(4)) == [1, 2, 2, 2]
    assert s.block_containing(4)[0] == 3
    assert _text(s.column(4)) == {3: "1", 4: "1"}
    assert _text(s.inverse().column(4)) == {3: "-1", 4: "1"}
    assert s.minimal_cover(4) == (3, 5)


def test_string_inverse(q):
    s = StringMatrix.from_values(q, [[[2]]])
    assert s.inverse().blocks[0][0][0] == Fraction(1, 2)
    word = GroupWord.of(q, s, (s, True))
    assert all(column_eval(word, j) == {j: q.one} for j in range(4))


def test_string_scalar_tail(q):
    s = StringMatrix.from_values(q, [[[3]]], periodic=[[2]])
    product = s.to_scaled_finitary()
    assert product.scalar == 2
    assert product.body.entry(0, 0) == Fraction(3, 2)
    assert StringMatrix.from_values(q, [], periodic=[[5]]).to_scaled_finitary().is_scalar()


def test_string_non_scalar_tail(q):
    s = StringMatrix.from_values(q, [], periodic=[[0, 1], [1, 0]])
    assert s.tail_scalar() is None
    with pytest.raises(NotInProduct):
        s.to_scaled_finitary()


def test_invalid_strings(q):
    with pytest.raises(InvalidMatrix):
        StringMatrix.from_values(q, [[[1, 1], [1, 1]]])
    with pytest.raises(InvalidMatrix):
        StringMatrix.from_values(q, [[[1, 1]]])
    with pytest.raises(InvalidMatrix):
        StringMatrix.from_values(q, [], periodic=[[0]])


# ========== TRIANGULARES ==========

def test_prefix_inverse_column(q):
    u = UpperTriangularOracle.from_prefix(q, [[1, 1], [0, 1]])
    assert _text(u.inverse_column(1)) == {0: "-1", 1: "1"}
    assert u.inverse_column(5) == {5: q.one}
    assert u.window_bound(1) == 2 and u.window_bound(4) == 4
    assert u.bandwidth == 1


@pytest.mark.parametrize("case", RULE_CASES, ids=lambda c: c.description)
def test_banded_rule_columns(q, case: RuleCase):
    u = UpperTriangularOracle.from_rule(q, case.name, case.params, case.bandwidth)
    assert _text(u.column(case.column)) == case.expected
    word = GroupWord.of(q, (u, True), u)
    assert all(column_eval(word, j) == {j: q.one} for j in range(6))


def test_jordan_inverse(q):
    u = UpperTriangularOracle.from_rule(q, "jordan", [2])
    assert _text(u.inverse_column(1)) == {0: "-1/4", 1: "1/2"}
    assert u.window_bound(4) == 5
    assert u.toeplitz_is_scalar() is None


def test_diagonal_rules_are_scalar(q):
    assert UpperTriangularOracle.from_rule(q, "constant_band", [3, 5], 0).toeplitz_is_scalar() == 3
    assert UpperTriangularOracle.from_rule(q, "geometric", [7], 0).toeplitz_is_scalar() == 1
    full = UpperTriangularOracle.from_rule(q, "full_upper", [1])
    assert full.window_bound(3) is None
    assert full.boundary() is None


def test_invalid_triangular(q):
    with pytest.raises(InvalidMatrix):
        UpperTriangularOracle.from_prefix(q, [[1, 0], [1, 1]])
    with pytest.raises(InvalidMatrix):
        UpperTriangularOracle.from_prefix(q, [[0, 1], [0, 1]])
    with pytest.raises(InvalidMatrix):
        banded_rule(q, "constant_band", [1, 1])
    with pytest.raises(InvalidMatrix):
        banded_rule(q, "bidiagonal", [0, 1])
    with pytest.raises(InvalidMatrix):
        banded_rule(q, "jordan", [1, 2])
    with pytest.raises(InvalidMatrix):
        banded_rule(q, "toeplitz", [1])


# ========== PALABRAS ==========

def test_window_projection(q):
    w = GroupWord.of(q, FinitaryMatrix.elementary(q, 0, 1), FinitaryMatrix.elementary(q, 1, 0))
    assert [[str(v) for v in row] for row in window_project(w, 2)] == [["2", "1"], ["1", "1"]]
    t = FinitaryMatrix.elementary(q, 0, 1)
    assert window_project(GroupWord.of(q, t, (t, True)), 2) == identity_dense(q, 2)
    with pytest.raises(ValueError):
        window_project(w, 0)


def test_word_algebra(q):
    a = FinitaryMatrix.elementary(q, 0, 1, 2)
    b = StringMatrix.from_values(q, [[[0, 1], [1, 0]]])
    w = GroupWord.of(q, a, b)
    assert len(w) == 2 and len(w * w.inverse()) == 4
    identity = w * w.inverse()
    assert all(column_eval(identity, j) == {j: q.one} for j in range(4))


def test_probe_log_counts_columns(q):
    t = FinitaryMatrix.elementary(q, 0, 1)
    log = Counter()
    column_eval(GroupWord.of(q, t, t), 1, probe_log=log)
    assert log[1] == 1 and log[0] == 2


def test_word_rejects_mixed_fields(q, f5):
    with pytest.raises(FieldMismatch):
        GroupWord.of(q, FinitaryMatrix.elementary(f5, 0, 1))


def test_tail_split_scalar(q):
    w = GroupWord.of(q, StringMatrix.from_values(q, [], periodic=[[2]]), FinitaryMatrix.diagonal(q, [3]))
    split = tail_split(w)
    assert split.window == 1 and split.period == 1
    assert split.corner == dense_from_values(q, [[6]])
    assert split.block == dense_from_values(q, [[2]])


def test_tail_split_aligns_periods(q):
    s = StringMatrix.from_values(q, [[[1]]], periodic=[[1, 1], [0, 1]])
    w = GroupWord.of(q, s, FinitaryMatrix.elementary(q, 0, 1))
    split = tail_split(w)
    assert split.window == 3 and split.period == 2


def test_tail_split_unbounded_letter(q):
    u = UpperTriangularOracle.from_rule(q, "full_upper", [1])
    assert tail_split(GroupWord.of(q, u, (u, True))) is None


def test_tail_certificate(q):
    u = UpperTriangularOracle.from_rule(q, "full_upper", [1])
    good = GroupWord.of(q, u, (u, True)).with_tail(1, 0)
    assert check_tail_certificate(good) == ()

    bad = GroupWord.of(q, u).with_tail(1, 2)
    with pytest.raises(CertificationFailed):
        check_tail_certificate(bad)
    with pytest.raises(CertificationFailed):
        check_tail_certificate(GroupWord.of(q, u))


@given(finitary_matrices(Q, max_window=3), finitary_matrices(Q, max_window=3))
def test_word_evaluation_matches_product(g, h):
    n = max(g.window, h.window, 1)
    assert window_project(GroupWord.of(Q, g, h), n) == (g * h).corner(n)
