"""
Suite de Testing para el Retículo de Subgrupos Normales
=======================================================

Valida:
- Orden parcial de los 7 nodos: leq, join, meet, coberturas y aristas K*/simples
- Documento del diagrama y salida DOT (5 aristas gruesas)
- Descriptores canónicos: nodos con nombre, orden, join, colapsos sobre GF(2)
- classify_minimal_node sobre todas las presentaciones
- normal_closure: Central / Sandwich / Full con testigo de transvección
- descriptor_contains y predicted_window_set contra GL(2, 3) enumerado
"""

from dataclasses import dataclass
from itertools import product
from typing import Callable

import pytest

from cf_lattice.algebra.field import FieldSpec
from cf_lattice.algebra.unit_groups import PairSubgroup, UnitSubgroup
from cf_lattice.lattice.classification import (
    classify_minimal_node,
    descriptor_contains,
    normal_closure,
    predicted_window_set,
    quotient_image,
)
from cf_lattice.lattice.descriptors import (
    DescriptorVariant,
    NormalSubgroupDescriptor,
    descriptor_join,
    node_of_descriptor,
)
from cf_lattice.lattice.nodes import (
    HASSE_EDGES,
    EdgeKind,
    LatticeNode,
    check_partial_order,
    covers,
    edge_kind,
    join,
    lattice_graph,
    leq,
    meet,
    quotient_type,
)
from cf_lattice.matrices.finitary import FinitaryMatrix, ScaledFinitary
from cf_lattice.matrices.strings import StringMatrix
from cf_lattice.matrices.triangular import UpperTriangularOracle
from cf_lattice.matrices.words import GroupWord
from cf_lattice.models.errors import FieldMismatch, InvalidMatrix, NotInProduct, Undecidable
from cf_lattice.verify.oracles import enumerate_gl, to_dense


# ========== CONFIGURACIÓN ==========

@dataclass
class ClassifyCase:
    """Elemento sobre ℚ y su nodo mínimo esperado"""
    build: Callable[[FieldSpec], object]
    expected: LatticeNode
    description: str = ""


@dataclass
class ClosureCase:
    """Generadores sobre ℚ y el descriptor esperado de su clausura normal"""
    gens: Callable[[FieldSpec], list]
    expected: Callable[[FieldSpec], NormalSubgroupDescriptor]
    description: str = ""


def _scaled(q, alpha, g):
    return ScaledFinitary(q.element(alpha), g)


def _certified_identity(q):
    u = UpperTriangularOracle.from_rule(q, "full_upper", [1])
    return GroupWord.of(q, u, (u, True)).with_tail(1, 0)


# ========== TEST CASES ==========

CLASSIFY_CASES = [
    ClassifyCase(lambda q: FinitaryMatrix.identity(q), LatticeNode.TRIVIAL, "identidad"),
    ClassifyCase(lambda q: ScaledFinitary.scalar_matrix(q, 3), LatticeNode.DSC, "3·E"),
    ClassifyCase(lambda q: FinitaryMatrix.elementary(q, 0, 1), LatticeNode.SLFR, "transvección"),
    ClassifyCase(lambda q: FinitaryMatrix.diagonal(q, [2]), LatticeNode.GLFR, "diag(2)"),
    ClassifyCase(lambda q: _scaled(q, 3, FinitaryMatrix.elementary(q, 0, 1)), LatticeNode.DSC_SLFR, "3·transvección"),
    ClassifyCase(lambda q: _scaled(q, 3, FinitaryMatrix.diagonal(q, [2])), LatticeNode.DSC_GLFR, "3·diag(2)"),
    ClassifyCase(lambda q: StringMatrix.from_values(q, [], periodic=[[0, 1], [1, 0]]), LatticeNode.GLCF,
                 "string con cola no escalar"),
    ClassifyCase(lambda q: StringMatrix.from_values(q, [], periodic=[[2]]), LatticeNode.DSC, "string 2·E"),
    ClassifyCase(lambda q: StringMatrix.from_values(q, [[[0, 1], [1, 0]]]), LatticeNode.GLFR,
                 "string finitario con det −1"),
    ClassifyCase(lambda q: StringMatrix.from_values(q, [[[3, 3], [0, 3]]], periodic=[[3]]), LatticeNode.DSC_SLFR,
                 "string 3·transvección"),
    ClassifyCase(lambda q: UpperTriangularOracle.from_rule(q, "jordan", [2]), LatticeNode.GLCF, "bloque de Jordan"),
    ClassifyCase(lambda q: UpperTriangularOracle.from_prefix(q, [[2, 1], [0, 1]]), LatticeNode.GLFR,
                 "prefijo triangular"),
    ClassifyCase(_certified_identity, LatticeNode.TRIVIAL, "palabra certificada"),
]

CLOSURE_CASES = [
    ClosureCase(lambda q: [ScaledFinitary.scalar_matrix(q, 2)],
                lambda q: NormalSubgroupDescriptor.central(UnitSubgroup.generated_by(q, [2])), "2·E"),
    ClosureCase(lambda q: [FinitaryMatrix.elementary(q, 0, 1)],
                lambda q: NormalSubgroupDescriptor.for_node(LatticeNode.SLFR, q), "transvección"),
    ClosureCase(lambda q: [FinitaryMatrix.elementary(q, 0, 1), ScaledFinitary.scalar_matrix(q, 2)],
                lambda q: NormalSubgroupDescriptor.sandwich(PairSubgroup.generated_by(q, [(2, 1)])),
                "transvección y 2·E"),
    ClosureCase(lambda q: [FinitaryMatrix.diagonal(q, [2])],
                lambda q: NormalSubgroupDescriptor.sandwich(PairSubgroup.generated_by(q, [(1, 2)])), "diag(2)"),
    ClosureCase(lambda q: [ScaledFinitary.scalar_matrix(q, 4), ScaledFinitary.scalar_matrix(q, 2)],
                lambda q: NormalSubgroupDescriptor.central(UnitSubgroup.generated_by(q, [2])), "⟨4, 2⟩ = ⟨2⟩"),
    ClosureCase(lambda q: [FinitaryMatrix.diagonal(q, [2]), StringMatrix.from_values(q, [], periodic=[[0, 1], [1, 0]])],
                lambda q: NormalSubgroupDescriptor.full(q), "generador fuera del producto"),
    ClosureCase(lambda q: [], lambda q: NormalSubgroupDescriptor.for_node(LatticeNode.TRIVIAL, q), "sin generadores"),
]


# ========== NODOS ==========

def test_partial_order_is_consistent():
    assert check_partial_order() == []


def test_order_examples():
    assert leq(LatticeNode.TRIVIAL, LatticeNode.GLCF)
    assert leq(LatticeNode.SLFR, LatticeNode.DSC_GLFR)
    assert not leq(LatticeNode.DSC, LatticeNode.GLFR)
    assert not leq(LatticeNode.GLFR, LatticeNode.DSC_SLFR)


def test_join_and_meet():
    assert join(LatticeNode.GLFR, LatticeNode.DSC_SLFR) is LatticeNode.DSC_GLFR
    assert join(LatticeNode.DSC, LatticeNode.SLFR) is LatticeNode.DSC_SLFR
    assert meet(LatticeNode.GLFR, LatticeNode.DSC_SLFR) is LatticeNode.SLFR
    assert meet(LatticeNode.DSC, LatticeNode.SLFR) is LatticeNode.TRIVIAL


def test_edges_and_quotients():
    assert len(HASSE_EDGES) == 8
    assert sum(kind is EdgeKind.THICK for _, _, kind in HASSE_EDGES) == 5
    assert covers(LatticeNode.SLFR, LatticeNode.GLFR)
    assert not covers(LatticeNode.TRIVIAL, LatticeNode.GLFR)
    assert quotient_type(LatticeNode.TRIVIAL, LatticeNode.DSC) == "K*"
    assert quotient_type(LatticeNode.DSC_GLFR, LatticeNode.GLCF) == "simple"
    assert edge_kind(LatticeNode.SLFR, LatticeNode.TRIVIAL) is EdgeKind.THIN
    with pytest.raises(KeyError):
        edge_kind(LatticeNode.TRIVIAL, LatticeNode.GLCF)


def test_dot_output():
    graph = lattice_graph()
    assert len(graph.nodes) == 7 and len(graph.edges) == 8
    dot = graph.to_dot()
    assert dot.startswith("/*")
    assert dot.count("style=bold") == 5
    assert dot.count(" -- ") == 8
    assert "DscGLfr -- GLcf;" in dot
    assert 'label="D_sc×GL_fr"' in graph.to_dot(labels="paper")
    with pytest.raises(ValueError):
        graph.to_dot(labels="latex")


def test_graph_document():
    document = lattice_graph().model_dump(mode="json")
    assert document["nodes"][0] == "Trivial"
    assert {"low": "Trivial", "high": "Dsc", "kind": "thick"} in document["edges"]


# ========== DESCRIPTORES ==========

@pytest.mark.parametrize("field", ["Q", "F5"])
def test_named_descriptors_round_trip(field):
    spec = FieldSpec.parse(field)
    for node in LatticeNode:
        assert node_of_descriptor(NormalSubgroupDescriptor.for_node(node, spec)) is node


@pytest.mark.parametrize("field", ["Q", "F5"])
def test_descriptor_order_matches_node_order(field):
    spec = FieldSpec.parse(field)
    for a, b in product(LatticeNode, repeat=2):
        da, db = NormalSubgroupDescriptor.for_node(a, spec), NormalSubgroupDescriptor.for_node(b, spec)
        assert (da <= db) is leq(a, b), f"{a.value} ≤ {b.value}"
        assert node_of_descriptor(descriptor_join(da, db)) is join(a, b)


def test_nodes_collapse_over_two_elements(f2):
    dsc = NormalSubgroupDescriptor.for_node(LatticeNode.DSC, f2)
    assert dsc == NormalSubgroupDescriptor.for_node(LatticeNode.TRIVIAL, f2)
    assert node_of_descriptor(dsc) is LatticeNode.TRIVIAL
    glfr = NormalSubgroupDescriptor.for_node(LatticeNode.GLFR, f2)
    assert glfr == NormalSubgroupDescriptor.for_node(LatticeNode.SLFR, f2)
    assert node_of_descriptor(NormalSubgroupDescriptor.for_node(LatticeNode.DSC_GLFR, f2)) is LatticeNode.SLFR


def test_intermediate_descriptors(q):
    two = NormalSubgroupDescriptor.central(UnitSubgroup.generated_by(q, [2]))
    assert node_of_descriptor(two) is None
    assert two <= NormalSubgroupDescriptor.for_node(LatticeNode.DSC_SLFR, q)
    assert not two <= NormalSubgroupDescriptor.for_node(LatticeNode.SLFR, q)
    joined = descriptor_join(two, NormalSubgroupDescriptor.central(UnitSubgroup.generated_by(q, [3])))
    assert joined == NormalSubgroupDescriptor.central(UnitSubgroup.generated_by(q, [6, 3]))
    sandwich = descriptor_join(two, NormalSubgroupDescriptor.for_node(LatticeNode.SLFR, q))
    assert sandwich.variant is DescriptorVariant.SANDWICH
    assert sandwich == NormalSubgroupDescriptor.sandwich(PairSubgroup.generated_by(q, [(2, 1)]))


def test_descriptor_validation(q, f5):
    with pytest.raises(InvalidMatrix):
        NormalSubgroupDescriptor(DescriptorVariant.CENTRAL, q)
    with pytest.raises(InvalidMatrix):
        NormalSubgroupDescriptor(DescriptorVariant.FULL, q, unit=UnitSubgroup.trivial(q))
    with pytest.raises(FieldMismatch):
        NormalSubgroupDescriptor.for_node(LatticeNode.DSC, q) <= NormalSubgroupDescriptor.full(f5)


# ========== CLASIFICACIÓN ==========

@pytest.mark.parametrize("case", CLASSIFY_CASES, ids=lambda c: c.description)
def test_classify_minimal_node(q, case: ClassifyCase):
    assert classify_minimal_node(case.build(q)) is case.expected


def test_classify_undecidable_word(q):
    u = UpperTriangularOracle.from_rule(q, "full_upper", [1])
    with pytest.raises(Undecidable):
        classify_minimal_node(GroupWord.of(q, u, (u, True)))


def test_quotient_image(q):
    alpha, delta = quotient_image(_scaled(q, 3, FinitaryMatrix.diagonal(q, [2])))
    assert (alpha, delta) == (3, 2)
    with pytest.raises(NotInProduct):
        quotient_image(UpperTriangularOracle.from_rule(q, "jordan", [2]))


# ========== CLAUSURA NORMAL ==========

@pytest.mark.parametrize("case", CLOSURE_CASES, ids=lambda c: c.description)
def test_normal_closure(q, case: ClosureCase):
    assert normal_closure(case.gens(q), spec=q) == case.expected(q)


def test_closure_attaches_witness(q):
    closure = normal_closure([FinitaryMatrix.diagonal(q, [2])], attach_witness=True)
    assert closure.witness is not None
    assert closure.witness.target.is_transvection()
    assert normal_closure([FinitaryMatrix.diagonal(q, [2])], attach_witness=False).witness is None
    assert normal_closure([ScaledFinitary.scalar_matrix(q, 2)]).witness is None


def test_closure_over_prime_field(f2, f5):
    assert node_of_descriptor(normal_closure([FinitaryMatrix.elementary(f2, 0, 1)])) is LatticeNode.SLFR
    closure = normal_closure([FinitaryMatrix.diagonal(f5, [2])])
    assert node_of_descriptor(closure) is LatticeNode.GLFR


def test_closure_rejects_mixed_fields(q, f5):
    with pytest.raises(FieldMismatch):
        normal_closure([FinitaryMatrix.elementary(f5, 0, 1)], spec=q)


# ========== PERTENENCIA ==========

def test_descriptor_contains(q):
    two = NormalSubgroupDescriptor.central(UnitSubgroup.generated_by(q, [2]))
    assert descriptor_contains(two, ScaledFinitary.scalar_matrix(q, 8))
    assert not descriptor_contains(two, ScaledFinitary.scalar_matrix(q, 3))
    assert not descriptor_contains(two, FinitaryMatrix.elementary(q, 0, 1))

    glfr = NormalSubgroupDescriptor.for_node(LatticeNode.GLFR, q)
    assert descriptor_contains(glfr, FinitaryMatrix.diagonal(q, [7]))
    assert not descriptor_contains(glfr, ScaledFinitary.scalar_matrix(q, 7))
    gl_cf = StringMatrix.from_values(q, [], periodic=[[0, 1], [1, 0]])
    assert not descriptor_contains(glfr, gl_cf)
    assert descriptor_contains(NormalSubgroupDescriptor.full(q), gl_cf)


def test_predicted_window_set(f3):
    ambient = [to_dense(m, f3) for m in enumerate_gl(2, 3)]
    assert len(ambient) == 48
    assert len(predicted_window_set(NormalSubgroupDescriptor.for_node(LatticeNode.SLFR, f3), ambient)) == 24
    assert len(predicted_window_set(NormalSubgroupDescriptor.for_node(LatticeNode.GLFR, f3), ambient)) == 48
    assert len(predicted_window_set(NormalSubgroupDescriptor.for_node(LatticeNode.DSC, f3), ambient)) == 1
