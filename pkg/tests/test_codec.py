"""
Suite de Testing para el Codec de Documentos
============================================

Valida:
- parse_element para cada tipo de documento (finitary, scaled, string, triangular, word)
- Cabecera de cuerpo: declarada en el documento o tomada por defecto
- DocumentError con línea/columna (JSON) o ubicación (validación)
- Descriptores y testigos: ida y vuelta a través del texto JSON
"""

import json
from dataclasses import dataclass

import pytest

from cf_lattice.algebra.unit_groups import PairSubgroup, UnitSubgroup
from cf_lattice.documents.codec import (
    descriptor_to_document,
    dump_document,
    element_to_document,
    load_element,
    parse_descriptor,
    parse_element,
    parse_witness,
    witness_to_document,
    write_document,
)
from cf_lattice.lattice.classification import classify_minimal_node, normal_closure
from cf_lattice.lattice.descriptors import NormalSubgroupDescriptor
from cf_lattice.lattice.nodes import LatticeNode
from cf_lattice.matrices.finitary import FinitaryMatrix, ScaledFinitary
from cf_lattice.matrices.strings import StringMatrix
from cf_lattice.matrices.triangular import BandedRule, UpperTriangularOracle
from cf_lattice.matrices.words import GroupWord
from cf_lattice.models.errors import DocumentError
from cf_lattice.procedures.transvections import transvection_witness, verify_witness


# ========== CONFIGURACIÓN ==========

@dataclass
class DocumentCase:
    """Documento JSON y el nodo mínimo del elemento que describe"""
    document: dict
    expected: LatticeNode
    description: str = ""


@dataclass
class BadDocumentCase:
    """Documento inválido y un fragmento esperado en el mensaje"""
    text: str
    fragment: str
    description: str = ""


# ========== TEST CASES ==========

DOCUMENT_CASES = [
    DocumentCase({"kind": "finitary", "entries": [[0, 1, "1"]]}, LatticeNode.SLFR, "transvección"),
    DocumentCase({"kind": "finitary"}, LatticeNode.TRIVIAL, "identidad sin entradas"),
    DocumentCase({"kind": "scaled", "scalar": "3", "entries": [[0, 0, 1]]}, LatticeNode.DSC_GLFR, "3·diag(2)"),
    DocumentCase({"kind": "string", "blocks": [[[0, 1], [1, 0]]]}, LatticeNode.GLFR, "string con cola identidad"),
    DocumentCase({"kind": "string", "tail": {"kind": "periodic", "block": [[0, 1], [1, 0]]}}, LatticeNode.GLCF,
                 "cola periódica no escalar"),
    DocumentCase({"kind": "triangular", "prefix": [["1", "1/2"], ["0", "1"]]}, LatticeNode.SLFR, "prefijo"),
    DocumentCase({"kind": "triangular", "rule": "jordan", "params": ["2"]}, LatticeNode.GLCF, "regla jordan"),
    DocumentCase({"kind": "triangular", "rule": "constant_band", "params": [5, 0], "bandwidth": 0}, LatticeNode.DSC,
                 "banda diagonal"),
    DocumentCase(
        {
            "kind": "word",
            "letters": [
                {"element": {"kind": "finitary", "entries": [[0, 1, "1"]]}},
                {"element": {"kind": "finitary", "entries": [[0, 1, "1"]]}, "inverse": True},
            ],
        },
        LatticeNode.TRIVIAL,
        "palabra t·t⁻¹",
    ),
    DocumentCase(
        {
            "kind": "word",
            "letters": [
                {"element": {"kind": "triangular", "rule": "full_upper", "params": [1]}},
                {"element": {"kind": "triangular", "rule": "full_upper", "params": [1]}, "inverse": True},
            ],
            "tail": {"scalar": "1", "window": 0},
        },
        LatticeNode.TRIVIAL,
        "palabra con certificado de cola",
    ),
    DocumentCase({"field": "Fp", "p": 5, "kind": "scaled", "scalar": 4}, LatticeNode.DSC, "escalar en GF(5)"),
]

BAD_DOCUMENTS = [
    BadDocumentCase('{"kind": "finitary", "entries": [[0, 1, "1"]],}', "g.json:1:", "JSON inválido"),
    BadDocumentCase('{"kind": "matrix"}', "kind", "tipo desconocido"),
    BadDocumentCase('{"kind": "finitary", "extra": 1}', "extra", "campo desconocido"),
    BadDocumentCase('{"kind": "finitary", "entries": [[0, 0, "-1"]]}', "invertible", "esquina singular"),
    BadDocumentCase('{"kind": "finitary", "field": "F4"}', "GF(4)", "módulo no primo"),
    BadDocumentCase('{"kind": "finitary", "field": "R"}', "desconocido", "cuerpo desconocido"),
    BadDocumentCase('{"kind": "triangular", "prefix": [[1]], "rule": "jordan", "params": [1]}', "exactamente uno",
                    "prefijo y regla a la vez"),
    BadDocumentCase('{"kind": "triangular", "rule": "toeplitz"}', "toeplitz", "regla desconocida"),
    BadDocumentCase('{"kind": "finitary", "entries": [[0, 1, "x/y"]]}', "x/y", "escalar ilegible"),
]


# ========== ELEMENTOS ==========

@pytest.mark.parametrize("case", DOCUMENT_CASES, ids=lambda c: c.description)
def test_parse_element_documents(q, case: DocumentCase):
    g = parse_element(json.dumps(case.document), default_spec=q)
    assert classify_minimal_node(g) is case.expected


@pytest.mark.parametrize("case", BAD_DOCUMENTS, ids=lambda c: c.description)
def test_bad_documents(case: BadDocumentCase):
    with pytest.raises(DocumentError) as info:
        parse_element(case.text, source="g.json")
    assert case.fragment in str(info.value)
    assert str(info.value).startswith("g.json")


def test_json_error_position():
    with pytest.raises(DocumentError) as info:
        parse_element('{\n  "kind": "finitary",\n  "entries": [[0, 1, "1"]],\n}')
    assert info.value.line == 4


def test_field_header(q, f7):
    text = '{"kind": "finitary", "entries": [[0, 1, "3"]]}'
    assert parse_element(text).spec is q
    assert parse_element(text, default_spec=f7).spec is f7
    assert parse_element('{"field": "GF(7)", "kind": "finitary"}', default_spec=q).spec is f7


def test_letter_field_must_match(q):
    text = json.dumps({
        "kind": "word",
        "letters": [{"element": {"field": "F5", "kind": "finitary", "entries": [[0, 1, 1]]}}],
    })
    with pytest.raises(DocumentError):
        parse_element(text, default_spec=q)


def test_element_round_trip(q, f5):
    elements = [
        FinitaryMatrix.diagonal(q, ["2/3", 5]),
        ScaledFinitary(f5.element(3), FinitaryMatrix.elementary(f5, 0, 2, 4)),
        StringMatrix.from_values(q, [[[1, 2], [0, 1]]], periodic=[[-1]]),
        UpperTriangularOracle.from_rule(q, "geometric", ["1/2"], 3),
        GroupWord.of(q, FinitaryMatrix.swap(q, 0, 1), (StringMatrix.from_values(q, [[[2]]]), True)).with_tail(1, 2),
    ]
    for g in elements:
        again = parse_element(dump_document(element_to_document(g)))
        assert again.spec is g.spec
        assert element_to_document(again) == element_to_document(g)


def test_element_document_header(f5):
    doc = element_to_document(FinitaryMatrix.elementary(f5, 0, 1))
    assert (doc.field, doc.p, doc.kind) == ("Fp", 5, "finitary")
    assert doc.entries == [(0, 1, "1")]


def test_custom_rule_is_not_serializable(q):
    u = UpperTriangularOracle(q, BandedRule.custom_rule("diagonal", 0, lambda i, j: q.one))
    with pytest.raises(DocumentError):
        element_to_document(u)


def test_load_element_from_file(tmp_path, q):
    path = tmp_path / "g.json"
    write_document(element_to_document(FinitaryMatrix.diagonal(q, [2])), path)
    assert load_element(path) == FinitaryMatrix.diagonal(q, [2])
    with pytest.raises(DocumentError):
        load_element(tmp_path / "missing.json")


# ========== DESCRIPTORES ==========

def test_descriptor_document(q):
    doc = descriptor_to_document(NormalSubgroupDescriptor.central(UnitSubgroup.generated_by(q, [2])))
    assert doc.variant == "central" and doc.gens == ["2"]
    assert doc.node is None
    assert descriptor_to_document(NormalSubgroupDescriptor.for_node(LatticeNode.GLFR, q)).node == "GLfr"


def test_descriptor_round_trip(q, f5):
    descriptors = [
        NormalSubgroupDescriptor.central(UnitSubgroup.generated_by(q, ["2/3", -1])),
        NormalSubgroupDescriptor.sandwich(PairSubgroup.generated_by(q, [(2, 1), (1, 3)])),
        NormalSubgroupDescriptor.for_node(LatticeNode.DSC_GLFR, q),
        NormalSubgroupDescriptor.for_node(LatticeNode.GLFR, f5),
        NormalSubgroupDescriptor.full(f5),
    ]
    for d in descriptors:
        assert parse_descriptor(dump_document(descriptor_to_document(d))) == d


def test_descriptor_with_witness(q):
    closure = normal_closure([FinitaryMatrix.diagonal(q, [2])])
    doc = descriptor_to_document(closure, include_witness=True)
    assert doc.witness is not None
    again = parse_descriptor(dump_document(doc))
    assert again == closure
    assert verify_witness(again.witness).valid


def test_descriptor_generator_shapes():
    with pytest.raises(DocumentError):
        parse_descriptor('{"variant": "central", "gens": [["1", "2"]]}')
    with pytest.raises(DocumentError):
        parse_descriptor('{"variant": "sandwich", "gens": ["2"]}')
    with pytest.raises(DocumentError):
        parse_descriptor('{"variant": "central", "gens": ["0"]}')


# ========== TESTIGOS ==========

def test_witness_round_trip(q):
    witness = transvection_witness(ScaledFinitary(q.element(3), FinitaryMatrix.swap(q, 0, 1)))
    again = parse_witness(dump_document(witness_to_document(witness)))
    assert again.target == witness.target
    assert again.strategy == witness.strategy
    assert verify_witness(again).valid


def test_witness_document_rejects_bad_exponent(q):
    document = witness_to_document(transvection_witness(FinitaryMatrix.diagonal(q, [2]))).model_dump(mode="json")
    document["word"][0]["exponent"] = 2
    with pytest.raises(DocumentError) as info:
        parse_witness(json.dumps(document))
    assert "exponent" in str(info.value)
