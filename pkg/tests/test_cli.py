"""
Suite de Testing para la CLI
============================

Valida:
- classify: nodo mínimo y par (α, δ)
- closure + verify-witness: testigo escrito y reproducido
- lattice-dot: orden parcial y aristas gruesas
- verify / gen: informes, resumen JSON y elementos por nodo
- Códigos de salida: 0 éxito, 1 fallo, 2 uso inválido
"""

import json
from dataclasses import dataclass

import pytest

from cli.main import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main


# ========== CONFIGURACIÓN ==========

@dataclass
class ClassifyCase:
    """Documento de entrada y primera línea esperada de classify"""
    document: dict
    expected: str
    description: str = ""


def _write(tmp_path, name: str, document) -> str:
    path = tmp_path / name
    text = document if isinstance(document, str) else json.dumps(document)
    path.write_text(text, encoding="utf-8")
    return str(path)


# ========== TEST CASES ==========

CLASSIFY_CASES = [
    ClassifyCase({"kind": "finitary", "entries": [[0, 1, "1"]]}, "SLfr (1,1)", "transvección"),
    ClassifyCase({"kind": "scaled", "scalar": "3", "entries": [[0, 0, "1"]]}, "DscGLfr (3,2)", "3·diag(2)"),
    ClassifyCase({"kind": "triangular", "rule": "jordan", "params": ["2"]}, "GLcf", "Jordan infinito"),
    ClassifyCase({"field": "F5", "kind": "scaled", "scalar": 4}, "Dsc (4,1)", "escalar en GF(5)"),
]


# ========== CLASSIFY ==========

@pytest.mark.parametrize("case", CLASSIFY_CASES, ids=lambda c: c.description)
def test_classify(tmp_path, capsys, case: ClassifyCase):
    path = _write(tmp_path, "g.json", case.document)
    assert main(["classify", path]) == EXIT_OK
    assert capsys.readouterr().out.strip() == case.expected


def test_classify_invalid_json(tmp_path):
    path = _write(tmp_path, "bad.json", '{"kind": "finitary",')
    assert main(["classify", path]) == EXIT_USAGE


def test_classify_non_prime_field(tmp_path):
    path = _write(tmp_path, "g.json", {"kind": "finitary"})
    assert main(["classify", path, "--field", "F4"]) == EXIT_USAGE


def test_classify_with_field_option(tmp_path, capsys):
    path = _write(tmp_path, "g.json", {"kind": "finitary", "entries": [[0, 0, "1"]]})
    assert main(["classify", path, "--field", "Fp", "--prime", "3"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "GLfr (1,2)"


# ========== CLOSURE Y TESTIGOS ==========

def test_closure_writes_descriptor_and_witness(tmp_path, capsys):
    g = _write(tmp_path, "g.json", {"kind": "finitary", "entries": [[0, 0, "1"]]})
    witness = tmp_path / "w.json"
    out = tmp_path / "d.json"
    assert main(["closure", g, "--out", str(out), "--witness-out", str(witness)]) == EXIT_OK

    descriptor = json.loads(out.read_text(encoding="utf-8"))
    assert descriptor["variant"] == "sandwich"
    assert witness.exists()

    capsys.readouterr()
    assert main(["verify-witness", str(witness)]) == EXIT_OK
    assert capsys.readouterr().out.startswith("valid")


def test_tampered_witness_reports_first_difference(tmp_path, capsys):
    g = _write(tmp_path, "g.json", {"kind": "finitary", "entries": [[0, 0, "1"]]})
    witness = tmp_path / "w.json"
    assert main(["closure", g, "--witness-out", str(witness)]) == EXIT_OK

    document = json.loads(witness.read_text(encoding="utf-8"))
    document["target"] = [[0, 5, "1"]]
    witness.write_text(json.dumps(document), encoding="utf-8")

    capsys.readouterr()
    assert main(["verify-witness", str(witness)]) == EXIT_FAILURE
    out = capsys.readouterr().out
    assert out.startswith("invalid:")
    assert "first difference at" in out


def test_closure_to_stdout(tmp_path, capsys):
    g = _write(tmp_path, "g.json", {"kind": "scaled", "scalar": "2"})
    assert main(["closure", g]) == EXIT_OK
    descriptor = json.loads(capsys.readouterr().out)
    assert descriptor["variant"] == "central"
    assert descriptor["gens"] == ["2"]


# ========== LATTICE-DOT ==========

def test_lattice_dot(capsys):
    assert main(["lattice-dot", "--check"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.count("style=bold") == 5
    assert out.count(" -- ") == 8


def test_lattice_dot_to_file(tmp_path):
    out = tmp_path / "lattice.dot"
    assert main(["lattice-dot", "--labels", "paper", "--out", str(out)]) == EXIT_OK
    assert "D_sc×GL_fr" in out.read_text(encoding="utf-8")


# ========== VERIFY Y GEN ==========

def test_verify_writes_summary(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["verify", "field", "--trials", "5", "--seed", "1", "--out", str(out)]) == EXIT_OK
    assert capsys.readouterr().out.startswith("suite=field")
    report = json.loads(out.read_text(encoding="utf-8"))
    assert report["trials"] == 5 and report["failures"] == []


def test_verify_unknown_suite():
    with pytest.raises(SystemExit) as info:
        main(["verify", "nope"])
    assert info.value.code == EXIT_USAGE


def test_gen_round_trip(tmp_path, capsys):
    out = tmp_path / "g.json"
    assert main(["gen", "SLfr", "--seed", "4", "--window", "3", "--out", str(out)]) == EXIT_OK
    assert main(["classify", str(out)]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "SLfr (1,1)"


def test_gen_is_deterministic(capsys):
    assert main(["gen", "DscGLfr", "--seed", "9"]) == EXIT_OK
    first = capsys.readouterr().out
    assert main(["gen", "DscGLfr", "--seed", "9"]) == EXIT_OK
    assert capsys.readouterr().out == first
