"""
CLI de cf_lattice
✅ classify: nodo mínimo e imagen (α, δ)
✅ closure: descriptor de la clausura normal + testigo de transvección
✅ lattice-dot: diagrama de Hasse en DOT
✅ verify / verify-witness: suites de propiedades y reproducción de testigos
✅ gen: elementos aleatorios de un nodo con nombre

Códigos de salida: 0 éxito, 1 fallo de verificación o de cálculo, 2 uso o documento inválido.
"""

import argparse
import logging
import random
import sys
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv

from cf_lattice.algebra.field import FieldSpec
from cf_lattice.config import settings, validate_settings
from cf_lattice.documents.codec import (
    descriptor_to_document,
    dump_document,
    element_to_document,
    load_element,
    parse_witness,
    read_text,
    witness_to_document,
    write_document,
)
from cf_lattice.lattice.classification import classify_minimal_node, normal_closure, quotient_image
from cf_lattice.lattice.nodes import LatticeNode, check_partial_order, lattice_graph
from cf_lattice.models.errors import ContractViolation, DocumentError, FieldMismatch, LatticeError, UnknownSuite
from cf_lattice.procedures.transvections import verify_witness
from cf_lattice.verify.samplers import ElementSampler
from cf_lattice.verify.suites import SUITES, run_suite

logger = logging.getLogger("cf_lattice.cli")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

USAGE_ERRORS = (DocumentError, UnknownSuite, ContractViolation, FieldMismatch)


# ============================================
# HELPERS
# ============================================

def _field(args) -> Optional[FieldSpec]:
    if getattr(args, "field", None) is None:
        return None
    return FieldSpec.parse(args.field, p=getattr(args, "prime", None))


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
        logger.info(f"✅ Escrito {out}")
    else:
        sys.stdout.write(text)


# ============================================
# COMANDOS
# ============================================

def cmd_classify(args) -> int:
    """Imprime el nodo mínimo y, dentro de D_sc × GL_fr, el par (α, δ)"""
    g = load_element(args.input, _field(args))
    node = classify_minimal_node(g)
    if node is LatticeNode.GLCF:
        print(node.value)
    else:
        alpha, delta = quotient_image(g)
        print(f"{node.value} ({alpha},{delta})")
    return EXIT_OK


def cmd_closure(args) -> int:
    spec = _field(args)
    gens = [load_element(path, spec) for path in args.inputs]
    attach = True if args.witness_out else None
    descriptor = normal_closure(gens, spec, attach_witness=attach)
    logger.info(f"✅ Clausura normal: {descriptor!r}")
    _emit(dump_document(descriptor_to_document(descriptor)), args.out)

    if args.witness_out:
        if descriptor.witness is None:
            logger.warning("⚠️ La clausura no lleva testigo de transvección (central o completa)")
        else:
            write_document(witness_to_document(descriptor.witness), args.witness_out)
    return EXIT_OK


def cmd_lattice_dot(args) -> int:
    if args.check:
        problems = check_partial_order()
        if problems:
            for problem in problems:
                logger.error(f"❌ {problem}")
            return EXIT_FAILURE
        logger.info("✅ Orden parcial consistente")
    _emit(lattice_graph().to_dot(args.labels), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_suite(
        args.suite,
        trials=args.trials,
        seed=args.seed,
        window=args.window,
        spec=_field(args),
        workers=args.workers,
    )
    for line in report.to_lines():
        print(line)
    if args.out:
        Path(args.out).write_text(report.model_dump_json(indent=2) + "\n", encoding="utf-8")
    return EXIT_OK if report.passed else EXIT_FAILURE


def cmd_verify_witness(args) -> int:
    witness = parse_witness(read_text(args.witness), _field(args), source=args.witness)
    check = verify_witness(witness)
    if check.valid:
        print(f"valid {check.message}".rstrip())
        return EXIT_OK
    print(f"invalid: {check.message}")
    if check.first_difference is not None:
        i, j, expected, actual = check.first_difference
        print(f"first difference at ({i},{j}): expected {expected}, got {actual}")
    return EXIT_FAILURE


def cmd_gen(args) -> int:
    spec = _field(args) or FieldSpec.parse(settings.DEFAULT_FIELD)
    seed = settings.DEFAULT_SEED if args.seed is None else args.seed
    window = settings.DEFAULT_WINDOW if args.window is None else args.window
    sampler = ElementSampler(spec, random.Random(f"gen:{args.node}:{seed}"), window)
    g = sampler.sample(LatticeNode(args.node))
    _emit(dump_document(element_to_document(g)), args.out)
    return EXIT_OK


# ============================================
# PARSER
# ============================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cf-lattice", description="Subgrupos normales de GL_cf(ℕ, K)")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING, ERROR")
    sub = parser.add_subparsers(dest="command", required=True)

    def field_options(p: argparse.ArgumentParser) -> None:
        p.add_argument("--field", default=None, help="Q, F7, GF(7) o Fp (con --prime)")
        p.add_argument("--prime", type=int, default=None, help="Primo para --field Fp")

    p = sub.add_parser("classify", help="Nodo mínimo de un elemento")
    p.add_argument("input")
    field_options(p)
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("closure", help="Clausura normal de uno o más elementos")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--out", default=None)
    p.add_argument("--witness-out", default=None)
    field_options(p)
    p.set_defaults(handler=cmd_closure)

    p = sub.add_parser("lattice-dot", help="Diagrama de Hasse en DOT")
    p.add_argument("--out", default=None)
    p.add_argument("--labels", choices=("tags", "paper"), default="tags")
    p.add_argument("--check", action="store_true")
    p.set_defaults(handler=cmd_lattice_dot)

    p = sub.add_parser("verify", help="Ejecuta una suite de propiedades")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--window", type=int, default=None)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--out", default=None, help="Resumen JSON")
    field_options(p)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("verify-witness", help="Reproduce un testigo de transvección")
    p.add_argument("witness")
    field_options(p)
    p.set_defaults(handler=cmd_verify_witness)

    p = sub.add_parser("gen", help="Elemento aleatorio de un nodo")
    p.add_argument("node", choices=[n.value for n in LatticeNode])
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--window", type=int, default=None)
    p.add_argument("--out", default=None)
    field_options(p)
    p.set_defaults(handler=cmd_gen)
    return parser


# ============================================
# ENTRADA
# ============================================

def main(argv: Optional[List[str]] = None) -> int:
    load_dotenv()
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=(args.log_level or settings.LOG_LEVEL).upper(),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    validate_settings()

    try:
        return args.handler(args)
    except USAGE_ERRORS as e:
        logger.error(f"❌ {e}")
        return EXIT_USAGE
    except LatticeError as e:
        logger.error(f"❌ {type(e).__name__}: {e}")
        return EXIT_FAILURE
    except ValueError as e:
        logger.error(f"❌ {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
