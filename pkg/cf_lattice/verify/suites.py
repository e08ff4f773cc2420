"""
Suites de Verificación
Responsabilidad: Ejecutar ensayos aleatorios reproducibles y recorridos
exhaustivos que comprueban cada propiedad del retículo a escala de escritorio

Cada ensayo usa su propio random.Random sembrado con "suite:semilla:índice";
los informes se ordenan por índice de ensayo, así que el resultado no depende
del número de procesos.
"""

import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Any, Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

from ..algebra.field import FieldElement, FieldSpec, factor_rational, field_arith
from ..algebra.unit_groups import PairSubgroup, UnitSubgroup, pair_membership, unit_membership
from ..config import settings
from ..documents.codec import element_to_document
from ..lattice.classification import (
    classify_minimal_node,
    descriptor_contains,
    normal_closure,
    predicted_window_set,
    quotient_image,
)
from ..lattice.descriptors import (
    NormalSubgroupDescriptor,
    descriptor_join,
    descriptor_leq,
    node_of_descriptor,
)
from ..lattice.nodes import HASSE_EDGES, EdgeKind, LatticeNode, check_partial_order, join, lattice_graph, leq, meet
from ..models.errors import DocumentError, LatticeError, SearchExhausted, UnknownSuite
from ..models.schemas import FailureRecord, SuiteReport
from ..matrices.dense import dense_pad, unit_column
from ..matrices.finitary import FinitaryMatrix, ScaledFinitary, corner_det
from ..matrices.words import GroupWord, as_word, column_eval, window_project
from ..procedures.center import center_witness
from ..procedures.conjugation import conjugate, conjugate_scaled
from ..procedures.decomposition import d_alpha, det_decompose
from ..procedures.transvections import transvection_witness, verify_witness
from .oracles import (
    IntMatrix,
    conjugacy_classes,
    enumerate_gl,
    enumerate_sl,
    identity_mod,
    is_normal_subgroup,
    to_dense,
    closure_with_generators,
)
from .samplers import CONJUGATOR_CLASSES, ElementSampler, realizable_nodes

logger = logging.getLogger(__name__)

NORMALITY_NODES = (LatticeNode.SLFR, LatticeNode.GLFR, LatticeNode.DSC_SLFR, LatticeNode.DSC_GLFR)
UNIT_PRIMES = (2, 3, 5)


# ========== TIPOS ==========

@dataclass(frozen=True)
class SuiteParams:
    """Parámetros de una ejecución"""

    suite: str
    spec: FieldSpec
    trials: int
    seed: int
    window: int


@dataclass
class TrialContext:
    params: SuiteParams
    index: int
    label: str
    rng: random.Random

    @property
    def spec(self) -> FieldSpec:
        return self.params.spec

    def sampler(self) -> ElementSampler:
        return ElementSampler(self.spec, self.rng, self.params.window)


class Falsified(Exception):
    """Una propiedad no se cumple en el ensayo actual"""

    def __init__(self, prop: str, expected: Any = "", actual: Any = "", inputs: Optional[Dict[str, Any]] = None):
        self.prop = prop
        self.expected = str(expected)
        self.actual = str(actual)
        self.inputs = inputs or {}
        super().__init__(f"{prop}: expected {self.expected}, got {self.actual}")


class Skipped(Exception):
    """El ensayo no es aplicable al cuerpo elegido"""


@dataclass(frozen=True)
class Suite:
    """
    name:       identificador para run_suite
    trial:      función de un ensayo; devuelve la etiqueta del contador
    exhaustive: recorre un espacio finito completo (ignora --trials)
    cases:      número de casos de una suite exhaustiva
    field:      cuerpo fijo de una suite exhaustiva
    """

    name: str
    trial: Callable[[TrialContext], str]
    description: str
    exhaustive: bool = False
    cases: Optional[Callable[[FieldSpec], int]] = None
    field: Optional[Callable[[FieldSpec], FieldSpec]] = None


def _doc(g) -> Any:
    try:
        return element_to_document(g).model_dump(mode="json", exclude_none=True)
    except DocumentError:
        return repr(g)


def _expect(prop: str, expected: Any, actual: Any, **inputs) -> None:
    if expected != actual:
        raise Falsified(prop, expected, actual, {k: _doc(v) for k, v in inputs.items()})


def _check(prop: str, condition: bool, **inputs) -> None:
    if not condition:
        raise Falsified(prop, True, False, {k: _doc(v) for k, v in inputs.items()})


# ========== FIELD ==========

def _random_scalar(ctx: TrialContext) -> FieldElement:
    spec, rng = ctx.spec, ctx.rng
    if spec.is_rational:
        return spec.element(Fraction(rng.randint(-20, 20), rng.randint(1, 12)))
    return spec.element(rng.randrange(spec.modulus))


def _field_trial(ctx: TrialContext) -> str:
    a, b, c = (_random_scalar(ctx) for _ in range(3))
    zero, one = ctx.spec.zero, ctx.spec.one
    inputs = {"a": str(a), "b": str(b), "c": str(c)}

    def expect(prop, expected, actual):
        if expected != actual:
            raise Falsified(prop, expected, actual, inputs)

    expect("add-associative", (a + b) + c, a + (b + c))
    expect("add-commutative", a + b, b + a)
    expect("mul-associative", (a * b) * c, a * (b * c))
    expect("distributive", a * (b + c), a * b + a * c)
    expect("additive-inverse", zero, a + (-a))
    expect("sub-add", a, (a - b) + b)
    expect("dispatch-mul", a * b, field_arith("mul", a, b))
    if b:
        expect("div-mul", a, (a / b) * b)
        expect("multiplicative-inverse", one, b * field_arith("inv", b))
        expect("power-negative", b.inverse() ** 3, b ** -3)
    if ctx.spec.is_rational and a:
        expect("factor-reconstruct", a, factor_rational(a).reconstruct())
    return "ok"


# ========== UNIT GROUPS ==========

def _random_unit(ctx: TrialContext) -> FieldElement:
    spec, rng = ctx.spec, ctx.rng
    if spec.is_rational:
        value = Fraction(rng.choice((1, -1)))
        for prime in UNIT_PRIMES:
            value *= Fraction(prime) ** rng.randint(-2, 2)
        return spec.element(value)
    return spec.element(rng.randrange(1, spec.modulus))


def _power_product(spec: FieldSpec, generators: Sequence[FieldElement], exponents: Sequence[int]) -> FieldElement:
    value = spec.one
    for g, e in zip(generators, exponents):
        value = value * g ** e
    return value


def _box_search(spec: FieldSpec, generators, target) -> bool:
    """Búsqueda exhaustiva de exponentes en [−B, B]^k"""
    bound = settings.UNIT_ORACLE_BOUND
    for exponents in product(range(-bound, bound + 1), repeat=len(generators)):
        if all(_power_product(spec, [g[c] for g in generators], exponents) == target[c] for c in range(len(target))):
            return True
    return False


def _finite_closure(spec: FieldSpec, generators) -> FrozenSet:
    """Subgrupo finito generado por BFS (pares o escalares como tuplas)"""
    width = len(generators[0]) if generators else 1
    identity = tuple(spec.one for _ in range(width))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = tuple(a * b for a, b in zip(x, g))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def _unit_groups_trial(ctx: TrialContext) -> str:
    spec, rng = ctx.spec, ctx.rng
    if spec.is_finite and spec.modulus > 100_000:
        raise Skipped()
    pairs = ctx.index % 2 == 1
    k = rng.randint(1, 3)
    width = 2 if pairs else 1
    generators = [tuple(_random_unit(ctx) for _ in range(width)) for _ in range(k)]
    if rng.random() < 0.5:
        exponents = [rng.randint(-3, 3) for _ in range(k)]
        target = tuple(_power_product(spec, [g[c] for g in generators], exponents) for c in range(width))
    else:
        target = tuple(_random_unit(ctx) for _ in range(width))

    inputs = {"generators": [[str(v) for v in g] for g in generators], "target": [str(v) for v in target]}
    if pairs:
        subgroup = PairSubgroup(spec, tuple(generators))
        result = pair_membership(target, subgroup)
    else:
        subgroup = UnitSubgroup(spec, tuple(g[0] for g in generators))
        result = unit_membership(target[0], subgroup)

    if result.member:
        replay = tuple(_power_product(spec, [g[c] for g in generators], result.witness) for c in range(width))
        if replay != target:
            raise Falsified("membership-witness", target, replay, inputs)

    if spec.is_rational:
        brute = _box_search(spec, generators, target)
        if brute and not result.member:
            raise Falsified("membership-agreement", True, False, inputs)
        if result.member and not brute:
            return "beyond-box"
    else:
        brute = target in _finite_closure(spec, generators)
        if brute != result.member:
            raise Falsified("membership-agreement", brute, result.member, inputs)
    return "member" if result.member else "non-member"


# ========== MATRICES ==========

def _columns_match(prop: str, word: GroupWord, oracle, count: int, **inputs) -> None:
    for j in range(count):
        expected, actual = oracle(j), column_eval(word, j)
        if expected != actual:
            raise Falsified(prop, f"column {j} = {expected}", actual, {k: _doc(v) for k, v in inputs.items()})


def _matrices_trial(ctx: TrialContext) -> str:
    sampler = ctx.sampler()
    spec = ctx.spec
    g, h, k = sampler.finitary(), sampler.finitary(), sampler.finitary()
    identity = FinitaryMatrix.identity(spec)

    _expect("mul-associative", (g * h) * k, g * (h * k), g=g, h=h, k=k)
    _expect("inverse", identity, g * g.inverse(), g=g)
    _expect("det-multiplicative", corner_det(g) * corner_det(h), corner_det(g * h), g=g, h=h)
    n = max(g.window, h.window)
    _expect("window-projection", (g * h).corner(n), window_project(GroupWord.of(spec, g, h), n), g=g, h=h)
    _expect("embedding", dense_pad(g.corner(), g.window + 1, spec), g.corner(g.window + 1), g=g)

    s = sampler.string_conjugator()
    u = sampler.triangular_conjugator()
    span = s.prefix_size + 2 * s.tail.size + 1
    _columns_match("string-inverse", GroupWord.of(spec, s, (s, True)), lambda j: unit_column(spec, j), span, s=s)
    _columns_match("triangular-inverse", GroupWord.of(spec, (u, True), u), lambda j: unit_column(spec, j), span, u=u)
    alpha = sampler.coefficient()
    scaled = ScaledFinitary(alpha, g)
    _expect("scaled-inverse", ScaledFinitary.scalar_matrix(spec, 1), scaled * scaled.inverse(), g=g)
    _expect("scaled-corner", tuple(tuple(alpha * v for v in row) for row in g.corner()), scaled.corner(), g=g)
    return "ok"


# ========== NORMALITY ==========

def _normality_trial(ctx: TrialContext) -> str:
    node = NORMALITY_NODES[ctx.index % len(NORMALITY_NODES)]
    kind = CONJUGATOR_CLASSES[(ctx.index // len(NORMALITY_NODES)) % len(CONJUGATOR_CLASSES)]
    if node not in realizable_nodes(ctx.spec):
        raise Skipped()
    sampler = ctx.sampler()
    g = sampler.sample(node)
    c = sampler.conjugator(kind)

    if isinstance(g, ScaledFinitary):
        result = conjugate_scaled(g, c)
    else:
        result = conjugate(g, c).result

    _expect("minimal-node", node, classify_minimal_node(result), g=g, conjugator=c)
    _expect("quotient-image", quotient_image(g), quotient_image(result), g=g, conjugator=c)
    word = GroupWord.of(ctx.spec, (c, True), g, c)
    _columns_match("re-expansion", word, result.column, result.window + settings.PROBE_MARGIN + 1, g=g, conjugator=c)
    return kind


# ========== QUOTIENTS ==========

def _quotients_trial(ctx: TrialContext) -> str:
    sampler = ctx.sampler()
    spec = ctx.spec
    g, h = sampler.finitary(), sampler.finitary()

    alpha, special = det_decompose(g)
    _expect("det-decompose-roundtrip", g, d_alpha(g, alpha) * special, g=g)
    _expect("det-decompose-special", spec.one, corner_det(special), g=g)
    _expect("det-multiplicative", corner_det(g) * corner_det(h), corner_det(g * h), g=g, h=h)

    a = ScaledFinitary(sampler.unit(), g)
    b = ScaledFinitary(sampler.unit(), h) if ctx.rng.random() < 0.7 else ScaledFinitary(spec.one, sampler.special())
    image_a, image_b = quotient_image(a), quotient_image(b)
    expected = (image_a[0] * image_b[0], image_a[1] * image_b[1])
    _expect("quotient-homomorphism", expected, quotient_image(a * b), a=a, b=b)

    in_kernel = quotient_image(b) == (spec.one, spec.one)
    _expect("kernel", in_kernel, leq(classify_minimal_node(b), LatticeNode.SLFR), b=b)
    return "kernel" if in_kernel else "ok"


# ========== CENTER ==========

def _center_trial(ctx: TrialContext) -> str:
    sampler = ctx.sampler()
    spec = ctx.spec
    if ctx.index % 2 == 0:
        alpha = sampler.unit()
        g = ScaledFinitary.scalar_matrix(spec, alpha)
        result = center_witness(g)
        _check("scalar-is-central", result.central, g=g)
        _expect("central-scalar", alpha, result.scalar, g=g)
        return "central"

    nodes = [n for n in realizable_nodes(spec) if n not in (LatticeNode.TRIVIAL, LatticeNode.DSC)]
    g = sampler.sample(ctx.rng.choice(nodes))
    result = center_witness(g)
    _check("non-scalar-has-witness", not result.central, g=g)
    x = result.witness
    gx = column_eval(as_word(g) * as_word(x), result.column)
    xg = column_eval(as_word(x) * as_word(g), result.column)
    _check("witness-non-commuting", gx != xg, g=g, witness=x)
    return "witness"


# ========== TRANSVECTIONS ==========

def _transvections_trial(ctx: TrialContext) -> str:
    sampler = ctx.sampler()
    g = sampler.desk_element(max_window=min(ctx.params.window, 4), height=4)
    source = g
    if ctx.rng.random() < 0.3 and not (ctx.spec.is_finite and ctx.spec.modulus == 2):
        source = ScaledFinitary(sampler.scalar(), g)
    try:
        witness = transvection_witness(source)
    except SearchExhausted:
        return "exhausted"
    check = verify_witness(witness, source)
    _check("witness-replay", check.valid, g=source)
    _check("target-is-transvection", witness.target.is_transvection(), g=source)
    return "certified"


@lru_cache(maxsize=None)
def _sl3_nontrivial(p: int) -> Tuple[IntMatrix, ...]:
    identity = identity_mod(3)
    return tuple(m for m in enumerate_sl(3, p) if m != identity)


def _transvections_exhaustive_trial(ctx: TrialContext) -> str:
    spec = FieldSpec.prime_field(2)
    m = _sl3_nontrivial(2)[ctx.index]
    g = FinitaryMatrix.from_corner(to_dense(m, spec), spec)
    try:
        witness = transvection_witness(g)
    except SearchExhausted as e:
        raise Falsified("witness-found", "certificate", f"SearchExhausted: {e}", {"g": _doc(g)}) from e
    _check("witness-replay", verify_witness(witness, g).valid, g=g)
    return witness.strategy


# ========== LATTICE ==========

def _lattice_trial(ctx: TrialContext) -> str:
    spec, rng = ctx.spec, ctx.rng
    nodes = list(LatticeNode)
    a, b = rng.choice(nodes), rng.choice(nodes)
    da, db = NormalSubgroupDescriptor.for_node(a, spec), NormalSubgroupDescriptor.for_node(b, spec)

    _expect("node-roundtrip", a, node_of_descriptor(da))
    _expect("descriptor-order", leq(a, b), descriptor_leq(da, db))
    _expect("descriptor-join", NormalSubgroupDescriptor.for_node(join(a, b), spec), descriptor_join(da, db))
    _check("meet-below", leq(meet(a, b), a) and leq(meet(a, b), b))

    realizable = realizable_nodes(spec)
    sampler = ctx.sampler()
    g, h = sampler.sample(rng.choice(realizable)), sampler.sample(rng.choice(realizable))
    closure_g = normal_closure([g], spec, attach_witness=False)
    closure_h = normal_closure([h], spec, attach_witness=False)
    _check("closure-contains-generator", descriptor_contains(closure_g, g), g=g)
    node_g = NormalSubgroupDescriptor.for_node(classify_minimal_node(g), spec)
    _check("closure-below-minimal-node", descriptor_leq(closure_g, node_g), g=g)
    _expect("join-idempotent", closure_g, descriptor_join(closure_g, closure_g), g=g)
    _expect("closure-of-union", descriptor_join(closure_g, closure_h),
            normal_closure([g, h], spec, attach_witness=False), g=g, h=h)

    if ctx.index == 0:
        problems = check_partial_order()
        _expect("partial-order", [], problems)
        graph = lattice_graph()
        thick = sum(1 for e in graph.edges if e.kind is EdgeKind.THICK)
        _expect("graph-shape", (7, 8, 5), (len(graph.nodes), len(graph.edges), thick))
        _expect("hasse-edges", len(HASSE_EDGES), len(graph.edges))
    return "ok"


# ========== CLOSURE ORACLE ==========

def _oracle_prime(spec: FieldSpec) -> int:
    return spec.modulus if spec.is_finite and spec.modulus <= 3 else 2


@lru_cache(maxsize=None)
def _oracle_data(p: int) -> Tuple[Tuple[IntMatrix, ...], Dict[IntMatrix, IntMatrix], Tuple[IntMatrix, ...]]:
    sl = tuple(enumerate_sl(3, p))
    return sl, conjugacy_classes(sl, 3, p), tuple(enumerate_gl(3, p))


@lru_cache(maxsize=None)
def _class_closure(p: int, representative: IntMatrix) -> FrozenSet[IntMatrix]:
    closure, generators = closure_with_generators(3, p, [representative])
    if not is_normal_subgroup(closure, 3, p, generators):
        raise Falsified("oracle-self-check", "normal subgroup", f"{len(closure)} elements not closed")
    logger.debug(f"Clausura de fuerza bruta en GL(3, F_{p}): {len(closure)} elementos")
    return closure


@lru_cache(maxsize=None)
def _predicted(p: int, descriptor: NormalSubgroupDescriptor) -> FrozenSet[IntMatrix]:
    spec = FieldSpec.prime_field(p)
    ambient = [to_dense(m, spec) for m in _oracle_data(p)[2]]
    dense = predicted_window_set(descriptor, ambient)
    return frozenset(tuple(tuple(int(v.value) for v in row) for row in m) for m in dense)


def _closure_oracle_trial(ctx: TrialContext) -> str:
    p = _oracle_prime(ctx.spec)
    spec = FieldSpec.prime_field(p)
    elements, classes, _ = _oracle_data(p)
    m = elements[ctx.index]
    g = FinitaryMatrix.from_corner(to_dense(m, spec), spec)
    descriptor = normal_closure([g], spec, attach_witness=False)
    brute = _class_closure(p, classes[m])
    predicted = _predicted(p, descriptor)
    if predicted != brute:
        raise Falsified(
            "closure-prediction",
            f"{len(brute)} elements",
            f"{len(predicted)} elements from {descriptor!r}",
            {"g": _doc(g)},
        )
    return node_of_descriptor(descriptor).value if node_of_descriptor(descriptor) else "unnamed"


# ========== REGISTRO ==========

def _fixed_prime(p: int) -> Callable[[FieldSpec], FieldSpec]:
    return lambda spec: FieldSpec.prime_field(p)


SUITES: Dict[str, Suite] = {
    suite.name: suite
    for suite in (
        Suite("field", _field_trial, "Axiomas de cuerpo y factorización de racionales"),
        Suite("unit-groups", _unit_groups_trial, "Pertenencia a subgrupos de K* y K*×K* contra enumeración"),
        Suite("matrices", _matrices_trial, "Aritmética finitaria, strings, triangulares y palabras"),
        Suite("normality", _normality_trial, "Conjugación preserva nodo mínimo e imagen en K*×K*"),
        Suite("quotients", _quotients_trial, "Descomposición por determinante y homomorfismo al cociente"),
        Suite("center", _center_trial, "Elementos escalares centrales, testigos para los no escalares"),
        Suite("transvections", _transvections_trial, "Testigos de transvección para elementos de escritorio"),
        Suite("lattice", _lattice_trial, "Orden, join y clausuras de descriptores"),
        Suite(
            "closure-oracle",
            _closure_oracle_trial,
            "Clausura normal predicha contra fuerza bruta en SL(3, F_p)",
            exhaustive=True,
            cases=lambda spec: len(_oracle_data(_oracle_prime(spec))[0]),
            field=lambda spec: FieldSpec.prime_field(_oracle_prime(spec)),
        ),
        Suite(
            "transvections-exhaustive",
            _transvections_exhaustive_trial,
            "Testigo verificado para cada elemento no trivial de SL(3, F_2)",
            exhaustive=True,
            cases=lambda spec: len(_sl3_nontrivial(2)),
            field=_fixed_prime(2),
        ),
    )
}


def get_suite(name: str) -> Suite:
    if name not in SUITES:
        raise UnknownSuite(f"suite desconocida: {name} (disponibles: {', '.join(SUITES)})")
    return SUITES[name]


# ========== EJECUCIÓN ==========

@dataclass
class TrialOutcome:
    index: int
    label: str
    failure: Optional[FailureRecord] = None


def run_trial(params: SuiteParams, index: int) -> TrialOutcome:
    """Ejecuta un ensayo; las falsificaciones y errores inesperados se registran, no se propagan"""
    suite = get_suite(params.suite)
    label = f"{params.suite}:{params.seed}:{index}"
    ctx = TrialContext(params=params, index=index, label=label, rng=random.Random(label))
    try:
        return TrialOutcome(index, suite.trial(ctx))
    except Skipped:
        return TrialOutcome(index, "skipped")
    except Falsified as e:
        record = FailureRecord(
            trial=index, trial_seed=label, property=e.prop, inputs=e.inputs, expected=e.expected, actual=e.actual
        )
        return TrialOutcome(index, "failed", record)
    except (LatticeError, ValueError, ArithmeticError) as e:
        record = FailureRecord(
            trial=index, trial_seed=label, property="unexpected-error", expected="no error",
            actual=f"{type(e).__name__}: {e}",
        )
        return TrialOutcome(index, "failed", record)


def _run_chunk(params: SuiteParams, indices: Sequence[int]) -> List[TrialOutcome]:
    return [run_trial(params, i) for i in indices]


def run_suite(
    name: str,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    window: Optional[int] = None,
    spec: Optional[FieldSpec] = None,
    workers: Optional[int] = None,
) -> SuiteReport:
    """
    Ejecuta una suite y devuelve su informe.

    Args:
        name: Identificador (ver SUITES)
        trials: Ensayos (DEFAULT_TRIALS); las suites exhaustivas lo ignoran
        seed: Semilla (DEFAULT_SEED)
        window: Ventana máxima de los muestreadores (DEFAULT_WINDOW)
        spec: Cuerpo (DEFAULT_FIELD); las suites exhaustivas fijan el suyo
        workers: Procesos (SUITE_WORKERS); 1 ejecuta en el proceso actual

    Returns:
        SuiteReport determinista para (name, trials, seed, window, spec)

    Raises:
        UnknownSuite: si name no está registrado

    Example:
        >>> run_suite("lattice", trials=5, seed=1).passed
        True
    """
    suite = get_suite(name)
    spec = spec if spec is not None else FieldSpec.parse(settings.DEFAULT_FIELD)
    if suite.field is not None:
        spec = suite.field(spec)
    seed = settings.DEFAULT_SEED if seed is None else seed
    window = settings.DEFAULT_WINDOW if window is None else window
    workers = settings.SUITE_WORKERS if workers is None else workers
    count = suite.cases(spec) if suite.exhaustive else (settings.DEFAULT_TRIALS if trials is None else trials)
    params = SuiteParams(suite=name, spec=spec, trials=count, seed=seed, window=window)

    logger.info(f"🔄 Suite {name}: {count} ensayos sobre {spec.tag} (seed={seed}, window={window}, workers={workers})")
    started = time.perf_counter()
    indices = list(range(count))
    if workers > 1 and count > 1:
        chunks = [indices[w::workers] for w in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = [o for chunk in pool.map(_run_chunk, [params] * len(chunks), chunks) for o in chunk]
    else:
        outcomes = _run_chunk(params, indices)
    outcomes.sort(key=lambda o: o.index)

    counters: Dict[str, int] = {}
    for outcome in outcomes:
        counters[outcome.label] = counters.get(outcome.label, 0) + 1
    failures = [o.failure for o in outcomes if o.failure is not None]

    if name == "transvections":
        attempted = counters.get("certified", 0) + counters.get("exhausted", 0)
        rate = counters.get("certified", 0) / attempted if attempted else 1.0
        if rate < settings.TRANSVECTION_TARGET_RATE:
            failures.append(FailureRecord(
                trial=-1, trial_seed=f"{name}:{seed}", property="certificate-rate",
                expected=f">= {settings.TRANSVECTION_TARGET_RATE}", actual=f"{rate:.3f}",
            ))

    report = SuiteReport(
        suite=name,
        field=spec.tag,
        seed=seed,
        window=window,
        exhaustive=suite.exhaustive,
        trials=count,
        skipped=counters.get("skipped", 0),
        failures=failures,
        counters=counters,
        wall_time=time.perf_counter() - started,
    )
    if report.passed:
        logger.info(f"✅ Suite {name}: {count} ensayos sin fallos ({report.wall_time:.2f}s)")
    else:
        logger.error(f"❌ Suite {name}: {len(failures)} fallos en {count} ensayos")
    return report
