"""
Codec de Documentos
Responsabilidad: Convertir documentos JSON en valores del dominio (elementos,
descriptores, testigos) y viceversa

Los documentos se validan con los modelos de models/schemas.py; cualquier
error sintáctico, de validación o de construcción se convierte en
DocumentError con la ubicación del problema.
"""

import json
import logging
from pathlib import Path
from typing import Any, Optional, Union

from pydantic import BaseModel, TypeAdapter, ValidationError

from ..algebra.field import FieldSpec
from ..algebra.unit_groups import PairSubgroup, UnitSubgroup
from ..config import settings
from ..lattice.descriptors import DescriptorVariant, NormalSubgroupDescriptor, node_of_descriptor
from ..models.errors import DocumentError, LatticeError
from ..models.schemas import (
    DescriptorDocument,
    ElementDocument,
    FieldHeader,
    FinitaryDocument,
    IdentityTailDocument,
    LetterDocument,
    PeriodicTailDocument,
    ScaledDocument,
    StringDocument,
    TailCertificateDocument,
    TriangularDocument,
    WitnessDocument,
    WitnessLetterDocument,
    WordDocument,
)
from ..matrices.dense import DenseMatrix, dense_from_values
from ..matrices.finitary import FinitaryMatrix, ScaledFinitary, deltas_list
from ..matrices.strings import IdentityTail, PeriodicTail, StringMatrix
from ..matrices.triangular import BandedRule, ExplicitPrefix, UpperTriangularOracle
from ..matrices.words import GroupWord, Letter, TailCertificate
from ..procedures.decomposition import Element
from ..procedures.transvections import TransvectionWitness

logger = logging.getLogger(__name__)

_ELEMENT_ADAPTER = TypeAdapter(ElementDocument)

Source = Optional[Union[str, Path]]


# ========== LECTURA DE TEXTO ==========

def _load_json(text: str, source: Source) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(e.msg, source=str(source) if source else None, line=e.lineno, column=e.colno) from e


def _validation_error(e: ValidationError, source: Source) -> DocumentError:
    first = e.errors()[0]
    return DocumentError(first["msg"], source=str(source) if source else None, location=first["loc"])


def read_text(path: Union[str, Path]) -> str:
    """Lee un documento; los errores de E/S se reportan como DocumentError"""
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise DocumentError(f"no se puede leer: {e.strerror}", source=str(path)) from e


def resolve_spec(header: FieldHeader, default: Optional[FieldSpec] = None) -> FieldSpec:
    """Cuerpo declarado en el documento, o `default`, o DEFAULT_FIELD"""
    if header.field is None:
        return default if default is not None else FieldSpec.parse(settings.DEFAULT_FIELD)
    return FieldSpec.parse(header.field, p=header.p)


# ========== ELEMENTOS: DOCUMENTO → VALOR ==========

def _rows(spec: FieldSpec, rows) -> DenseMatrix:
    return dense_from_values(spec, rows)


def _finitary(spec: FieldSpec, entries) -> FinitaryMatrix:
    return FinitaryMatrix(spec, tuple((i, j, spec.element(v)) for i, j, v in entries))


def _build(doc, spec: FieldSpec) -> Element:
    if isinstance(doc, FinitaryDocument):
        return _finitary(spec, doc.entries)
    if isinstance(doc, ScaledDocument):
        return ScaledFinitary(spec.element(doc.scalar), _finitary(spec, doc.entries))
    if isinstance(doc, StringDocument):
        tail = IdentityTail()
        if isinstance(doc.tail, PeriodicTailDocument):
            tail = PeriodicTail(_rows(spec, doc.tail.block))
        return StringMatrix(spec, tuple(_rows(spec, b) for b in doc.blocks), tail)
    if isinstance(doc, TriangularDocument):
        if (doc.prefix is None) == (doc.rule is None):
            raise DocumentError("un documento triangular lleva exactamente uno de 'prefix' o 'rule'")
        if doc.prefix is not None:
            return UpperTriangularOracle.from_prefix(spec, doc.prefix)
        return UpperTriangularOracle.from_rule(spec, doc.rule, doc.params, doc.bandwidth)
    if isinstance(doc, WordDocument):
        letters = []
        for letter in doc.letters:
            inner = letter.element
            if inner.field is not None and resolve_spec(inner, spec) != spec:
                raise DocumentError(f"letra sobre {inner.field} en una palabra sobre {spec.tag}")
            letters.append(Letter(_build(inner, spec), letter.inverse))
        tail = None
        if doc.tail is not None:
            tail = TailCertificate(spec.element(doc.tail.scalar), doc.tail.window)
        return GroupWord(spec, tuple(letters), tail)
    raise DocumentError(f"tipo de documento no soportado: {type(doc).__name__}")


def element_from_document(doc, default_spec: Optional[FieldSpec] = None, source: Source = None) -> Element:
    """
    Construye el valor descrito por un documento ya validado.

    Raises:
        DocumentError: si el cuerpo es desconocido o la matriz no es válida
    """
    try:
        return _build(doc, resolve_spec(doc, default_spec))
    except DocumentError as e:
        if e.source is None and source:
            raise DocumentError(e.message, source=str(source), location=e.location) from e
        raise
    except (LatticeError, ValueError, TypeError) as e:
        raise DocumentError(str(e), source=str(source) if source else None) from e


def parse_element(text: str, default_spec: Optional[FieldSpec] = None, source: Source = None) -> Element:
    """
    Interpreta el texto de un documento de elemento.

    Example:
        >>> g = parse_element('{"kind": "finitary", "entries": [[0, 1, "1"]]}')
        >>> g.is_transvection()
        True
    """
    data = _load_json(text, source)
    try:
        doc = _ELEMENT_ADAPTER.validate_python(data)
    except ValidationError as e:
        raise _validation_error(e, source) from e
    return element_from_document(doc, default_spec, source)


def load_element(path: Union[str, Path], default_spec: Optional[FieldSpec] = None) -> Element:
    return parse_element(read_text(path), default_spec, source=path)


# ========== ELEMENTOS: VALOR → DOCUMENTO ==========

def _scalars(rows: DenseMatrix):
    return [[str(v) for v in row] for row in rows]


def _payload(g: Element):
    if isinstance(g, FinitaryMatrix):
        return FinitaryDocument(entries=deltas_list(g))
    if isinstance(g, ScaledFinitary):
        return ScaledDocument(scalar=str(g.scalar), entries=deltas_list(g.body))
    if isinstance(g, StringMatrix):
        tail = IdentityTailDocument()
        if isinstance(g.tail, PeriodicTail):
            tail = PeriodicTailDocument(block=_scalars(g.tail.block))
        return StringDocument(blocks=[_scalars(b) for b in g.blocks], tail=tail)
    if isinstance(g, UpperTriangularOracle):
        presentation = g.presentation
        if isinstance(presentation, ExplicitPrefix):
            return TriangularDocument(prefix=_scalars(presentation.matrix))
        if isinstance(presentation, BandedRule) and not presentation.custom:
            bandwidth = presentation.bandwidth if presentation.name in ("constant_band", "geometric") else None
            return TriangularDocument(
                rule=presentation.name, params=[str(v) for v in presentation.params], bandwidth=bandwidth
            )
        raise DocumentError(f"la regla de banda '{presentation.name}' no es serializable")
    if isinstance(g, GroupWord):
        tail = None
        if g.tail is not None:
            tail = TailCertificateDocument(scalar=str(g.tail.scalar), window=g.tail.window)
        letters = [LetterDocument(element=_payload(l.generator), inverse=l.inverted) for l in g.letters]
        return WordDocument(letters=letters, tail=tail)
    raise DocumentError(f"no se puede serializar {type(g).__name__}")


def element_to_document(g: Element):
    """Documento con cabecera de cuerpo; las letras de una palabra no la repiten"""
    doc = _payload(g)
    return doc.model_copy(update=g.spec.to_document())


# ========== DESCRIPTORES ==========

def descriptor_to_document(d: NormalSubgroupDescriptor, include_witness: bool = False) -> DescriptorDocument:
    """
    Example:
        >>> q = FieldSpec.rationals()
        >>> doc = descriptor_to_document(NormalSubgroupDescriptor.central(UnitSubgroup.generated_by(q, [2])))
        >>> doc.variant, doc.gens
        ('central', ['2'])
    """
    node = node_of_descriptor(d)
    fields = dict(variant=d.variant.value, node=node.value if node else None, **d.spec.to_document())
    if d.variant is DescriptorVariant.CENTRAL:
        fields.update(gens=[str(g) for g in d.unit.generators], full=d.unit.full)
    elif d.variant is DescriptorVariant.SANDWICH:
        fields.update(
            gens=[(str(a), str(b)) for a, b in d.pair.generators],
            alpha_full=d.pair.alpha_full,
            delta_full=d.pair.delta_full,
        )
    if include_witness and d.witness is not None:
        fields["witness"] = witness_to_document(d.witness)
    return DescriptorDocument(**fields)


def descriptor_from_document(doc: DescriptorDocument, default_spec: Optional[FieldSpec] = None) -> NormalSubgroupDescriptor:
    try:
        spec = resolve_spec(doc, default_spec)
        if doc.variant == DescriptorVariant.FULL.value:
            return NormalSubgroupDescriptor.full(spec)
        if doc.variant == DescriptorVariant.CENTRAL.value:
            if any(isinstance(g, tuple) for g in doc.gens):
                raise DocumentError("los generadores de un descriptor central son escalares")
            return NormalSubgroupDescriptor.central(
                UnitSubgroup(spec, tuple(spec.element(g) for g in doc.gens), full=doc.full)
            )
        if any(not isinstance(g, tuple) for g in doc.gens):
            raise DocumentError("los generadores de un descriptor sandwich son pares")
        pairs = tuple((spec.element(a), spec.element(b)) for a, b in doc.gens)
        witness = witness_from_document(doc.witness, spec) if doc.witness is not None else None
        return NormalSubgroupDescriptor.sandwich(
            PairSubgroup(spec, pairs, alpha_full=doc.alpha_full, delta_full=doc.delta_full), witness=witness
        )
    except DocumentError:
        raise
    except (LatticeError, ValueError, TypeError) as e:
        raise DocumentError(str(e)) from e


def parse_descriptor(text: str, default_spec: Optional[FieldSpec] = None, source: Source = None) -> NormalSubgroupDescriptor:
    data = _load_json(text, source)
    try:
        doc = DescriptorDocument.model_validate(data)
    except ValidationError as e:
        raise _validation_error(e, source) from e
    return descriptor_from_document(doc, default_spec)


# ========== TESTIGOS ==========

def witness_to_document(w: TransvectionWitness) -> WitnessDocument:
    return WitnessDocument(
        source=_payload(w.source),
        target=deltas_list(w.target),
        word=[WitnessLetterDocument(conjugator=deltas_list(x), exponent=e) for x, e in w.word],
        strategy=w.strategy,
        **w.target.spec.to_document(),
    )


def witness_from_document(doc: WitnessDocument, default_spec: Optional[FieldSpec] = None, source: Source = None) -> TransvectionWitness:
    """
    Reconstruye un testigo sin verificarlo (la verificación es verify_witness).

    Raises:
        DocumentError: si alguna matriz del documento no es válida
    """
    try:
        spec = resolve_spec(doc, default_spec)
        g = _build(doc.source, spec)
        word = tuple((_finitary(spec, letter.conjugator), letter.exponent) for letter in doc.word)
        return TransvectionWitness(g, _finitary(spec, doc.target), word, doc.strategy)
    except DocumentError:
        raise
    except (LatticeError, ValueError, TypeError) as e:
        raise DocumentError(str(e), source=str(source) if source else None) from e


def parse_witness(text: str, default_spec: Optional[FieldSpec] = None, source: Source = None) -> TransvectionWitness:
    data = _load_json(text, source)
    try:
        doc = WitnessDocument.model_validate(data)
    except ValidationError as e:
        raise _validation_error(e, source) from e
    return witness_from_document(doc, default_spec, source)


# ========== SALIDA ==========

def dump_document(doc: BaseModel) -> str:
    """JSON estable con sangría; se omiten los campos nulos"""
    return doc.model_dump_json(indent=2, exclude_none=True) + "\n"


def write_document(doc: BaseModel, path: Union[str, Path]) -> None:
    Path(path).write_text(dump_document(doc), encoding="utf-8")
    logger.info(f"✅ Documento escrito en {path}")
