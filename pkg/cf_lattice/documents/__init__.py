"""
Documents Package
Exports para lectura y escritura de documentos JSON
"""

from .codec import (
    read_text,
    resolve_spec,
    parse_element,
    load_element,
    element_from_document,
    element_to_document,
    parse_descriptor,
    descriptor_from_document,
    descriptor_to_document,
    parse_witness,
    witness_from_document,
    witness_to_document,
    dump_document,
    write_document,
)

__all__ = [
    # Lectura
    "read_text",
    "resolve_spec",
    # Elementos
    "parse_element",
    "load_element",
    "element_from_document",
    "element_to_document",
    # Descriptores
    "parse_descriptor",
    "descriptor_from_document",
    "descriptor_to_document",
    # Testigos
    "parse_witness",
    "witness_from_document",
    "witness_to_document",
    # Salida
    "dump_document",
    "write_document",
]
