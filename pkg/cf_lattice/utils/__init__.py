"""
Utils Package
Exports para utilidades de retículos enteros
"""

from .integer_lattice import (
    HermiteForm,
    extended_gcd,
    hermite_normal_form,
    relation_rows,
    lattice_basis,
    solve_in_lattice,
    lattice_contains,
)

__all__ = [
    # Integer lattice
    "HermiteForm",
    "extended_gcd",
    "hermite_normal_form",
    "relation_rows",
    "lattice_basis",
    "solve_in_lattice",
    "lattice_contains",
]
