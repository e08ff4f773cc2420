"""
CLI Package
Front end de línea de órdenes de cf_lattice
"""

from .main import main, build_parser

__all__ = ["main", "build_parser"]
