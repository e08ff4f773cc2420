"""
Errores del Dominio
Responsabilidad: Jerarquía de excepciones de cf_lattice

Todas las excepciones heredan de LatticeError. Las que corresponden a un error
de uso de Python (división por cero, valor inválido) heredan también de la
excepción estándar equivalente para que `except ValueError` siga funcionando.
"""

from typing import Optional, Sequence, Union


class LatticeError(Exception):
    """Base de todos los errores de cf_lattice"""


# ========== ARITMÉTICA ==========

class FieldMismatch(LatticeError, ValueError):
    """Operandos definidos sobre cuerpos distintos"""


class DivisionByZero(LatticeError, ZeroDivisionError):
    """División o inversión de un cero del cuerpo"""


class ZeroInput(LatticeError, ValueError):
    """Se pasó 0 donde se exige un elemento de K*"""


class ContractViolation(LatticeError, ValueError):
    """Entrada fuera de la escala de escritorio (primo demasiado grande, etc.)"""


# ========== MATRICES ==========

class InvalidMatrix(LatticeError, ValueError):
    """Matriz mal formada o no invertible"""


class WindowUndetermined(LatticeError):
    """La presentación del conjugador no da una ventana calculable"""


class Undecidable(LatticeError):
    """El elemento no está presentado de forma que la pregunta sea decidible"""


class CertificationFailed(LatticeError):
    """Un certificado calculado o declarado no superó la comprobación exacta"""


# ========== PROCEDIMIENTOS ==========

class NotInProduct(LatticeError):
    """El elemento está demostrablemente fuera de D_sc × GL_fr"""


class SearchExhausted(LatticeError):
    """La búsqueda acotada de testigos terminó sin éxito"""


# ========== VERIFICACIÓN ==========

class AmbientTooLarge(LatticeError):
    """El grupo finito ambiente supera el orden permitido para fuerza bruta"""


class UnknownSuite(LatticeError, LookupError):
    """Identificador de suite desconocido"""


# ========== DOCUMENTOS ==========

class DocumentError(LatticeError, ValueError):
    """
    Documento JSON ilegible o inválido.

    Args:
        message: Descripción del problema
        source: Ruta o nombre del documento
        line: Línea (1-based) cuando el error es sintáctico
        column: Columna (1-based) cuando el error es sintáctico
        location: Ruta dentro del JSON cuando el error es de validación
    """

    def __init__(
        self,
        message: str,
        source: Optional[str] = None,
        line: Optional[int] = None,
        column: Optional[int] = None,
        location: Optional[Sequence[Union[str, int]]] = None,
    ):
        self.message = message
        self.source = source
        self.line = line
        self.column = column
        self.location = tuple(location) if location else ()
        super().__init__(self.__str__())

    def __str__(self) -> str:
        where = self.source or "<document>"
        if self.line is not None:
            where += f":{self.line}:{self.column}"
        if self.location:
            where += " at " + ".".join(str(part) for part in self.location)
        return f"{where}: {self.message}"
