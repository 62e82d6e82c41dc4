# -*- coding: utf-8 -*-
"""
Jerarquía de errores de Gale Suite.

Los errores matemáticos (matriz inválida, abanico no proyectivo, ...) son
resultados legítimos de un análisis y la consola los traduce al código de
salida 1. Los errores de consistencia indican que falló una verificación
interna y se traducen al código 2.
"""

from typing import List, Optional, Tuple


class GaleSuiteError(Exception):
    """Error base de la suite."""


class MathematicalError(GaleSuiteError):
    """Resultado matemático negativo (código de salida 1)."""


class ConsistencyError(GaleSuiteError):
    """Falló una verificación interna (código de salida 2)."""


class InvalidMatrixError(MathematicalError):
    """La matriz no cumple las cláusulas de una F-matriz o W-matriz."""

    def __init__(self, message: str, violations: Optional[List[Tuple[str, str]]] = None):
        super().__init__(message)
        self.violations = list(violations or [])

    def __str__(self) -> str:
        base = super().__str__()
        if not self.violations:
            return base
        detalle = "; ".join(f"({clausula}) {mensaje}" for clausula, mensaje in self.violations)
        return f"{base}: {detalle}"


class MatrixFormatError(MathematicalError):
    """Archivo de matriz mal formado."""

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"línea {line}: {message}"
        super().__init__(message)
        self.line = line


class SingularMatrixError(MathematicalError):
    """Matriz singular donde se requería una invertible."""


class NoSolutionError(MathematicalError):
    """Sistema lineal inconsistente."""


class PositiveRefError(MathematicalError):
    """No se encontró una base no negativa en forma escalonada.

    ``reason`` vale ``"estructural"`` cuando ninguna combinación de filas
    inferiores puede anular una entrada negativa, y ``"cota"`` cuando la
    búsqueda agotó la cota de coeficientes. ``column`` es la columna (desde 0) que
    bloqueó la búsqueda estructural.
    """

    def __init__(self, message: str, reason: str, column: Optional[int] = None):
        super().__init__(message)
        self.reason = reason
        self.column = column


class FanNotProjectiveError(MathematicalError):
    """La intersección del haz de conos no es de dimensión máxima."""


class NotDivisorialContractionError(MathematicalError):
    """La pared elegida no define una contracción divisorial."""


class NonAdjacentChambersError(MathematicalError):
    """Las cámaras no comparten una faceta."""


class NotMaxbordError(MathematicalError):
    """La cámara no es maxbord respecto del hiperplano pedido."""


class SmoothnessError(MathematicalError):
    """Se requería una cámara lisa."""


class InvalidRelationError(MathematicalError):
    """El vector no pertenece al retículo de filas de Q."""


class UnknownChamberError(MathematicalError):
    """Identificador de cámara desconocido."""


class UnsupportedRankError(MathematicalError):
    """Rango no soportado por la operación pedida."""
