# -*- coding: utf-8 -*-
"""
Validación de F-matrices (matrices de abanico) y W-matrices (matrices de pesos).

Cada validación devuelve un ``ValidationReport`` con la lista de cláusulas
violadas; nunca lanza excepción por una matriz inválida. ``require()`` convierte
el reporte en la matriz tipada o en ``InvalidMatrixError``.
"""

import itertools
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from cones.cone import Cone
from core.errors import InvalidMatrixError, PositiveRefError
from exact_linalg.matrices import (
    as_int_matrix,
    columns,
    is_row_echelon,
    is_saturated,
    kernel_saturated,
    primitive_vector,
    rank,
    row_basis,
    smith_invariants,
    to_tuples,
)
from gale.positive_ref import positive_ref

logger = logging.getLogger(__name__)

Rows = Tuple[Tuple[int, ...], ...]


# ============================================================
# TIPOS
# ============================================================

@dataclass(frozen=True)
class _IntegerMatrix:
    entries: Rows

    @property
    def array(self) -> np.ndarray:
        return as_int_matrix(self.entries)

    @property
    def size(self) -> int:
        """Número de columnas n + r."""
        return len(self.entries[0])

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(fila[j] for fila in self.entries)

    @property
    def columns(self) -> List[Tuple[int, ...]]:
        return [self.column(j) for j in range(self.size)]

    def submatrix(self, indices) -> np.ndarray:
        return self.array[:, list(indices)]


@dataclass(frozen=True)
class FMatrix(_IntegerMatrix):
    """Matriz de abanico n×(n+r): sus columnas son los generadores de los rayos."""

    f_complete: bool = True
    reduced: bool = True
    cf: bool = True

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def r(self) -> int:
        return self.size - self.n


@dataclass(frozen=True)
class WMatrix(_IntegerMatrix):
    """Matriz de pesos r×(n+r) en REF positiva: sus columnas generan Eff(X)."""

    @property
    def r(self) -> int:
        return len(self.entries)

    @property
    def n(self) -> int:
        return self.size - self.r


@dataclass
class ValidationReport:
    """Resultado de una validación: cláusulas violadas y banderas."""

    kind: str
    shape: Tuple[int, int]
    violations: List[Tuple[str, str]] = field(default_factory=list)
    flags: Dict[str, bool] = field(default_factory=dict)
    matrix: Optional[Union[FMatrix, WMatrix]] = None

    @property
    def valid(self) -> bool:
        return not self.violations

    def require(self) -> Union[FMatrix, WMatrix]:
        if not self.valid:
            raise InvalidMatrixError(f"{self.kind}-matriz inválida", self.violations)
        return self.matrix


# ============================================================
# F-MATRICES
# ============================================================

def validate_f(M, expect_n: Optional[int] = None) -> ValidationReport:
    """
    Valida una F-matriz.

    Cláusulas: (a) rango n y al menos n+1 columnas; (b) las columnas generan
    ℝⁿ como cono; (c) ninguna columna nula; (d) ninguna columna es múltiplo
    positivo de otra; (e) CF: las columnas generan ℤⁿ (solo bandera).
    Se informa además si la matriz es reducida (columnas primitivas).

    Args:
        M: Matriz entera
        expect_n: Número de filas esperado (opcional)

    Returns:
        ValidationReport con ``matrix`` de tipo FMatrix si es válida
    """
    A = as_int_matrix(M)
    n, total = A.shape
    reporte = ValidationReport(kind="F", shape=(n, total))
    cols = columns(A)

    if expect_n is not None and n != expect_n:
        reporte.violations.append(("a", f"se esperaban {expect_n} filas, hay {n}"))
    if total <= n:
        reporte.violations.append(("a", f"se necesitan al menos {n + 1} columnas, hay {total}"))
    rango = rank(A)
    if rango != n:
        reporte.violations.append(("a", f"rango {rango} distinto de n = {n}"))

    nulas = [j + 1 for j, c in enumerate(cols) if not any(c)]
    if nulas:
        reporte.violations.append(("c", f"columnas nulas: {nulas}"))

    primitivas: Dict[Tuple[int, ...], int] = {}
    for j, c in enumerate(cols):
        if not any(c):
            continue
        clave = primitive_vector(c)
        if clave in primitivas:
            reporte.violations.append(
                ("d", f"las columnas {primitivas[clave] + 1} y {j + 1} son múltiplos positivos")
            )
        else:
            primitivas[clave] = j

    f_complete = False
    if rango == n:
        cono = Cone.from_generators(cols, ambient_dim=n)
        f_complete = len(cono.lineality) == n
        if not f_complete:
            reporte.violations.append(("b", "el cono generado por las columnas no es ℝⁿ"))

    reduced = all(primitive_vector(c) == c for c in cols if any(c))
    cf = rango == n and smith_invariants(A) == [1] * n
    reporte.flags = {"f_complete": f_complete, "reduced": reduced, "cf": cf}
    if reporte.valid:
        reporte.matrix = FMatrix(entries=to_tuples(A), f_complete=f_complete, reduced=reduced, cf=cf)
    return reporte


# ============================================================
# W-MATRICES
# ============================================================

def _sublattice_on(B: np.ndarray, soporte: Tuple[int, ...]) -> List[Tuple[int, ...]]:
    """Generadores de {x ∈ L : x_j = 0 fuera de ``soporte``}, restringidos al soporte."""
    resto = [j for j in range(B.shape[1]) if j not in soporte]
    if resto:
        K = kernel_saturated(B[:, resto].T)
        if K.shape[0] == 0:
            return []
        generadores = K.dot(B)
    else:
        generadores = B
    vectores = [tuple(int(generadores[i, j]) for j in soporte) for i in range(generadores.shape[0])]
    return [v for v in vectores if any(v)]


def validate_w(M, expect_r: Optional[int] = None) -> ValidationReport:
    """
    Valida una W-matriz.

    Cláusulas: (a) rango r; (b) retículo de filas saturado; (c) W-positiva
    (admite REF no negativa); (d) ninguna columna nula; (e) el retículo no
    contiene vectores de la base canónica; (f) el retículo no contiene vectores
    con exactamente dos entradas no nulas de signos opuestos.

    Args:
        M: Matriz entera
        expect_r: Número de filas esperado (opcional)

    Returns:
        ValidationReport con ``matrix`` de tipo WMatrix (REF positiva) si es válida
    """
    A = as_int_matrix(M)
    r, total = A.shape
    reporte = ValidationReport(kind="W", shape=(r, total))

    if expect_r is not None and r != expect_r:
        reporte.violations.append(("a", f"se esperaban {expect_r} filas, hay {r}"))
    rango = rank(A)
    if rango != r:
        reporte.violations.append(("a", f"rango {rango} distinto de r = {r}"))
    if total <= r:
        reporte.violations.append(("a", f"se necesitan al menos {r + 1} columnas, hay {total}"))

    if rango == r and not is_saturated(A):
        reporte.violations.append(("b", "el retículo de filas no es saturado (tiene cotorsión)"))

    nulas = [j + 1 for j in range(total) if all(A[i, j] == 0 for i in range(r))]
    if nulas:
        reporte.violations.append(("d", f"columnas nulas: {nulas}"))

    representante = None
    if rango == r:
        if is_row_echelon(A) and all(x >= 0 for x in A.flat):
            representante = A
        else:
            try:
                representante = positive_ref(A)
                logger.warning("W-matriz reemplazada por su REF positiva")
            except PositiveRefError as e:
                reporte.violations.append(("c", f"no es W-positiva ({e.reason}): {e}"))

        B = row_basis(A)
        for j in range(total):
            sub = _sublattice_on(B, (j,))
            if sub and _gcd_all(v[0] for v in sub) == 1:
                reporte.violations.append(("e", f"el retículo contiene e_{j + 1}"))
        for i, j in itertools.combinations(range(total), 2):
            sub = _sublattice_on(B, (i, j))
            if not sub:
                continue
            if rank(sub) == 2 or any(a * b < 0 for a, b in sub):
                reporte.violations.append(
                    ("f", f"el retículo contiene un vector con soporte {{{i + 1},{j + 1}}} de signos opuestos")
                )

    if reporte.valid:
        reporte.matrix = WMatrix(entries=to_tuples(representante))
    return reporte


def _gcd_all(valores) -> int:
    g = 0
    for v in valores:
        g = math.gcd(g, int(v))
    return g
