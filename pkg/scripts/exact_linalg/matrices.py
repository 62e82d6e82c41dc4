# -*- coding: utf-8 -*-
"""
Álgebra lineal exacta sobre ℤ y ℚ.

Las matrices enteras se representan como ``numpy.ndarray`` con ``dtype=object``
para conservar enteros de Python de precisión arbitraria. Las formas normales
de Smith, la resolución exacta y las inversas racionales se delegan en sympy;
la forma de Hermite se calcula aquí porque además se necesita la matriz de
transformación unimodular.

Convención de Hermite (por filas): H = U·M escalonada superior, pivotes
positivos y las entradas sobre cada pivote reducidas a [0, pivote).
"""

import logging
import math
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

import numpy as np
import sympy as sp
from sympy.matrices.normalforms import smith_normal_form
from sympy.polys.domains import ZZ

from core.errors import NoSolutionError, SingularMatrixError

logger = logging.getLogger(__name__)

IntVector = Tuple[int, ...]


# ============================================================
# CONSTRUCCIÓN Y CONVERSIÓN
# ============================================================

def as_int_matrix(rows, allow_empty: bool = False) -> np.ndarray:
    """
    Convierte filas de enteros en una matriz ``object`` de enteros exactos.

    Args:
        rows: Lista de filas, tupla de tuplas o ndarray
        allow_empty: Permite matrices sin filas (uso interno)

    Returns:
        ndarray bidimensional con dtype=object

    Raises:
        ValueError: Si hay entradas no enteras, filas irregulares o dimensiones nulas
    """
    if isinstance(rows, np.ndarray):
        if rows.ndim != 2:
            raise ValueError(f"Se esperaba una matriz bidimensional, se recibió ndim={rows.ndim}")
        data = rows.tolist()
        ncols = rows.shape[1]
    else:
        data = [list(fila) for fila in rows]
        ncols = len(data[0]) if data else 0

    if any(len(fila) != ncols for fila in data):
        raise ValueError("Las filas de la matriz tienen longitudes distintas")
    if not allow_empty and (len(data) == 0 or ncols == 0):
        raise ValueError("La matriz debe tener dimensiones positivas")

    matriz = np.empty((len(data), ncols), dtype=object)
    for i, fila in enumerate(data):
        for j, valor in enumerate(fila):
            if isinstance(valor, bool) or not isinstance(valor, (int, np.integer)):
                if isinstance(valor, Fraction) and valor.denominator == 1:
                    valor = valor.numerator
                else:
                    raise ValueError(f"Entrada no entera en ({i}, {j}): {valor!r}")
            matriz[i, j] = int(valor)
    return matriz


def zero_rows(ncols: int) -> np.ndarray:
    """Matriz con cero filas y ``ncols`` columnas."""
    return np.empty((0, ncols), dtype=object)


def identity(n: int) -> np.ndarray:
    matriz = np.zeros((n, n), dtype=object)
    for i in range(n):
        matriz[i, i] = 1
    return matriz


def to_tuples(M: np.ndarray) -> Tuple[IntVector, ...]:
    """Filas de M como tupla de tuplas de enteros de Python."""
    return tuple(tuple(int(x) for x in fila) for fila in M.tolist())


def columns(M: np.ndarray) -> List[IntVector]:
    return [tuple(int(x) for x in M[:, j]) for j in range(M.shape[1])]


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def primitive_vector(v: Sequence[int]) -> IntVector:
    """Divide un vector entero por el mcd de sus entradas (el cero queda igual)."""
    g = 0
    for x in v:
        g = math.gcd(g, int(x))
    if g == 0:
        return tuple(int(x) for x in v)
    return tuple(int(x) // g for x in v)


def integral_vector(v: Sequence) -> IntVector:
    """Múltiplo positivo primitivo de un vector racional."""
    denominador = 1
    for x in v:
        denominador = math.lcm(denominador, Fraction(x).denominator)
    return primitive_vector([int(Fraction(x) * denominador) for x in v])


def _to_fraction(x) -> Fraction:
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    x = sp.sympify(x)
    if not x.is_Rational:
        raise ValueError(f"Valor no racional: {x}")
    return Fraction(int(x.p), int(x.q))


def _to_sympy(M) -> sp.Matrix:
    filas = M.tolist() if isinstance(M, np.ndarray) else [list(f) for f in M]
    return sp.Matrix([[sp.Rational(Fraction(x).numerator, Fraction(x).denominator) for x in fila]
                      for fila in filas])


# ============================================================
# FORMA NORMAL DE HERMITE
# ============================================================

def hnf(M) -> Tuple[np.ndarray, np.ndarray]:
    """
    Forma normal de Hermite por filas con matriz de transformación.

    Args:
        M: Matriz entera m×k (puede tener filas nulas o dependientes)

    Returns:
        Tupla (H, U) con H = U·M, U unimodular m×m. Las filas nulas de H
        quedan al final.
    """
    A = as_int_matrix(M, allow_empty=True).copy()
    m, k = A.shape
    U = identity(m)
    fila = 0
    for col in range(k):
        if fila == m:
            break
        no_nulas = [i for i in range(fila, m) if A[i, col] != 0]
        if not no_nulas:
            continue
        # Euclides entre filas hasta dejar una sola entrada no nula
        while len(no_nulas) > 1:
            piv = min(no_nulas, key=lambda i: abs(A[i, col]))
            for i in no_nulas:
                if i != piv:
                    q = A[i, col] // A[piv, col]
                    A[i] = A[i] - q * A[piv]
                    U[i] = U[i] - q * U[piv]
            no_nulas = [i for i in range(fila, m) if A[i, col] != 0]
        piv = no_nulas[0]
        if piv != fila:
            A[[fila, piv]] = A[[piv, fila]]
            U[[fila, piv]] = U[[piv, fila]]
        if A[fila, col] < 0:
            A[fila] = -A[fila]
            U[fila] = -U[fila]
        pivote = A[fila, col]
        for i in range(fila):
            q = A[i, col] // pivote
            if q:
                A[i] = A[i] - q * A[fila]
                U[i] = U[i] - q * U[fila]
        fila += 1
    return A, U


def row_basis(M) -> np.ndarray:
    """Filas no nulas de la forma de Hermite: base canónica del retículo de filas."""
    H, _ = hnf(M)
    filas = [i for i in range(H.shape[0]) if any(x != 0 for x in H[i])]
    return H[filas] if filas else zero_rows(H.shape[1])


def row_lattice_equal(A, B) -> bool:
    """Compara retículos de filas mediante sus formas de Hermite."""
    HA, HB = row_basis(A), row_basis(B)
    return HA.shape == HB.shape and to_tuples(HA) == to_tuples(HB)


def pivot_columns(M: np.ndarray) -> List[int]:
    """Columna del primer elemento no nulo de cada fila no nula."""
    pivotes = []
    for fila in M.tolist():
        for j, x in enumerate(fila):
            if x != 0:
                pivotes.append(j)
                break
    return pivotes


def is_row_echelon(M: np.ndarray) -> bool:
    pivotes = pivot_columns(M)
    return len(pivotes) == M.shape[0] and all(a < b for a, b in zip(pivotes, pivotes[1:]))


# ============================================================
# RANGO, NÚCLEO Y SATURACIÓN
# ============================================================

def rank(M) -> int:
    """Rango exacto por eliminación entera sin fracciones."""
    filas = [[int(x) for x in f] for f in (M.tolist() if isinstance(M, np.ndarray) else M)]
    if not filas:
        return 0
    ncols = len(filas[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(filas)) if filas[i][col] != 0), None)
        if piv is None:
            continue
        filas[r], filas[piv] = filas[piv], filas[r]
        a = filas[r][col]
        for i in range(r + 1, len(filas)):
            b = filas[i][col]
            if b:
                nueva = [a * x - b * y for x, y in zip(filas[i], filas[r])]
                filas[i] = list(primitive_vector(nueva))
        r += 1
        if r == len(filas):
            break
    return r


def kernel_saturated(M) -> np.ndarray:
    """
    Base saturada del núcleo entero {x ∈ ℤ^k : M·x = 0}.

    Las filas de U cuya imagen en la forma de Hermite de Mᵀ es nula generan
    el núcleo sobre ℤ (U es unimodular), de modo que el retículo obtenido es
    saturado. El resultado se devuelve en forma de Hermite.

    Args:
        M: Matriz entera m×k (se admite m = 0)

    Returns:
        Matriz (k − rango)×k; sin filas si M es inyectiva
    """
    A = as_int_matrix(M, allow_empty=True)
    k = A.shape[1]
    if A.shape[0] == 0:
        return identity(k)
    H, U = hnf(A.T)
    nulas = [i for i in range(H.shape[0]) if all(x == 0 for x in H[i])]
    if not nulas:
        return zero_rows(k)
    return row_basis(U[nulas])


def smith_invariants(M) -> List[int]:
    """Factores invariantes no nulos (forma normal de Smith vía sympy)."""
    A = as_int_matrix(M, allow_empty=True)
    if A.shape[0] == 0 or A.shape[1] == 0:
        return []
    D = smith_normal_form(sp.Matrix(A.tolist()), domain=ZZ)
    factores = []
    for i in range(min(D.shape)):
        if D[i, i] != 0:
            factores.append(abs(int(D[i, i])))
    return factores


def is_saturated(M) -> bool:
    """True si el retículo de filas coincide con su saturación en ℤ^k."""
    return all(d == 1 for d in smith_invariants(M))


# ============================================================
# DETERMINANTE, INVERSA Y SISTEMAS
# ============================================================

def det(M) -> int:
    A = as_int_matrix(M)
    if A.shape[0] != A.shape[1]:
        raise ValueError(f"El determinante requiere una matriz cuadrada, se recibió {A.shape}")
    return int(sp.Matrix(A.tolist()).det(method="bareiss"))


def rational_inverse(M) -> np.ndarray:
    """
    Inversa racional exacta.

    Returns:
        ndarray object de ``Fraction``

    Raises:
        SingularMatrixError: Si det(M) = 0
    """
    A = _to_sympy(M)
    if A.rows != A.cols:
        raise ValueError(f"La inversa requiere una matriz cuadrada, se recibió {A.shape}")
    if A.det(method="bareiss") == 0:
        raise SingularMatrixError("La matriz es singular, no tiene inversa")
    inversa = A.inv()
    resultado = np.empty(inversa.shape, dtype=object)
    for i in range(inversa.rows):
        for j in range(inversa.cols):
            resultado[i, j] = _to_fraction(inversa[i, j])
    return resultado


def solve_exact(A, b: Sequence) -> List[Fraction]:
    """
    Resuelve A·x = b sobre ℚ. Si hay parámetros libres se fijan en cero.

    Raises:
        NoSolutionError: Si el sistema es inconsistente
    """
    MA = _to_sympy(A)
    vb = _to_sympy([[x] for x in b])
    try:
        solucion, parametros = MA.gauss_jordan_solve(vb)
    except ValueError as e:
        raise NoSolutionError(f"El sistema no tiene solución: {e}")
    if parametros.shape[0]:
        solucion = solucion.subs({p: 0 for p in parametros})
    return [_to_fraction(x) for x in solucion]


def project_out(v: Sequence, basis: Iterable[Sequence[int]]) -> List[Fraction]:
    """Proyección ortogonal de v sobre el complemento del espacio generado por ``basis``."""
    B = [list(b) for b in basis]
    if not B:
        return [Fraction(x) for x in v]
    gram = [[dot(bi, bj) for bj in B] for bi in B]
    coef = solve_exact(gram, [dot(bi, v) for bi in B])
    return [Fraction(x) - sum(c * b[k] for c, b in zip(coef, B)) for k, x in enumerate(v)]
