# -*- coding: utf-8 -*-
"""
Representante escalonado no negativo ("REF positiva") de un retículo de filas.

Procedimiento:
    1. Forma de Hermite H = U·M (pivotes positivos).
    2. De la última fila hacia arriba, a cada fila con entradas negativas se le
       suma una combinación con coeficientes enteros no negativos de las filas
       de Hermite inferiores. Se recorren las combinaciones en anchura: por suma
       total creciente y, a igual suma, en orden lexicográfico. La suma total
       está acotada por ``bound``.
    3. Una matriz que ya es escalonada y no negativa se devuelve sin cambios.
"""

import logging
from typing import Iterator, Optional, Tuple

import numpy as np

from core import settings
from core.errors import InvalidMatrixError, PositiveRefError
from exact_linalg.matrices import as_int_matrix, hnf, identity, is_row_echelon

logger = logging.getLogger(__name__)


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Tuplas de ``parts`` enteros no negativos que suman ``total``, en orden lexicográfico."""
    if parts == 1:
        yield (total,)
        return
    for primero in range(total + 1):
        for resto in _compositions(total - primero, parts - 1):
            yield (primero,) + resto


def positive_ref_with_transform(M, bound: Optional[int] = None) -> Tuple[np.ndarray, np.ndarray]:
    """
    REF positiva junto con la transformación unimodular usada.

    Args:
        M: Matriz entera de rango completo por filas
        bound: Cota de la suma de coeficientes por fila (por defecto GALE_REF_BOUND)

    Returns:
        Tupla (P, T) con P = T·M, T unimodular, P escalonada con entradas ≥ 0

    Raises:
        InvalidMatrixError: Si M no tiene rango completo por filas
        PositiveRefError: Si no se encuentra base no negativa
    """
    cota = settings.REF_BOUND if bound is None else bound
    A = as_int_matrix(M)
    r = A.shape[0]
    if is_row_echelon(A) and all(x >= 0 for x in A.flat):
        return A.copy(), identity(r)

    H, U = hnf(A)
    if any(all(x == 0 for x in H[i]) for i in range(r)):
        raise InvalidMatrixError("La matriz no tiene rango completo por filas",
                                 [("a", "filas linealmente dependientes")])

    P = H.copy()
    T = U.copy()
    for i in range(r - 1, -1, -1):
        negativas = [j for j in range(A.shape[1]) if H[i, j] < 0]
        if not negativas:
            continue
        inferiores = list(range(i + 1, r))
        for j in negativas:
            if not any(H[k, j] > 0 for k in inferiores):
                raise PositiveRefError(
                    f"La fila {i + 1} tiene una entrada negativa en la columna {j + 1} "
                    f"que ninguna fila inferior puede compensar",
                    reason="estructural",
                    column=j,
                )
        encontrada = None
        for total in range(1, cota + 1):
            for coefs in _compositions(total, len(inferiores)):
                candidata = H[i].copy()
                for c, k in zip(coefs, inferiores):
                    if c:
                        candidata = candidata + c * H[k]
                if all(x >= 0 for x in candidata):
                    encontrada = coefs
                    break
            if encontrada is not None:
                break
        if encontrada is None:
            raise PositiveRefError(
                f"No se encontró combinación no negativa para la fila {i + 1} "
                f"con suma de coeficientes ≤ {cota}",
                reason="cota",
            )
        for c, k in zip(encontrada, inferiores):
            if c:
                P[i] = P[i] + c * H[k]
                T[i] = T[i] + c * U[k]
        logger.debug(f"Fila {i + 1}: coeficientes {encontrada}")

    return P, T


def positive_ref(M, bound: Optional[int] = None) -> np.ndarray:
    """REF positiva con el mismo retículo de filas que M."""
    P, _ = positive_ref_with_transform(M, bound)
    return P
