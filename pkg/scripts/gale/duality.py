# -*- coding: utf-8 -*-
"""
Dualidad de Gale entera entre F-matrices y W-matrices.

    Q = G(V): REF positiva de una base saturada del núcleo entero de V.
    V = G(Q): forma de Hermite de una base saturada del núcleo entero de Q;
              se rechaza si alguna columna no es primitiva.

En ambos sentidos V·Qᵀ = 0.

Si ningún representante escalonado no negativo existe con el orden dado de
columnas, gale_pair_of_f reordena las columnas de V y devuelve el orden usado.
"""

import itertools
import logging
from dataclasses import dataclass, replace
from typing import Optional, Tuple

from core import settings
from core.errors import InvalidMatrixError, PositiveRefError
from exact_linalg.matrices import kernel_saturated, primitive_vector, to_tuples
from gale.positive_ref import positive_ref
from gale.validation import FMatrix, WMatrix, validate_f, validate_w

logger = logging.getLogger(__name__)


def gale_dual_of_f(V, bound: Optional[int] = None) -> WMatrix:
    """
    W-matriz dual de una F-matriz.

    Args:
        V: FMatrix (o matriz entera que se valida)
        bound: Cota de búsqueda de la REF positiva

    Returns:
        WMatrix en REF positiva

    Raises:
        InvalidMatrixError: Si V no es F-matriz o el dual no es W-matriz
        PositiveRefError: Si falla la normalización
    """
    if not isinstance(V, FMatrix):
        V = validate_f(V).require()
    K = kernel_saturated(V.array)
    if K.shape[0] == 0:
        raise InvalidMatrixError("El núcleo de V es trivial", [("a", "r = 0")])
    Q = positive_ref(K, bound)
    return validate_w(Q, expect_r=V.r).require()


@dataclass(frozen=True)
class GalePair:
    """Par (V, Q) con V·Qᵀ = 0; ``column_order[k]`` es la columna original en la posición k."""

    fan_matrix: FMatrix
    weight_matrix: WMatrix
    column_order: Tuple[int, ...]

    @property
    def reordered(self) -> bool:
        return self.column_order != tuple(range(len(self.column_order)))

    def relabel(self, indices) -> Tuple[int, ...]:
        """Índices originales (desde 0) en la numeración reordenada."""
        posicion = {j: k for k, j in enumerate(self.column_order)}
        return tuple(sorted(posicion[j] for j in indices))


def gale_pair_of_f(V, bound: Optional[int] = None) -> GalePair:
    """
    Dual de Gale de una F-matriz, reordenando columnas si hace falta.

    Cuando la REF positiva falla de forma estructural en la columna j, la
    columna j se mueve al final y se reintenta; si el orden ya se probó se
    pasa a la siguiente permutación no probada. Se prueban a lo sumo
    GALE_REF_REORDERINGS órdenes.

    Raises:
        InvalidMatrixError: Si V no es F-matriz
        PositiveRefError: Si ningún orden probado admite REF positiva, o si
            se agota la cota de coeficientes
    """
    if not isinstance(V, FMatrix):
        V = validate_f(V).require()
    identidad = orden = tuple(range(V.size))
    probados = set()
    permutaciones = itertools.permutations(range(V.size))
    while len(probados) < settings.REF_REORDERINGS:
        probados.add(orden)
        W = V if orden == identidad else replace(V, entries=to_tuples(V.submatrix(orden)))
        try:
            Q = gale_dual_of_f(W, bound)
        except PositiveRefError as e:
            if e.reason != "estructural":
                raise
            k = e.column
            siguiente = orden[:k] + orden[k + 1:] + (orden[k],)
            if siguiente in probados:
                siguiente = next((p for p in permutaciones if p not in probados), None)
            if siguiente is None:
                break
            orden = siguiente
            continue
        if W is not V:
            logger.warning(f"Columnas de V reordenadas: {[j + 1 for j in orden]}")
        return GalePair(fan_matrix=W, weight_matrix=Q, column_order=orden)
    raise PositiveRefError(
        f"Ningún orden de columnas admite REF positiva ({len(probados)} probados)",
        reason="estructural",
    )


def gale_dual_of_w(Q) -> FMatrix:
    """
    F-matriz dual de una W-matriz, en forma canónica.

    Args:
        Q: WMatrix (o matriz entera que se valida)

    Raises:
        InvalidMatrixError: Si Q no es W-matriz, o si el dual tiene una columna
            no primitiva (Q no es la matriz de pesos de una variedad completa
            con ese abanico)
    """
    if not isinstance(Q, WMatrix):
        Q = validate_w(Q).require()
    K = kernel_saturated(Q.array)
    if K.shape[0] == 0:
        raise InvalidMatrixError("El núcleo de Q es trivial", [("a", "n = 0")])
    no_primitivas = [j for j, columna in enumerate(K.T.tolist()) if list(primitive_vector(columna)) != columna]
    if no_primitivas:
        columnas = ", ".join(str(j + 1) for j in no_primitivas)
        raise InvalidMatrixError(
            f"El dual de Gale tiene columnas no primitivas ({columnas}): Q no es dual de una F-matriz reducida",
            [("reducida", f"columnas {columnas}")],
        )
    return validate_f(K, expect_n=Q.n).require()
