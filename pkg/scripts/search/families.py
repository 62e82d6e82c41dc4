# -*- coding: utf-8 -*-
"""
Familias explícitas de W-matrices.
"""

import logging
from typing import Sequence, Tuple

from gale.validation import WMatrix, validate_w
from secondary_fan.chambers import Chamber, chamber_at

logger = logging.getLogger(__name__)

# Columnas q1..q6 y q8 del contraejemplo de rango 4
_QS_HEAD = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 1, 1, 0), (1, 0, 1, 0), (0, 0, 1, 0), (1, 1, 2, 1))
_QS_REPEATED = (1, 1, 1, 1)
_QS_LAST = (0, 0, 0, 1)


def qs_family(s: int) -> WMatrix:
    """
    W-matriz Q_s de 4×(7+s): columnas q1..q6, s copias de (1,1,1,1) y (0,0,0,1).

    Para s = 1 es la W-matriz del contraejemplo de dimensión 4 y rango 4.
    """
    if s < 1:
        raise ValueError(f"s debe ser ≥ 1, se recibió {s}")
    columnas = list(_QS_HEAD) + [_QS_REPEATED] * s + [_QS_LAST]
    filas = [[c[i] for c in columnas] for i in range(4)]
    return validate_w(filas, expect_r=4).require()


def rank_two_normal_form(j1: int, middle: Sequence[int], tail: int) -> Tuple[WMatrix, Chamber]:
    """
    W-matriz de rango 2 en forma normal

        ( 1 … 1   a_1 … a_k   0 … 0 )
        ( 0 … 0    1  …  1    1 … 1 )

    con j1 columnas (1,0), las columnas (a_i, 1) de ``middle`` (a_i > 0, se
    ordenan de mayor a menor) y ``tail`` columnas (0,1); junto con la cámara
    γ = ⟨q_{j1}, q_{j1+1}⟩.

    Raises:
        ValueError: Si j1 < 2, algún a_i ≤ 0 o hay menos de dos columnas de fibra
    """
    if j1 < 2:
        raise ValueError(f"j1 debe ser ≥ 2, se recibió {j1}")
    if any(a <= 0 for a in middle):
        raise ValueError("Las entradas intermedias deben ser positivas")
    if len(middle) + tail < 2:
        raise ValueError("Se necesitan al menos dos columnas con segunda coordenada 1")
    intermedias = sorted(middle, reverse=True)
    fila1 = [1] * j1 + intermedias + [0] * tail
    fila2 = [0] * j1 + [1] * (len(intermedias) + tail)
    Q = validate_w([fila1, fila2], expect_r=2).require()
    a = intermedias[0] if intermedias else 0
    camara = chamber_at(Q, (1 + a, 1))
    return Q, camara
