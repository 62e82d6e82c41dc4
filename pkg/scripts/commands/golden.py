# -*- coding: utf-8 -*-
"""
Datos de referencia de los ejemplos reproducibles (índices de columna desde 1).

ex1  : blow-up de ℙ³ en dos puntos y su modelo PTB (rango 3)
ex2  : ex1 con un generador más; cámara con contracción de tipo fibra no fibracional
cex4 : variedad tórica lisa proyectiva de dimensión 4 y rango 4 sin divisores nef no grandes
qs   : familia Q_s obtenida repitiendo la columna (1,1,1,1)
"""

# ============================================================
# EX1
# ============================================================

EX1_V = [
    [1, 0, 0, 0, -1, 1],
    [0, 1, 0, 0, -1, 1],
    [0, 0, 1, -1, -1, 1],
]
EX1_Q = [
    [1, 1, 1, 0, 1, 0],
    [0, 0, 1, 1, 0, 0],
    [0, 0, 0, 0, 1, 1],
]
EX1_CHAMBERS = {
    "g1": [(1, 0, 0), (1, 0, 1), (1, 1, 0)],
    "g2": [(1, 0, 1), (1, 1, 0), (1, 1, 1)],
}
EX1_MAXBORD_G1 = [(0, 0, 1), (0, 1, 0)]
EX1_G2_CONTRACTION_NORMAL = (1, -1, 0)
EX1_V_CONTRACTED = [
    [1, 0, 0, -1, 1],
    [0, 1, 0, -1, 1],
    [0, 0, 1, -1, 1],
]
EX1_Q_CONTRACTED = [
    [1, 1, 1, 1, 0],
    [0, 0, 0, 1, 1],
]
EX1_EXCEPTIONAL = 4
EX1_LABELS = {"g1": ("double_ptb_tower", 3), "g2": ("fibrational_contraction", 4)}

# ============================================================
# EX2
# ============================================================

EX2_Q = [
    [1, 1, 1, 0, 0, 1, 0],
    [0, 0, 1, 1, 1, 0, 0],
    [0, 0, 0, 0, 0, 1, 1],
]
EX2_V = [
    [1, 0, 0, 0, 0, -1, 1],
    [0, 1, 0, 0, 0, -1, 1],
    [0, 0, 1, 0, -1, -1, 1],
    [0, 0, 0, 1, -1, 0, 0],
]
EX2_MOV = [(0, 1, 0), (1, 0, 0), (1, 0, 1)]
EX2_CHAMBERS = {
    "totally_maxbord": [(1, 0, 0), (1, 0, 1), (1, 1, 0)],
    "bordering": [(1, 0, 1), (1, 1, 0), (1, 1, 1)],
    "maxbord": [(0, 1, 0), (1, 1, 0), (1, 1, 1)],
}
EX2_BORDERING_FACE = [(1, 1, 0)]

# ============================================================
# CEX4
# ============================================================

CEX4_V = [
    [1, 0, 0, -1, 0, 1, -1, 0],
    [0, 1, 0, 1, 0, 0, -1, 1],
    [0, 0, 1, 1, 0, -1, 0, 1],
    [0, 0, 0, 0, 1, -1, 1, 0],
]
CEX4_Q = [
    [1, 0, 0, 1, 0, 1, 1, 0],
    [0, 1, 1, 0, 0, 1, 1, 0],
    [0, 0, 1, 1, 1, 2, 1, 0],
    [0, 0, 0, 0, 0, 1, 1, 1],
]

_q3, _q4, _q6, _q7 = (0, 1, 1, 0), (1, 0, 1, 0), (1, 1, 2, 1), (1, 1, 1, 1)
_w1, _w2, _w3, _w4, _w5 = (1, 1, 1, 0), (2, 1, 2, 1), (1, 2, 2, 1), (2, 2, 3, 1), (2, 2, 2, 1)

CEX4_CHAMBERS = {
    "g1": ([_q3, _q4, _w1, _w4], True),
    "g2": ([_q4, _w1, _w2, _w4], True),
    "g3": ([_q3, _w1, _w3, _w4], True),
    "g4": ([_q7, _w2, _w3, _w5], False),
    "g5": ([_q3, _q4, _q6, _w4], True),
    "g6": ([_q6, _q7, _w2, _w3], False),
    "g7": ([_q3, _q6, _w3, _w4], True),
    "g8": ([_w1, _w2, _w3, _w4, _w5], True),
    "g9": ([_q4, _q6, _w2, _w4], True),
    "g10": ([_q6, _w2, _w3, _w4], True),
}
CEX4_MOV = [_q3, _q4, _q6, _q7, _w1]
CEX4_FAN_G10 = [
    (2, 4, 5, 7), (4, 5, 7, 8), (3, 4, 7, 8), (3, 4, 6, 7), (2, 4, 6, 7), (3, 5, 7, 8),
    (2, 4, 5, 8), (1, 3, 5, 7), (2, 5, 6, 7), (3, 4, 6, 8), (2, 4, 6, 8), (1, 5, 6, 7),
    (1, 3, 6, 7), (1, 3, 5, 8), (1, 2, 5, 8), (1, 2, 5, 6), (1, 3, 6, 8), (1, 2, 6, 8),
]
CEX4_G10_INVERSE = [
    (-1, -1, 1, 1),
    (0, 0, 1, -2),
    (1, 0, -1, 1),
    (0, 1, -1, 1),
]
CEX4_NEF_RELATIONS = [
    (-1, -1, 0, 0, 1, 1, 0, 1),
    (0, 0, 1, 1, 1, 0, -1, -2),
    (1, 0, -1, 0, -1, 0, 1, 1),
    (0, 1, 0, -1, -1, 0, 1, 1),
]
CEX4_RELATION_SUM = (0, 0, 0, 0, 0, 1, 1, 1)
CEX4_ANTICANONICAL = (4, 4, 6, 3)
CEX4_ANTICANONICAL_FACE = [_q6, _w2, _w3]
CEX4_WALLS = [
    ("g10", "g7", (1, 0, -1, 1), (1, 0, -1, 0, -1, 0, 1, 1)),
    ("g7", "g3", (-1, -1, 1, 1), (-1, -1, 0, 0, 1, 1, 0, 1)),
    ("g3", "g1", (0, 1, -1, 1), (0, 1, 0, -1, -1, 0, 1, 1)),
]
CEX4_FLIP_ROUTES = [("g1", "g3", "g7", "g10"), ("g1", "g2", "g9", "g10")]
CEX4_PTB_COLLECTION = (6, 7, 8)
CEX4_BASE_Q = [
    [1, 0, 0, 1, 0],
    [0, 1, 1, 0, 0],
    [0, 0, 1, 1, 1],
]
CEX4_BASE_V = [
    [1, 0, 0, -1, 1],
    [0, 1, -1, 0, 1],
]


def qs_anticanonical(s: int):
    return (3 + s, 3 + s, 5 + s, 2 + s)


TARGETS = ("ex1", "ex2", "cex4", "qs")
