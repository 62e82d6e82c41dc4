# -*- coding: utf-8 -*-
"""
Sección afín de Eff(Q), Mov(Q) y sus cámaras.

Cada rayo no nulo x ∈ ⟨Q⟩ se corta con el hiperplano Σx_i = 1 (las columnas
de una W-matriz son no negativas, así que la suma es positiva) y se guardan
las r − 1 primeras coordenadas de x/Σx como fracciones exactas. Para r = 3 la
sección es plana y se dibuja en SVG; para r = 4 solo se emite el JSON.
"""

import io
import logging
import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Polygon  # noqa: E402

from classify.reports import SectionCellModel, SectionModel, fraction_text  # noqa: E402
from core.errors import UnsupportedRankError  # noqa: E402
from gale.validation import WMatrix  # noqa: E402
from secondary_fan.chambers import Chamber, eff_cone, mov_cone  # noqa: E402

logger = logging.getLogger(__name__)

Point = Tuple[Fraction, ...]

COLOR_EFF = "#f2f2f2"
COLOR_MOV = "#dbe8f5"
COLOR_SMOOTH = "#9cc3e6"
COLOR_SINGULAR = "#f4b183"
COLOR_SELECTED = "#2e75b6"


def section_point(x: Sequence[int]) -> Point:
    """Coordenadas afines de x/Σx (se descarta la última)."""
    total = sum(x)
    if total <= 0:
        raise ValueError(f"El vector {list(x)} no corta la sección Σx = 1")
    return tuple(Fraction(int(v), total) for v in x[:-1])


def _ordered(points: List[Point]) -> List[Point]:
    """Vértices de un polígono convexo ordenados por ángulo alrededor del centroide."""
    if len(points[0]) != 2 or len(points) < 3:
        return sorted(points)
    cx = sum(float(p[0]) for p in points) / len(points)
    cy = sum(float(p[1]) for p in points) / len(points)
    return sorted(points, key=lambda p: math.atan2(float(p[1]) - cy, float(p[0]) - cx))


def _texto(points: List[Point]) -> List[List[str]]:
    return [[fraction_text(x) for x in p] for p in points]


def section(Q: WMatrix, chambers: Sequence[Chamber], aliases: Optional[Sequence[str]] = None,
            selected: Optional[str] = None) -> SectionModel:
    """
    Sección exacta de la configuración.

    Args:
        Q: W-matriz de rango 3 o 4
        chambers: Cámaras a incluir (normalmente las de Mov)
        aliases: Alias g1 … gK en el mismo orden
        selected: Identificador de la cámara a resaltar

    Raises:
        UnsupportedRankError: Si r no es 3 ni 4
    """
    if Q.r not in (3, 4):
        raise UnsupportedRankError(f"La sección solo está disponible para r = 3 o 4 (r = {Q.r})")
    aliases = list(aliases) if aliases is not None else [None] * len(chambers)
    celdas = []
    for camara, alias in zip(chambers, aliases):
        vertices = _ordered([section_point(g) for g in camara.generators])
        celdas.append(SectionCellModel(
            id=camara.id,
            alias=alias,
            vertices=_texto(vertices),
            smooth=camara.smooth,
            selected=camara.id == selected,
        ))
    return SectionModel(
        r=Q.r,
        chart="x/Σx, coordenadas 1..r−1",
        columns=_texto([section_point(q) for q in Q.columns]),
        eff=_texto(_ordered([section_point(g) for g in eff_cone(Q).generators])),
        mov=_texto(_ordered([section_point(g) for g in mov_cone(Q).generators])),
        chambers=celdas,
    )


def _floats(vertices: List[List[str]]) -> List[Tuple[float, float]]:
    return [(float(Fraction(x)), float(Fraction(y))) for x, y in vertices]


def render_svg(model: SectionModel) -> str:
    """
    Dibuja la sección plana (r = 3) como SVG.

    El archivo no lleva fecha y los identificadores internos se generan con
    una semilla fija, de modo que la salida es idéntica entre ejecuciones.

    Raises:
        UnsupportedRankError: Si r ≠ 3
    """
    if model.r != 3:
        raise UnsupportedRankError(f"El SVG solo está disponible para r = 3 (r = {model.r})")

    matplotlib.rcParams["svg.hashsalt"] = "gale-suite"
    fig, ax = plt.subplots(figsize=(6, 6))
    try:
        ax.add_patch(Polygon(_floats(model.eff), closed=True, facecolor=COLOR_EFF,
                             edgecolor="black", linewidth=1.0, zorder=0))
        ax.add_patch(Polygon(_floats(model.mov), closed=True, facecolor=COLOR_MOV,
                             edgecolor="black", linewidth=1.5, zorder=1))
        for celda in model.chambers:
            color = COLOR_SELECTED if celda.selected else (
                COLOR_SMOOTH if celda.smooth else COLOR_SINGULAR)
            puntos = _floats(celda.vertices)
            ax.add_patch(Polygon(puntos, closed=True, facecolor=color, edgecolor="black",
                                 linewidth=0.8, alpha=0.7, zorder=2))
            cx = sum(p[0] for p in puntos) / len(puntos)
            cy = sum(p[1] for p in puntos) / len(puntos)
            ax.text(cx, cy, celda.alias or celda.id, ha="center", va="center", fontsize=8, zorder=4)

        for j, (x, y) in enumerate(_floats(model.columns), start=1):
            ax.plot([x], [y], "o", color="black", markersize=3, zorder=3)
            ax.annotate(f"q{j}", (x, y), textcoords="offset points", xytext=(4, 4), fontsize=7)

        ax.set_xlim(-0.05, 1.05)
        ax.set_ylim(-0.05, 1.05)
        ax.set_aspect("equal")
        ax.set_xlabel("x1 / Σx")
        ax.set_ylabel("x2 / Σx")
        ax.set_title("Sección de Mov(Q) y sus cámaras")

        buffer = io.StringIO()
        fig.savefig(buffer, format="svg", metadata={"Date": None})
    finally:
        plt.close(fig)
    logger.debug(f"SVG con {len(model.chambers)} cámaras")
    return buffer.getvalue()
