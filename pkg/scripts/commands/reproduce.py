# -*- coding: utf-8 -*-
"""
Reproducción ejecutable de los ejemplos de referencia.

Cada objetivo recorre la cadena completa (dualidad, cámaras, abanicos,
colecciones primitivas, clasificación, paredes) y compara con ``golden``.
Imprime un reporte con marcas ✓ / ✗ y devuelve True si todo coincide.
"""

import logging
from typing import Dict, List, Optional, Sequence

from classify.bordering import bordering_status
from classify.contractions import contract_divisor, extract_ptb_base, flip_path, wall_crossing
from classify.report import classification_report
from cones.cone import Cone
from commands import golden
from gale.duality import gale_dual_of_f, gale_dual_of_w
from mori.relations import anticanonical, enumerate_primitive_collections, mori_cone
from search.families import qs_family
from search.hunt import SearchParams, hunt
from secondary_fan.chambers import Chamber, enumerate_chambers, mov_cone
from secondary_fan.fans import fan_from_chamber, is_smooth_chamber

logger = logging.getLogger(__name__)


class _Checks:
    """Acumula comprobaciones e imprime cada una al momento."""

    def __init__(self):
        self.fallos: List[str] = []
        self.total = 0

    def check(self, nombre: str, ok: bool, detalle: str = ""):
        self.total += 1
        if ok:
            print(f"  ✓ {nombre}")
        else:
            self.fallos.append(nombre)
            print(f"  ✗ {nombre}" + (f": {detalle}" if detalle else ""))

    @property
    def ok(self) -> bool:
        return not self.fallos


def _by_generators(chambers: Sequence[Chamber], expected: Dict[str, Sequence]) -> Dict[str, Optional[Chamber]]:
    """Asocia cada nombre de referencia con la cámara de esos generadores."""
    por_generadores = {frozenset(c.generators): c for c in chambers}
    return {nombre: por_generadores.get(frozenset(tuple(g) for g in gens)) for nombre, gens in expected.items()}


def _rows(M) -> List[List[int]]:
    return [list(f) for f in M.entries]


# ============================================================
# EX1
# ============================================================

def reproduce_ex1(c: _Checks):
    print("\n[ex1] Blow-up de ℙ³ en dos puntos")
    Q = gale_dual_of_f(golden.EX1_V)
    c.check("G(V) coincide con la W-matriz de referencia", _rows(Q) == golden.EX1_Q, f"{_rows(Q)}")
    V = gale_dual_of_w(Q)
    camaras = enumerate_chambers(Q, "mov")
    c.check("2 cámaras en Mov(Q)", len(camaras) == 2, f"{len(camaras)}")
    c.check("ambas cámaras lisas", all(x.smooth for x in camaras))
    encontradas = _by_generators(camaras, golden.EX1_CHAMBERS)
    c.check("generadores de las cámaras", all(encontradas.values()))
    if not all(encontradas.values()):
        return
    g1, g2 = encontradas["g1"], encontradas["g2"]

    e1 = bordering_status(Q, g1)
    maxbord = sorted(h.normal for h in e1.hyperplanes if h.maxbord)
    c.check("γ1 maxbord respecto de x2=0 y x3=0", maxbord == golden.EX1_MAXBORD_G1, f"{maxbord}")
    e2 = bordering_status(Q, g2)
    c.check("γ2 intbord y no maxbord", e2.kind == "intbord", e2.kind)

    contraccion = contract_divisor(V, Q, g2, golden.EX1_G2_CONTRACTION_NORMAL)
    c.check("V' de la contracción", _rows(contraccion.fan_matrix) == golden.EX1_V_CONTRACTED)
    c.check("Q' de la contracción", _rows(contraccion.weight_matrix) == golden.EX1_Q_CONTRACTED,
            f"{_rows(contraccion.weight_matrix)}")
    c.check("divisor excepcional D4", contraccion.contracted_index + 1 == golden.EX1_EXCEPTIONAL)

    for nombre, camara in (("g1", g1), ("g2", g2)):
        reporte = classification_report(V, Q, camara)
        etiqueta, numero = golden.EX1_LABELS[nombre]
        c.check(f"clasificación de γ{nombre[1:]}: {etiqueta}",
                (reporte.case_label, reporte.case_number) == (etiqueta, numero),
                f"{reporte.case_label} ({reporte.case_number})")
        if nombre == "g2":
            bajada = [p for p in reporte.contraction_chain if p.kind == "blow-down"]
            c.check("índice excepcional 4 en la cadena",
                    bool(bajada) and bajada[0].indices == (golden.EX1_EXCEPTIONAL - 1,))


# ============================================================
# EX2
# ============================================================

def reproduce_ex2(c: _Checks):
    print("\n[ex2] Ejemplo con una cámara de contracción de tipo fibra")
    V = gale_dual_of_w(golden.EX2_Q)
    c.check("G(Q) coincide con la F-matriz de referencia", _rows(V) == golden.EX2_V, f"{_rows(V)}")
    Q = gale_dual_of_f(V)
    c.check("Mov(Q)", sorted(mov_cone(Q).generators) == golden.EX2_MOV, f"{list(mov_cone(Q).generators)}")
    camaras = enumerate_chambers(Q, "mov")
    c.check("3 cámaras en Mov(Q)", len(camaras) == 3, f"{len(camaras)}")
    encontradas = _by_generators(camaras, golden.EX2_CHAMBERS)
    c.check("generadores de las cámaras", all(encontradas.values()))
    if not all(encontradas.values()):
        return
    total = bordering_status(Q, encontradas["totally_maxbord"])
    c.check("γ1 totalmente maxbord", total.totally_maxbord)
    c.check("γ3 maxbord", bordering_status(Q, encontradas["maxbord"]).kind == "maxbord")
    medio = bordering_status(Q, encontradas["bordering"])
    caras = [list(h.face_generators) for h in medio.hyperplanes if h.dim == 1]
    c.check("γ2 bordante en el rayo ⟨q3⟩", golden.EX2_BORDERING_FACE in caras, f"{caras}")
    reporte = classification_report(V, Q, encontradas["bordering"])
    c.check("γ2: contracción de tipo fibra no fibracional", reporte.case_label == "fiber_type_nonfibration",
            f"{reporte.case_label}")


# ============================================================
# CEX4
# ============================================================

def reproduce_cex4(c: _Checks):
    print("\n[cex4] Contraejemplo de dimensión 4 y rango 4")
    Q = gale_dual_of_f(golden.CEX4_V)
    c.check("G(V) coincide con la W-matriz de referencia", _rows(Q) == golden.CEX4_Q, f"{_rows(Q)}")
    V = gale_dual_of_w(Q)
    c.check("Mov(Q) = ⟨q3,q4,q6,q7,w1⟩",
            sorted(mov_cone(Q).generators) == sorted(golden.CEX4_MOV), f"{list(mov_cone(Q).generators)}")
    camaras = enumerate_chambers(Q, "mov")
    c.check("10 cámaras", len(camaras) == 10, f"{len(camaras)}")
    referencia = {k: gens for k, (gens, _) in golden.CEX4_CHAMBERS.items()}
    g = _by_generators(camaras, referencia)
    c.check("generadores de las 10 cámaras", all(g.values()))
    if not all(g.values()):
        return
    lisas = {k: golden.CEX4_CHAMBERS[k][1] == g[k].smooth for k in g}
    c.check("lisas salvo γ4 y γ6", all(lisas.values()), f"{lisas}")
    print(f"    {sum(1 for x in camaras if x.smooth)} cámaras lisas de {len(camaras)}")

    g10 = g["g10"]
    fan = fan_from_chamber(V, Q, g10)
    conos = sorted(tuple(i + 1 for i in I) for I in fan.maximal_cones)
    c.check("Σ10 con los 18 conos maximales", conos == sorted(golden.CEX4_FAN_G10))
    c.check("γ10 lisa por menores de V", is_smooth_chamber(V, Q, g10))
    c.check("γ10 no bordante: γ10 ∩ ∂⟨Q⟩ = {0}", bordering_status(Q, g10).kind == "nonbordering")

    colecciones = enumerate_primitive_collections(V, Q, g10)
    mori = mori_cone(V, Q, g10, colecciones)
    c.check("NE(X) generado por las filas de G10⁻¹",
            mori == Cone.from_generators(golden.CEX4_G10_INVERSE))
    relaciones = {col.relation for col in colecciones}
    c.check("las cuatro relaciones primitivas de referencia",
            all(r in relaciones for r in golden.CEX4_NEF_RELATIONS))
    suma = tuple(sum(x) for x in zip(*golden.CEX4_NEF_RELATIONS))
    c.check("su suma es la relación v6+v7+v8", suma == golden.CEX4_RELATION_SUM and suma in relaciones)

    k = anticanonical(Q, g10)
    c.check("−K = (4,4,6,3)", k.anticanonical_class == golden.CEX4_ANTICANONICAL)
    c.check("−K nef, grande y no amplio (weak Fano)", k.verdict == "weak_fano", f"{k.verdict}")
    c.check("cara mínima ⟨q6,w2,w3⟩",
            sorted(k.face_generators) == sorted(golden.CEX4_ANTICANONICAL_FACE), f"{list(k.face_generators)}")

    for origen, destino, normal, relacion in golden.CEX4_WALLS:
        pared = wall_crossing(Q, g[origen], g[destino])
        c.check(f"pared γ{origen[1:]}→γ{destino[1:]}",
                pared.normal == normal and pared.relation == relacion, f"{pared.normal} {pared.relation}")

    camino = flip_path(Q, camaras, g["g1"], g10)
    c.check("camino de flips γ1→γ10 de longitud 3", len(camino.steps) == 3, f"{len(camino.steps)}")
    nombres = {x.id: k for k, x in g.items()}
    rutas = {tuple(nombres.get(i, i) for i in r) for r in (camino.route,) + camino.alternatives}
    c.check("las rutas mínimas de referencia están entre las encontradas",
            set(golden.CEX4_FLIP_ROUTES) <= rutas, f"{sorted(rutas)}")

    g1 = g["g1"]
    fibra = next(col for col in enumerate_primitive_collections(V, Q, g1)
                 if tuple(i + 1 for i in col.indices) == golden.CEX4_PTB_COLLECTION)
    base = extract_ptb_base(V, Q, g1, fibra)
    c.check("Q' de la base", _rows(base.weight_matrix) == golden.CEX4_BASE_Q, f"{_rows(base.weight_matrix)}")
    c.check("V' de la base", _rows(base.fan_matrix) == golden.CEX4_BASE_V, f"{_rows(base.fan_matrix)}")

    reporte = classification_report(V, Q, g10)
    c.check("γ10: counterexample_interior_nef", reporte.case_label == "counterexample_interior_nef")

    hallazgos = hunt(SearchParams(n=4, r=4, max_candidates=0), extra_candidates=[golden.CEX4_Q])
    c.check("la búsqueda recupera γ10 al inyectar Q",
            [h.chamber.id for h in hallazgos] == [g10.id], f"{[h.chamber.id for h in hallazgos]}")


# ============================================================
# QS
# ============================================================

def reproduce_qs(c: _Checks, s: int):
    print(f"\n[qs] Familia Q_s con s = {s}")
    Q = qs_family(s)
    V = gale_dual_of_w(Q)
    c.check(f"V_s de {s + 3}×{s + 7}", (V.n, V.size) == (s + 3, s + 7), f"{V.n}×{V.size}")
    camaras = enumerate_chambers(Q, "mov")
    c.check("10 cámaras", len(camaras) == 10, f"{len(camaras)}")
    referencia = {k: gens for k, (gens, _) in golden.CEX4_CHAMBERS.items()}
    g = _by_generators(camaras, referencia)
    c.check("mismo abanico secundario que Q", all(g.values()))
    if not all(g.values()):
        return
    lisas = {k: golden.CEX4_CHAMBERS[k][1] == g[k].smooth for k in g}
    c.check("mismo patrón liso/singular", all(lisas.values()), f"{lisas}")
    g10 = g["g10"]
    c.check("γ10 lisa y no bordante",
            g10.smooth and bordering_status(Q, g10).kind == "nonbordering")
    k = anticanonical(Q, g10)
    c.check(f"−K = {golden.qs_anticanonical(s)}", k.anticanonical_class == golden.qs_anticanonical(s))
    if s >= 2:
        c.check("−K ∉ γ10", not k.nef)


def reproduce(target: str, s: int = 2) -> bool:
    """
    Ejecuta un objetivo de reproducción.

    Args:
        target: ex1, ex2, cex4 o qs
        s: Parámetro de la familia Q_s

    Returns:
        True si todas las comprobaciones pasan
    """
    if target not in golden.TARGETS:
        raise ValueError(f"Objetivo desconocido: {target}")
    print("=" * 80)
    print(f"REPRODUCCIÓN: {target}")
    print("=" * 80)
    c = _Checks()
    if target == "ex1":
        reproduce_ex1(c)
    elif target == "ex2":
        reproduce_ex2(c)
    elif target == "cex4":
        reproduce_cex4(c)
    else:
        reproduce_qs(c, s)

    print("\n" + "=" * 80)
    if c.ok:
        print(f"✓ PASS: {c.total} comprobaciones")
    else:
        print(f"✗ FAIL: {len(c.fallos)} de {c.total} comprobaciones fallaron")
    print("=" * 80)
    return c.ok
