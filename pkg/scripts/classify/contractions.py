# -*- coding: utf-8 -*-
"""
Contracciones asociadas a facetas de una cámara.

- extract_ptb_base: base de la fibración de un γ maxbord respecto de H_P.
- contract_divisor: contracción divisorial a través de una faceta H' con un
  único índice j tal que n'·q_j < 0 (Exc = D_j).
- wall_crossing / flip_path: relaciones de pared entre cámaras adyacentes y
  caminos mínimos de flips dentro de Mov(Q).
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from cones.cone import Cone
from core.errors import (
    ConsistencyError,
    NonAdjacentChambersError,
    NotDivisorialContractionError,
    NotMaxbordError,
)
from exact_linalg.matrices import (
    as_int_matrix,
    dot,
    hnf,
    rational_inverse,
    solve_exact,
)
from gale.duality import gale_dual_of_w, gale_pair_of_f
from gale.positive_ref import positive_ref_with_transform
from gale.validation import FMatrix, WMatrix, validate_f, validate_w
from mori.relations import PrimitiveCollection
from secondary_fan.chambers import Chamber, chamber_at

logger = logging.getLogger(__name__)

Index = Tuple[int, ...]
Vector = Tuple[int, ...]


# ============================================================
# TIPOS
# ============================================================

@dataclass(frozen=True)
class BaseExtraction:
    """Base (V', Q', γ') de la fibración y aplicación lineal ℝ^r → ℝ^{r−1} entre clases."""

    fan_matrix: FMatrix
    weight_matrix: WMatrix
    chamber: Chamber
    class_map: Tuple[Vector, ...]
    deleted: Index


@dataclass(frozen=True)
class DivisorialContraction:
    fan_matrix: FMatrix
    weight_matrix: WMatrix
    contracted_index: int
    chamber: Chamber
    pushforward: Tuple[Vector, ...]
    normal: Vector


@dataclass(frozen=True)
class FacetContraction:
    normal: Vector
    relation: Tuple[int, ...]
    exceptional: Index
    kind: str


@dataclass(frozen=True)
class WallCrossing:
    source: str
    target: str
    normal: Vector
    relation: Tuple[int, ...]
    contract_fwd: Index
    contract_bwd: Index


@dataclass(frozen=True)
class FlipPath:
    steps: Tuple[WallCrossing, ...]
    route: Tuple[str, ...]
    alternatives: Tuple[Tuple[str, ...], ...] = ()


def _relation(Q: WMatrix, normal: Sequence[int]) -> Tuple[int, ...]:
    return tuple(dot(normal, q) for q in Q.columns)


# ============================================================
# BASE DE UNA FIBRACIÓN (CASO MAXBORD)
# ============================================================

def _unimodular_with_last_row(normal: Sequence[int]) -> np.ndarray:
    """Matriz unimodular r×r cuya última fila es ``normal`` (primitiva)."""
    r = len(normal)
    H, W = hnf(as_int_matrix([[x] for x in normal]))
    if H[0, 0] != 1:
        raise ValueError(f"La normal {list(normal)} no es primitiva")
    inversa = rational_inverse(W)
    U = as_int_matrix([[int(inversa[j, i]) for j in range(r)] for i in range(r)])
    orden = list(range(1, r)) + [0]
    return U[orden]


def extract_ptb_base(V: FMatrix, Q: WMatrix, chamber: Chamber, collection: PrimitiveCollection) -> BaseExtraction:
    """
    Base de la fibración X → B de una cámara maxbord respecto del soporte de P.

    Se lleva H_P a {x_r = 0} con una transformación unimodular U, se borra la
    última fila y las columnas de P, y se vuelve a REF positiva. La cámara de
    la base es la imagen de γ ∩ H_P.

    Raises:
        NotMaxbordError: Si dim(γ ∩ H_P) < r − 1
        InvalidMatrixError: Si Q' no resulta una W-matriz
    """
    normal = collection.support.normal
    cara = chamber.cone.face_on(normal)
    if cara.dim != Q.r - 1:
        raise NotMaxbordError(
            f"La cámara {chamber.id} no es maxbord respecto de {list(normal)} (dim {cara.dim})"
        )
    if Q.r == 1:
        raise NotMaxbordError("Una cámara de rango 1 no tiene base")

    U = _unimodular_with_last_row(normal)
    transformada = U.dot(Q.array)
    resto = [j for j in range(Q.size) if j not in collection.indices]
    recortada = transformada[: Q.r - 1][:, resto]
    P, T = positive_ref_with_transform(recortada)
    Q2 = validate_w(P, expect_r=Q.r - 1).require()
    V2 = gale_dual_of_w(Q2)

    aplicacion = T.dot(U[: Q.r - 1])
    imagenes = [tuple(int(x) for x in aplicacion.dot(as_int_matrix([list(g)]).T)[:, 0]) for g in cara.generators]
    base_cono = Cone.from_generators(imagenes, ambient_dim=Q.r - 1)
    base = chamber_at(Q2, base_cono.relint_point())
    if base.cone != base_cono:
        raise ConsistencyError(
            f"La imagen de γ ∩ H_P no es una cámara de la base: {list(base_cono.generators)}"
        )
    logger.info(f"Base de la fibración: Q' de {Q2.r}×{Q2.size}, cámara {base.id}")
    return BaseExtraction(
        fan_matrix=V2,
        weight_matrix=Q2,
        chamber=base,
        class_map=tuple(tuple(int(x) for x in fila) for fila in aplicacion.tolist()),
        deleted=tuple(collection.indices),
    )


# ============================================================
# CONTRACCIÓN DIVISORIAL
# ============================================================

def exceptional_indices(Q: WMatrix, normal: Sequence[int]) -> Index:
    """{j : n'·q_j < 0}: Exc(φ) = ⋂ D_j."""
    return tuple(j for j, x in enumerate(_relation(Q, normal)) if x < 0)


def contract_divisor(V: FMatrix, Q: WMatrix, chamber: Chamber, normal: Sequence[int]) -> DivisorialContraction:
    """
    Contracción divisorial a través de la faceta H' de γ con normal interior ``normal``.

    Args:
        V, Q: Par de Gale
        chamber: Cámara de partida
        normal: Normal interior de una faceta de γ

    Returns:
        DivisorialContraction con V' (sin la columna j, reordenada si la REF
        positiva lo exige), Q' = G(V'), el índice
        j del divisor excepcional y la cámara γ' imagen de γ ∩ H'

    Raises:
        NotDivisorialContractionError: Si el número de índices negativos no es 1
    """
    normal = tuple(normal)
    if normal not in chamber.cone.facet_normals:
        raise NotDivisorialContractionError(f"{list(normal)} no es normal de una faceta de {chamber.id}")
    negativos = exceptional_indices(Q, normal)
    if len(negativos) != 1:
        raise NotDivisorialContractionError(
            f"La faceta {list(normal)} tiene {len(negativos)} índices negativos, se necesita exactamente 1"
        )
    j = negativos[0]
    entradas = [fila[:j] + fila[j + 1:] for fila in V.entries]
    par = gale_pair_of_f(validate_f(entradas, expect_n=V.n).require())
    V2, Q2 = par.fan_matrix, par.weight_matrix

    # A·Q = Q'' con Q'' = Q' en la numeración de V y una columna nula en la posición j
    posicion = {i: k for k, i in enumerate(par.column_order)}
    ampliada = [
        [0 if i == j else fila[posicion[i if i < j else i - 1]] for i in range(Q.size)]
        for fila in Q2.entries
    ]
    Qt = Q.array.T
    filas = []
    for fila in ampliada:
        a = solve_exact(Qt, fila)
        if any(x.denominator != 1 for x in a):
            raise ConsistencyError("La aplicación de clases de la contracción no es entera")
        filas.append(tuple(int(x) for x in a))
    A = as_int_matrix(filas)

    cara = chamber.cone.face_on(normal)
    punto = [int(x) for x in A.dot(as_int_matrix([list(cara.relint_point())]).T)[:, 0]]
    imagen = chamber_at(Q2, punto)
    logger.info(f"Contracción divisorial de D_{j + 1}: cámara imagen {imagen.id}")
    return DivisorialContraction(
        fan_matrix=V2,
        weight_matrix=Q2,
        contracted_index=j,
        chamber=imagen,
        pushforward=tuple(filas),
        normal=normal,
    )


def facet_contractions(Q: WMatrix, chamber: Chamber) -> List[FacetContraction]:
    """
    Tipo de contracción asociado a cada faceta de γ: ``fibracion`` (ningún índice
    negativo, la faceta está en ∂⟨Q⟩), ``divisorial`` (uno) o ``flip`` (dos o más).
    """
    resultado = []
    for normal in chamber.cone.facet_normals:
        relacion = _relation(Q, normal)
        negativos = tuple(j for j, x in enumerate(relacion) if x < 0)
        if not negativos:
            tipo = "fibracion"
        elif len(negativos) == 1:
            tipo = "divisorial"
        else:
            tipo = "flip"
        resultado.append(FacetContraction(normal=normal, relation=relacion, exceptional=negativos, kind=tipo))
    return resultado


# ============================================================
# PAREDES Y FLIPS
# ============================================================

def wall_crossing(Q: WMatrix, source: Chamber, target: Chamber) -> WallCrossing:
    """
    Relación de pared n·Q entre dos cámaras adyacentes (n normal interior a ``source``).

    Raises:
        NonAdjacentChambersError: Si no comparten una faceta
    """
    comun = source.cone.intersect(target.cone)
    if comun.dim != Q.r - 1:
        raise NonAdjacentChambersError(f"Las cámaras {source.id} y {target.id} no son adyacentes")
    normal = next(
        n for n in source.cone.facet_normals if all(dot(n, g) == 0 for g in comun.generators)
    )
    relacion = _relation(Q, normal)
    return WallCrossing(
        source=source.id,
        target=target.id,
        normal=normal,
        relation=relacion,
        contract_fwd=tuple(j for j, x in enumerate(relacion) if x < 0),
        contract_bwd=tuple(j for j, x in enumerate(relacion) if x > 0),
    )


def adjacency(Q: WMatrix, chambers: Sequence[Chamber]) -> Dict[str, List[str]]:
    """Grafo de adyacencia por facetas compartidas, vecinos en orden de identificador."""
    grafo: Dict[str, List[str]] = {c.id: [] for c in chambers}
    for i, a in enumerate(chambers):
        for b in chambers[i + 1:]:
            if a.cone.intersect(b.cone).dim == Q.r - 1:
                grafo[a.id].append(b.id)
                grafo[b.id].append(a.id)
    for vecinos in grafo.values():
        vecinos.sort()
    return grafo


def _shortest_routes(grafo: Dict[str, List[str]], origen: str, destino: str) -> List[Tuple[str, ...]]:
    distancia = {origen: 0}
    cola = deque([origen])
    while cola:
        actual = cola.popleft()
        for v in grafo[actual]:
            if v not in distancia:
                distancia[v] = distancia[actual] + 1
                cola.append(v)
    if destino not in distancia:
        return []

    rutas: List[Tuple[str, ...]] = []

    def extender(ruta: Tuple[str, ...]):
        ultimo = ruta[-1]
        if ultimo == destino:
            rutas.append(ruta)
            return
        for v in grafo[ultimo]:
            if distancia.get(v) == distancia[ultimo] + 1 and distancia[v] <= distancia[destino]:
                extender(ruta + (v,))

    extender((origen,))
    return rutas


def flip_path(Q: WMatrix, chambers: Sequence[Chamber], source: Chamber, target: Chamber) -> FlipPath:
    """
    Camino mínimo de cruces de pared entre dos cámaras de Mov(Q).

    La ruta canónica es la primera en orden de identificadores (BFS con vecinos
    ordenados); las demás rutas mínimas se listan como alternativas.

    Raises:
        ConsistencyError: Si las cámaras no están conectadas
    """
    if source.id == target.id:
        return FlipPath(steps=(), route=(source.id,))
    por_id = {c.id: c for c in chambers}
    grafo = adjacency(Q, chambers)
    rutas = _shortest_routes(grafo, source.id, target.id)
    if not rutas:
        raise ConsistencyError(f"Las cámaras {source.id} y {target.id} no están conectadas")
    canonica = rutas[0]
    pasos = tuple(
        wall_crossing(Q, por_id[a], por_id[b]) for a, b in zip(canonica, canonica[1:])
    )
    return FlipPath(steps=pasos, route=canonica, alternatives=tuple(rutas[1:]))

