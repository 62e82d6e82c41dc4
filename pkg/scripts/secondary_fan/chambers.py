# -*- coding: utf-8 -*-
"""
Cono móvil y cámaras del abanico secundario (descomposición GKZ) de una W-matriz.

Para cada subconjunto J de r columnas con det(Q_J) ≠ 0, β_J = ⟨Q_J⟩ es un cono
simplicial de dimensión máxima. La cámara que contiene un punto genérico x es

    γ(x) = ⋂ { β_J : x ∈ β_J }

y su haz ("bunch") es el conjunto de esos J. La enumeración recorre en anchura
las cámaras de la región (Mov o Eff) cruzando cada faceta por un punto racional
exacto que no está en ninguna pared candidata.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from cones.cone import Cone
from core.errors import ConsistencyError, UnknownChamberError
from core.pool import ordered_map
from exact_linalg.matrices import det, dot, integral_vector, rational_inverse
from gale.validation import WMatrix

logger = logging.getLogger(__name__)

Index = Tuple[int, ...]
Vector = Tuple[int, ...]


# ============================================================
# TIPOS
# ============================================================

@dataclass(frozen=True)
class Chamber:
    """Cámara: cono de dimensión máxima del abanico secundario."""

    cone: Cone
    bunch: Tuple[Index, ...]
    smooth: Optional[bool] = None
    region: str = "mov"

    @property
    def id(self) -> str:
        return chamber_id(self.cone)

    @property
    def generators(self) -> Tuple[Vector, ...]:
        return self.cone.generators


@dataclass(frozen=True)
class SimplicialCone:
    """β_J con sus normales interiores (filas de Q_J⁻¹ vueltas enteras)."""

    indices: Index
    determinant: int
    normals: Tuple[Vector, ...]

    def contains(self, x: Sequence) -> bool:
        return all(dot(n, x) >= 0 for n in self.normals)


def chamber_id(cone: Cone) -> str:
    """Identificador canónico: generadores primitivos ordenados, separados por '|'."""
    return "|".join(",".join(str(x) for x in g) for g in cone.generators)


def sign_normalized(v: Sequence[int]) -> Vector:
    """Primera entrada no nula positiva."""
    for x in v:
        if x != 0:
            return tuple(v) if x > 0 else tuple(-y for y in v)
    return tuple(v)


# ============================================================
# DATOS CACHEADOS POR W-MATRIZ
# ============================================================

@lru_cache(maxsize=64)
def simplicial_cones(Q: WMatrix) -> Dict[Index, SimplicialCone]:
    """Todos los β_J de dimensión máxima, indexados por J (índices desde 0)."""
    datos = {}
    for J in itertools.combinations(range(Q.size), Q.r):
        sub = Q.submatrix(J)
        d = det(sub)
        if d == 0:
            continue
        inversa = rational_inverse(sub)
        normales = tuple(integral_vector(list(inversa[i])) for i in range(Q.r))
        datos[J] = SimplicialCone(indices=J, determinant=d, normals=normales)
    logger.debug(f"{len(datos)} conos simpliciales de dimensión máxima")
    return datos


@lru_cache(maxsize=64)
def wall_hyperplanes(Q: WMatrix) -> Tuple[Vector, ...]:
    """Hiperplanos generados por r−1 columnas independientes (normales con signo normalizado)."""
    normales = set()
    for beta in simplicial_cones(Q).values():
        for n in beta.normals:
            normales.add(sign_normalized(n))
    return tuple(sorted(normales))


@lru_cache(maxsize=64)
def eff_cone(Q: WMatrix) -> Cone:
    """⟨Q⟩: cono pseudo-efectivo."""
    return Cone.from_generators(Q.columns, ambient_dim=Q.r)


@lru_cache(maxsize=64)
def mov_cone(Q: WMatrix) -> Cone:
    """
    Mov(Q) = ⋂ᵢ ⟨Q^{i}⟩, intersección de los conos que omiten una columna.

    Args:
        Q: W-matriz

    Returns:
        Cono móvil en ℝ^r
    """
    columnas = Q.columns
    conos = [
        Cone.from_generators(columnas[:i] + columnas[i + 1:], ambient_dim=Q.r)
        for i in range(Q.size)
    ]
    return reduce(lambda a, b: a.intersect(b), conos)


# ============================================================
# CÁMARAS
# ============================================================

def _generic_combination(rays: Sequence[Vector], hyperplanes: Iterable[Vector],
                         avoid: FrozenSet[Vector] = frozenset()) -> List[int]:
    """Combinación Σ tⁱ·rayᵢ (t = 2, 3, ...) fuera de todos los hiperplanos salvo ``avoid``."""
    hiperplanos = [h for h in hyperplanes if h not in avoid]
    d = len(rays[0])
    for t in itertools.count(2):
        punto = [sum(t ** i * rayo[k] for i, rayo in enumerate(rays)) for k in range(d)]
        if all(dot(h, punto) != 0 for h in hiperplanos):
            return punto


def chamber_at(Q: WMatrix, x: Sequence, region: Optional[str] = None) -> Chamber:
    """
    Cámara cuyo interior contiene x.

    Args:
        Q: W-matriz
        x: Punto (entero o racional) en el interior de una cámara
        region: "mov" o "all"; si se omite se deduce de Mov(Q)

    Raises:
        ValueError: Si x está sobre una pared (la intersección no es de dimensión r)
    """
    conos = simplicial_cones(Q)
    haz = tuple(J for J, beta in sorted(conos.items()) if beta.contains(x))
    if not haz:
        raise ValueError(f"El punto {list(x)} no está en ⟨Q⟩")
    normales = [n for J in haz for n in conos[J].normals]
    cono = Cone.from_inequalities(normales, ambient_dim=Q.r)
    if cono.dim < Q.r:
        raise ValueError(f"El punto {list(x)} no es interior a una cámara")
    liso = all(abs(conos[J].determinant) == 1 for J in haz)
    if region is None:
        region = "mov" if mov_cone(Q).contains_cone(cono) else "all"
    return Chamber(cone=cono, bunch=haz, smooth=liso, region=region)


def bunch_of(Q: WMatrix, cone: Cone) -> Tuple[Index, ...]:
    """{J : cone ⊆ β_J}."""
    return tuple(
        J for J, beta in sorted(simplicial_cones(Q).items())
        if all(beta.contains(g) for g in cone.generators)
    )


def certify_chamber(Q: WMatrix, chamber: Chamber) -> None:
    """
    Comprueba que la cámara es la intersección de su haz y que el haz es
    exactamente el conjunto de β_J que la contienen.

    Raises:
        ConsistencyError: Si alguna comprobación falla
    """
    if chamber.cone.dim != Q.r:
        raise ConsistencyError(f"La cámara {chamber.id} no es de dimensión máxima")
    if bunch_of(Q, chamber.cone) != chamber.bunch:
        raise ConsistencyError(f"El haz de la cámara {chamber.id} no es el de sus conos contenedores")
    conos = simplicial_cones(Q)
    interseccion = Cone.from_inequalities(
        [n for J in chamber.bunch for n in conos[J].normals], ambient_dim=Q.r
    )
    if interseccion != chamber.cone:
        raise ConsistencyError(f"La cámara {chamber.id} no es la intersección de su haz")


def crossing_point(Q: WMatrix, chamber: Chamber, normal: Sequence[int]) -> List[Fraction]:
    """
    Punto racional exacto justo al otro lado de la faceta de normal interior
    ``normal``, fuera de todas las paredes candidatas.
    """
    hiperplanos = wall_hyperplanes(Q)
    rayos = [g for g in chamber.cone.generators if dot(normal, g) == 0]
    propio = sign_normalized(normal)
    if not rayos:
        # Rango 1: la faceta es el origen
        p = [0] * len(normal)
    else:
        p = _generic_combination(rayos, hiperplanos, avoid=frozenset([propio]))
    eps = Fraction(1)
    for h in hiperplanos:
        if h == propio:
            continue
        hp, hn = dot(h, p), dot(h, normal)
        if hp != 0 and hn != 0:
            eps = min(eps, abs(Fraction(hp, hn)) / 2)
    return [Fraction(pk) - eps * nk for pk, nk in zip(p, normal)]


def adjacent_chamber(Q: WMatrix, chamber: Chamber, normal: Sequence[int],
                     region: Optional[str] = None) -> Optional[Chamber]:
    """Cámara al otro lado de una faceta; None si la faceta está en ∂⟨Q⟩."""
    q = crossing_point(Q, chamber, normal)
    if not eff_cone(Q).in_relint(q):
        return None
    return chamber_at(Q, q, region=region)


def _neighbors(Q: WMatrix, chamber: Chamber, region_cone: Cone, region: Optional[str]) -> List[Chamber]:
    """Cámaras al otro lado de cada faceta que sigue dentro de la región."""
    vecinas = []
    for n in chamber.cone.facet_normals:
        q = crossing_point(Q, chamber, n)
        if region_cone.in_relint(q):
            vecinas.append(chamber_at(Q, q, region=region))
    return vecinas


def enumerate_chambers(Q: WMatrix, region: str = "mov") -> List[Chamber]:
    """
    Cámaras del abanico secundario dentro de Mov(Q) (region="mov") o de ⟨Q⟩ (region="all").

    Args:
        Q: W-matriz
        region: "mov" o "all"

    Returns:
        Lista sin repetidos ordenada por identificador; cada cámara certificada
    """
    if region not in ("mov", "all"):
        raise ValueError(f"Región desconocida: {region}")
    region_cone = mov_cone(Q) if region == "mov" else eff_cone(Q)
    if region_cone.dim < Q.r:
        logger.warning(f"La región {region} no es de dimensión máxima: no hay cámaras")
        return []

    inicio = _generic_combination(region_cone.generators, wall_hyperplanes(Q))
    # En region="all" cada cámara se etiqueta según esté o no en Mov(Q)
    etiqueta = "mov" if region == "mov" else None
    primera = chamber_at(Q, inicio, region=etiqueta)
    vistas: Dict[Cone, Chamber] = {primera.cone: primera}
    frontera = [primera]
    while frontera:
        resultados = ordered_map(lambda c: _neighbors(Q, c, region_cone, etiqueta), frontera)
        nueva = []
        for vecinas in resultados:
            for camara in vecinas:
                if camara.cone not in vistas:
                    vistas[camara.cone] = camara
                    nueva.append(camara)
        frontera = sorted(nueva, key=lambda c: c.id)
        logger.debug(f"BFS de cámaras: {len(vistas)} vistas, frontera {len(frontera)}")

    camaras = sorted(vistas.values(), key=lambda c: c.id)
    for camara in camaras:
        certify_chamber(Q, camara)
    logger.info(f"{len(camaras)} cámaras en la región {region}")
    return camaras


def find_chamber(chambers: Sequence[Chamber], key: str) -> Chamber:
    """
    Busca una cámara por identificador canónico o por alias ("g3", "γ3", "3").

    Raises:
        UnknownChamberError: Si no existe
    """
    clave = key.strip()
    for camara in chambers:
        if camara.id == clave:
            return camara
    alias = clave.lstrip("gγ")
    if alias.isdigit():
        k = int(alias)
        if 1 <= k <= len(chambers):
            return chambers[k - 1]
    raise UnknownChamberError(f"Cámara desconocida: {key}")
