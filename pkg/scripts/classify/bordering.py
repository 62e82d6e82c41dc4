# -*- coding: utf-8 -*-
"""
Cámaras bordantes respecto de las facetas del cono pseudo-efectivo ⟨Q⟩.

Para cada hiperplano H que corta una faceta de ⟨Q⟩ se calcula dim(γ ∩ H) por
intersección exacta de conos:

- bordante respecto de H: dim(γ ∩ H) ≥ 1;
- maxbord: dim(γ ∩ H) = r − 1 (γ ∩ H es una faceta de γ);
- intbord: maxbord, o existe una faceta H' de γ (normal interior n') con
  γ ∩ H ⊆ γ ∩ H' y dos rayos extremales q₁, q₂ de ⟨Q⟩ en H con
  (n'·q₁)(n'·q₂) < 0.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from core.errors import SmoothnessError
from exact_linalg.matrices import dot
from gale.validation import FMatrix, WMatrix
from mori.relations import PrimitiveCollection, enumerate_primitive_collections
from secondary_fan.chambers import Chamber, eff_cone, sign_normalized

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


@dataclass(frozen=True)
class HyperplaneBordering:
    """Posición de la cámara respecto de un hiperplano de faceta de ⟨Q⟩."""

    normal: Vector
    dim: int
    maxbord: bool
    intbord: bool
    intbord_facets: Tuple[Vector, ...] = ()
    face_generators: Tuple[Vector, ...] = ()


@dataclass(frozen=True)
class BorderingStatus:
    kind: str
    hyperplanes: Tuple[HyperplaneBordering, ...] = field(default_factory=tuple)

    @property
    def facet_hyperplanes(self) -> Tuple[Vector, ...]:
        """Normales de las facetas de ⟨Q⟩ que cortan γ en dimensión ≥ 1."""
        return tuple(h.normal for h in self.hyperplanes if h.dim >= 1)

    @property
    def witness_dims(self) -> Tuple[int, ...]:
        return tuple(h.dim for h in self.hyperplanes if h.dim >= 1)

    @property
    def totally_maxbord(self) -> bool:
        return sum(1 for h in self.hyperplanes if h.maxbord) >= 2

    def for_normal(self, normal: Vector) -> Optional[HyperplaneBordering]:
        clave = sign_normalized(normal)
        for h in self.hyperplanes:
            if sign_normalized(h.normal) == clave:
                return h
        return None


def _intbord_facets(Q: WMatrix, chamber: Chamber, normal: Vector, face_generators) -> List[Vector]:
    extremales = [q for q in eff_cone(Q).generators if dot(normal, q) == 0]
    facetas = []
    for n2 in chamber.cone.facet_normals:
        if any(dot(n2, g) != 0 for g in face_generators):
            continue
        valores = [dot(n2, q) for q in extremales]
        if any(a > 0 for a in valores) and any(a < 0 for a in valores):
            facetas.append(n2)
    return facetas


def bordering_status(Q: WMatrix, chamber: Chamber) -> BorderingStatus:
    """
    Taxonomía de γ respecto de cada faceta de ⟨Q⟩, en el orden canónico de
    sus normales interiores.
    """
    r = Q.r
    hiperplanos = []
    for normal in eff_cone(Q).facet_normals:
        cara = chamber.cone.face_on(normal)
        d = cara.dim
        maxbord = d == r - 1
        intbord_facets: List[Vector] = []
        if d >= 1 and not maxbord:
            intbord_facets = _intbord_facets(Q, chamber, normal, cara.generators)
        hiperplanos.append(HyperplaneBordering(
            normal=normal,
            dim=d,
            maxbord=maxbord,
            intbord=maxbord or bool(intbord_facets),
            intbord_facets=tuple(intbord_facets),
            face_generators=cara.generators,
        ))

    bordantes = [h for h in hiperplanos if h.dim >= 1]
    if any(h.maxbord for h in bordantes):
        tipo = "maxbord"
    elif any(h.intbord for h in bordantes):
        tipo = "intbord"
    elif bordantes:
        tipo = "bordering"
    else:
        tipo = "nonbordering"
    return BorderingStatus(kind=tipo, hyperplanes=tuple(hiperplanos))


def witness_key(status: BorderingStatus, collection: PrimitiveCollection):
    """Orden de preferencia: maxbord, mayor dimensión, normal de soporte, índices."""
    h = status.for_normal(collection.support.normal)
    return (not h.maxbord, -h.dim, collection.support.normal, collection.indices)


def bordering_witnesses(Q: WMatrix, chamber: Chamber, collections: List[PrimitiveCollection],
                        status: Optional[BorderingStatus] = None) -> List[PrimitiveCollection]:
    """Colecciones primitivas nef cuyo soporte es un hiperplano bordante de γ, ordenadas."""
    if status is None:
        status = bordering_status(Q, chamber)
    testigos = []
    for c in collections:
        if not c.nef:
            continue
        h = status.for_normal(c.support.normal)
        if h is not None and h.dim >= 1:
            testigos.append(c)
    return sorted(testigos, key=lambda c: witness_key(status, c))


def find_bordering_witness(V: FMatrix, Q: WMatrix, chamber: Chamber,
                           collections: Optional[List[PrimitiveCollection]] = None,
                           status: Optional[BorderingStatus] = None) -> Optional[PrimitiveCollection]:
    """
    Colección primitiva nef cuyo hiperplano de soporte borda γ, o None.

    Raises:
        SmoothnessError: Si la cámara no es lisa
    """
    if chamber.smooth is False:
        raise SmoothnessError(f"La cámara {chamber.id} no es lisa")
    if collections is None:
        collections = enumerate_primitive_collections(V, Q, chamber)
    testigos = bordering_witnesses(Q, chamber, collections, status)
    if not testigos:
        logger.info(f"Cámara {chamber.id}: sin colección nef bordante")
        return None
    return testigos[0]
