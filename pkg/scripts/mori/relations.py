# -*- coding: utf-8 -*-
"""
Colecciones primitivas de un abanico Σ_γ y teoría de Mori asociada.

Un subconjunto S de columnas genera un cono de Σ_γ si y solo si γ ⊆ ⟨Q^S⟩
(Q^S: columnas de Q fuera de S). Con esa equivalencia, P es colección
primitiva si γ ⊄ ⟨Q^P⟩ y γ ⊆ ⟨Q^{P∖{i}}⟩ para todo i ∈ P.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from cones.cone import Cone
from core.errors import ConsistencyError, InvalidRelationError, NoSolutionError
from core.pool import ordered_map
from exact_linalg.matrices import dot, primitive_vector, solve_exact
from gale.validation import FMatrix, WMatrix
from secondary_fan.chambers import Chamber, eff_cone, sign_normalized
from secondary_fan.fans import Fan, fan_from_chamber

logger = logging.getLogger(__name__)

Index = Tuple[int, ...]
Vector = Tuple[int, ...]


# ============================================================
# TIPOS
# ============================================================

@dataclass(frozen=True)
class Hyperplane:
    """Hiperplano lineal {x : normal·x = 0} en ℝ^r con normal entera primitiva."""

    normal: Vector

    @classmethod
    def from_normal(cls, normal: Sequence[int], oriented: bool = False) -> "Hyperplane":
        """Normal primitiva; si ``oriented`` es False se normaliza el signo."""
        if not any(normal):
            raise ValueError("La normal de un hiperplano no puede ser nula")
        primitiva = primitive_vector(normal)
        return cls(primitiva if oriented else sign_normalized(primitiva))

    def contains(self, x: Sequence) -> bool:
        return dot(self.normal, x) == 0

    def as_cone(self) -> Cone:
        return Cone.hyperplane(self.normal)


@dataclass(frozen=True)
class PrimitiveCollection:
    """Colección primitiva con su relación primitiva r_ℤ(P) y su clase n_P."""

    indices: Index
    relation: Tuple[int, ...]
    scale: int
    sigma_indices: Index
    coeffs: Tuple[Fraction, ...]
    n_P: Vector
    nef: bool

    @property
    def support(self) -> Hyperplane:
        return support_hyperplane(self.n_P)


# ============================================================
# CRITERIO DE CONOS
# ============================================================

class _FaceOracle:
    """Decide si S genera un cono de Σ_γ mediante γ ⊆ ⟨Q^S⟩, con caché."""

    def __init__(self, Q: WMatrix, chamber: Chamber):
        self.Q = Q
        self.chamber = chamber
        self._cache: Dict[FrozenSet[int], bool] = {}

    def is_face(self, S: Sequence[int]) -> bool:
        clave = frozenset(S)
        if clave not in self._cache:
            resto = [self.Q.column(j) for j in range(self.Q.size) if j not in clave]
            cono = Cone.from_generators(resto, ambient_dim=self.Q.r)
            self._cache[clave] = cono.contains_cone(self.chamber.cone)
        return self._cache[clave]


def _primitive_index_sets(is_face, size: int, max_len: int, threads: Optional[int] = None) -> List[Index]:
    """
    Recorrido por niveles: un candidato de tamaño k tiene todas sus
    (k−1)-partes generando conos; es primitivo si él mismo no genera cono.
    """
    caras = {(j,) for j in range(size) if is_face((j,))}
    primitivas: List[Index] = []
    for k in range(2, max_len + 1):
        candidatos = []
        for F in sorted(caras):
            for j in range(F[-1] + 1, size):
                P = F + (j,)
                if all(tuple(x for x in P if x != i) in caras for i in P):
                    candidatos.append(P)
        if not candidatos:
            break
        veredictos = ordered_map(is_face, candidatos, threads)
        caras = {P for P, es_cara in zip(candidatos, veredictos) if es_cara}
        primitivas.extend(P for P, es_cara in zip(candidatos, veredictos) if not es_cara)
    return primitivas


def primitive_index_sets(Q: WMatrix, chamber: Chamber, threads: Optional[int] = None) -> List[Index]:
    """Índices (desde 0) de las colecciones primitivas según el criterio de conos."""
    oraculo = _FaceOracle(Q, chamber)
    return _primitive_index_sets(oraculo.is_face, Q.size, Q.n + 1, threads)


def primitive_index_sets_bruteforce(fan: Fan) -> List[Index]:
    """
    Oráculo por definición: P no está contenido en ningún cono maximal y toda
    parte propia sí lo está.
    """
    maximales = [frozenset(I) for I in fan.maximal_cones]
    n = fan.fan_matrix.n
    size = fan.fan_matrix.size

    def es_cara(S):
        conjunto = frozenset(S)
        return any(conjunto <= I for I in maximales)

    resultado = []
    for k in range(2, n + 2):
        for P in itertools.combinations(range(size), k):
            if es_cara(P):
                continue
            if all(es_cara(tuple(x for x in P if x != i)) for i in P):
                resultado.append(P)
    return resultado


# ============================================================
# RELACIONES PRIMITIVAS
# ============================================================

def primitive_relation(V: FMatrix, fan: Fan, P: Sequence[int]) -> Tuple[Tuple[int, ...], int, Index, Tuple[Fraction, ...]]:
    """
    Relación primitiva de P en Σ.

    v_P = Σ_{j∈P} v_j está en el interior relativo de un único cono σ ∈ Σ
    (el cono nulo si v_P = 0). Se resuelven los coeficientes c_ρ en la base
    simplicial de σ, l es el mínimo común denominador y

        r_ℤ(P)_j = l·[j∈P] − l·c_j·[j∈σ]

    Returns:
        Tupla (r_ℤ(P), l, σ, coeficientes c_ρ ordenados como σ)

    Raises:
        ConsistencyError: Si v_P no está en ningún cono de Σ
    """
    P = tuple(sorted(P))
    v_P = [sum(V.column(j)[k] for j in P) for k in range(V.n)]
    sigma: Optional[Index] = None
    coeficientes: Dict[int, Fraction] = {}
    if any(v_P):
        for I in fan.maximal_cones:
            c = solve_exact(V.submatrix(I), v_P)
            if all(x >= 0 for x in c):
                sigma = tuple(i for i, x in zip(I, c) if x > 0)
                coeficientes = {i: x for i, x in zip(I, c) if x > 0}
                break
        if sigma is None:
            raise ConsistencyError(f"v_P para P = {[j + 1 for j in P]} no está en ningún cono del abanico")
    else:
        sigma = ()

    l = 1
    for x in coeficientes.values():
        l = math.lcm(l, x.denominator)
    relacion = [0] * V.size
    for j in P:
        relacion[j] += l
    for j, x in coeficientes.items():
        relacion[j] -= int(l * x)
    return tuple(relacion), l, sigma, tuple(coeficientes[j] for j in sigma)


def numerical_class(Q: WMatrix, relation: Sequence[int]) -> Vector:
    """
    Clase numérica n_P ∈ ℤ^r con Qᵀ·n_P = r_ℤ(P).

    Raises:
        InvalidRelationError: Si la relación no está en el retículo de filas de Q
    """
    Qt = Q.array.T
    try:
        n = solve_exact(Qt, list(relation))
    except NoSolutionError:
        raise InvalidRelationError(f"La relación {list(relation)} no es combinación de las filas de Q")
    if any(x.denominator != 1 for x in n):
        raise InvalidRelationError(f"La relación {list(relation)} no está en el retículo entero de filas de Q")
    n = tuple(int(x) for x in n)
    if [dot(n, c) for c in Q.columns] != list(relation):
        raise InvalidRelationError(f"La relación {list(relation)} no es Qᵀ·n para ningún n")
    return n


def support_hyperplane(n_P: Sequence[int]) -> Hyperplane:
    return Hyperplane.from_normal(n_P)


def enumerate_primitive_collections(V: FMatrix, Q: WMatrix, chamber: Chamber,
                                    fan: Optional[Fan] = None,
                                    threads: Optional[int] = None) -> List[PrimitiveCollection]:
    """
    Colecciones primitivas de Σ_γ con su relación, clase numérica y carácter nef.

    Args:
        V, Q: Par de Gale
        chamber: Cámara en Mov(Q)
        fan: Σ_γ si ya se calculó

    Returns:
        Lista ordenada por tamaño y luego lexicográficamente
    """
    if fan is None:
        fan = fan_from_chamber(V, Q, chamber)
    colecciones = []
    for P in primitive_index_sets(Q, chamber, threads):
        relacion, l, sigma, coefs = primitive_relation(V, fan, P)
        n_P = numerical_class(Q, relacion)
        colecciones.append(PrimitiveCollection(
            indices=P,
            relation=relacion,
            scale=l,
            sigma_indices=sigma,
            coeffs=coefs,
            n_P=n_P,
            nef=all(x >= 0 for x in relacion),
        ))
    logger.debug(f"Cámara {chamber.id}: {len(colecciones)} colecciones primitivas")
    return colecciones


# ============================================================
# CONO DE MORI Y CLASE ANTICANÓNICA
# ============================================================

def mori_cone(V: FMatrix, Q: WMatrix, chamber: Chamber,
              collections: Optional[List[PrimitiveCollection]] = None) -> Cone:
    """NE(X): cono generado por las clases n_P de todas las relaciones primitivas."""
    if collections is None:
        collections = enumerate_primitive_collections(V, Q, chamber)
    return Cone.from_generators([c.n_P for c in collections], ambient_dim=Q.r)


def nef_cone_check(V: FMatrix, Q: WMatrix, chamber: Chamber, mori: Optional[Cone] = None) -> bool:
    """
    Comprueba que el dual del cono de Mori es la cámara.

    Raises:
        ConsistencyError: Si la dualidad falla
    """
    if mori is None:
        mori = mori_cone(V, Q, chamber)
    dual = mori.dual()
    if dual != chamber.cone:
        raise ConsistencyError(
            f"El dual del cono de Mori {list(dual.generators)} no coincide con la cámara {chamber.id}"
        )
    return True


def bunch_meets_support(Q: WMatrix, chamber: Chamber, normal: Sequence[int]) -> bool:
    """Cada cono del haz tiene al menos una columna extremal sobre el hiperplano."""
    return all(any(dot(normal, Q.column(j)) == 0 for j in J) for J in chamber.bunch)


@dataclass(frozen=True)
class AnticanonicalReport:
    anticanonical_class: Vector
    big: bool
    ample: Optional[bool] = None
    nef: Optional[bool] = None
    on_boundary: Optional[bool] = None
    verdict: Optional[str] = None
    face_generators: Tuple[Vector, ...] = ()
    face_normals: Tuple[Vector, ...] = ()


def anticanonical(Q: WMatrix, chamber: Optional[Chamber] = None) -> AnticanonicalReport:
    """
    Clase [−K_X] = Q·(1,…,1)ᵀ y su posición respecto de γ y de ⟨Q⟩.

    Veredictos: fano (interior relativo de γ), weak_fano (en γ y grande),
    nef_no_big (en γ, no grande), no_nef (fuera de γ).
    """
    clase = tuple(sum(fila) for fila in Q.entries)
    grande = eff_cone(Q).in_relint(clase)
    if chamber is None:
        return AnticanonicalReport(anticanonical_class=clase, big=grande)

    cono = chamber.cone
    amplio = cono.in_relint(clase)
    nef = cono.contains(clase)
    if amplio:
        veredicto = "fano"
    elif nef:
        veredicto = "weak_fano" if grande else "nef_no_big"
    else:
        veredicto = "no_nef"

    generadores: Tuple[Vector, ...] = ()
    normales: Tuple[Vector, ...] = ()
    if nef and not amplio:
        normales = tuple(n for n in cono.facet_normals if dot(n, clase) == 0)
        generadores = tuple(g for g in cono.generators if all(dot(n, g) == 0 for n in normales))
    return AnticanonicalReport(
        anticanonical_class=clase,
        big=grande,
        ample=amplio,
        nef=nef,
        on_boundary=nef and not amplio,
        verdict=veredicto,
        face_generators=generadores,
        face_normals=normales,
    )
