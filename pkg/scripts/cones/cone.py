# -*- coding: utf-8 -*-
"""
Conos poliédricos racionales con doble descripción exacta (pplpy).

Un ``Cone`` guarda simultáneamente sus rayos extremales y sus normales de
faceta (interiores), además del espacio de linealidad y de las ecuaciones de
su envolvente lineal. Todo se almacena en forma canónica:

- rayos y normales: vectores enteros primitivos, ordenados lexicográficamente;
  los rayos se proyectan ortogonalmente sobre el complemento de la linealidad
  y las normales sobre la envolvente lineal del cono;
- linealidad y ecuaciones: base de Hermite del retículo saturado.

Con esa normalización dos conos son iguales si y solo si sus campos lo son.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import ppl

from exact_linalg.matrices import (
    as_int_matrix,
    dot,
    identity,
    integral_vector,
    kernel_saturated,
    primitive_vector,
    project_out,
    rank,
    to_tuples,
)

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


def _neg(v: Sequence[int]) -> Vector:
    return tuple(-x for x in v)


def _kernel(rows: Sequence[Vector], dim: int) -> List[Vector]:
    """Complemento ortogonal saturado (base de Hermite) del espacio generado por ``rows``."""
    filas = [r for r in rows if any(r)]
    if not filas:
        return list(to_tuples(identity(dim)))
    return list(to_tuples(kernel_saturated(as_int_matrix(filas))))


def _saturate(rows: Sequence[Vector], dim: int) -> List[Vector]:
    if not rows:
        return []
    return _kernel(_kernel(rows, dim), dim)


def _canonical(vectors: Iterable[Sequence[int]], remove: Sequence[Vector]) -> List[Vector]:
    """Proyecta fuera de ``remove``, vuelve a enteros primitivos y ordena sin repetidos."""
    resultado = set()
    for v in vectors:
        if remove:
            w = integral_vector(project_out(v, remove))
        else:
            w = primitive_vector(v)
        if any(w):
            resultado.add(w)
    return sorted(resultado)


def _expression(v: Sequence[int]) -> "ppl.Linear_Expression":
    return ppl.Linear_Expression([int(x) for x in v], 0)


def _coefficients(objeto, dim: int) -> Vector:
    coefs = [int(c) for c in objeto.coefficients()]
    return tuple(coefs + [0] * (dim - len(coefs)))


def _polyhedron_from_generators(gens: Sequence[Vector], dim: int) -> "ppl.C_Polyhedron":
    poliedro = ppl.C_Polyhedron(dim, "empty")
    poliedro.add_generator(ppl.point())
    for g in gens:
        poliedro.add_generator(ppl.ray(_expression(g)))
    return poliedro


def _polyhedron_from_constraints(normals: Sequence[Vector], equations: Sequence[Vector],
                                 dim: int) -> "ppl.C_Polyhedron":
    poliedro = ppl.C_Polyhedron(dim, "universe")
    for n in normals:
        poliedro.add_constraint(_expression(n) >= 0)
    for e in equations:
        poliedro.add_constraint(_expression(e) == 0)
    return poliedro


def _double_description(poliedro: "ppl.C_Polyhedron", dim: int):
    """
    Descripciones minimizadas de un cono de pplpy.

    Returns:
        Tupla (rayos, líneas, normales de faceta, ecuaciones), sin normalizar
    """
    rayos, lineas = [], []
    for g in poliedro.minimized_generators():
        if g.is_ray():
            rayos.append(_coefficients(g, dim))
        elif g.is_line():
            lineas.append(_coefficients(g, dim))
    normales, ecuaciones = [], []
    for c in poliedro.minimized_constraints():
        coefs = _coefficients(c, dim)
        if not any(coefs):
            continue
        if c.is_equality():
            ecuaciones.append(coefs)
        else:
            normales.append(coefs)
    return rayos, lineas, normales, ecuaciones


@dataclass(frozen=True)
class Cone:
    """Cono poliédrico racional en ℝ^d en forma canónica."""

    ambient_dim: int
    generators: Tuple[Vector, ...]
    lineality: Tuple[Vector, ...]
    facet_normals: Tuple[Vector, ...]
    equations: Tuple[Vector, ...]

    # ------------------------------------------------------------
    # Constructores
    # ------------------------------------------------------------

    @classmethod
    def _from_polyhedron(cls, poliedro: "ppl.C_Polyhedron", dim: int) -> "Cone":
        rayos, lineas, normales, ecuaciones = _double_description(poliedro, dim)
        linealidad = _saturate(lineas, dim)
        ecuaciones = _saturate(ecuaciones, dim)
        return cls(
            dim,
            tuple(_canonical(rayos, linealidad)),
            tuple(linealidad),
            tuple(_canonical(normales, ecuaciones)),
            tuple(ecuaciones),
        )

    @classmethod
    def from_generators(cls, vecs: Iterable[Sequence[int]], ambient_dim: Optional[int] = None) -> "Cone":
        """
        Cono generado por una familia de vectores enteros.

        Args:
            vecs: Generadores (pueden ser redundantes o nulos)
            ambient_dim: Obligatorio si ``vecs`` es vacío

        Returns:
            Cono canónico; el cono nulo si no hay generadores no nulos
        """
        vectores = [tuple(int(x) for x in v) for v in vecs]
        d = _ambient(vectores, ambient_dim)
        gens = [v for v in vectores if any(v)]
        return cls._from_polyhedron(_polyhedron_from_generators(gens, d), d)

    @classmethod
    def from_inequalities(cls, normals: Iterable[Sequence[int]], equations: Iterable[Sequence[int]] = (),
                          ambient_dim: Optional[int] = None) -> "Cone":
        """
        Cono {x : a·x ≥ 0 para cada normal, e·x = 0 para cada ecuación}.

        Args:
            normals: Normales interiores (pueden ser redundantes)
            equations: Ecuaciones lineales
            ambient_dim: Obligatorio si no hay normales ni ecuaciones
        """
        normales = [tuple(int(x) for x in n) for n in normals]
        ecs = [tuple(int(x) for x in e) for e in equations]
        d = _ambient(normales + ecs, ambient_dim)
        normales = [n for n in normales if any(n)]
        ecs = [e for e in ecs if any(e)]
        return cls._from_polyhedron(_polyhedron_from_constraints(normales, ecs, d), d)

    @classmethod
    def hyperplane(cls, normal: Sequence[int]) -> "Cone":
        """El hiperplano lineal normal·x = 0 como cono."""
        return cls.from_inequalities([], equations=[normal], ambient_dim=len(normal))

    # ------------------------------------------------------------
    # Propiedades
    # ------------------------------------------------------------

    @property
    def dim(self) -> int:
        return self.ambient_dim - len(self.equations)

    @property
    def is_pointed(self) -> bool:
        return not self.lineality

    @property
    def is_full_dimensional(self) -> bool:
        return not self.equations

    def is_simplicial(self) -> bool:
        return self.is_pointed and len(self.generators) == self.dim

    def relint_point(self) -> Vector:
        """Suma de los rayos extremales: punto del interior relativo."""
        punto = [0] * self.ambient_dim
        for g in self.generators:
            punto = [a + b for a, b in zip(punto, g)]
        return tuple(punto)

    # ------------------------------------------------------------
    # Pertenencia
    # ------------------------------------------------------------

    def contains(self, x: Sequence) -> bool:
        return (all(dot(e, x) == 0 for e in self.equations)
                and all(dot(f, x) >= 0 for f in self.facet_normals))

    def in_relint(self, x: Sequence) -> bool:
        return (all(dot(e, x) == 0 for e in self.equations)
                and all(dot(f, x) > 0 for f in self.facet_normals))

    def contains_cone(self, other: "Cone") -> bool:
        return (all(self.contains(g) for g in other.generators)
                and all(self.contains(l) and self.contains(_neg(l)) for l in other.lineality))

    # ------------------------------------------------------------
    # Operaciones
    # ------------------------------------------------------------

    def intersect(self, other: "Cone") -> "Cone":
        if self.ambient_dim != other.ambient_dim:
            raise ValueError(
                f"Dimensiones ambiente distintas: {self.ambient_dim} y {other.ambient_dim}"
            )
        return Cone.from_inequalities(
            self.facet_normals + other.facet_normals,
            self.equations + other.equations,
            ambient_dim=self.ambient_dim,
        )

    def dual(self) -> "Cone":
        return Cone.from_inequalities(self.generators, self.lineality, ambient_dim=self.ambient_dim)

    def face_on(self, normal: Sequence[int]) -> "Cone":
        """Intersección con el hiperplano normal·x = 0."""
        return self.intersect(Cone.hyperplane(normal))

    def faces(self, k: int) -> List["Cone"]:
        """Caras de dimensión k, ordenadas por sus generadores."""
        incidencias = [
            frozenset(i for i, g in enumerate(self.generators) if dot(f, g) == 0)
            for f in self.facet_normals
        ]
        todas = frozenset(range(len(self.generators)))
        conjuntos = {todas}
        pendientes = [todas]
        while pendientes:
            actual = pendientes.pop()
            for incidencia in incidencias:
                menor = actual & incidencia
                if menor not in conjuntos:
                    conjuntos.add(menor)
                    pendientes.append(menor)

        lin = list(self.lineality)
        caras = []
        for conjunto in conjuntos:
            rayos = [self.generators[i] for i in sorted(conjunto)]
            if rank(rayos + lin) != k:
                continue
            caras.append(Cone.from_generators(rayos + lin + [_neg(l) for l in lin],
                                              ambient_dim=self.ambient_dim))
        return sorted(set(caras), key=lambda c: (c.generators, c.lineality))

    def __repr__(self) -> str:
        return f"Cone(dim={self.dim}, generators={list(self.generators)})"


def _ambient(vectors: Sequence[Vector], ambient_dim: Optional[int]) -> int:
    if ambient_dim is None:
        if not vectors:
            raise ValueError("Se necesita ambient_dim para un cono sin vectores")
        ambient_dim = len(vectors[0])
    if any(len(v) != ambient_dim for v in vectors):
        raise ValueError(f"Todos los vectores deben tener dimensión {ambient_dim}")
    return ambient_dim
