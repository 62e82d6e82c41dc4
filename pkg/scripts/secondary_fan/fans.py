# -*- coding: utf-8 -*-
"""
Correspondencia cámara ↔ abanico proyectivo simplicial.

Los conos maximales del abanico Σ_γ son los complementos {1..n+r} \\ J de los
índices J del haz de γ; recíprocamente γ_Σ es la intersección de los
⟨Q^I⟩ con ⟨V_I⟩ ∈ Σ(n).
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from cones.cone import Cone
from core.errors import ConsistencyError, FanNotProjectiveError
from exact_linalg.matrices import as_int_matrix, det, dot, kernel_saturated, primitive_vector, solve_exact
from gale.validation import FMatrix, WMatrix, validate_f
from secondary_fan.chambers import (
    Chamber,
    _generic_combination,
    bunch_of,
    mov_cone,
    simplicial_cones,
)

logger = logging.getLogger(__name__)

Index = Tuple[int, ...]


@dataclass(frozen=True)
class Fan:
    """Abanico simplicial dado por índices (desde 0) de columnas de la F-matriz."""

    fan_matrix: FMatrix
    maximal_cones: Tuple[Index, ...]
    complete: bool = True
    simplicial: bool = True


@dataclass
class FanReport:
    simplicial: bool
    complete: bool
    smooth: bool
    determinants: Dict[Index, int] = field(default_factory=dict)
    problems: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.simplicial and self.complete and not self.problems


def complement(indices: Sequence[int], size: int) -> Index:
    conjunto = set(indices)
    return tuple(i for i in range(size) if i not in conjunto)


def _facet_normal(V: FMatrix, facet: Index) -> Tuple[int, ...]:
    """Normal entera de la envolvente de las columnas de ``facet`` (n−1 columnas)."""
    if not facet:
        return (1,)
    filas = [V.column(j) for j in facet]
    nucleo = kernel_saturated(as_int_matrix(filas))
    return tuple(int(x) for x in nucleo[0])


def _interior_coefficients(V: FMatrix, cone: Index, x: Sequence[int]):
    return solve_exact(V.submatrix(cone), list(x))


def verify_fan(V: FMatrix, maximal_cones: Sequence[Index]) -> FanReport:
    """
    Verifica un abanico simplicial completo.

    - simplicialidad: det(V_I) ≠ 0 para cada cono maximal;
    - emparejamiento de facetas: cada faceta de un cono maximal es compartida
      exactamente por dos conos, situados a lados opuestos;
    - un punto genérico está cubierto por exactamente un cono.

    Returns:
        FanReport con los determinantes y la lista de problemas encontrados
    """
    n = V.n
    reporte = FanReport(simplicial=True, complete=True, smooth=True)
    for I in maximal_cones:
        if len(I) != n:
            reporte.simplicial = False
            reporte.problems.append(f"El cono {_one_based(I)} no tiene {n} rayos")
            continue
        d = det(V.submatrix(I))
        reporte.determinants[tuple(I)] = d
        if d == 0:
            reporte.simplicial = False
            reporte.problems.append(f"El cono {_one_based(I)} no es de dimensión máxima")
    if not reporte.simplicial:
        reporte.complete = False
        reporte.smooth = False
        return reporte
    reporte.smooth = all(abs(d) == 1 for d in reporte.determinants.values())

    facetas: Dict[Index, List[int]] = defaultdict(list)
    for I in maximal_cones:
        for i in I:
            facetas[tuple(j for j in I if j != i)].append(i)
    normales = []
    for faceta, opuestos in sorted(facetas.items()):
        normal = _facet_normal(V, faceta)
        normales.append(normal)
        if len(opuestos) != 2:
            reporte.complete = False
            reporte.problems.append(
                f"La faceta {_one_based(faceta)} pertenece a {len(opuestos)} conos"
            )
            continue
        a, b = (dot(normal, V.column(i)) for i in opuestos)
        if a * b >= 0:
            reporte.complete = False
            reporte.problems.append(
                f"Los conos sobre la faceta {_one_based(faceta)} están del mismo lado"
            )

    base = [tuple(1 if i == k else 0 for k in range(n)) for i in range(n)]
    punto = _generic_combination(base, [primitive_vector(h) for h in normales])
    cubren = [
        I for I in maximal_cones
        if all(c > 0 for c in _interior_coefficients(V, I, punto))
    ]
    if len(cubren) != 1:
        reporte.complete = False
        reporte.problems.append(f"El punto genérico {punto} está cubierto por {len(cubren)} conos")
    return reporte


def fan_from_chamber(V: FMatrix, Q: WMatrix, chamber: Chamber) -> Fan:
    """
    Abanico Σ_γ de una cámara: complementos de los índices de su haz.

    Raises:
        ConsistencyError: Si el abanico obtenido no verifica
    """
    maximales = tuple(sorted(complement(J, Q.size) for J in chamber.bunch))
    reporte = verify_fan(V, maximales)
    if not reporte.ok:
        raise ConsistencyError(
            f"El abanico de la cámara {chamber.id} no verifica: " + "; ".join(reporte.problems)
        )
    return Fan(fan_matrix=V, maximal_cones=maximales, complete=True, simplicial=True)


def chamber_from_fan(V: FMatrix, Q: WMatrix, fan: Fan) -> Chamber:
    """
    Cámara γ_Σ = ⋂ ⟨Q^I⟩ de un abanico simplicial completo.

    Raises:
        FanNotProjectiveError: Si la intersección no es de dimensión máxima o
            no es una cámara con ese haz
        ConsistencyError: Si algún ⟨Q^I⟩ no es de dimensión máxima
    """
    conos = simplicial_cones(Q)
    haz = tuple(sorted(complement(I, Q.size) for I in fan.maximal_cones))
    faltan = [J for J in haz if J not in conos]
    if faltan:
        raise ConsistencyError(
            f"Conos ⟨Q^I⟩ degenerados para I = {[_one_based(complement(J, Q.size)) for J in faltan]}"
        )
    cono = Cone.from_inequalities([n for J in haz for n in conos[J].normals], ambient_dim=Q.r)
    if cono.dim < Q.r:
        raise FanNotProjectiveError("La intersección del haz no es de dimensión máxima: Σ no es proyectivo")
    if bunch_of(Q, cono) != haz:
        raise FanNotProjectiveError("La intersección del haz no es una cámara con ese haz: Σ no es proyectivo")
    liso = all(abs(conos[J].determinant) == 1 for J in haz)
    region = "mov" if mov_cone(Q).contains_cone(cono) else "all"
    return Chamber(cone=cono, bunch=haz, smooth=liso, region=region)


def is_smooth_chamber(V: FMatrix, Q: WMatrix, chamber: Chamber) -> bool:
    """Regularidad calculada con los menores de V: |det(V_I)| = 1 en cada cono maximal."""
    fan = fan_from_chamber(V, Q, chamber)
    return all(abs(det(V.submatrix(I))) == 1 for I in fan.maximal_cones)


def star_subdivision(V: FMatrix, maximal_cones: Sequence[Index], sigma: Sequence[int]) -> Tuple[FMatrix, Tuple[Index, ...]]:
    """
    Subdivisión estelar (explosión) de un abanico a lo largo del cono ``sigma``.

    La nueva columna v = Σ_{i∈σ} v_i (primitiva) se añade al final; cada cono
    maximal I ⊇ σ se sustituye por los conos (I \\ {i}) ∪ {v}, i ∈ σ.

    Args:
        V: F-matriz
        maximal_cones: Conos maximales (índices desde 0)
        sigma: Índices de un cono del abanico, al menos dos

    Returns:
        Tupla (V', conos maximales de Σ')

    Raises:
        ValueError: Si sigma no es un cono del abanico
    """
    sigma = tuple(sorted(set(sigma)))
    if len(sigma) < 2:
        raise ValueError("Se necesita un cono de dimensión ≥ 2 para explotar")
    contienen = [I for I in maximal_cones if set(sigma) <= set(I)]
    if not contienen:
        raise ValueError(f"{_one_based(sigma)} no es un cono del abanico")

    nuevo = primitive_vector([sum(V.column(i)[k] for i in sigma) for k in range(V.n)])
    entradas = [list(fila) + [nuevo[k]] for k, fila in enumerate(V.entries)]
    V2 = validate_f(entradas, expect_n=V.n).require()
    indice = V.size

    conos = []
    for I in maximal_cones:
        if set(sigma) <= set(I):
            for i in sigma:
                conos.append(tuple(sorted([j for j in I if j != i] + [indice])))
        else:
            conos.append(tuple(I))
    logger.debug(f"Explosión a lo largo de {_one_based(sigma)}: nuevo rayo {nuevo}")
    return V2, tuple(sorted(conos))


def _one_based(indices: Sequence[int]) -> List[int]:
    return [i + 1 for i in indices]
