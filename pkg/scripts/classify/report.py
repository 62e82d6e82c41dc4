# -*- coding: utf-8 -*-
"""
Informe de clasificación de una cámara lisa.

Árbol de decisión (rango r ≤ 3, o n = 3 y r = 4):

    r = 1                         → projective_space
    testigo maxbord               → PTB: se extrae la base y se clasifica
    testigo intbord con H' de un
    solo índice negativo          → fibrational_contraction (blow-down + base)
    en otro caso                  → fiber_type_nonfibration (imposible si n ≤ 3)

Para n = 3, r = 4 la etiqueta es threefold_cases_5_6_7 con caso 5, 6 o 7
según dim(γ ∩ H_P) = 3, 2 o 1. En el resto de rangos el informe solo contiene
la taxonomía y los testigos, marcando counterexample_interior_nef si no hay
ninguno.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from core.errors import ConsistencyError, SmoothnessError
from core.pool import ordered_map
from gale.validation import FMatrix, WMatrix
from mori.relations import PrimitiveCollection, enumerate_primitive_collections
from classify.bordering import BorderingStatus, bordering_status, bordering_witnesses
from classify.contractions import (
    contract_divisor,
    exceptional_indices,
    extract_ptb_base,
    facet_contractions,
)
from secondary_fan.chambers import Chamber, adjacent_chamber, simplicial_cones

logger = logging.getLogger(__name__)

Rows = Tuple[Tuple[int, ...], ...]

CASE_NUMBERS = {
    "projective_space": 1,
    "ptb_over_Pm": 2,
    "double_ptb_tower": 3,
    "fibrational_contraction": 4,
    "fiber_type_nonfibration": 5,
}


@dataclass(frozen=True)
class ContractionStep:
    """Paso de la cadena: ptb-extraction, blow-down o wall-crossing."""

    kind: str
    chamber_id: str
    normal: Tuple[int, ...]
    fan_matrix: Optional[Rows] = None
    weight_matrix: Optional[Rows] = None
    result_chamber_id: Optional[str] = None
    indices: Tuple[int, ...] = ()
    relation: Optional[Tuple[int, ...]] = None


@dataclass
class ClassificationReport:
    n: int
    r: int
    chamber_id: str
    case_label: Optional[str]
    case_number: Optional[int]
    bordering: BorderingStatus
    witness: Optional[PrimitiveCollection]
    collections: List[PrimitiveCollection] = field(default_factory=list)
    contraction_chain: List[ContractionStep] = field(default_factory=list)
    base_reports: List["ClassificationReport"] = field(default_factory=list)

    @property
    def base_data(self) -> List[Tuple[Rows, Rows]]:
        return [(p.fan_matrix, p.weight_matrix) for p in self.contraction_chain
                if p.fan_matrix is not None]


def _is_smooth(Q: WMatrix, chamber: Chamber) -> bool:
    if chamber.smooth is not None:
        return chamber.smooth
    conos = simplicial_cones(Q)
    return all(abs(conos[J].determinant) == 1 for J in chamber.bunch)


def _full_tree(n: int, r: int) -> bool:
    return r <= 3 or (n == 3 and r == 4)


def _ptb_step(V, Q, chamber, witness, reporte: ClassificationReport) -> Optional["ClassificationReport"]:
    base = extract_ptb_base(V, Q, chamber, witness)
    reporte.contraction_chain.append(ContractionStep(
        kind="ptb-extraction",
        chamber_id=chamber.id,
        normal=witness.support.normal,
        fan_matrix=base.fan_matrix.entries,
        weight_matrix=base.weight_matrix.entries,
        result_chamber_id=base.chamber.id,
        indices=witness.indices,
        relation=witness.relation,
    ))
    sub = classification_report(base.fan_matrix, base.weight_matrix, base.chamber)
    reporte.base_reports.append(sub)
    reporte.contraction_chain.extend(sub.contraction_chain)
    return sub


def _blow_down_step(V, Q, chamber, normal, reporte: ClassificationReport) -> None:
    resultado = contract_divisor(V, Q, chamber, normal)
    reporte.contraction_chain.append(ContractionStep(
        kind="blow-down",
        chamber_id=chamber.id,
        normal=tuple(normal),
        fan_matrix=resultado.fan_matrix.entries,
        weight_matrix=resultado.weight_matrix.entries,
        result_chamber_id=resultado.chamber.id,
        indices=(resultado.contracted_index,),
    ))
    if _is_smooth(resultado.weight_matrix, resultado.chamber):
        sub = classification_report(resultado.fan_matrix, resultado.weight_matrix, resultado.chamber)
        reporte.base_reports.append(sub)
        reporte.contraction_chain.extend(sub.contraction_chain)
    else:
        logger.warning(f"La contracción de D_{resultado.contracted_index + 1} no es lisa: se detiene la cadena")


def _divisorial_facet(Q: WMatrix, facets: Sequence[Tuple[int, ...]]) -> Optional[Tuple[int, ...]]:
    for normal in facets:
        if len(exceptional_indices(Q, normal)) == 1:
            return normal
    return None


def _divisorial_witness(Q: WMatrix, estado: BorderingStatus, testigos: Sequence[PrimitiveCollection]):
    """Primer testigo (en orden de preferencia) con una faceta intbord de un solo índice negativo."""
    for testigo in testigos:
        h = estado.for_normal(testigo.support.normal)
        normal = _divisorial_facet(Q, h.intbord_facets)
        if normal is not None:
            return testigo, normal
    return None, None


def classification_report(V: FMatrix, Q: WMatrix, chamber: Chamber) -> ClassificationReport:
    """
    Clasifica la variedad X(Σ_γ) de una cámara lisa.

    Raises:
        SmoothnessError: Si la cámara no es lisa
        ConsistencyError: Si una cámara con r ≤ 3 no tiene testigo bordante, o
            si aparece el caso de contracción no fibracional con n ≤ 3
    """
    if not _is_smooth(Q, chamber):
        raise SmoothnessError(f"La cámara {chamber.id} no es lisa")
    n, r = Q.n, Q.r
    estado = bordering_status(Q, chamber)
    colecciones = enumerate_primitive_collections(V, Q, chamber)
    testigos = bordering_witnesses(Q, chamber, colecciones, estado)
    testigo = testigos[0] if testigos else None
    reporte = ClassificationReport(
        n=n, r=r, chamber_id=chamber.id, case_label=None, case_number=None,
        bordering=estado, witness=testigo, collections=colecciones,
    )

    if r == 1:
        reporte.case_label = "projective_space"
        reporte.case_number = 1
        return reporte

    if not _full_tree(n, r):
        if testigo is None:
            reporte.case_label = "counterexample_interior_nef"
        return reporte

    if testigo is None:
        raise ConsistencyError(f"La cámara lisa {chamber.id} de rango {r} no tiene testigo bordante")

    h = estado.for_normal(testigo.support.normal)

    if n == 3 and r == 4:
        reporte.case_label = "threefold_cases_5_6_7"
        reporte.case_number = {3: 5, 2: 6, 1: 7}[h.dim]
        if h.maxbord:
            _ptb_step(V, Q, chamber, testigo, reporte)
        else:
            _, normal = _divisorial_witness(Q, estado, testigos)
            if normal is None:
                normal = _divisorial_facet(Q, chamber.cone.facet_normals)
            if normal is not None:
                _blow_down_step(V, Q, chamber, normal, reporte)
        return reporte

    if h.maxbord:
        reporte.case_label = "ptb_over_Pm" if r == 2 else "double_ptb_tower"
        reporte.case_number = CASE_NUMBERS[reporte.case_label]
        _ptb_step(V, Q, chamber, testigo, reporte)
        return reporte

    testigo_divisorial, normal = _divisorial_witness(Q, estado, testigos)
    if normal is not None:
        reporte.witness = testigo_divisorial
        reporte.case_label = "fibrational_contraction"
        reporte.case_number = CASE_NUMBERS[reporte.case_label]
        _blow_down_step(V, Q, chamber, normal, reporte)
        return reporte

    if n <= 3:
        raise ConsistencyError(
            f"La cámara {chamber.id} cae en el caso de contracción no fibracional con n = {n} ≤ 3"
        )
    reporte.case_label = "fiber_type_nonfibration"
    reporte.case_number = CASE_NUMBERS[reporte.case_label]
    flips = [f for f in facet_contractions(Q, chamber) if f.normal in h.intbord_facets]
    for flip in flips:
        vecina = adjacent_chamber(Q, chamber, flip.normal)
        reporte.contraction_chain.append(ContractionStep(
            kind="wall-crossing",
            chamber_id=chamber.id,
            normal=flip.normal,
            result_chamber_id=vecina.id if vecina is not None else None,
            indices=flip.exceptional,
            relation=flip.relation,
        ))
    return reporte


def classify_all(V: FMatrix, Q: WMatrix, chambers: Sequence[Chamber],
                 threads: Optional[int] = None) -> List[Optional[ClassificationReport]]:
    """Informe por cámara en orden canónico; None para las cámaras singulares."""
    def clasificar(camara: Chamber) -> Optional[ClassificationReport]:
        if not _is_smooth(Q, camara):
            return None
        return classification_report(V, Q, camara)

    return ordered_map(clasificar, chambers, threads)
