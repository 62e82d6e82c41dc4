# -*- coding: utf-8 -*-
"""
Modelos pydantic de los reportes JSON.

Todos los índices de columna se emiten desde 1 (v1 … v_{n+r}); los
racionales se escriben como cadenas "p/q". ``dump`` produce JSON canónico
(claves en el orden de declaración, sangría 2).
"""

import json
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field

from classify.bordering import BorderingStatus
from classify.contractions import FacetContraction, FlipPath, WallCrossing
from classify.report import ClassificationReport, ContractionStep
from gale.validation import ValidationReport
from mori.relations import AnticanonicalReport, PrimitiveCollection
from secondary_fan.chambers import Chamber
from secondary_fan.fans import Fan, FanReport

Matrix = List[List[int]]


def _one(indices: Sequence[int]) -> List[int]:
    return [int(i) + 1 for i in indices]


def _vec(v: Sequence[int]) -> List[int]:
    return [int(x) for x in v]


def fraction_text(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class _Report(BaseModel):
    model_config = ConfigDict(populate_by_name=True)


# ============================================================
# MODELOS
# ============================================================

class ViolationModel(_Report):
    clause: str
    message: str


class ValidationModel(_Report):
    kind: str
    shape: List[int]
    valid: bool
    violations: List[ViolationModel]
    flags: Dict[str, bool]
    matrix: Optional[Matrix] = None


class ChamberModel(_Report):
    id: str
    alias: Optional[str] = None
    generators: Matrix
    bunch: Matrix
    smooth: Optional[bool]
    region: str


class FanModel(_Report):
    chamber_id: str
    maximal_cones: Matrix
    determinants: List[int]
    simplicial: bool
    complete: bool
    smooth: bool


class PrimitiveCollectionModel(_Report):
    indices: List[int]
    relation: List[int]
    scale: int
    sigma: List[int]
    coeffs: List[str]
    numerical_class: List[int] = Field(alias="class")
    support_normal: List[int]
    nef: bool


class PrimitiveListModel(_Report):
    chamber_id: str
    relation_count: int
    collections: List[PrimitiveCollectionModel]


class HyperplaneBorderingModel(_Report):
    normal: List[int]
    dim: int
    maxbord: bool
    intbord: bool
    intbord_facets: Matrix
    face_generators: Matrix


class BorderingModel(_Report):
    kind: str
    totally_maxbord: bool
    hyperplanes: List[HyperplaneBorderingModel]


class ContractionStepModel(_Report):
    kind: str
    chamber_id: str
    normal: List[int]
    fan_matrix: Optional[Matrix] = None
    weight_matrix: Optional[Matrix] = None
    result_chamber_id: Optional[str] = None
    indices: List[int]
    relation: Optional[List[int]] = None


class ClassificationModel(_Report):
    n: int
    r: int
    chamber_id: str
    case_label: Optional[str]
    case_number: Optional[int]
    bordering: BorderingModel
    witness: Optional[PrimitiveCollectionModel]
    relation_count: int
    contraction_chain: List[ContractionStepModel]
    base_reports: List["ClassificationModel"]


class FacetContractionModel(_Report):
    normal: List[int]
    relation: List[int]
    exceptional: List[int]
    kind: str


class WallCrossingModel(_Report):
    source: str
    target: str
    normal: List[int]
    relation: List[int]
    contract_fwd: List[int]
    contract_bwd: List[int]


class FlipPathModel(_Report):
    length: int
    route: List[str]
    steps: List[WallCrossingModel]
    alternatives: List[List[str]]


class AnticanonicalModel(_Report):
    anticanonical_class: List[int] = Field(alias="class")
    big: bool
    ample: Optional[bool] = None
    nef: Optional[bool] = None
    on_boundary: Optional[bool] = None
    verdict: Optional[str] = None
    face_generators: Matrix = []
    face_normals: Matrix = []


class FindingModel(_Report):
    candidate: str
    params: Dict[str, Any]
    weight_matrix: Matrix
    fan_matrix: Matrix
    chamber_id: str
    report: ClassificationModel


class CheckpointModel(_Report):
    checkpoint: int
    params: Dict[str, Any]


class SectionCellModel(_Report):
    id: str
    alias: Optional[str] = None
    vertices: List[List[str]]
    smooth: Optional[bool] = None
    selected: bool = False


class SectionModel(_Report):
    r: int
    chart: str
    columns: List[List[str]]
    eff: List[List[str]]
    mov: List[List[str]]
    chambers: List[SectionCellModel]


ClassificationModel.model_rebuild()

REPORT_MODELS = {
    "validation": ValidationModel,
    "chamber": ChamberModel,
    "fan": FanModel,
    "primitive": PrimitiveListModel,
    "classification": ClassificationModel,
    "walls": FlipPathModel,
    "anticanonical": AnticanonicalModel,
    "finding": FindingModel,
    "checkpoint": CheckpointModel,
    "section": SectionModel,
}


# ============================================================
# CONVERSORES
# ============================================================

def validation_model(reporte: ValidationReport) -> ValidationModel:
    return ValidationModel(
        kind=reporte.kind,
        shape=list(reporte.shape),
        valid=reporte.valid,
        violations=[ViolationModel(clause=c, message=m) for c, m in reporte.violations],
        flags=dict(reporte.flags),
        matrix=[_vec(f) for f in reporte.matrix.entries] if reporte.matrix is not None else None,
    )


def chamber_model(camara: Chamber, alias: Optional[str] = None) -> ChamberModel:
    return ChamberModel(
        id=camara.id,
        alias=alias,
        generators=[_vec(g) for g in camara.generators],
        bunch=[_one(J) for J in camara.bunch],
        smooth=camara.smooth,
        region=camara.region,
    )


def fan_model(camara: Chamber, fan: Fan, reporte: FanReport) -> FanModel:
    return FanModel(
        chamber_id=camara.id,
        maximal_cones=[_one(I) for I in fan.maximal_cones],
        determinants=[int(reporte.determinants[tuple(I)]) for I in fan.maximal_cones],
        simplicial=reporte.simplicial,
        complete=reporte.complete,
        smooth=reporte.smooth,
    )


def collection_model(c: PrimitiveCollection) -> PrimitiveCollectionModel:
    return PrimitiveCollectionModel(
        indices=_one(c.indices),
        relation=_vec(c.relation),
        scale=c.scale,
        sigma=_one(c.sigma_indices),
        coeffs=[fraction_text(x) for x in c.coeffs],
        numerical_class=_vec(c.n_P),
        support_normal=_vec(c.support.normal),
        nef=c.nef,
    )


def primitive_list_model(camara: Chamber, colecciones: List[PrimitiveCollection]) -> PrimitiveListModel:
    return PrimitiveListModel(
        chamber_id=camara.id,
        relation_count=len(colecciones),
        collections=[collection_model(c) for c in colecciones],
    )


def bordering_model(estado: BorderingStatus) -> BorderingModel:
    return BorderingModel(
        kind=estado.kind,
        totally_maxbord=estado.totally_maxbord,
        hyperplanes=[
            HyperplaneBorderingModel(
                normal=_vec(h.normal),
                dim=h.dim,
                maxbord=h.maxbord,
                intbord=h.intbord,
                intbord_facets=[_vec(f) for f in h.intbord_facets],
                face_generators=[_vec(g) for g in h.face_generators],
            )
            for h in estado.hyperplanes
        ],
    )


def _step_model(paso: ContractionStep) -> ContractionStepModel:
    return ContractionStepModel(
        kind=paso.kind,
        chamber_id=paso.chamber_id,
        normal=_vec(paso.normal),
        fan_matrix=[_vec(f) for f in paso.fan_matrix] if paso.fan_matrix is not None else None,
        weight_matrix=[_vec(f) for f in paso.weight_matrix] if paso.weight_matrix is not None else None,
        result_chamber_id=paso.result_chamber_id,
        indices=_one(paso.indices),
        relation=_vec(paso.relation) if paso.relation is not None else None,
    )


def classification_model(reporte: ClassificationReport) -> ClassificationModel:
    return ClassificationModel(
        n=reporte.n,
        r=reporte.r,
        chamber_id=reporte.chamber_id,
        case_label=reporte.case_label,
        case_number=reporte.case_number,
        bordering=bordering_model(reporte.bordering),
        witness=collection_model(reporte.witness) if reporte.witness is not None else None,
        relation_count=len(reporte.collections),
        contraction_chain=[_step_model(p) for p in reporte.contraction_chain],
        base_reports=[classification_model(b) for b in reporte.base_reports],
    )


def facet_contraction_model(f: FacetContraction) -> FacetContractionModel:
    return FacetContractionModel(
        normal=_vec(f.normal), relation=_vec(f.relation), exceptional=_one(f.exceptional), kind=f.kind,
    )


def wall_crossing_model(w: WallCrossing) -> WallCrossingModel:
    return WallCrossingModel(
        source=w.source,
        target=w.target,
        normal=_vec(w.normal),
        relation=_vec(w.relation),
        contract_fwd=_one(w.contract_fwd),
        contract_bwd=_one(w.contract_bwd),
    )


def flip_path_model(camino: FlipPath) -> FlipPathModel:
    return FlipPathModel(
        length=len(camino.steps),
        route=list(camino.route),
        steps=[wall_crossing_model(w) for w in camino.steps],
        alternatives=[list(r) for r in camino.alternatives],
    )


def anticanonical_model(reporte: AnticanonicalReport) -> AnticanonicalModel:
    return AnticanonicalModel(
        anticanonical_class=_vec(reporte.anticanonical_class),
        big=reporte.big,
        ample=reporte.ample,
        nef=reporte.nef,
        on_boundary=reporte.on_boundary,
        verdict=reporte.verdict,
        face_generators=[_vec(g) for g in reporte.face_generators],
        face_normals=[_vec(n) for n in reporte.face_normals],
    )


def dump(model: BaseModel, indent: Optional[int] = 2) -> str:
    return model.model_dump_json(by_alias=True, indent=indent)


def dump_list(models: Sequence[BaseModel]) -> str:
    """Lista JSON de modelos con el mismo formato que ``dump``."""
    return json.dumps([m.model_dump(by_alias=True, mode="json") for m in models], indent=2, ensure_ascii=False)
