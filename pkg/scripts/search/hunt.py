# -*- coding: utf-8 -*-
"""
Búsqueda aleatoria determinista de cámaras lisas cuyo cono nef solo toca ∂⟨Q⟩
en el origen.

El candidato k se genera con el flujo k del generador por contador, así que la
lista de hallazgos depende solo de los parámetros. Los hallazgos se añaden a un
catálogo JSON-lines; tras cada lote se escribe un registro de control con el
siguiente índice pendiente, lo que permite reanudar.
"""

import json
import logging
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple

from classify.bordering import bordering_status
from classify.report import ClassificationReport, classification_report
from classify.reports import CheckpointModel, FindingModel, classification_model
from core import settings
from core.errors import GaleSuiteError
from core.pool import ordered_map
from gale.duality import gale_dual_of_w
from gale.validation import FMatrix, WMatrix, validate_w
from search.prng import CounterRNG
from secondary_fan.chambers import Chamber, eff_cone, enumerate_chambers
from secondary_fan.fans import is_smooth_chamber

logger = logging.getLogger(__name__)

Rows = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class SearchParams:
    n: int
    r: int
    entry_bound: int = settings.ENTRY_BOUND
    max_candidates: int = 1000
    seed: int = 0
    batch_size: int = 16

    def __post_init__(self):
        if self.n < 1 or self.r < 1:
            raise ValueError(f"n y r deben ser ≥ 1 (n={self.n}, r={self.r})")
        if self.entry_bound < 1 or self.max_candidates < 0 or self.batch_size < 1:
            raise ValueError("Las cotas de búsqueda deben ser positivas")
        if not 0 <= self.seed < 1 << 64:
            raise ValueError(f"La semilla debe ser un entero de 64 bits, se recibió {self.seed}")


@dataclass(frozen=True)
class Finding:
    candidate: str
    weight_matrix: WMatrix
    fan_matrix: FMatrix
    chamber: Chamber
    report: ClassificationReport


def random_candidate(params: SearchParams, index: int) -> List[List[int]]:
    """
    Matriz r×(n+r) escalonada no negativa: pivotes 1 en columnas crecientes
    (la primera en la columna 1), ceros a la izquierda de cada pivote y
    entradas en [0, entry_bound] a la derecha.
    """
    rng = CounterRNG(seed=params.seed, stream=index)
    total = params.n + params.r
    pivotes = [0] + [p + 1 for p in rng.sample_sorted(total - 1, params.r - 1)]
    filas = []
    for p in pivotes:
        fila = [0] * total
        fila[p] = 1
        for j in range(p + 1, total):
            if j not in pivotes:
                fila[j] = rng.randint(0, params.entry_bound)
        filas.append(fila)
    return filas


def _is_nonbordering(Q: WMatrix, chamber: Chamber) -> bool:
    return all(chamber.cone.face_on(h).dim == 0 for h in eff_cone(Q).facet_normals)


def evaluate_candidate(label: str, matrix: Sequence[Sequence[int]], expect_r: Optional[int] = None) -> List[Finding]:
    """Filtra un candidato y devuelve sus cámaras lisas no bordantes, verificadas."""
    reporte = validate_w(matrix, expect_r=expect_r)
    if not reporte.valid:
        return []
    Q = reporte.matrix
    try:
        V = gale_dual_of_w(Q)
        camaras = enumerate_chambers(Q, region="mov")
    except GaleSuiteError as e:
        logger.debug(f"Candidato {label} descartado: {e}")
        return []

    hallazgos = []
    for camara in camaras:
        if not camara.smooth:
            continue
        if bordering_status(Q, camara).kind != "nonbordering":
            continue
        if not is_smooth_chamber(V, Q, camara) or not _is_nonbordering(Q, camara):
            logger.warning(f"Candidato {label}: la cámara {camara.id} no supera la verificación independiente")
            continue
        informe = classification_report(V, Q, camara)
        hallazgos.append(Finding(candidate=label, weight_matrix=Q, fan_matrix=V, chamber=camara, report=informe))
        logger.info(f"Hallazgo en el candidato {label}: cámara {camara.id}")
    return hallazgos


def finding_model(finding: Finding, params: SearchParams) -> FindingModel:
    return FindingModel(
        candidate=finding.candidate,
        params=asdict(params),
        weight_matrix=[list(f) for f in finding.weight_matrix.entries],
        fan_matrix=[list(f) for f in finding.fan_matrix.entries],
        chamber_id=finding.chamber.id,
        report=classification_model(finding.report),
    )


def _resume_point(catalog: Path, params: SearchParams) -> Tuple[int, int]:
    """Último control con los mismos parámetros y número de hallazgos escritos hasta él."""
    inicio, registrados, pendientes = 0, 0, 0
    for linea in catalog.read_text(encoding="utf-8").splitlines():
        if not linea.strip():
            continue
        registro = json.loads(linea)
        if registro.get("params") != asdict(params):
            continue
        if "checkpoint" in registro:
            inicio = registro["checkpoint"]
            registrados += pendientes
            pendientes = 0
        else:
            pendientes += 1
    return inicio, registrados


def hunt(params: SearchParams, extra_candidates: Iterable[Sequence[Sequence[int]]] = (),
         catalog: Optional[Path] = None, resume: bool = False,
         threads: Optional[int] = None) -> List[Finding]:
    """
    Ejecuta la búsqueda.

    Los candidatos extra (p. ej. una W-matriz conocida) se evalúan primero con
    etiquetas x0, x1, ...; después los aleatorios 0 … max_candidates−1.

    Args:
        params: Parámetros de la búsqueda
        extra_candidates: Matrices inyectadas
        catalog: Archivo JSON-lines donde añadir hallazgos y controles
        resume: Continúa desde el último control del catálogo
        threads: Hilos del pool (por defecto GALE_THREADS)

    Returns:
        Hallazgos evaluados en esta ejecución, en orden de candidato. Al
        reanudar, los anteriores al último control quedan solo en el catálogo.
    """
    hallazgos: List[Finding] = []
    inicio = 0
    if catalog is not None and resume and catalog.exists():
        inicio, registrados = _resume_point(catalog, params)
        logger.info(f"Reanudando desde el candidato {inicio} ({registrados} hallazgos ya en el catálogo)")
    elif catalog is not None:
        catalog.parent.mkdir(parents=True, exist_ok=True)
        catalog.write_text("", encoding="utf-8")

    def registrar(nuevos: List[Finding], siguiente: Optional[int]):
        if catalog is None:
            return
        with open(catalog, "a", encoding="utf-8") as f:
            for h in nuevos:
                f.write(finding_model(h, params).model_dump_json(by_alias=True) + "\n")
            if siguiente is not None:
                control = CheckpointModel(checkpoint=siguiente, params=asdict(params))
                f.write(control.model_dump_json() + "\n")

    if inicio == 0:
        for k, matriz in enumerate(extra_candidates):
            nuevos = evaluate_candidate(f"x{k}", matriz, expect_r=params.r)
            hallazgos.extend(nuevos)
            registrar(nuevos, None)

    for desde in range(inicio, params.max_candidates, params.batch_size):
        lote = list(range(desde, min(desde + params.batch_size, params.max_candidates)))
        resultados = ordered_map(
            lambda k: evaluate_candidate(str(k), random_candidate(params, k), expect_r=params.r),
            lote,
            threads,
        )
        nuevos = [h for grupo in resultados for h in grupo]
        hallazgos.extend(nuevos)
        registrar(nuevos, lote[-1] + 1)
        logger.debug(f"Lote {lote[0]}–{lote[-1]}: {len(nuevos)} hallazgos")

    logger.info(f"Búsqueda terminada: {len(hallazgos)} hallazgos")
    return hallazgos
