# -*- coding: utf-8 -*-
"""
Exportación a Excel del análisis completo de una W-matriz.

Hojas:
    CAMARAS      - una fila por cámara de Mov(Q)
    COLECCIONES  - colecciones primitivas de cada cámara
    PAREDES      - pares de cámaras adyacentes con su relación de pared
    RESUMEN      - n, r, conteos y matrices
"""

import logging
from pathlib import Path
from typing import Dict, List, Union

import pandas as pd

from classify.bordering import bordering_status
from classify.contractions import adjacency, wall_crossing
from core.errors import MathematicalError
from gale.validation import FMatrix, WMatrix
from mori.relations import enumerate_primitive_collections
from secondary_fan.chambers import enumerate_chambers

logger = logging.getLogger(__name__)

COLUMNAS_CAMARAS = ["ALIAS", "ID", "GENERADORES", "LISA", "BORDE"]
COLUMNAS_COLECCIONES = ["ALIAS", "P", "RELACION", "CLASE", "NEF", "NORMAL_SOPORTE"]
COLUMNAS_PAREDES = ["DESDE", "HACIA", "NORMAL", "RELACION", "CONTRAE_IDA", "CONTRAE_VUELTA"]


def _texto(v) -> str:
    return "(" + ", ".join(str(int(x)) for x in v) + ")"


def _indices(indices) -> str:
    return "{" + ", ".join(str(i + 1) for i in indices) + "}"


def _hoja(writer, filas: List[Dict], columnas: List[str], nombre: str):
    if filas:
        pd.DataFrame(filas, columns=columnas).to_excel(writer, sheet_name=nombre, index=False)
    else:
        pd.DataFrame(columns=columnas).to_excel(writer, sheet_name=nombre, index=False)


def export_workbook(V: FMatrix, Q: WMatrix, path: Union[str, Path]) -> Path:
    """
    Genera el archivo Excel con cámaras, colecciones primitivas y paredes.

    Args:
        V: F-matriz
        Q: W-matriz dual de V
        path: Ruta del .xlsx de salida

    Returns:
        Ruta del archivo generado
    """
    ruta = Path(path)
    ruta.parent.mkdir(parents=True, exist_ok=True)

    camaras = enumerate_chambers(Q, "mov")
    alias = {c.id: f"g{k}" for k, c in enumerate(camaras, start=1)}

    filas_camaras, filas_colecciones = [], []
    for camara in camaras:
        filas_camaras.append({
            "ALIAS": alias[camara.id],
            "ID": camara.id,
            "GENERADORES": " ".join(_texto(g) for g in camara.generators),
            "LISA": "SI" if camara.smooth else "NO",
            "BORDE": bordering_status(Q, camara).kind,
        })
        try:
            colecciones = enumerate_primitive_collections(V, Q, camara)
        except MathematicalError as e:
            logger.warning(f"Cámara {alias[camara.id]}: sin colecciones primitivas ({e})")
            continue
        for c in colecciones:
            filas_colecciones.append({
                "ALIAS": alias[camara.id],
                "P": _indices(c.indices),
                "RELACION": _texto(c.relation),
                "CLASE": _texto(c.n_P),
                "NEF": "SI" if c.nef else "NO",
                "NORMAL_SOPORTE": _texto(c.support.normal) if c.nef else "",
            })

    por_id = {c.id: c for c in camaras}
    orden = {c.id: k for k, c in enumerate(camaras)}
    filas_paredes = []
    for origen, vecinos in adjacency(Q, camaras).items():
        for destino in vecinos:
            if orden[origen] > orden[destino]:
                continue
            pared = wall_crossing(Q, por_id[origen], por_id[destino])
            filas_paredes.append({
                "DESDE": alias[origen],
                "HACIA": alias[destino],
                "NORMAL": _texto(pared.normal),
                "RELACION": _texto(pared.relation),
                "CONTRAE_IDA": _indices(pared.contract_fwd),
                "CONTRAE_VUELTA": _indices(pared.contract_bwd),
            })

    resumen = pd.DataFrame({
        "CONCEPTO": ["n", "r", "Cámaras en Mov", "Cámaras lisas", "Colecciones primitivas", "Paredes", "V", "Q"],
        "VALOR": [
            V.n,
            Q.r,
            len(camaras),
            sum(1 for c in camaras if c.smooth),
            len(filas_colecciones),
            len(filas_paredes),
            " / ".join(" ".join(str(x) for x in fila) for fila in V.entries),
            " / ".join(" ".join(str(x) for x in fila) for fila in Q.entries),
        ],
    })

    with pd.ExcelWriter(ruta, engine='openpyxl') as writer:
        _hoja(writer, filas_camaras, COLUMNAS_CAMARAS, "CAMARAS")
        _hoja(writer, filas_colecciones, COLUMNAS_COLECCIONES, "COLECCIONES")
        _hoja(writer, filas_paredes, COLUMNAS_PAREDES, "PAREDES")
        resumen.to_excel(writer, sheet_name="RESUMEN", index=False)

    logger.info(f"Excel generado: {ruta} ({len(camaras)} cámaras, {len(filas_paredes)} paredes)")
    return ruta
