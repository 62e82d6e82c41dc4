"""
Gale Suite - Servidor FastAPI
Dualidad de Gale, abanico secundario y clasificación de cámaras vía HTTP
"""

from fastapi import FastAPI, File, UploadFile, Request, Form
from fastapi.responses import FileResponse, JSONResponse
from fastapi.exceptions import RequestValidationError, HTTPException
from pathlib import Path
import sys
from datetime import datetime
from typing import List, Optional
import traceback
import io
import contextlib
import os
import logging

# Configurar logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

# Agregar el directorio scripts al path
BASE_DIR = Path(__file__).parent
sys.path.insert(0, str(BASE_DIR / "scripts"))

from classify.report import classification_report  # noqa: E402
from classify import reports  # noqa: E402
from commands.export import export_workbook  # noqa: E402
from commands.formats import format_matrix, parse_matrix  # noqa: E402
from commands.reproduce import reproduce  # noqa: E402
from core import settings  # noqa: E402
from core.errors import ConsistencyError, MathematicalError  # noqa: E402
from gale.duality import gale_dual_of_w, gale_pair_of_f  # noqa: E402
from gale.validation import validate_f, validate_w  # noqa: E402
from secondary_fan.chambers import enumerate_chambers, find_chamber  # noqa: E402

app = FastAPI(title="Gale Suite", version="1.0.0")

MEDIA_TYPES = {
    ".xlsx": "application/vnd.openxmlformats-officedocument.spreadsheetml.sheet",
    ".svg": "image/svg+xml",
    ".json": "application/json",
    ".txt": "text/plain",
}


def _now() -> str:
    return datetime.now().strftime('%H:%M:%S')


def _error(status_code: int, message: str, log: List[str]) -> JSONResponse:
    return JSONResponse(
        status_code=status_code,
        content={"status": "error", "message": message, "files": [], "log": log}
    )


# Manejador para errores HTTP (404, 500, etc.) - siempre devuelve JSON
@app.exception_handler(HTTPException)
async def http_exception_handler_json(request: Request, exc: HTTPException):
    return _error(exc.status_code, exc.detail, [f"Error HTTP {exc.status_code}: {exc.detail}"])


# Manejador para errores de validación - siempre devuelve JSON
@app.exception_handler(RequestValidationError)
async def validation_exception_handler(request: Request, exc: RequestValidationError):
    return _error(422, "Error de validación de datos", [f"Error de validación: {str(exc)}"])


# Resultado matemático negativo (matriz inválida, cámara desconocida, ...)
@app.exception_handler(MathematicalError)
async def mathematical_exception_handler(request: Request, exc: MathematicalError):
    return _error(422, str(exc), [f"[{_now()}] {type(exc).__name__}: {str(exc)}"])


# Falló una verificación interna
@app.exception_handler(ConsistencyError)
async def consistency_exception_handler(request: Request, exc: ConsistencyError):
    logger.error(f"Error de consistencia: {exc}")
    return _error(500, f"Error interno: {str(exc)}", [f"[{_now()}] {str(exc)}", traceback.format_exc()])


# Manejador global de excepciones - siempre devuelve JSON
@app.exception_handler(Exception)
async def global_exception_handler(request: Request, exc: Exception):
    return _error(500, f"Error interno: {str(exc)}", [f"Error: {str(exc)}", traceback.format_exc()])


def create_job_dir() -> Path:
    """Crea un directorio único para cada job"""
    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S_%f")
    job_dir = settings.TMP_DIR / f"job_{timestamp}"
    job_dir.mkdir(parents=True, exist_ok=True)
    return job_dir


@contextlib.contextmanager
def capture_output():
    """Captura stdout y stderr"""
    stdout_capture = io.StringIO()
    stderr_capture = io.StringIO()
    old_stdout, old_stderr = sys.stdout, sys.stderr
    try:
        sys.stdout = stdout_capture
        sys.stderr = stderr_capture
        yield stdout_capture, stderr_capture
    finally:
        sys.stdout = old_stdout
        sys.stderr = old_stderr


async def _read_pair(file: UploadFile, kind: str, log: List[str]):
    """Lee la matriz subida y devuelve (V, Q)."""
    content = await file.read()
    log.append(f"[{_now()}] Archivo recibido: {file.filename} ({len(content)} bytes)")
    matriz = parse_matrix(content.decode("utf-8"))
    if kind == "f":
        par = gale_pair_of_f(validate_f(matriz).require())
        V, Q = par.fan_matrix, par.weight_matrix
        if par.reordered:
            log.append(f"[{_now()}] Columnas de V reordenadas: {[j + 1 for j in par.column_order]}")
    elif kind == "w":
        Q = validate_w(matriz).require()
        V = gale_dual_of_w(Q)
    else:
        raise HTTPException(status_code=422, detail=f"Tipo de matriz desconocido: {kind}")
    log.append(f"[{_now()}] n = {V.n}, r = {Q.r}")
    return V, Q


# ============================================================
# ESTADO
# ============================================================

@app.get("/health")
async def health():
    return {"status": "ok", "service": "gale-suite"}


# ============================================================
# ENDPOINT: Descargar archivos generados
# ============================================================

@app.get("/download/{job_id}/{filename}")
async def download_file(job_id: str, filename: str):
    """Descarga un archivo generado"""
    if Path(job_id).name != job_id or Path(filename).name != filename:
        return JSONResponse({"error": "Ruta inválida"}, status_code=400)
    file_path = settings.TMP_DIR / job_id / filename
    if file_path.exists():
        return FileResponse(
            path=str(file_path),
            filename=filename,
            media_type=MEDIA_TYPES.get(file_path.suffix, "application/octet-stream")
        )
    return JSONResponse({"error": "Archivo no encontrado"}, status_code=404)


# ============================================================
# API: Dualidad de Gale
# ============================================================

@app.post("/api/gale")
async def api_gale(file: UploadFile = File(...), kind: str = Form("f")):
    """Dual de Gale de una F-matriz (kind=f) o de una W-matriz (kind=w)"""
    log = []
    V, Q = await _read_pair(file, kind, log)
    dual = Q if kind == "f" else V
    log.append(f"[{_now()}] Dual calculado: {len(dual.entries)}×{dual.size}")
    return JSONResponse(content={
        "status": "ok",
        "message": "W-matriz calculada" if kind == "f" else "F-matriz calculada",
        "matrix": [list(f) for f in dual.entries],
        "text": format_matrix(dual.entries),
        "files": [],
        "log": log
    })


# ============================================================
# API: Cámaras
# ============================================================

@app.post("/api/chambers")
async def api_chambers(file: UploadFile = File(...), kind: str = Form("w"),
                       region: str = Form("mov"), smooth_only: bool = Form(False)):
    """Cámaras del abanico secundario en Mov(Q) o en todo Eff(Q)"""
    if region not in ("mov", "all"):
        raise HTTPException(status_code=422, detail=f"Región desconocida: {region}")
    log = []
    _, Q = await _read_pair(file, kind, log)
    camaras = enumerate_chambers(Q, region)
    log.append(f"[{_now()}] {len(camaras)} cámaras ({sum(1 for c in camaras if c.smooth)} lisas)")
    modelos = [
        reports.chamber_model(c, alias=f"g{k}").model_dump(by_alias=True, mode="json")
        for k, c in enumerate(camaras, start=1)
        if c.smooth or not smooth_only
    ]
    return JSONResponse(content={
        "status": "ok",
        "message": f"{len(modelos)} cámaras",
        "chambers": modelos,
        "files": [],
        "log": log
    })


# ============================================================
# API: Clasificación
# ============================================================

@app.post("/api/classify")
async def api_classify(file: UploadFile = File(...), chamber: str = Form(...), kind: str = Form("w")):
    """Informe de clasificación de una cámara lisa"""
    log = []
    V, Q = await _read_pair(file, kind, log)
    camara = find_chamber(enumerate_chambers(Q, "mov"), chamber)
    reporte = classification_report(V, Q, camara)
    log.append(f"[{_now()}] Cámara {camara.id}: {reporte.case_label}")
    return JSONResponse(content={
        "status": "ok",
        "message": f"Caso {reporte.case_label}",
        "report": reports.classification_model(reporte).model_dump(by_alias=True, mode="json"),
        "files": [],
        "log": log
    })


# ============================================================
# API: Exportación a Excel
# ============================================================

@app.post("/api/export")
async def api_export(file: UploadFile = File(...), kind: str = Form("w")):
    """Genera el Excel con cámaras, colecciones primitivas y paredes"""
    log = []
    V, Q = await _read_pair(file, kind, log)
    job_dir = create_job_dir()
    ruta = export_workbook(V, Q, job_dir / f"ANALISIS_GALE_n{V.n}_r{Q.r}.xlsx")
    log.append(f"[{_now()}] Excel generado: {ruta.name}")
    return JSONResponse(content={
        "status": "ok",
        "message": "Exportación completada",
        "files": [{"name": ruta.name, "url": f"/download/{job_dir.name}/{ruta.name}"}],
        "log": log,
        "job_id": job_dir.name
    })


# ============================================================
# API: Reproducción de ejemplos
# ============================================================

@app.get("/api/reproduce/{target}")
async def api_reproduce(target: str, s: int = 2):
    """Ejecuta un ejemplo de referencia y devuelve el reporte como log"""
    if target not in ("ex1", "ex2", "cex4", "qs"):
        raise HTTPException(status_code=404, detail=f"Objetivo desconocido: {target}")
    log = [f"[{_now()}] Iniciando reproducción {target}..."]
    with capture_output() as (stdout, stderr):
        ok = reproduce(target, s=s)
    for line in stdout.getvalue().strip().split('\n'):
        if line.strip():
            log.append(f"[{_now()}] {line}")
    return JSONResponse(
        status_code=200 if ok else 500,
        content={
            "status": "ok" if ok else "error",
            "message": "PASS" if ok else "FAIL",
            "files": [],
            "log": log
        }
    )


if __name__ == "__main__":
    import uvicorn
    # Obtener puerto de variable de entorno (Render) o usar 8000 por defecto
    port = int(os.environ.get("PORT", 8000))
    host = os.environ.get("HOST", "127.0.0.1")
    print("=" * 50)
    print("  Gale Suite - Iniciando servidor...")
    print(f"  Abre http://{host}:{port}/docs en tu navegador")
    print("=" * 50)
    uvicorn.run(app, host=host, port=port)
