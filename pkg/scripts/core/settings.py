# -*- coding: utf-8 -*-
"""
Configuración leída de variables de entorno.
"""

import os
from pathlib import Path

BASE_DIR = Path(__file__).resolve().parent.parent.parent


def _env_int(name: str, default: int) -> int:
    valor = os.environ.get(name)
    if valor is None or not valor.strip():
        return default
    try:
        numero = int(valor)
    except ValueError:
        raise ValueError(f"La variable {name} debe ser un entero, se recibió: {valor!r}")
    if numero < 1:
        raise ValueError(f"La variable {name} debe ser positiva, se recibió: {numero}")
    return numero


THREADS = _env_int("GALE_THREADS", 1)
REF_BOUND = _env_int("GALE_REF_BOUND", 64)
REF_REORDERINGS = _env_int("GALE_REF_REORDERINGS", 720)
ENTRY_BOUND = _env_int("GALE_ENTRY_BOUND", 2)
TMP_DIR = Path(os.environ.get("GALE_TMP_DIR", str(BASE_DIR / "tmp")))
LOG_LEVEL = os.environ.get("GALE_LOG_LEVEL", "INFO").upper()
LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'
