# -*- coding: utf-8 -*-
"""
Formato de texto de matrices.

    # comentario
    filas columnas
    a11 a12 ...
    ...

Las líneas que empiezan con '#' y las vacías se ignoran.
"""

from pathlib import Path
from typing import List, Sequence, Union

from core.errors import MatrixFormatError


def parse_matrix(text: str) -> List[List[int]]:
    """
    Lee una matriz entera del formato de texto.

    Raises:
        MatrixFormatError: Con el número de línea del problema
    """
    lineas = [
        (numero, linea.strip())
        for numero, linea in enumerate(text.splitlines(), start=1)
        if linea.strip() and not linea.strip().startswith("#")
    ]
    if not lineas:
        raise MatrixFormatError("Archivo vacío: falta la cabecera 'filas columnas'")

    numero, cabecera = lineas[0]
    partes = cabecera.split()
    if len(partes) != 2:
        raise MatrixFormatError("La cabecera debe tener dos enteros: 'filas columnas'", numero)
    try:
        filas, columnas = int(partes[0]), int(partes[1])
    except ValueError:
        raise MatrixFormatError(f"Cabecera no entera: {cabecera!r}", numero)
    if filas < 1 or columnas < 1:
        raise MatrixFormatError("Las dimensiones deben ser positivas", numero)

    cuerpo = lineas[1:]
    if len(cuerpo) != filas:
        linea_error = cuerpo[filas][0] if len(cuerpo) > filas else None
        raise MatrixFormatError(f"Se esperaban {filas} filas, hay {len(cuerpo)}", linea_error)

    matriz = []
    for numero, linea in cuerpo:
        valores = linea.split()
        if len(valores) != columnas:
            raise MatrixFormatError(f"Se esperaban {columnas} valores, hay {len(valores)}", numero)
        try:
            matriz.append([int(v) for v in valores])
        except ValueError:
            raise MatrixFormatError(f"Valor no entero en {linea!r}", numero)
    return matriz


def read_matrix(path: Union[str, Path]) -> List[List[int]]:
    ruta = Path(path)
    if not ruta.exists():
        raise MatrixFormatError(f"No existe el archivo: {ruta}")
    return parse_matrix(ruta.read_text(encoding="utf-8"))


def format_matrix(rows: Sequence[Sequence[int]], comment: str = "") -> str:
    """Escribe la matriz con columnas alineadas a la derecha."""
    filas = [[str(int(x)) for x in fila] for fila in rows]
    ancho = max((len(x) for fila in filas for x in fila), default=1)
    salida = []
    if comment:
        salida.append(f"# {comment}")
    salida.append(f"{len(filas)} {len(filas[0]) if filas else 0}")
    for fila in filas:
        salida.append(" ".join(x.rjust(ancho) for x in fila))
    return "\n".join(salida) + "\n"
