# -*- coding: utf-8 -*-
"""
Consola de Gale Suite.

Uso:
    python main.py gale V.txt --from f
    python main.py chambers Q.txt --smooth-only
    python main.py classify Q.txt --chamber g10
    python main.py reproduce cex4

Los resultados van a stdout (JSON o matriz en texto); el log va a stderr.
Códigos de salida: 0 éxito, 1 resultado matemático negativo, 2 error interno.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from classify.contractions import flip_path
from classify.report import classification_report
from classify import reports
from commands.export import export_workbook
from commands.formats import format_matrix, read_matrix
from commands.plot import render_svg, section
from commands.reproduce import reproduce
from core import settings
from core.errors import ConsistencyError, MathematicalError, UnsupportedRankError
from gale.duality import gale_dual_of_w, gale_pair_of_f
from gale.validation import FMatrix, WMatrix, validate_f, validate_w
from mori.relations import anticanonical, enumerate_primitive_collections
from search.hunt import SearchParams, hunt, finding_model
from secondary_fan.chambers import Chamber, enumerate_chambers, find_chamber
from secondary_fan.fans import fan_from_chamber, verify_fan

logger = logging.getLogger(__name__)


# ============================================================
# AUXILIARES
# ============================================================

def _configure_logging(verbose: bool):
    nivel = logging.DEBUG if verbose else getattr(logging, settings.LOG_LEVEL, logging.INFO)
    logging.basicConfig(level=nivel, format=settings.LOG_FORMAT, stream=sys.stderr, force=True)


def _load(path: str, source: str) -> Tuple[FMatrix, WMatrix]:
    """Lee una F- o W-matriz y calcula su dual."""
    matriz = read_matrix(path)
    if source == "f":
        par = gale_pair_of_f(validate_f(matriz).require())
        return par.fan_matrix, par.weight_matrix
    Q = validate_w(matriz).require()
    return gale_dual_of_w(Q), Q


def _chambers(Q: WMatrix, region: str = "mov") -> List[Chamber]:
    camaras = enumerate_chambers(Q, region)
    logger.info(f"{len(camaras)} cámaras en {region}")
    return camaras


def _emit(texto: str, out: Optional[str] = None):
    if out:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        Path(out).write_text(texto if texto.endswith("\n") else texto + "\n", encoding="utf-8")
        logger.info(f"Salida escrita en {out}")
    else:
        print(texto)


# ============================================================
# SUBCOMANDOS
# ============================================================

def cmd_validate(args) -> int:
    matriz = read_matrix(args.file)
    reporte = validate_f(matriz) if args.command == "validate-f" else validate_w(matriz)
    if args.json:
        _emit(reports.dump(reports.validation_model(reporte)))
    elif reporte.valid:
        print(f"✓ {reporte.kind}-matriz válida ({reporte.shape[0]}×{reporte.shape[1]})")
        for bandera, valor in reporte.flags.items():
            print(f"  {bandera}: {'sí' if valor else 'no'}")
    else:
        print(f"✗ {reporte.kind}-matriz inválida ({reporte.shape[0]}×{reporte.shape[1]})")
        for clausula, mensaje in reporte.violations:
            print(f"  ({clausula}) {mensaje}")
    return 0 if reporte.valid else 1


def cmd_gale(args) -> int:
    if args.source == "f":
        par = gale_pair_of_f(read_matrix(args.file))
        dual = par.weight_matrix
        comentario = f"W-matriz r={dual.r} n={dual.n}"
        if par.reordered:
            comentario += f", columnas de V en el orden {[j + 1 for j in par.column_order]}"
        _emit(format_matrix(dual.entries, comment=comentario), args.out)
    else:
        dual = gale_dual_of_w(read_matrix(args.file))
        _emit(format_matrix(dual.entries, comment=f"F-matriz n={dual.n} r={dual.r}"), args.out)
    return 0


def cmd_chambers(args) -> int:
    _, Q = _load(args.file, args.source)
    camaras = _chambers(Q, args.region)
    modelos = [
        reports.chamber_model(c, alias=f"g{k}")
        for k, c in enumerate(camaras, start=1)
        if c.smooth or not args.smooth_only
    ]
    _emit(reports.dump_list(modelos), args.out)
    return 0


def cmd_fan(args) -> int:
    V, Q = _load(args.file, args.source)
    camara = find_chamber(_chambers(Q), args.chamber)
    fan = fan_from_chamber(V, Q, camara)
    reporte = verify_fan(V, fan.maximal_cones)
    if not reporte.ok:
        raise ConsistencyError(f"El abanico de {camara.id} no supera la verificación: {reporte.problems}")
    _emit(reports.dump(reports.fan_model(camara, fan, reporte)), args.out)
    return 0


def cmd_primitive(args) -> int:
    V, Q = _load(args.file, args.source)
    camara = find_chamber(_chambers(Q), args.chamber)
    colecciones = enumerate_primitive_collections(V, Q, camara, threads=args.threads)
    _emit(reports.dump(reports.primitive_list_model(camara, colecciones)), args.out)
    return 0


def cmd_classify(args) -> int:
    V, Q = _load(args.file, args.source)
    camara = find_chamber(_chambers(Q), args.chamber)
    _emit(reports.dump(reports.classification_model(classification_report(V, Q, camara))), args.out)
    return 0


def cmd_walls(args) -> int:
    _, Q = _load(args.file, args.source)
    camaras = _chambers(Q)
    camino = flip_path(Q, camaras, find_chamber(camaras, args.origin), find_chamber(camaras, args.target))
    _emit(reports.dump(reports.flip_path_model(camino)), args.out)
    return 0


def cmd_anticanonical(args) -> int:
    _, Q = _load(args.file, args.source)
    camara = find_chamber(_chambers(Q), args.chamber) if args.chamber else None
    _emit(reports.dump(reports.anticanonical_model(anticanonical(Q, camara))), args.out)
    return 0


def cmd_reproduce(args) -> int:
    return 0 if reproduce(args.target, s=args.s) else 2


def cmd_hunt(args) -> int:
    params = SearchParams(
        n=args.n,
        r=args.r,
        entry_bound=args.entry_bound,
        max_candidates=args.budget,
        seed=args.seed,
    )
    extra = [read_matrix(p) for p in args.inject or []]
    catalogo = Path(args.out) if args.out else None
    hallazgos = hunt(params, extra_candidates=extra, catalog=catalogo, resume=args.resume, threads=args.threads)
    if args.json or catalogo is None:
        print(reports.dump_list([finding_model(h, params) for h in hallazgos]))
    else:
        print(f"✓ {len(hallazgos)} hallazgos en {params.max_candidates} candidatos → {catalogo}")
    return 0


def cmd_plot(args) -> int:
    _, Q = _load(args.file, args.source)
    camaras = _chambers(Q)
    seleccion = find_chamber(camaras, args.chamber).id if args.chamber else None
    modelo = section(Q, camaras, aliases=[f"g{k}" for k in range(1, len(camaras) + 1)], selected=seleccion)
    if args.format == "svg":
        if Q.r != 3:
            raise UnsupportedRankError(f"SVG solo para r = 3; use --format json (r = {Q.r})")
        _emit(render_svg(modelo), args.out)
    else:
        _emit(reports.dump(modelo), args.out)
    return 0


def cmd_export(args) -> int:
    V, Q = _load(args.file, args.source)
    ruta = export_workbook(V, Q, args.out)
    print(f"✓ Excel generado: {ruta}")
    return 0


def cmd_schemas(args) -> int:
    destino = Path(args.out)
    destino.mkdir(parents=True, exist_ok=True)
    for nombre, modelo in reports.REPORT_MODELS.items():
        esquema = modelo.model_json_schema(by_alias=True)
        ruta = destino / f"{nombre}.schema.json"
        ruta.write_text(json.dumps(esquema, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
        print(f"✓ {ruta}")
    return 0


# ============================================================
# ARGUMENTOS
# ============================================================

def build_parser() -> argparse.ArgumentParser:
    """
    Construye el parser con todos los subcomandos.

    Returns:
        ArgumentParser listo para ``parse_args``
    """
    comunes = argparse.ArgumentParser(add_help=False)
    comunes.add_argument('--json', action='store_true', help='Salida en JSON')
    comunes.add_argument('--verbose', action='store_true', help='Log en nivel DEBUG')
    comunes.add_argument('--ref-bound', type=int, default=None, help='Cota de la REF positiva (GALE_REF_BOUND)')
    comunes.add_argument('--threads', type=int, default=None, help='Hilos del pool (GALE_THREADS)')
    comunes.add_argument('--out', default=None, help='Archivo de salida (por defecto stdout)')

    parser = argparse.ArgumentParser(
        prog="gale",
        description="Gale Suite: dualidad de Gale, abanico secundario y clasificación de cámaras"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def agregar(nombre: str, funcion, ayuda: str, archivo: bool = True, origen: bool = True):
        p = sub.add_parser(nombre, parents=[comunes], help=ayuda)
        if archivo:
            p.add_argument('file', help='Matriz en formato de texto')
        if origen:
            p.add_argument('--kind', dest='source', choices=['f', 'w'], default='w',
                           help='Tipo de la matriz de entrada (por defecto w)')
        p.set_defaults(handler=funcion)
        return p

    agregar('validate-f', cmd_validate, 'Valida una F-matriz', origen=False)
    agregar('validate-w', cmd_validate, 'Valida una W-matriz', origen=False)
    p = agregar('gale', cmd_gale, 'Dual de Gale de una F- o W-matriz', origen=False)
    p.add_argument('--from', dest='source', choices=['f', 'w'], required=True, help='Tipo de la matriz de entrada')

    p = agregar('chambers', cmd_chambers, 'Cámaras del abanico secundario')
    p.add_argument('--region', choices=['mov', 'all'], default='mov', help='Mov(Q) o todo Eff(Q)')
    p.add_argument('--smooth-only', action='store_true', help='Solo cámaras lisas')

    for nombre, funcion, ayuda in (
        ('fan', cmd_fan, 'Conos maximales del abanico de una cámara'),
        ('primitive', cmd_primitive, 'Colecciones y relaciones primitivas'),
        ('classify', cmd_classify, 'Informe de clasificación de una cámara lisa'),
    ):
        p = agregar(nombre, funcion, ayuda)
        p.add_argument('--chamber', required=True, help='Identificador o alias (g1, g2, ...)')

    p = agregar('walls', cmd_walls, 'Camino de flips entre dos cámaras')
    p.add_argument('--from', dest='origin', required=True, help='Cámara de origen')
    p.add_argument('--to', dest='target', required=True, help='Cámara de destino')

    p = agregar('anticanonical', cmd_anticanonical, 'Clase anticanónica y su posición')
    p.add_argument('--chamber', default=None, help='Cámara respecto de la cual ubicar −K')

    p = agregar('reproduce', cmd_reproduce, 'Reproduce un ejemplo de referencia', archivo=False, origen=False)
    p.add_argument('target', choices=['ex1', 'ex2', 'cex4', 'qs'], help='Ejemplo a reproducir')
    p.add_argument('--s', type=int, default=2, help='Parámetro de la familia Q_s')

    p = agregar('hunt', cmd_hunt, 'Búsqueda de cámaras lisas no bordantes', archivo=False, origen=False)
    p.add_argument('--n', type=int, required=True, help='Dimensión')
    p.add_argument('--r', type=int, required=True, help='Rango del grupo de clases')
    p.add_argument('--seed', type=int, default=0, help='Semilla de 64 bits')
    p.add_argument('--budget', type=int, default=1000, help='Número de candidatos aleatorios')
    p.add_argument('--entry-bound', type=int, default=settings.ENTRY_BOUND, help='Cota de las entradas')
    p.add_argument('--resume', action='store_true', help='Reanuda desde el último control del catálogo')
    p.add_argument('--inject', action='append', default=None, help='W-matriz candidata adicional')

    p = agregar('plot-section', cmd_plot, 'Sección afín de Mov(Q) y sus cámaras')
    p.add_argument('--chamber', default=None, help='Cámara a resaltar')
    p.add_argument('--format', choices=['svg', 'json'], default='json', help='Formato de salida')

    agregar('export', cmd_export, 'Exporta el análisis a Excel')

    agregar('schemas', cmd_schemas, 'Escribe los JSON Schema de los reportes', archivo=False, origen=False)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Punto de entrada de la consola.

    Returns:
        Código de salida (0, 1 o 2)
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)

    if args.ref_bound is not None:
        settings.REF_BOUND = args.ref_bound
    if args.threads is not None:
        settings.THREADS = args.threads
    if args.command in ("export", "schemas") and not args.out:
        parser.error(f"{args.command} requiere --out")

    try:
        return args.handler(args)
    except ConsistencyError as e:
        logger.error(f"Error interno: {e}")
        print(f"✗ Error interno: {e}", file=sys.stderr)
        return 2
    except MathematicalError as e:
        logger.info(f"Resultado negativo: {e}")
        print(f"✗ Error: {e}", file=sys.stderr)
        return 1
    except Exception as e:
        logger.exception(f"Error inesperado en {args.command}: {e}")
        print(f"✗ Error interno: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
