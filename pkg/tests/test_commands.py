# -*- coding: utf-8 -*-
import json
from fractions import Fraction

import pandas as pd
import pytest

from classify import reports
from commands import golden
from commands.formats import format_matrix, parse_matrix, read_matrix
from commands.main import main
from commands.plot import render_svg, section, section_point
from commands.reproduce import reproduce
from core.errors import MatrixFormatError, UnsupportedRankError
from mori.relations import enumerate_primitive_collections


@pytest.fixture
def matrix_file(tmp_path):
    def escribir(filas, nombre="m.txt"):
        ruta = tmp_path / nombre
        ruta.write_text(format_matrix(filas), encoding="utf-8")
        return str(ruta)
    return escribir


class TestMatrixFormat:
    def test_parse_with_comments(self):
        texto = "# Q de ejemplo\n\n2 3\n1 1 0\n# fila 2\n0 1 1\n"
        assert parse_matrix(texto) == [[1, 1, 0], [0, 1, 1]]

    @pytest.mark.parametrize("texto, linea", [
        ("# c\n2 3\n1 2 3\n4 x 6\n", 4),
        ("2 3\n1 2\n3 4 5\n", 2),
        ("2 2\n1 0\n0 1\n5 5\n", 4),
        ("2\n1 0\n", 1),
        ("a b\n1\n", 1),
        ("0 2\n", 1),
        ("2 2\n1 0\n", None),
        ("# solo comentarios\n", None),
    ])
    def test_errors_report_line(self, texto, linea):
        with pytest.raises(MatrixFormatError) as info:
            parse_matrix(texto)
        assert info.value.line == linea

    def test_format(self):
        assert format_matrix([[1, -10], [2, 3]]) == "2 2\n  1 -10\n  2   3\n"
        assert format_matrix([[1]], comment="x").startswith("# x\n1 1\n")
        assert parse_matrix(format_matrix(golden.CEX4_V)) == golden.CEX4_V

    def test_missing_file(self, tmp_path):
        with pytest.raises(MatrixFormatError):
            read_matrix(tmp_path / "no_existe.txt")


class TestReproduce:
    @pytest.mark.parametrize("target", ["ex1", "ex2", "cex4"])
    def test_reference_examples(self, target, capsys):
        assert reproduce(target)
        salida = capsys.readouterr().out
        assert "✓ PASS" in salida
        assert "✗" not in salida

    @pytest.mark.parametrize("s", [1, 2])
    def test_qs_family(self, s):
        assert reproduce("qs", s=s)

    def test_unknown_target(self):
        with pytest.raises(ValueError):
            reproduce("ex9")


class TestCli:
    def test_gale_from_fan_matrix(self, matrix_file, capsys):
        ruta = matrix_file(golden.EX1_V)
        assert main(["gale", ruta, "--from", "f"]) == 0
        assert parse_matrix(capsys.readouterr().out) == golden.EX1_Q

    def test_gale_to_file(self, matrix_file, tmp_path):
        ruta = matrix_file(golden.EX2_Q)
        salida = tmp_path / "out" / "V.txt"
        assert main(["gale", ruta, "--from", "w", "--out", str(salida)]) == 0
        assert read_matrix(salida) == golden.EX2_V

    def test_chambers(self, matrix_file, capsys):
        assert main(["chambers", matrix_file(golden.EX1_Q)]) == 0
        camaras = json.loads(capsys.readouterr().out)
        assert [c["alias"] for c in camaras] == ["g1", "g2"]
        assert all(c["region"] == "mov" for c in camaras)
        assert all(i >= 1 for c in camaras for J in c["bunch"] for i in J)

    def test_chambers_from_fan_matrix_smooth_only(self, matrix_file, capsys):
        assert main(["chambers", matrix_file(golden.CEX4_V), "--kind", "f", "--smooth-only"]) == 0
        assert len(json.loads(capsys.readouterr().out)) == 8

    def test_validate(self, matrix_file, capsys):
        assert main(["validate-w", matrix_file(golden.CEX4_Q)]) == 0
        assert "✓ W-matriz válida" in capsys.readouterr().out
        assert main(["validate-w", matrix_file([[1, 1, 1, 0], [1, 1, 0, 1]])]) == 1
        assert "(f)" in capsys.readouterr().out

    def test_validate_json(self, matrix_file, capsys):
        assert main(["validate-f", matrix_file([[1, 0, -1], [0, 2, -2]]), "--json"]) == 0
        reporte = json.loads(capsys.readouterr().out)
        assert reporte["valid"] is True
        assert reporte["flags"]["cf"] is False

    def test_classify(self, matrix_file, capsys, ex1):
        camara = ex1.by_generators(golden.EX1_CHAMBERS["g1"])
        assert main(["classify", matrix_file(golden.EX1_Q), "--chamber", camara.id]) == 0
        reporte = json.loads(capsys.readouterr().out)
        assert reporte["chamber_id"] == camara.id
        assert (reporte["case_label"], reporte["case_number"]) == golden.EX1_LABELS["g1"]

    def test_walls(self, matrix_file, capsys, cex4_chambers):
        ruta = matrix_file(golden.CEX4_Q)
        origen, destino = cex4_chambers["g1"].id, cex4_chambers["g10"].id
        assert main(["walls", ruta, "--from", origen, "--to", destino]) == 0
        camino = json.loads(capsys.readouterr().out)
        assert camino["length"] == 3
        assert camino["route"][0] == origen

    def test_anticanonical(self, matrix_file, capsys, cex4_chambers):
        ruta = matrix_file(golden.CEX4_Q)
        assert main(["anticanonical", ruta, "--chamber", cex4_chambers["g10"].id]) == 0
        k = json.loads(capsys.readouterr().out)
        assert k["class"] == list(golden.CEX4_ANTICANONICAL)
        assert k["verdict"] == "weak_fano"

    def test_primitive_and_fan(self, matrix_file, capsys):
        ruta = matrix_file([[1, 1, 1]])
        assert main(["primitive", ruta, "--chamber", "g1"]) == 0
        lista = json.loads(capsys.readouterr().out)
        assert lista["collections"][0]["indices"] == [1, 2, 3]
        assert lista["collections"][0]["class"] == [1]
        assert main(["fan", ruta, "--chamber", "1"]) == 0
        fan = json.loads(capsys.readouterr().out)
        assert sorted(fan["maximal_cones"]) == [[1, 2], [1, 3], [2, 3]]
        assert fan["smooth"] is True

    def test_mathematical_errors_exit_with_one(self, matrix_file, capsys, tmp_path):
        assert main(["classify", matrix_file(golden.EX1_Q), "--chamber", "g7"]) == 1
        assert "✗ Error" in capsys.readouterr().err
        assert main(["gale", str(tmp_path / "no_existe.txt"), "--from", "f"]) == 1
        (tmp_path / "mal.txt").write_text("2 2\n1 0\n", encoding="utf-8")
        assert main(["validate-w", str(tmp_path / "mal.txt")]) == 1

    def test_unexpected_errors_exit_with_two(self, matrix_file, capsys, monkeypatch):
        def fallo(*args, **kwargs):
            raise ValueError("fallo de prueba")

        monkeypatch.setattr("commands.main.enumerate_chambers", fallo)
        assert main(["chambers", matrix_file(golden.EX1_Q)]) == 2
        assert "✗ Error interno: fallo de prueba" in capsys.readouterr().err

    def test_usage_errors(self, matrix_file, tmp_path):
        with pytest.raises(SystemExit) as info:
            main(["gale", matrix_file(golden.EX1_V)])
        assert info.value.code == 2
        with pytest.raises(SystemExit):
            main(["export", matrix_file(golden.EX1_Q)])
        with pytest.raises(SystemExit):
            main(["reproduce", "ex9"])

    def test_reproduce_command(self, capsys):
        assert main(["reproduce", "ex1"]) == 0
        assert "✓ PASS" in capsys.readouterr().out


class TestSection:
    def test_section_point(self):
        assert section_point((1, 1, 2)) == (Fraction(1, 4), Fraction(1, 4))
        with pytest.raises(ValueError):
            section_point((0, 0, 0))

    def test_json_for_rank_three(self, matrix_file, capsys):
        assert main(["plot-section", matrix_file(golden.EX1_Q), "--chamber", "g2"]) == 0
        modelo = json.loads(capsys.readouterr().out)
        assert modelo["r"] == 3
        assert [c["alias"] for c in modelo["chambers"]] == ["g1", "g2"]
        assert [c["selected"] for c in modelo["chambers"]] == [False, True]
        assert len(modelo["columns"]) == 6
        assert all(len(v) == 2 for c in modelo["chambers"] for v in c["vertices"])

    def test_svg_is_deterministic(self, ex1):
        modelo = section(ex1.Q, ex1.chambers, aliases=["g1", "g2"])
        primero, segundo = render_svg(modelo), render_svg(modelo)
        assert primero == segundo
        assert "<svg" in primero

    def test_svg_written_by_cli(self, matrix_file, tmp_path):
        salida = tmp_path / "seccion.svg"
        assert main(["plot-section", matrix_file(golden.EX1_Q), "--format", "svg", "--out", str(salida)]) == 0
        assert salida.read_text(encoding="utf-8").lstrip().startswith("<?xml")

    def test_rank_four_has_no_svg(self, matrix_file, cex4):
        modelo = section(cex4.Q, cex4.chambers)
        assert modelo.r == 4
        assert all(len(v) == 3 for c in modelo.chambers for v in c.vertices)
        with pytest.raises(UnsupportedRankError):
            render_svg(modelo)
        assert main(["plot-section", matrix_file(golden.CEX4_Q), "--format", "svg"]) == 1

    def test_unsupported_rank(self, p1xp1):
        with pytest.raises(UnsupportedRankError):
            section(p1xp1.Q, p1xp1.chambers)


class TestExport:
    def test_workbook(self, matrix_file, tmp_path, capsys):
        salida = tmp_path / "ex1.xlsx"
        assert main(["export", matrix_file(golden.EX1_Q), "--out", str(salida)]) == 0
        hojas = pd.read_excel(salida, sheet_name=None)
        assert list(hojas) == ["CAMARAS", "COLECCIONES", "PAREDES", "RESUMEN"]
        camaras = hojas["CAMARAS"]
        assert list(camaras["ALIAS"]) == ["g1", "g2"]
        assert set(camaras["LISA"]) == {"SI"}
        paredes = hojas["PAREDES"]
        assert len(paredes) == 1
        assert list(paredes.iloc[0][["DESDE", "HACIA"]]) == ["g1", "g2"]
        resumen = dict(zip(hojas["RESUMEN"]["CONCEPTO"], hojas["RESUMEN"]["VALOR"]))
        assert str(resumen["Cámaras en Mov"]) == "2"


class TestSchemas:
    def test_schemas_written(self, tmp_path, capsys):
        assert main(["schemas", "--out", str(tmp_path)]) == 0
        archivos = sorted(p.name for p in tmp_path.glob("*.schema.json"))
        assert archivos == sorted(f"{k}.schema.json" for k in reports.REPORT_MODELS)
        esquema = json.loads((tmp_path / "primitive.schema.json").read_text(encoding="utf-8"))
        coleccion = esquema["$defs"]["PrimitiveCollectionModel"]
        assert "class" in coleccion["properties"]

    def test_aliases_in_dumps(self, p2):
        colecciones = enumerate_primitive_collections(p2.V, p2.Q, p2.chambers[0])
        datos = json.loads(reports.dump(reports.primitive_list_model(p2.chambers[0], colecciones)))
        assert "class" in datos["collections"][0]
        assert datos["collections"][0]["coeffs"] == []
        assert datos["relation_count"] == 1
