# -*- coding: utf-8 -*-
import json

import pytest

from commands import golden
from search.families import qs_family
from search.hunt import SearchParams, _resume_point, evaluate_candidate, hunt, random_candidate
from search.prng import GAMMA, MASK64, CounterRNG, draw, mix64


class TestCounterRNG:
    def test_known_values(self):
        assert mix64(0) == 0
        assert mix64(GAMMA) == 0xE220A8397B1DCDAF
        assert mix64((2 * GAMMA) & MASK64) == 0x6E789E6AA1B965F4
        assert draw(0, 0, 0) == 0xE220A8397B1DCDAF
        assert draw(0, 0, 1) == 0x6E789E6AA1B965F4

    def test_sequence_is_a_function_of_the_counter(self):
        rng = CounterRNG(seed=0)
        assert [rng.next_u64(), rng.next_u64()] == [draw(0, 0, 0), draw(0, 0, 1)]
        assert rng.counter == 2
        assert CounterRNG(seed=9, stream=4).next_u64() == draw(9, 4, 0)
        assert CounterRNG(seed=9).split(4) == CounterRNG(seed=9, stream=4)

    def test_streams_differ(self):
        assert draw(1, 0, 0) != draw(1, 1, 0)
        assert draw(1, 0, 0) != draw(2, 0, 0)

    def test_randint(self):
        rng = CounterRNG(seed=5)
        valores = [rng.randint(-2, 3) for _ in range(600)]
        assert set(valores) == {-2, -1, 0, 1, 2, 3}
        assert rng.randint(7, 7) == 7
        with pytest.raises(ValueError):
            rng.randint(3, 2)

    def test_sample_sorted(self):
        rng = CounterRNG(seed=11)
        for _ in range(50):
            muestra = rng.sample_sorted(10, 3)
            assert muestra == sorted(set(muestra))
            assert len(muestra) == 3
            assert all(0 <= x < 10 for x in muestra)
        assert rng.sample_sorted(5, 5) == [0, 1, 2, 3, 4]
        assert rng.sample_sorted(5, 0) == []
        with pytest.raises(ValueError):
            rng.sample_sorted(2, 3)

    def test_choice(self):
        rng = CounterRNG(seed=1)
        assert all(rng.choice("abc") in "abc" for _ in range(20))


class TestParams:
    @pytest.mark.parametrize("kwargs", [
        {"n": 0, "r": 2},
        {"n": 2, "r": 0},
        {"n": 2, "r": 2, "entry_bound": 0},
        {"n": 2, "r": 2, "max_candidates": -1},
        {"n": 2, "r": 2, "batch_size": 0},
        {"n": 2, "r": 2, "seed": -1},
        {"n": 2, "r": 2, "seed": 1 << 64},
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(ValueError):
            SearchParams(**kwargs)


class TestCandidates:
    def test_shape_and_echelon_form(self):
        params = SearchParams(n=4, r=3, entry_bound=2, seed=123)
        for k in range(40):
            M = random_candidate(params, k)
            assert len(M) == 3 and all(len(f) == 7 for f in M)
            pivotes = [f.index(1) for f in M]
            assert pivotes[0] == 0
            assert pivotes == sorted(set(pivotes))
            for i, fila in enumerate(M):
                assert all(x == 0 for x in fila[:pivotes[i]])
                assert all(0 <= x <= 2 for x in fila)
                for p in pivotes:
                    if p != pivotes[i]:
                        assert fila[p] == 0

    def test_deterministic(self):
        params = SearchParams(n=3, r=2, seed=42)
        assert random_candidate(params, 17) == random_candidate(params, 17)
        assert random_candidate(params, 17) == random_candidate(SearchParams(n=3, r=2, seed=42), 17)

    def test_invalid_candidate_is_skipped(self):
        assert evaluate_candidate("x", [[1, 1, 1, 0], [1, 1, 0, 1]]) == []


class TestFamilies:
    def test_qs_family(self):
        assert [list(f) for f in qs_family(1).entries] == golden.CEX4_Q
        Q = qs_family(3)
        assert (Q.r, Q.size) == (4, 10)
        assert Q.column(6) == Q.column(7) == Q.column(8) == (1, 1, 1, 1)
        with pytest.raises(ValueError):
            qs_family(0)


class TestHunt:
    def test_injected_counterexample(self, tmp_path):
        catalogo = tmp_path / "hallazgos.jsonl"
        hallazgos = hunt(SearchParams(n=4, r=4, max_candidates=0), extra_candidates=[golden.CEX4_Q],
                         catalog=catalogo)
        assert len(hallazgos) == 1
        assert hallazgos[0].candidate == "x0"
        assert hallazgos[0].report.case_label == "counterexample_interior_nef"
        gens = set(golden.CEX4_CHAMBERS["g10"][0])
        assert set(hallazgos[0].chamber.generators) == gens

        (linea,) = catalogo.read_text(encoding="utf-8").splitlines()
        registro = json.loads(linea)
        assert registro["candidate"] == "x0"
        assert registro["weight_matrix"] == golden.CEX4_Q
        assert registro["chamber_id"] == hallazgos[0].chamber.id

    def test_same_catalog_for_any_thread_count(self, tmp_path):
        params = SearchParams(n=3, r=3, entry_bound=2, max_candidates=40, seed=8, batch_size=8)
        uno = hunt(params, catalog=tmp_path / "uno.jsonl", threads=1)
        cuatro = hunt(params, catalog=tmp_path / "cuatro.jsonl", threads=4)
        assert [(h.candidate, h.chamber.id) for h in uno] == [(h.candidate, h.chamber.id) for h in cuatro]
        assert (tmp_path / "uno.jsonl").read_text() == (tmp_path / "cuatro.jsonl").read_text()

    def test_checkpoints(self, tmp_path):
        params = SearchParams(n=2, r=2, max_candidates=20, seed=1, batch_size=8)
        catalogo = tmp_path / "c.jsonl"
        hunt(params, catalog=catalogo)
        controles = [json.loads(l)["checkpoint"] for l in catalogo.read_text().splitlines()
                     if "checkpoint" in json.loads(l)]
        assert controles == [8, 16, 20]

    def test_resume_reproduces_the_full_run(self, tmp_path):
        params = SearchParams(n=3, r=3, entry_bound=2, max_candidates=32, seed=8, batch_size=16)
        completo = tmp_path / "completo.jsonl"
        hunt(params, catalog=completo)
        lineas = completo.read_text(encoding="utf-8").splitlines(keepends=True)
        corte = next(i for i, l in enumerate(lineas) if "checkpoint" in json.loads(l))

        parcial = tmp_path / "parcial.jsonl"
        parcial.write_text("".join(lineas[:corte + 1]), encoding="utf-8")
        hunt(params, catalog=parcial, resume=True)
        assert parcial.read_text(encoding="utf-8") == completo.read_text(encoding="utf-8")

    def test_resume_returns_only_new_findings(self, tmp_path):
        params = SearchParams(n=3, r=3, entry_bound=2, max_candidates=32, seed=8, batch_size=16)
        catalogo = tmp_path / "c.jsonl"
        completos = hunt(params, catalog=catalogo)
        lineas = catalogo.read_text(encoding="utf-8").splitlines(keepends=True)
        corte = next(i for i, l in enumerate(lineas) if "checkpoint" in json.loads(l))
        catalogo.write_text("".join(lineas[:corte + 1]), encoding="utf-8")
        assert _resume_point(catalogo, params) == (16, corte)

        reanudados = hunt(params, catalog=catalogo, resume=True)
        assert [h.candidate for h in reanudados] == [h.candidate for h in completos if int(h.candidate) >= 16]

    def test_resume_ignores_other_parameters(self, tmp_path):
        catalogo = tmp_path / "c.jsonl"
        hunt(SearchParams(n=2, r=2, max_candidates=8, seed=1, batch_size=8), catalog=catalogo)
        antes = catalogo.read_text()
        hunt(SearchParams(n=2, r=2, max_candidates=8, seed=2, batch_size=8), catalog=catalogo, resume=True)
        despues = catalogo.read_text()
        assert despues.startswith(antes)
        assert len(despues.splitlines()) > len(antes.splitlines())
