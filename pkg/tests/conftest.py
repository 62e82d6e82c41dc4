# -*- coding: utf-8 -*-
"""
Fixtures compartidas: matrices de los ejemplos de referencia y corpus
aleatorios reproducibles.
"""

import itertools
import sys
from pathlib import Path

import pytest

BASE_DIR = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(BASE_DIR / "scripts"))

from commands import golden  # noqa: E402
from gale.duality import gale_dual_of_w, gale_pair_of_f  # noqa: E402
from gale.validation import validate_f, validate_w  # noqa: E402
from search.hunt import SearchParams, random_candidate  # noqa: E402
from secondary_fan.chambers import enumerate_chambers  # noqa: E402
from secondary_fan.fans import star_subdivision  # noqa: E402
from search.prng import CounterRNG  # noqa: E402
from core.errors import GaleSuiteError  # noqa: E402


class Pair:
    """Par de Gale (V, Q) con sus cámaras de Mov(Q)."""

    def __init__(self, V, Q, order=None):
        self.V = V
        self.Q = Q
        self.order = order or tuple(range(Q.size))
        self._chambers = None

    @property
    def chambers(self):
        if self._chambers is None:
            self._chambers = enumerate_chambers(self.Q, "mov")
        return self._chambers

    def by_generators(self, generators):
        buscado = frozenset(tuple(g) for g in generators)
        for c in self.chambers:
            if frozenset(c.generators) == buscado:
                return c
        raise AssertionError(f"No hay cámara con generadores {generators}")

    def relabel(self, cones):
        """Conos en la numeración original, llevados al orden de columnas del par."""
        posicion = {j: k for k, j in enumerate(self.order)}
        return tuple(sorted(tuple(sorted(posicion[j] for j in I)) for I in cones))


def pair_from_f(rows):
    par = gale_pair_of_f(validate_f(rows).require())
    return Pair(par.fan_matrix, par.weight_matrix, par.column_order)


def pair_from_w(rows):
    Q = validate_w(rows).require()
    return Pair(gale_dual_of_w(Q), Q)


@pytest.fixture(scope="session")
def ex1():
    return pair_from_f(golden.EX1_V)


@pytest.fixture(scope="session")
def ex2():
    return pair_from_w(golden.EX2_Q)


@pytest.fixture(scope="session")
def cex4():
    return pair_from_f(golden.CEX4_V)


@pytest.fixture(scope="session")
def cex4_chambers(cex4):
    """Cámaras de cex4 indexadas por su nombre de referencia g1 … g10."""
    return {k: cex4.by_generators(gens) for k, (gens, _) in golden.CEX4_CHAMBERS.items()}


@pytest.fixture
def p2():
    return pair_from_w([[1, 1, 1]])


@pytest.fixture
def p1xp1():
    return pair_from_w([[1, 0, 1, 0], [0, 1, 0, 1]])


@pytest.fixture
def f1():
    return pair_from_w([[1, 0, 1, 1], [0, 1, 0, 1]])


def projective_space(n: int):
    """ℙⁿ: V = [I | −1]."""
    filas = [[1 if i == j else 0 for j in range(n)] + [-1] for i in range(n)]
    return pair_from_f(filas)


def hirzebruch(a: int):
    """F_a: rayos (1,0), (0,1), (−1,a), (0,−1)."""
    return pair_from_f([[1, 0, -1, 0], [0, 1, a, -1]])


# ============================================================
# CORPUS ALEATORIOS
# ============================================================

def random_corpus(count: int, seed: int = 2024, entry_bound: int = 3, max_attempts: int = 20000):
    """
    Instancias válidas con n ≤ 5 y r ∈ {2, 3}, generadas con el PRNG por
    contador de la búsqueda (candidato k del flujo k).
    """
    formas = [(n, r) for r in (2, 3) for n in range(2, 6) if n + r <= 8]
    corpus = []
    for k in range(max_attempts):
        if len(corpus) >= count:
            break
        n, r = formas[k % len(formas)]
        params = SearchParams(n=n, r=r, entry_bound=entry_bound, max_candidates=0, seed=seed)
        reporte = validate_w(random_candidate(params, k), expect_r=r)
        if not reporte.valid:
            continue
        try:
            V = gale_dual_of_w(reporte.matrix)
        except GaleSuiteError:
            continue
        assert validate_w(reporte.matrix.entries).valid
        assert all(x == 0 for x in V.array.dot(reporte.matrix.array.T).flat)
        corpus.append(Pair(V, reporte.matrix))
    return corpus


def threefold_corpus(count: int, seed: int = 7, max_attempts: int = 2000):
    """
    Variedades tóricas lisas proyectivas de dimensión 3 y rango 4: tres
    explosiones sucesivas de ℙ³ a lo largo de conos elegidos con el PRNG.

    Returns:
        Lista de (V, conos maximales) distintos
    """
    base = projective_space(3).V
    conos_base = tuple(tuple(j for j in range(4) if j != i) for i in range(4))
    vistos = set()
    corpus = []
    for k in range(max_attempts):
        if len(corpus) >= count:
            break
        rng = CounterRNG(seed=seed, stream=k)
        V, conos = base, conos_base
        for _ in range(3):
            caras = sorted({
                tuple(sorted(sub))
                for I in conos
                for m in (2, 3)
                for sub in itertools.combinations(I, m)
            })
            V, conos = star_subdivision(V, conos, rng.choice(caras))
        clave = (V.entries, conos)
        if clave in vistos:
            continue
        vistos.add(clave)
        corpus.append((V, conos))
    return corpus


@pytest.fixture(scope="session")
def corpus():
    return random_corpus(200)


@pytest.fixture(scope="session")
def threefolds():
    return threefold_corpus(50)
