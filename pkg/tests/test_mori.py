# -*- coding: utf-8 -*-
import pytest

from commands import golden
from cones.cone import Cone
from core.errors import InvalidRelationError
from exact_linalg.matrices import dot
from mori.relations import (
    Hyperplane,
    anticanonical,
    enumerate_primitive_collections,
    mori_cone,
    nef_cone_check,
    numerical_class,
    primitive_index_sets,
    primitive_index_sets_bruteforce,
)
from search.families import qs_family
from secondary_fan.chambers import enumerate_chambers
from secondary_fan.fans import fan_from_chamber

from conftest import Pair, hirzebruch
from gale.duality import gale_dual_of_w


def _collections(par, camara):
    return enumerate_primitive_collections(par.V, par.Q, camara)


class TestHyperplane:
    def test_normalization(self):
        assert Hyperplane.from_normal((0, -2, 4)).normal == (0, 1, -2)
        assert Hyperplane.from_normal((0, -2, 4), oriented=True).normal == (0, -1, 2)
        assert Hyperplane.from_normal((1, 1)).contains((2, -2))
        with pytest.raises(ValueError):
            Hyperplane.from_normal((0, 0))

    def test_as_cone(self):
        assert Hyperplane.from_normal((1, 0)).as_cone().dim == 1


class TestPrimitiveCollections:
    def test_projective_plane(self, p2):
        (coleccion,) = _collections(p2, p2.chambers[0])
        assert coleccion.indices == (0, 1, 2)
        assert coleccion.relation == (1, 1, 1)
        assert coleccion.scale == 1
        assert coleccion.sigma_indices == ()
        assert coleccion.n_P == (1,)
        assert coleccion.nef

    def test_product_of_lines(self, p1xp1):
        colecciones = _collections(p1xp1, p1xp1.chambers[0])
        assert [c.indices for c in colecciones] == [(0, 2), (1, 3)]
        assert [c.n_P for c in colecciones] == [(1, 0), (0, 1)]

    def test_hirzebruch_surface(self, f1):
        primera, segunda = _collections(f1, f1.chambers[0])
        assert primera.indices == (0, 2)
        assert primera.relation == (1, -1, 1, 0)
        assert primera.sigma_indices == (1,)
        assert primera.n_P == (1, -1)
        assert not primera.nef
        assert segunda.relation == (0, 1, 0, 1)
        assert segunda.nef

    def test_cone_criterion_matches_definition(self, ex1, ex2, cex4):
        for par in (ex1, ex2, cex4):
            for camara in par.chambers:
                fan = fan_from_chamber(par.V, par.Q, camara)
                assert primitive_index_sets(par.Q, camara) == primitive_index_sets_bruteforce(fan)

    def test_cone_criterion_on_corpus(self, corpus):
        for par in corpus[:80]:
            for camara in par.chambers:
                fan = fan_from_chamber(par.V, par.Q, camara)
                assert primitive_index_sets(par.Q, camara, threads=1) == primitive_index_sets_bruteforce(fan)

    def test_relations_are_linear_relations(self, corpus):
        for par in corpus[:40]:
            for camara in par.chambers:
                for c in _collections(par, camara):
                    for fila in par.V.entries:
                        assert dot(fila, c.relation) == 0
                    assert [dot(c.n_P, q) for q in par.Q.columns] == list(c.relation)

    def test_cex4_reference_relations(self, cex4, cex4_chambers):
        relaciones = {c.relation for c in _collections(cex4, cex4_chambers["g10"])}
        for relacion in golden.CEX4_NEF_RELATIONS:
            assert relacion in relaciones
        assert golden.CEX4_RELATION_SUM in relaciones

    def test_invalid_relation(self, p2):
        with pytest.raises(InvalidRelationError):
            numerical_class(p2.Q, (1, 0, 0))


class TestMoriCone:
    def test_cex4_mori_cone(self, cex4, cex4_chambers):
        mori = mori_cone(cex4.V, cex4.Q, cex4_chambers["g10"])
        assert mori == Cone.from_generators(golden.CEX4_G10_INVERSE)

    def test_duality_with_nef_cone(self, ex1, ex2, cex4, f1):
        for par in (ex1, ex2, cex4, f1):
            for camara in par.chambers:
                if camara.smooth:
                    assert nef_cone_check(par.V, par.Q, camara)

    def test_hirzebruch_family(self):
        for a in range(4):
            par = hirzebruch(a)
            for camara in par.chambers:
                assert nef_cone_check(par.V, par.Q, camara)


class TestAnticanonical:
    def test_projective_plane_is_fano(self, p2):
        k = anticanonical(p2.Q, p2.chambers[0])
        assert k.anticanonical_class == (3,)
        assert k.verdict == "fano"
        assert k.face_generators == ()

    def test_ample_class_has_no_face(self, p1xp1):
        k = anticanonical(p1xp1.Q, p1xp1.chambers[0])
        assert k.anticanonical_class == (2, 2)
        assert (k.verdict, k.on_boundary) == ("fano", False)
        assert k.face_generators == () and k.face_normals == ()

    def test_without_chamber(self, p2):
        k = anticanonical(p2.Q)
        assert k.big
        assert k.ample is None
        assert k.verdict is None

    def test_cex4_weak_fano(self, cex4, cex4_chambers):
        k = anticanonical(cex4.Q, cex4_chambers["g10"])
        assert k.anticanonical_class == golden.CEX4_ANTICANONICAL
        assert k.verdict == "weak_fano"
        assert k.on_boundary
        assert sorted(k.face_generators) == sorted(golden.CEX4_ANTICANONICAL_FACE)

    def test_qs_family_leaves_the_chamber(self):
        Q = qs_family(2)
        par = Pair(gale_dual_of_w(Q), Q)
        gens = golden.CEX4_CHAMBERS["g10"][0]
        k = anticanonical(Q, par.by_generators(gens))
        assert k.anticanonical_class == golden.qs_anticanonical(2)
        assert k.verdict == "no_nef"
        assert not k.nef
        assert len(enumerate_chambers(Q, "mov")) == 10
