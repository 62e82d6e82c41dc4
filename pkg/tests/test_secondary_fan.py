# -*- coding: utf-8 -*-
import itertools
from dataclasses import replace

import pytest

from commands import golden
from core.errors import ConsistencyError, FanNotProjectiveError, UnknownChamberError
from exact_linalg.matrices import det
from secondary_fan.chambers import (
    adjacent_chamber,
    certify_chamber,
    enumerate_chambers,
    find_chamber,
    mov_cone,
    simplicial_cones,
)
from secondary_fan.fans import (
    Fan,
    chamber_from_fan,
    complement,
    fan_from_chamber,
    is_smooth_chamber,
    star_subdivision,
    verify_fan,
)

from conftest import pair_from_f, projective_space


class TestSmallChambers:
    def test_projective_plane(self, p2):
        camaras = p2.chambers
        assert [c.id for c in camaras] == ["1"]
        assert camaras[0].bunch == ((0,), (1,), (2,))
        assert camaras[0].smooth

    def test_product_of_lines(self, p1xp1):
        camaras = p1xp1.chambers
        assert [c.id for c in camaras] == ["0,1|1,0"]
        assert camaras[0].bunch == ((0, 1), (0, 3), (1, 2), (2, 3))

    def test_hirzebruch_mov_and_all(self, f1):
        assert mov_cone(f1.Q).generators == ((1, 0), (1, 1))
        mov = enumerate_chambers(f1.Q, "mov")
        assert [c.id for c in mov] == ["1,0|1,1"]
        todas = enumerate_chambers(f1.Q, "all")
        assert [c.id for c in todas] == ["0,1|1,1", "1,0|1,1"]
        assert [c.region for c in todas] == ["all", "mov"]
        assert todas[0].bunch == ((0, 1), (1, 2), (1, 3))

    def test_unknown_region(self, f1):
        with pytest.raises(ValueError):
            enumerate_chambers(f1.Q, "nef")


class TestReferenceChambers:
    def test_ex1(self, ex1):
        assert len(ex1.chambers) == 2
        for nombre, gens in golden.EX1_CHAMBERS.items():
            assert ex1.by_generators(gens).smooth

    def test_ex2(self, ex2):
        assert sorted(mov_cone(ex2.Q).generators) == golden.EX2_MOV
        assert len(ex2.chambers) == 3

    def test_cex4_chambers_and_smoothness(self, cex4, cex4_chambers):
        assert len(cex4.chambers) == 10
        for nombre, (_, liso) in golden.CEX4_CHAMBERS.items():
            assert cex4_chambers[nombre].smooth is liso, nombre

    def test_cex4_g10_fan(self, cex4, cex4_chambers):
        fan = fan_from_chamber(cex4.V, cex4.Q, cex4_chambers["g10"])
        conos = sorted(tuple(i + 1 for i in I) for I in fan.maximal_cones)
        assert conos == sorted(golden.CEX4_FAN_G10)

    def test_chambers_have_disjoint_interiors(self, cex4):
        for camara in cex4.chambers:
            punto = camara.cone.relint_point()
            dentro = [c.id for c in cex4.chambers if c.cone.in_relint(punto)]
            assert dentro == [camara.id]
            assert mov_cone(cex4.Q).contains(punto)

    def test_chambers_are_sorted_and_certified(self, cex4):
        ids = [c.id for c in cex4.chambers]
        assert ids == sorted(ids)
        for camara in cex4.chambers:
            certify_chamber(cex4.Q, camara)


class TestFanCorrespondence:
    def test_round_trip_on_every_chamber(self, cex4):
        for camara in cex4.chambers:
            fan = fan_from_chamber(cex4.V, cex4.Q, camara)
            assert chamber_from_fan(cex4.V, cex4.Q, fan) == camara

    def test_smoothness_from_fan_minors(self, cex4, ex1, ex2):
        for par in (cex4, ex1, ex2):
            for camara in par.chambers:
                assert is_smooth_chamber(par.V, par.Q, camara) == camara.smooth

    def test_complementary_minors(self, cex4):
        V, Q = cex4.V, cex4.Q
        for J in itertools.combinations(range(Q.size), Q.r):
            I = complement(J, Q.size)
            assert abs(det(Q.submatrix(J))) == abs(det(V.submatrix(I)))
        assert all(abs(b.determinant) == abs(det(V.submatrix(complement(J, Q.size))))
                   for J, b in simplicial_cones(Q).items())

    def test_verify_fan_reports_problems(self, p2):
        assert verify_fan(p2.V, ((0, 1), (0, 2), (1, 2))).ok
        incompleto = verify_fan(p2.V, ((0, 1), (0, 2)))
        assert not incompleto.complete
        assert incompleto.problems

    def test_projective_line(self):
        p1 = projective_space(1)
        reporte = verify_fan(p1.V, ((0,), (1,)))
        assert reporte.ok and reporte.smooth
        assert not verify_fan(p1.V, ((0,),)).complete
        (camara,) = p1.chambers
        fan = fan_from_chamber(p1.V, p1.Q, camara)
        assert fan.maximal_cones == ((0,), (1,))
        assert chamber_from_fan(p1.V, p1.Q, fan).cone == camara.cone

    def test_union_of_bunches_is_not_projective(self, f1):
        conos = tuple(sorted(complement(J, 4) for J in ((0, 1), (0, 3), (1, 2), (1, 3), (2, 3))))
        with pytest.raises(FanNotProjectiveError):
            chamber_from_fan(f1.V, f1.Q, Fan(fan_matrix=f1.V, maximal_cones=conos))

    def test_fans_on_corpus(self, corpus):
        for par in corpus[:60]:
            for camara in par.chambers:
                fan = fan_from_chamber(par.V, par.Q, camara)
                assert chamber_from_fan(par.V, par.Q, fan).cone == camara.cone


class TestChamberLookup:
    def test_find_by_id_and_alias(self, ex1):
        primera, segunda = ex1.chambers
        assert find_chamber(ex1.chambers, segunda.id) is segunda
        assert find_chamber(ex1.chambers, "g2") is segunda
        assert find_chamber(ex1.chambers, "γ1") is primera
        assert find_chamber(ex1.chambers, " 1 ") is primera

    def test_unknown_chamber(self, ex1):
        for clave in ("g3", "0", "1,1,1"):
            with pytest.raises(UnknownChamberError):
                find_chamber(ex1.chambers, clave)

    def test_tampered_bunch_is_rejected(self, ex1):
        camara = ex1.chambers[0]
        with pytest.raises(ConsistencyError):
            certify_chamber(ex1.Q, replace(camara, bunch=camara.bunch[:-1]))

    def test_adjacent_chamber(self, f1):
        mov = enumerate_chambers(f1.Q, "mov")[0]
        vecina = adjacent_chamber(f1.Q, mov, (1, -1))
        assert vecina.id == "0,1|1,1"
        assert vecina.region == "all"
        assert adjacent_chamber(f1.Q, mov, (0, 1)) is None

    def test_adjacent_chambers_stay_in_list(self, cex4):
        ids = {c.id for c in cex4.chambers}
        for camara in cex4.chambers:
            for normal in camara.cone.facet_normals:
                vecina = adjacent_chamber(cex4.Q, camara, normal)
                if vecina is not None and vecina.region == "mov":
                    assert vecina.id in ids


class TestStarSubdivision:
    def test_blow_up_of_plane(self):
        p2 = projective_space(2)
        V2, conos = star_subdivision(p2.V, ((0, 1), (0, 2), (1, 2)), (0, 1))
        assert V2.entries == ((1, 0, -1, 1), (0, 1, -1, 1))
        assert conos == ((0, 2), (0, 3), (1, 2), (1, 3))

        par = pair_from_f(V2.entries)
        assert par.Q.entries == ((1, 1, 1, 0), (0, 0, 1, 1))
        camara = chamber_from_fan(par.V, par.Q, Fan(fan_matrix=par.V, maximal_cones=conos))
        assert camara.smooth
        assert camara in par.chambers

    def test_invalid_cones(self):
        p2 = projective_space(2)
        with pytest.raises(ValueError):
            star_subdivision(p2.V, ((0, 1), (0, 2), (1, 2)), (0,))
        with pytest.raises(ValueError):
            star_subdivision(p2.V, ((0, 1), (0, 2), (1, 2)), (0, 1, 2))

    def test_threefolds_are_projective(self, threefolds):
        assert len(threefolds) >= 50
        for V, conos in threefolds[:10]:
            par = pair_from_f(V.entries)
            camara = chamber_from_fan(par.V, par.Q, Fan(fan_matrix=par.V, maximal_cones=par.relabel(conos)))
            assert camara.smooth
            assert verify_fan(par.V, par.relabel(conos)).smooth
