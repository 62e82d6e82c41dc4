# -*- coding: utf-8 -*-
import pytest

from cones.cone import Cone


QUADRANT = [(1, 0), (0, 1)]


def test_generators_are_extremal_primitive_and_sorted():
    c = Cone.from_generators([(2, 0), (0, 3), (1, 1)])
    assert c.generators == ((0, 1), (1, 0))
    assert c.facet_normals == ((0, 1), (1, 0))
    assert c == Cone.from_generators(QUADRANT)


def test_from_inequalities_matches_from_generators():
    assert Cone.from_inequalities([(1, 0), (0, 1)]) == Cone.from_generators(QUADRANT)
    c = Cone.from_inequalities([(0, 1), (2, -1), (1, 1)])
    assert c.generators == ((1, 0), (1, 2))
    assert c.facet_normals == ((0, 1), (2, -1))


def test_double_dual():
    c = Cone.from_generators([(1, 0), (1, 2)])
    assert c.dual().generators == ((0, 1), (2, -1))
    assert c.dual().dual() == c

    c3 = Cone.from_generators([(1, 0, 0), (0, 1, 0), (1, 1, 1), (0, 0, 1), (1, 0, 1)])
    assert c3.dual().dual() == c3


def test_membership():
    c = Cone.from_generators([(1, 0), (1, 2)])
    assert c.contains((2, 1))
    assert c.contains((1, 0))
    assert not c.in_relint((1, 0))
    assert c.in_relint((2, 1))
    assert not c.contains((0, 1))


def test_intersection():
    a = Cone.from_generators(QUADRANT)
    b = Cone.from_generators([(1, 1), (-1, 1)])
    assert a.intersect(b) == Cone.from_generators([(0, 1), (1, 1)])
    with pytest.raises(ValueError):
        a.intersect(Cone.from_generators([(1, 0, 0)]))


def test_lineality_and_dimension():
    semiplano = Cone.from_generators([(1, 0), (-1, 0), (0, 1)])
    assert semiplano.lineality == ((1, 0),)
    assert semiplano.generators == ((0, 1),)
    assert not semiplano.is_pointed
    assert semiplano.dim == 2

    rayo = Cone.from_generators([(1, 1, 0)])
    assert rayo.dim == 1
    assert not rayo.is_full_dimensional
    assert rayo.is_simplicial()

    plano = Cone.hyperplane((0, 0, 1))
    assert plano.dim == 2
    assert len(plano.lineality) == 2


def test_zero_cone():
    cero = Cone.from_generators([], ambient_dim=3)
    assert cero.dim == 0
    assert cero.generators == ()
    with pytest.raises(ValueError):
        Cone.from_generators([])


def test_faces():
    ortante = Cone.from_generators([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    rayos = ortante.faces(1)
    assert [f.generators for f in rayos] == [((0, 0, 1),), ((0, 1, 0),), ((1, 0, 0),)]
    assert len(ortante.faces(2)) == 3
    assert ortante.face_on((0, 0, 1)) == Cone.from_generators([(1, 0, 0), (0, 1, 0)])
    assert ortante.face_on((1, 1, 1)).dim == 0


def test_non_simplicial_cone():
    c = Cone.from_generators([(1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1)])
    assert len(c.generators) == 4
    assert len(c.facet_normals) == 4
    assert not c.is_simplicial()
    assert c.relint_point() == (0, 0, 4)
    assert c.contains_cone(Cone.from_generators([(0, 0, 1)]))


def test_canonical_form_of_a_half_plane():
    cono = Cone.from_generators([(1, 0, 1), (-1, 0, -1), (0, 1, 1), (2, 1, 3)])
    assert cono.lineality == ((1, 0, 1),)
    assert cono.equations == ((1, 1, -1),)
    assert cono.generators == ((-1, 2, 1),)
    assert cono.facet_normals == ((-1, 2, 1),)
    assert cono.dim == 2 and not cono.is_pointed
    assert Cone.from_inequalities([(-1, 2, 1), (0, 1, 0)], equations=[(2, 2, -2)]) == cono
