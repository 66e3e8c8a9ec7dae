from __future__ import annotations

from fractions import Fraction

import pytest

from symcurve.curve import complex_form
from symcurve.field import ComplexElement, FieldElement
from symcurve.fixtures import (
    APPENDIX_IDS,
    Motion,
    appendix_corpus,
    extra_fixtures,
    fixture,
    fuzz_corpus,
    plant_central,
    plant_mirror,
    random_asymmetric,
    random_planted_central,
    random_planted_mirror,
)
from symcurve.geometry import Line, Point
from symcurve.parse import parse_curve

S2_2 = FieldElement.sqrt(2) / 2


def test_corpus_shape():
    corpus = appendix_corpus()
    assert tuple(f.id for f in corpus) == APPENDIX_IDS
    central = {f.id: f.expected.central for f in corpus if f.expected.tested == "central"}
    mirror = {f.id: f.expected.mirror for f in corpus if f.expected.tested == "mirror"}
    assert [k for k, v in central.items() if v] == [
        "appendix-2", "appendix-3", "appendix-4", "appendix-39", "appendix-41"
    ]
    assert [k for k, v in mirror.items() if v] == [
        "appendix-6", "appendix-7", "appendix-11", "appendix-12", "appendix-44"
    ]


def test_listed_betas():
    assert fixture("appendix-39").expected.beta == ComplexElement(-2)
    assert fixture("appendix-42").expected.beta == ComplexElement(Fraction(-772, 385))
    assert fixture("appendix-44").expected.beta == ComplexElement(-2)
    assert fixture("appendix-37").expected.degree_actual == 21


def test_extras():
    extra = extra_fixtures()
    assert set(extra) == {"example-1", "appendix-44-printed"}
    assert extra["example-1"].expected.center == Point(1, -1)
    with pytest.raises(KeyError):
        fixture("appendix-5")


def test_plant_central_examples():
    assert plant_central([0, 0, 0, 1], [0, 1]).truth.center == Point(0, 0)
    shifted = plant_central([0, 0, 0, 1], [0, 1], motion=Motion.translation(2, 3))
    assert shifted.truth.center == Point(2, 3)
    with pytest.raises(ValueError):
        plant_central([0, 0, 0, 1], [0, 1], a=0)
    with pytest.raises(ValueError):
        plant_central([0, 0, 1, 1], [0, 1])


def test_example_1_regenerates():
    w = ComplexElement(1, -1)
    psi_x = [0] * 24
    psi_x[23], psi_x[13], psi_x[11] = 2, -1, 2
    planted = plant_central(psi_x, [0, 1, 0, -1, 0, 2], a=2, b=1, motion=Motion(w, w))
    assert planted.truth.center == Point(1, -1)
    assert planted.curve == fixture("example-1").parametrization()


def test_plant_mirror_examples():
    assert plant_mirror([0, 0, 1], [0, 0, 0, 1]).truth.axis == Line(0, 1, 0)
    rotated = plant_mirror([0, 0, 1], [0, 0, 0, 1], motion=Motion.rotation(S2_2, S2_2))
    assert rotated.truth.axis == Line(1, -1, 0)
    up = plant_mirror([0, 0, 1], [0, 0, 0, 1], motion=Motion.translation(0, 7))
    assert up.truth.axis == Line(0, 1, -7)
    with pytest.raises(ValueError):
        plant_mirror([0, 1], [0, 0, 0, 1])


def test_example_6_regenerates():
    v = [0] * 21
    v[20] = v[18] = v[10] = v[0] = 1
    u = [0] * 22
    u[21], u[5], u[3] = 1, -3, 1
    # the coordinate change (v + u, -v + u) is multiplication by 1 - i
    planted = plant_mirror(v, u, a=2, b=1, motion=Motion(ComplexElement(1, -1), ComplexElement(0)))
    assert planted.curve == fixture("appendix-6").parametrization()
    assert planted.truth.axis == Line(1, 1, 0)


def test_generators_are_deterministic():
    assert random_asymmetric(5, 1) == random_asymmetric(5, 1)
    assert random_asymmetric(5, 1) != random_asymmetric(5, 2)
    assert random_planted_central(9, 3) == random_planted_central(9, 3)
    assert random_planted_mirror(8, 3) == random_planted_mirror(8, 3)
    assert fuzz_corpus(8, 4) == fuzz_corpus(8, 4)
    assert max(random_asymmetric(2, 7).degrees) == 2


def test_generator_argument_checks():
    with pytest.raises(ValueError):
        random_planted_central(8, 0)
    with pytest.raises(ValueError):
        random_planted_mirror(3, 0, zero_subleading=True)
    with pytest.raises(ValueError):
        random_asymmetric(1, 0)


@pytest.mark.parametrize("degree", [5, 9, 17])
def test_zero_subleading(degree):
    for seed in range(3):
        for p in (
            random_planted_central(degree, seed, zero_subleading=True).curve,
            random_planted_mirror(degree + 1, seed, zero_subleading=True).curve,
            random_asymmetric(degree, seed, zero_subleading=True),
        ):
            z = complex_form(p)
            assert z.coeff(z.n - 1).is_zero()


def test_fixture_sources_parse():
    for f in appendix_corpus():
        assert parse_curve(f.source) == f.parametrization()
