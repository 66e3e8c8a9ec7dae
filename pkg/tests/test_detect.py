from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from symcurve.curve import CurveTag, Parametrization, complex_form
from symcurve.detect import (
    EXCLUSION_NOTE,
    ROTATION_NOTE,
    central_oracle,
    detect_all,
    mirror_oracle,
    oracle_check,
)
from symcurve.field import ComplexElement, FieldElement
from symcurve.fixtures import fixture, fuzz_corpus, random_planted_mirror
from symcurve.geometry import Line, Point
from symcurve.poly import RealPoly

T = RealPoly([0, 1])
EPS = Fraction(1, 1000)


def test_example_6_report():
    rep = detect_all(fixture("appendix-6").parametrization())
    assert not rep.central.symmetric and rep.mirror.symmetric
    assert rep.mirror.axis == Line(1, 1, 0)
    assert rep.oracle_verified
    assert ROTATION_NOTE in rep.notes and EXCLUSION_NOTE in rep.notes


def test_example_2_report():
    rep = detect_all(fixture("appendix-2").parametrization())
    assert rep.central.symmetric and not rep.mirror.symmetric


def test_parabola():
    rep = detect_all(Parametrization(T, T ** 2))
    assert not rep.central.symmetric
    assert rep.mirror.symmetric and rep.mirror.axis == Line(1, 0, 0)


@pytest.mark.parametrize(
    "x, y, tag",
    [(RealPoly([3]), RealPoly([5]), CurveTag.POINT), (T, 2 * T + 1, CurveTag.LINE), (T ** 2, T ** 4, CurveTag.IMPROPER)],
)
def test_short_circuit(x, y, tag):
    rep = detect_all(Parametrization(x, y))
    assert rep.curve_class.tag is tag
    assert rep.central is None and rep.mirror is None and not rep.oracle_verified


def test_oracle_examples():
    z1 = complex_form(fixture("example-1").parametrization())
    assert central_oracle(z1, Point(1, -1), FieldElement.from_rational(-1))
    assert not central_oracle(z1, Point(1, -1 + EPS), FieldElement.from_rational(-1))
    z6 = complex_form(fixture("appendix-6").parametrization())
    assert mirror_oracle(z6, Line(1, 1, 0), FieldElement.from_rational(-1))
    assert not mirror_oracle(z6, Line(1, 1, EPS), FieldElement.from_rational(-1))
    # the tabulated reading y = x fails the identity
    assert not mirror_oracle(z6, Line(1, -1, 0), FieldElement.from_rational(-1))


def test_oracle_rejects_negative_verdicts():
    rep = detect_all(fixture("appendix-10").parametrization())
    with pytest.raises(ValueError):
        oracle_check(complex_form(fixture("appendix-10").parametrization()), rep.mirror)


@given(st.integers(2, 30), st.integers(0, 10_000))
def test_axis_unit_equals_leading_ratio(degree, seed):
    # conj(d)/d from the axis equals conj(c_n) / ((-1)^n c_n)
    z = complex_form(random_planted_mirror(degree, seed).curve)
    rep = detect_all(Parametrization(z.x, z.y))
    dx, dy = rep.mirror.axis.direction()
    d = ComplexElement(dx, dy)
    cn = z.coeff(z.n)
    assert d.conjugate() / d == cn.conjugate() / (cn * (-1) ** z.n)


def test_determinism():
    p = fixture("appendix-12").parametrization()
    assert detect_all(p) == detect_all(p)


def test_mutual_exclusion_on_fuzz():
    for p in fuzz_corpus(60, seed=11):
        rep = detect_all(p)
        if rep.central is not None:
            assert not (rep.central.symmetric and rep.mirror.symmetric)
