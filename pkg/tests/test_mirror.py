from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from symcurve.curve import Parametrization, complex_form
from symcurve.errors import InternalConsistencyError
from symcurve.field import ZERO, ComplexElement, FieldElement
from symcurve.fixtures import (
    fixture,
    plant_mirror,
    random_asymmetric,
    random_planted_mirror,
)
from symcurve.geometry import Line, Motion, Point
from symcurve.mirror import (
    ConstraintKind,
    MirrorReason,
    axis_from,
    detect_mirror,
    mirror_beta,
    mirror_fastpath_cn1_zero,
    mirror_prefilter,
    qstar_is_real,
    tail_sum,
    verify_system_Wprime,
)
from symcurve.poly import RealPoly

T = RealPoly([0, 1])


def Z(name: str):
    return complex_form(fixture(name).parametrization())


def zc(x, y):
    return complex_form(Parametrization(x, y))


def F(x) -> FieldElement:
    return FieldElement.from_rational(x)


def test_prefilter_table():
    assert mirror_prefilter(Z("appendix-43")).rejected
    assert mirror_prefilter(Z("appendix-11")).constraint.kind is ConstraintKind.PARALLEL_TO_X
    assert mirror_prefilter(zc(T, T ** 2)).constraint.kind is ConstraintKind.PARALLEL_TO_Y
    assert mirror_prefilter(zc(T ** 2, T ** 4)).constraint.kind is ConstraintKind.PARALLEL_TO_Y
    assert mirror_prefilter(zc(T ** 4, T ** 2)).constraint.kind is ConstraintKind.PARALLEL_TO_X
    assert mirror_prefilter(zc(T ** 4, T ** 4 + T)).constraint is None
    both_odd = mirror_prefilter(zc(2 * T ** 3, 5 * T ** 3 + T))
    assert both_odd.constraint.kind is ConstraintKind.PERPENDICULAR_TO_VECTOR
    assert both_odd.constraint.vector == (F(2), F(5))


def test_beta_examples():
    assert mirror_beta(Z("appendix-6")) == F(-1)
    assert mirror_beta(Z("appendix-10")) == F(Fraction(-1, 3915))
    assert mirror_beta(Z("appendix-42")) == F(Fraction(-772, 385))
    assert mirror_beta(zc(T, T ** 2)) == ZERO


def test_system_examples():
    assert verify_system_Wprime(Z("appendix-6"), F(-1)) is None
    assert verify_system_Wprime(Z("appendix-10"), F(Fraction(-1, 3915))) is not None
    assert verify_system_Wprime(zc(T, T ** 2), ZERO) is None


def test_qstar_examples():
    ex6 = Z("appendix-6")
    assert qstar_is_real(ex6, F(-1))
    # Q(beta) conj(c_n) / |c_n| = 2 sqrt(2) for this curve (n odd, so no quarter-turn)
    cn = ex6.coeff(ex6.n)
    w = tail_sum(ex6, F(-1)) * cn.conjugate()
    assert w.im.is_zero()
    assert w.re * w.re == cn.modulus_squared() * 8
    assert not qstar_is_real(Z("appendix-42"), F(Fraction(-772, 385)))
    assert qstar_is_real(Z("appendix-8"), ZERO)


def test_qstar_independence_one_way():
    # Q* real while the system fails: examples 8 and 9 at beta = 0
    for name in ("appendix-8", "appendix-9"):
        z = Z(name)
        assert qstar_is_real(z, ZERO) and verify_system_Wprime(z, ZERO) is not None
    # Q* not real: example 42
    z = Z("appendix-42")
    assert not qstar_is_real(z, mirror_beta(z))


def test_axis_examples():
    assert axis_from(Z("appendix-6"), F(-1)) == Line(1, 1, 0)
    assert axis_from(zc(T, T ** 2), ZERO) == Line(1, 0, 0)


def test_axis_matches_complex_form_of_example_6():
    # i*z - conj(z) = 0 in real form: with z = x + i y, i z - conj(z) = -(x + y) + i (x + y)
    x, y = F(3), F(-3)
    z = ComplexElement(x, y)
    assert (ComplexElement(0, 1) * z - z.conjugate()).is_zero()
    assert axis_from(Z("appendix-6"), F(-1)).contains(Point(x, y))


def test_literal_axis_constant_is_not_real():
    # dropping conj(c_n) in front of Q(beta) gives a non-real constant for example 6
    z = Z("appendix-6")
    n, cn, c0 = z.n, z.coeff(z.n), z.coeff(0)
    d = c0.conjugate() * cn * (-1) ** n - cn.conjugate() * c0 - tail_sum(z, F(-1))
    assert not d.is_real()


def test_example_44_readings_share_the_axis():
    shifted = detect_mirror(Z("appendix-44"))
    printed = detect_mirror(Z("appendix-44-printed"))
    assert shifted.symmetric and printed.symmetric
    assert shifted.axis == printed.axis
    assert (shifted.beta, printed.beta) == (F(-2), ZERO)


def test_translated_axis():
    planted = plant_mirror([0, 0, 1], [0, 0, 0, 1], motion=Motion.translation(0, 7))
    assert planted.truth.axis == Line(0, 1, -7)
    # odd base rotated a quarter turn is symmetric about x = 0; translated by (3, 5)
    quarter = Motion.rotation(0, 1, 3, 5)
    planted = plant_mirror([0, 0, 1], [0, 1, 0, 1], motion=quarter)
    assert planted.truth.axis == Line(1, 0, -3)
    res = detect_mirror(complex_form(planted.curve))
    assert res.symmetric and res.axis == Line(1, 0, -3)


def test_fastpath_examples():
    r8 = mirror_fastpath_cn1_zero(Z("appendix-8"))
    assert not r8.symmetric and r8.rejection.reason is MirrorReason.SPECIAL_CASE_COEFFICIENT
    assert not detect_mirror(Z("appendix-9")).symmetric
    # example 7 has c_{n-1} != 0; the general path finds beta = 0
    assert mirror_fastpath_cn1_zero(Z("appendix-7")) is None
    r7 = detect_mirror(Z("appendix-7"))
    assert r7.symmetric and r7.beta == ZERO


def test_fastpath_parity_uses_n_minus_k():
    # (t^2, t^5): n = 5, c_4 = 0, w = c_5 conj(c_2) = i. With n - k = 3 odd
    # w must be imaginary, which holds; a rule keyed on k = 2 being even would
    # demand w real and reject. The curve is symmetric about y = 0.
    z = zc(T ** 2, T ** 5)
    fast = mirror_fastpath_cn1_zero(z)
    assert fast.symmetric and fast.axis == Line(0, 1, 0)
    assert detect_mirror(z, use_fastpath=False).same_verdict(fast)


@pytest.mark.parametrize(
    "name, symmetric, reason",
    [
        ("appendix-12", True, None),
        ("appendix-44", True, None),
        ("appendix-11", True, None),
        ("appendix-42", False, MirrorReason.QSTAR_NOT_REAL),
        ("appendix-43", False, MirrorReason.PARITY_PROHIBITION),
        ("appendix-10", False, MirrorReason.QSTAR_NOT_REAL),
    ],
)
def test_detect_examples(name, symmetric, reason):
    res = detect_mirror(Z(name))
    assert res.symmetric is symmetric
    if reason is not None:
        assert res.rejection.reason is reason
    if symmetric and res.constraint is not None:
        assert res.constraint.satisfied_by(res.axis)


def test_parity_prohibition_small():
    res = detect_mirror(zc(T, T ** 3))
    assert res.rejection.reason is MirrorReason.PARITY_PROHIBITION


def test_axis_consistency_guard():
    # a non-real constant is refused rather than silently projected
    z = zc(T, T ** 2 + T)
    bogus_beta = F(5)
    if not qstar_is_real(z, bogus_beta):
        with pytest.raises(InternalConsistencyError):
            axis_from(z, bogus_beta)


@given(st.integers(2, 30), st.integers(0, 10_000))
def test_planted_recovery(degree, seed):
    planted = random_planted_mirror(degree, seed)
    res = detect_mirror(complex_form(planted.curve))
    assert res.symmetric
    assert res.axis == planted.truth.axis and res.beta == planted.truth.beta


@given(st.integers(4, 30), st.integers(0, 10_000), st.booleans())
def test_fastpath_matches_general(degree, seed, planted):
    if planted:
        p = random_planted_mirror(degree, seed, zero_subleading=True).curve
    else:
        p = random_asymmetric(degree, seed, zero_subleading=True)
    z = complex_form(p)
    assert detect_mirror(z).same_verdict(detect_mirror(z, use_fastpath=False))


@given(st.integers(2, 30), st.integers(0, 10_000))
def test_system_pass_implies_qstar_real(degree, seed):
    z = complex_form(random_planted_mirror(degree, seed).curve)
    beta = mirror_beta(z)
    assert verify_system_Wprime(z, beta) is None and qstar_is_real(z, beta)
