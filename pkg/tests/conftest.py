from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from symcurve.field import ComplexElement, FieldElement
from symcurve.poly import ComplexPoly, RealPoly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# acceptance gate lines, filled by tests/test_acceptance.py
GATE: list[tuple[str, bool, str]] = []

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
small_rationals = st.fractions(min_value=-4, max_value=4, max_denominator=5)
radicands = st.sampled_from([1, 2, 3, 5, 6, 10, 15, 30])


@st.composite
def field_elements(draw, max_terms: int = 3):
    keys = draw(st.lists(radicands, max_size=max_terms, unique=True))
    return FieldElement.from_terms({k: draw(rationals) for k in keys})


@st.composite
def complex_elements(draw):
    return ComplexElement(draw(field_elements()), draw(field_elements()))


@st.composite
def real_polys(draw, max_degree: int = 8, coeffs=None):
    coeffs = coeffs or small_rationals.map(FieldElement.from_rational)
    return RealPoly(draw(st.lists(coeffs, max_size=max_degree + 1)))


@st.composite
def complex_polys(draw, max_degree: int = 8):
    entry = st.builds(
        ComplexElement,
        small_rationals.map(FieldElement.from_rational),
        small_rationals.map(FieldElement.from_rational),
    )
    return ComplexPoly(draw(st.lists(entry, max_size=max_degree + 1)))


nonzero_rationals = rationals.filter(lambda q: q != 0)


def q(text: str) -> Fraction:
    return Fraction(text)


def pytest_terminal_summary(terminalreporter):
    if not GATE:
        return
    terminalreporter.section("acceptance gate")
    for name, ok, detail in GATE:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")


@pytest.fixture
def gate():
    return GATE
