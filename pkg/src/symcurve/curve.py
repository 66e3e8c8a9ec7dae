"""Input data model: parametrizations, their classification and complex form."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import DegenerateCurveError
from .field import ComplexElement, FieldElement
from .geometry import Line
from .poly import ComplexPoly, RealPoly, bivariate_gcd_degree


@dataclass(frozen=True)
class Parametrization:
    x: RealPoly
    y: RealPoly

    def __post_init__(self):
        if not isinstance(self.x, RealPoly) or not isinstance(self.y, RealPoly):
            raise TypeError("components must be RealPoly")

    @property
    def degrees(self) -> tuple[int, int]:
        return self.x.degree, self.y.degree


class CurveTag(str, Enum):
    POINT = "point"
    LINE = "line"
    PROPER = "proper"
    IMPROPER = "improper"


@dataclass(frozen=True)
class CurveClass:
    tag: CurveTag
    line: Line | None = None
    gcd_degree: int | None = None

    def describe(self) -> str:
        if self.tag is CurveTag.POINT:
            return "degenerate input: both components are constant (a point)"
        if self.tag is CurveTag.LINE:
            return f"degenerate input: the curve is the line {self.line}"
        if self.tag is CurveTag.IMPROPER:
            return (
                "improper parametrization: almost every point is traced "
                f"{self.gcd_degree} times (gcd degree {self.gcd_degree}); "
                "reparametrize properly first"
            )
        return "proper parametrization"


def _line_witness(x: RealPoly, y: RealPoly) -> Line | None:
    # {1, x, y} dependent  <=>  x - x(0) and y - y(0) are proportional
    x0, y0 = x.coeff(0), y.coeff(0)
    xs = RealPoly([0] + list(x.coeffs[1:]))
    ys = RealPoly([0] + list(y.coeffs[1:]))
    if xs.is_zero():
        return Line(1, 0, -x0)
    if ys.is_zero():
        return Line(0, 1, -y0)
    if xs.degree != ys.degree:
        return None
    lam = ys.leading() / xs.leading()
    if ys != xs.scale(lam):
        return None
    return Line(lam, -1, y0 - lam * x0)


def classify(p: Parametrization) -> CurveClass:
    if p.x.is_constant() and p.y.is_constant():
        return CurveClass(CurveTag.POINT)
    line = _line_witness(p.x, p.y)
    if line is not None:
        return CurveClass(CurveTag.LINE, line=line)
    d = bivariate_gcd_degree(p.x, p.y)
    if d > 1:
        return CurveClass(CurveTag.IMPROPER, gcd_degree=d)
    return CurveClass(CurveTag.PROPER, gcd_degree=1)


@dataclass(frozen=True)
class ComplexCurve:
    """z(t) = x(t) + i*y(t) = sum c_k t^k with the degree data (r, s, n)."""

    z: ComplexPoly
    r: int
    s: int

    @property
    def c(self) -> tuple[ComplexElement, ...]:
        return self.z.coeffs

    @property
    def n(self) -> int:
        return self.z.degree

    def coeff(self, k: int) -> ComplexElement:
        return self.z.coeff(k)

    @property
    def x(self) -> RealPoly:
        return self.z.real_part()

    @property
    def y(self) -> RealPoly:
        return self.z.imag_part()

    def leading_xy(self) -> tuple[FieldElement, FieldElement]:
        """Leading coefficients (a_r, a_s) of x and y."""
        return self.z.coeff(self.r).re, self.z.coeff(self.s).im


def complex_form(p: Parametrization) -> ComplexCurve:
    """Complex form without the properness gate (used by tests and generators)."""
    return ComplexCurve(ComplexPoly.from_parts(p.x, p.y), p.x.degree, p.y.degree)


def to_complex(p: Parametrization, curve_class: CurveClass | None = None) -> ComplexCurve:
    cls = curve_class or classify(p)
    if cls.tag is not CurveTag.PROPER:
        raise DegenerateCurveError(cls)
    return complex_form(p)
