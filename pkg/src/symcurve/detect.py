"""Full symmetry report: classification, both detectors and the exact oracle."""

from __future__ import annotations

from dataclasses import dataclass, field

from .central import CentralResult, detect_central
from .curve import ComplexCurve, CurveClass, CurveTag, Parametrization, classify, complex_form
from .errors import InternalConsistencyError
from .field import ComplexElement, FieldElement
from .geometry import Line, Point
from .mirror import MirrorResult, detect_mirror
from .poly import ComplexPoly, compose_linear, conjugate_poly

ROTATION_NOTE = "polynomial curves admit no rotation symmetry of order > 2"
EXCLUSION_NOTE = "a polynomial curve never has both central and mirror symmetry"


@dataclass(frozen=True)
class SymmetryReport:
    curve_class: CurveClass
    degrees: tuple[int, int, int]
    central: CentralResult | None
    mirror: MirrorResult | None
    oracle_verified: bool
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def proper(self) -> bool:
        return self.curve_class.tag is CurveTag.PROPER


def _constant(c: ComplexElement) -> ComplexPoly:
    return ComplexPoly.constant(c)


def central_oracle(curve: ComplexCurve, center: Point, beta: FieldElement) -> bool:
    """z(-t + beta) == -z(t) + 2 z0 as polynomials."""
    z0 = center.to_complex()
    lhs = compose_linear(curve.z, -1, beta)
    rhs = _constant(z0 * 2) - curve.z
    return lhs == rhs


def mirror_oracle(curve: ComplexCurve, axis: Line, beta: FieldElement) -> bool:
    """Reflection across ``axis`` maps z(t) onto z(-t + beta).

    With z0 on the axis and direction d, the reflection is
    z -> z0 + (d / conj(d)) conj(z - z0); the check is
    conj(z(t) - z0) == (z(-t + beta) - z0) * conj(d) / d.
    """
    z0 = _constant(axis.point().to_complex())
    dx, dy = axis.direction()
    d = ComplexElement(dx, dy)
    u = d.conjugate() / d
    lhs = conjugate_poly(curve.z - z0)
    rhs = (compose_linear(curve.z, -1, beta) - z0).scale(u)
    return lhs == rhs


def oracle_check(curve: ComplexCurve, result: CentralResult | MirrorResult) -> bool:
    if not result.symmetric:
        raise ValueError("oracle applies to symmetric verdicts only")
    if isinstance(result, CentralResult):
        return central_oracle(curve, result.center, result.beta)
    return mirror_oracle(curve, result.axis, result.beta)


def detect_curve(curve: ComplexCurve, curve_class: CurveClass | None = None) -> SymmetryReport:
    """Run both detectors on a curve already known to be proper."""
    central = detect_central(curve)
    mirror = detect_mirror(curve)
    dump = {"x": curve.x, "y": curve.y}
    if central.symmetric and mirror.symmetric:
        raise InternalConsistencyError(
            "both central and mirror symmetry reported",
            {**dump, "center": central.center, "axis": mirror.axis},
        )
    verified = True
    for res in (central, mirror):
        if res.symmetric and not oracle_check(curve, res):
            raise InternalConsistencyError(
                "symmetry verdict failed the polynomial identity check",
                {**dump, "result": res},
            )
    notes = [ROTATION_NOTE]
    if central.symmetric or mirror.symmetric:
        notes.append(EXCLUSION_NOTE)
    if central.fastpath or mirror.fastpath:
        notes.append("c_{n-1} = 0 shortcut used (beta = 0)")
    return SymmetryReport(
        curve_class or CurveClass(CurveTag.PROPER, gcd_degree=1),
        (curve.r, curve.s, curve.n),
        central,
        mirror,
        verified,
        tuple(notes),
    )


def detect_all(p: Parametrization) -> SymmetryReport:
    cls = classify(p)
    r, s = p.degrees
    if cls.tag is not CurveTag.PROPER:
        notes = [cls.describe()]
        if cls.tag is CurveTag.LINE:
            notes.append("every point of a line is a symmetry center; it has infinitely many axes")
        return SymmetryReport(cls, (r, s, max(r, s)), None, None, False, tuple(notes))
    return detect_curve(complex_form(p), cls)
