"""Rebuild the two constructed examples from their base curves and compare.

Worked example 1: psi = (2t^23 - t^13 + 2t^11, 2t^5 - t^3 + t), t -> 2t + 1,
then X = 1 + x + y, Y = -1 - x + y, i.e. z -> (1 - i) z + (1 - i).
Appendix example 6: (v, u) with t -> 2t + 1, then (v + u, -v + u),
i.e. z -> (1 - i) z.
"""

from __future__ import annotations

from symcurve.curve import complex_form
from symcurve.detect import detect_all
from symcurve.field import ComplexElement
from symcurve.fixtures import fixture, plant_central, plant_mirror
from symcurve.geometry import Motion


def _sparse(degree: int, terms: dict[int, int]) -> list[int]:
    out = [0] * (degree + 1)
    for k, c in terms.items():
        out[k] = c
    return out


def main() -> None:
    w = ComplexElement(1, -1)
    ex1 = plant_central(
        _sparse(23, {23: 2, 13: -1, 11: 2}), _sparse(5, {5: 2, 3: -1, 1: 1}), 2, 1, Motion(w, w)
    )
    rep = detect_all(ex1.curve)
    print("example-1 matches fixture:", ex1.curve == fixture("example-1").parametrization())
    print("  planted center", ex1.truth.center, "detected", rep.central.center, "beta", rep.central.beta)

    ex6 = plant_mirror(
        _sparse(20, {20: 1, 18: 1, 10: 1, 0: 1}),
        _sparse(21, {21: 1, 5: -3, 3: 1}),
        2,
        1,
        Motion(w, ComplexElement(0)),
    )
    rep = detect_all(ex6.curve)
    print("appendix-6 matches fixture:", ex6.curve == fixture("appendix-6").parametrization())
    print("  planted axis", ex6.truth.axis, "detected", rep.mirror.axis, "beta", rep.mirror.beta)
    z = complex_form(ex6.curve)
    print("  leading coefficient", z.coeff(z.n))


if __name__ == "__main__":
    main()
