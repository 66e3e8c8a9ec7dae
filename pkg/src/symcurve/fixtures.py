"""Golden corpus and generators of curves with planted symmetries.

Planted curves follow the usual construction: start from a curve that is
symmetric about the origin (odd powers only) or about the x-axis (x even,
y odd), substitute ``t -> a*t + b`` and apply a similarity
``z -> w*z + shift``.  The symmetry element is transported exactly, so the
truth is known in closed form.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Sequence

from .curve import CurveTag, Parametrization, classify
from .field import ComplexElement, FieldElement
from .geometry import Line, Motion, Point
from .parse import parse_constant, parse_curve
from .poly import ComplexPoly, RealPoly, compose_linear

CORPUS_VERSION = "appendix_v1"

# the 18 curves of the golden corpus, in table order
APPENDIX_IDS = (
    "appendix-2", "appendix-3", "appendix-4", "appendix-37", "appendix-38",
    "appendix-39", "appendix-40", "appendix-41",
    "appendix-6", "appendix-7", "appendix-8", "appendix-9", "appendix-10",
    "appendix-11", "appendix-12", "appendix-42", "appendix-43", "appendix-44",
)


@dataclass(frozen=True)
class Expected:
    tested: str
    central: bool | None = None
    mirror: bool | None = None
    beta: ComplexElement | None = None
    center: Point | None = None
    axis: Line | None = None
    degree_listed: int | None = None
    degree_actual: int | None = None
    shortcut_note: str | None = None
    note: str | None = None


@dataclass(frozen=True)
class FixtureCurve:
    id: str
    source: str
    expected: Expected

    def parametrization(self) -> Parametrization:
        return parse_curve(self.source)


def _data_dir():
    return resources.files("symcurve").joinpath("data", CORPUS_VERSION)


def _expected(entry: dict) -> Expected:
    beta = center = axis = None
    if "beta" in entry:
        beta = ComplexElement(parse_constant(entry["beta"]["re"]), parse_constant(entry["beta"]["im"]))
    if "center" in entry:
        center = Point(parse_constant(entry["center"]["x"]), parse_constant(entry["center"]["y"]))
    if "axis" in entry:
        a = entry["axis"]
        axis = Line(parse_constant(a["A"]), parse_constant(a["B"]), parse_constant(a["C"]))
    return Expected(
        tested=entry["tested"],
        central=entry.get("central"),
        mirror=entry.get("mirror"),
        beta=beta,
        center=center,
        axis=axis,
        degree_listed=entry.get("degree_listed"),
        degree_actual=entry.get("degree_actual"),
        shortcut_note=entry.get("shortcut_note"),
        note=entry.get("axis_note") or entry.get("center_note"),
    )


def _load(section: str) -> list[FixtureCurve]:
    root = _data_dir()
    meta = json.loads(root.joinpath("expected.json").read_text())
    out = []
    for entry in meta[section]:
        source = root.joinpath(f"{entry['id']}.curve").read_text()
        out.append(FixtureCurve(entry["id"], source, _expected(entry)))
    return out


def appendix_corpus() -> list[FixtureCurve]:
    """The 18 appendix curves with their tabulated verdicts and beta values."""
    return _load("fixtures")


def extra_fixtures() -> dict[str, FixtureCurve]:
    """Worked example 1 and the literal reading of appendix example 44."""
    return {f.id: f for f in _load("extra")}


def fixture(fid: str) -> FixtureCurve:
    for f in appendix_corpus():
        if f.id == fid:
            return f
    extra = extra_fixtures()
    if fid in extra:
        return extra[fid]
    raise KeyError(fid)


# -- planted symmetries ---------------------------------------------------------


@dataclass(frozen=True)
class PlantedTruth:
    kind: str  # "central" or "mirror"
    beta: FieldElement
    center: Point | None = None
    axis: Line | None = None


@dataclass(frozen=True)
class PlantedCurve:
    curve: Parametrization
    truth: PlantedTruth
    base: tuple[RealPoly, RealPoly]
    a: Fraction
    b: Fraction
    motion: Motion


def _as_poly(coeffs) -> RealPoly:
    return coeffs if isinstance(coeffs, RealPoly) else RealPoly(coeffs)


def _transport(x: RealPoly, y: RealPoly, a, b, motion: Motion) -> Parametrization:
    z = ComplexPoly.from_parts(compose_linear(x, a, b), compose_linear(y, a, b))
    z = z.scale(motion.multiplier) + ComplexPoly.constant(motion.shift)
    return Parametrization(z.real_part(), z.imag_part())


def _check_substitution(a, b) -> tuple[Fraction, Fraction]:
    a, b = Fraction(a), Fraction(b)
    if a == 0:
        raise ValueError("substitution t -> a*t + b needs a != 0")
    return a, b


def plant_central(base_x, base_y, a=1, b=0, motion: Motion | None = None) -> PlantedCurve:
    """Curve symmetric about ``motion(origin)``; the base must be odd."""
    x, y = _as_poly(base_x), _as_poly(base_y)
    for p in (x, y):
        if any(not c.is_zero() for c in p.coeffs[0::2]):
            raise ValueError("central base must contain odd powers of t only")
    a, b = _check_substitution(a, b)
    motion = motion or Motion.identity()
    truth = PlantedTruth(
        "central", FieldElement.from_rational(-2 * b / a), center=Point.from_complex(motion.shift)
    )
    return PlantedCurve(_transport(x, y, a, b, motion), truth, (x, y), a, b, motion)


def plant_mirror(base_x, base_y, a=1, b=0, motion: Motion | None = None) -> PlantedCurve:
    """Curve symmetric about ``motion(y = 0)``; base x even, base y odd."""
    x, y = _as_poly(base_x), _as_poly(base_y)
    if any(not c.is_zero() for c in x.coeffs[1::2]):
        raise ValueError("mirror base x must contain even powers of t only")
    if any(not c.is_zero() for c in y.coeffs[0::2]):
        raise ValueError("mirror base y must contain odd powers of t only")
    a, b = _check_substitution(a, b)
    motion = motion or Motion.identity()
    axis = motion.apply_line(Line(0, 1, 0))
    truth = PlantedTruth("mirror", FieldElement.from_rational(-2 * b / a), axis=axis)
    return PlantedCurve(_transport(x, y, a, b, motion), truth, (x, y), a, b, motion)


_SQRT2_2 = FieldElement.sqrt(2) / 2
_SQRT3_2 = FieldElement.sqrt(3) / 2
_HALF = FieldElement.from_rational(Fraction(1, 2))

# (cos, sin) pairs with exact coordinates
ROTATION_UNITS: tuple[tuple[FieldElement, FieldElement], ...] = tuple(
    (FieldElement.from_rational(c) if not isinstance(c, FieldElement) else c,
     FieldElement.from_rational(s) if not isinstance(s, FieldElement) else s)
    for c, s in [
        (1, 0),
        (0, 1),
        (-1, 0),
        (Fraction(3, 5), Fraction(4, 5)),
        (Fraction(-4, 5), Fraction(3, 5)),
        (Fraction(5, 13), Fraction(-12, 13)),
        (_SQRT2_2, _SQRT2_2),
        (_SQRT3_2, _HALF),
        (_HALF, -_SQRT3_2),
    ]
)

_SUBSTITUTIONS = [(1, 0), (1, 1), (2, 1), (-1, 2), (Fraction(1, 2), 1), (3, -1), (2, -3)]


def _rng(seed: int, salt: str) -> random.Random:
    return random.Random(f"{salt}:{seed}")


def _nonzero(rng: random.Random, lo: int = -9, hi: int = 9) -> int:
    v = 0
    while v == 0:
        v = rng.randint(lo, hi)
    return v


def _random_motion(rng: random.Random, rational_only: bool = False) -> Motion:
    units = ROTATION_UNITS[:6] if rational_only else ROTATION_UNITS
    cos, sin = rng.choice(units)
    return Motion.rotation(cos, sin, rng.randint(-7, 7), Fraction(rng.randint(-14, 14), 2))


def _sparse_poly(rng: random.Random, degree: int, parity: int, density: float = 0.6) -> RealPoly:
    # coefficients on powers with the given parity (0 even, 1 odd); leading forced nonzero
    coeffs = [0] * (degree + 1)
    for k in range(parity, degree + 1, 2):
        if k == degree or rng.random() < density:
            coeffs[k] = _nonzero(rng)
    return RealPoly(coeffs)


def _proper(p: Parametrization) -> bool:
    return classify(p).tag is CurveTag.PROPER


def random_planted_central(
    degree: int,
    seed: int,
    zero_subleading: bool = False,
    rational_only: bool = False,
    substitution: tuple | None = None,
) -> PlantedCurve:
    """Planted central curve of odd ``degree`` (deterministic in ``seed``)."""
    if degree < 3 or degree % 2 == 0:
        raise ValueError("central symmetry needs an odd degree >= 3")
    rng = _rng(seed, "central")
    while True:
        other = rng.randrange(1, degree + 1, 2)
        dx, dy = (degree, other) if rng.random() < 0.5 else (other, degree)
        x, y = _sparse_poly(rng, dx, 1), _sparse_poly(rng, dy, 1)
        a, b = substitution or rng.choice(_SUBSTITUTIONS)
        if zero_subleading:
            b = 0
        planted = plant_central(x, y, a, b, _random_motion(rng, rational_only))
        if _proper(planted.curve):
            return planted


def random_planted_mirror(
    degree: int,
    seed: int,
    zero_subleading: bool = False,
    rational_only: bool = False,
    substitution: tuple | None = None,
) -> PlantedCurve:
    """Planted mirror curve of ``degree`` >= 2 (deterministic in ``seed``)."""
    if degree < 2:
        raise ValueError("mirror fixtures need degree >= 2")
    if zero_subleading and degree < 4:
        # degree <= 3 with c_{n-1} = 0 and a mirror symmetry is always a line
        raise ValueError("a proper mirror curve with c_{n-1} = 0 needs degree >= 4")
    rng = _rng(seed, "mirror")
    skip = degree - 1 if zero_subleading else -1
    while True:
        if degree % 2:
            dy = degree
            dx = rng.choice([k for k in range(2, degree, 2) if k != skip])
        else:
            dx = degree
            dy = rng.choice([k for k in range(1, degree, 2) if k != skip])
        x = _sparse_poly(rng, dx, 0)
        y = _sparse_poly(rng, dy, 1)
        a, b = substitution or rng.choice(_SUBSTITUTIONS)
        if zero_subleading:
            b = 0
        planted = plant_mirror(x, y, a, b, _random_motion(rng, rational_only))
        if _proper(planted.curve):
            return planted


def random_asymmetric(degree: int, seed: int, zero_subleading: bool = False) -> Parametrization:
    """Dense pseudo-random curve; presumed asymmetric, verdicts are not asserted."""
    if degree < 2:
        raise ValueError("degree must be >= 2")
    rng = _rng(seed, "fuzz")
    dx = degree if rng.random() < 0.7 else rng.randint(1, degree)
    dy = degree if dx != degree or rng.random() < 0.7 else rng.randint(1, degree)

    def dense(d: int) -> RealPoly:
        coeffs = [rng.randint(-9, 9) for _ in range(d)] + [_nonzero(rng)]
        if zero_subleading and d == degree:
            coeffs[degree - 1] = 0
        return RealPoly(coeffs)

    x, y = dense(dx), dense(dy)
    if zero_subleading:
        x = RealPoly([c if k != degree - 1 else 0 for k, c in enumerate(x.coeffs)])
        y = RealPoly([c if k != degree - 1 else 0 for k, c in enumerate(y.coeffs)])
    return Parametrization(x, y)


def fuzz_corpus(count: int, seed: int = 0, max_degree: int = 31) -> list[Parametrization]:
    """Mixed fuzz set: asymmetric curves plus planted ones, fully seed-determined."""
    rng = _rng(seed, "corpus")
    out: list[Parametrization] = []
    for i in range(count):
        kind = i % 4
        if kind == 0:
            d = rng.randrange(3, max_degree + 1, 2)
            out.append(random_planted_central(d, rng.randrange(10**6)).curve)
        elif kind == 1:
            d = rng.randint(2, max_degree - 1)
            out.append(random_planted_mirror(d, rng.randrange(10**6)).curve)
        else:
            d = rng.randint(2, max_degree)
            out.append(random_asymmetric(d, rng.randrange(10**6), zero_subleading=kind == 3))
    return out
