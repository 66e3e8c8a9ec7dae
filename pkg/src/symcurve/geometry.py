"""Points, lines and similarity motions with exact field coordinates."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .field import ZERO, ComplexElement, FieldElement, as_field


@dataclass(frozen=True)
class Point:
    x: FieldElement
    y: FieldElement

    def __post_init__(self):
        object.__setattr__(self, "x", as_field(self.x))
        object.__setattr__(self, "y", as_field(self.y))

    @classmethod
    def from_complex(cls, z: ComplexElement) -> Point:
        return cls(z.re, z.im)

    def to_complex(self) -> ComplexElement:
        return ComplexElement(self.x, self.y)

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


@dataclass(frozen=True)
class Line:
    """Real line ``A*x + B*y + C = 0`` kept in canonical form.

    The first nonzero of (A, B) is scaled to 1; when all three coefficients
    are rational they are then cleared to coprime integers (first nonzero of
    (A, B) positive).  Two lines are equal iff their canonical forms are.
    """

    A: FieldElement
    B: FieldElement
    C: FieldElement

    def __post_init__(self):
        a, b, c = as_field(self.A), as_field(self.B), as_field(self.C)
        if a.is_zero() and b.is_zero():
            raise ValueError("line needs (A, B) != (0, 0)")
        lead = a if not a.is_zero() else b
        inv = lead.inverse()
        a, b, c = a * inv, b * inv, c * inv
        if a.is_rational() and b.is_rational() and c.is_rational():
            qs = [a.rational(), b.rational(), c.rational()]
            den = lcm(*(q.denominator for q in qs))
            ints = [int(q * den) for q in qs]
            g = gcd(*ints)
            a, b, c = (FieldElement.from_rational(Fraction(v, g)) for v in ints)
        object.__setattr__(self, "A", a)
        object.__setattr__(self, "B", b)
        object.__setattr__(self, "C", c)

    @classmethod
    def from_complex_form(cls, gamma: ComplexElement, c: FieldElement) -> Line:
        """``conj(gamma)*z + gamma*conj(z) + c = 0`` with ``gamma = A/2 + i*B/2``."""
        return cls(gamma.re * 2, gamma.im * 2, c)

    def contains(self, p: Point) -> bool:
        return (self.A * p.x + self.B * p.y + self.C).is_zero()

    def direction(self) -> tuple[FieldElement, FieldElement]:
        return (-self.B, self.A)

    def point(self) -> Point:
        """A field-representable point on the line: (0, -C/B) or (-C/A, 0)."""
        if not self.B.is_zero():
            return Point(ZERO, -self.C / self.B)
        return Point(-self.C / self.A, ZERO)

    def __str__(self) -> str:
        parts = []
        for coef, var in ((self.A, "x"), (self.B, "y"), (self.C, "")):
            if coef.is_zero():
                continue
            text = coef.to_str()
            if var:
                if text == "1":
                    text = var
                elif text == "-1":
                    text = "-" + var
                elif len(coef.terms) > 1:
                    text = f"({text})*{var}"
                else:
                    text = f"{text}*{var}"
            elif len(coef.terms) > 1:
                text = f"({text})"
            parts.append(text)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out + " = 0"


@dataclass(frozen=True)
class Motion:
    """Similarity ``z -> multiplier*z + shift`` of the complex plane.

    A unit multiplier is a rigid motion; coordinate changes
    such as ``X = 1 + x + y, Y = -1 - x + y`` carry a scale factor as well.
    """

    multiplier: ComplexElement
    shift: ComplexElement

    def __post_init__(self):
        if self.multiplier.is_zero():
            raise ValueError("motion multiplier must be nonzero")

    @classmethod
    def identity(cls) -> Motion:
        return cls(ComplexElement(1), ComplexElement(0))

    @classmethod
    def rotation(cls, cos, sin, dx=0, dy=0) -> Motion:
        return cls(ComplexElement(cos, sin), ComplexElement(dx, dy))

    @classmethod
    def translation(cls, dx, dy) -> Motion:
        return cls(ComplexElement(1), ComplexElement(dx, dy))

    def apply(self, z: ComplexElement) -> ComplexElement:
        return self.multiplier * z + self.shift

    def apply_point(self, p: Point) -> Point:
        return Point.from_complex(self.apply(p.to_complex()))

    def apply_line(self, line: Line) -> Line:
        p = self.apply_point(line.point())
        dx, dy = line.direction()
        d = self.multiplier * ComplexElement(dx, dy)
        # normal to d through p
        a, b = d.im, -d.re
        return Line(a, b, -(a * p.x + b * p.y))
