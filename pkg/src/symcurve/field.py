"""Exact arithmetic in real multi-quadratic fields and complex pairs over them.

A :class:`FieldElement` is a finite sum ``sum(q_k * sqrt(k))`` where every key
``k`` is a squarefree positive integer and ``q_k`` a nonzero rational.  Square
roots of distinct squarefree integers are linearly independent over Q, so the
term map is a canonical form and equality is structural.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Union

Scalar = Union[int, Fraction]


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime factors of ``n`` (trial division; radicands are small)."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return tuple(out)


def squarefree_split(n: int) -> tuple[int, int]:
    """Write ``n = m**2 * k`` with ``k`` squarefree; return ``(m, k)``."""
    if n <= 0:
        raise ValueError(f"radicand must be a positive integer, got {n}")
    m, k = 1, 1
    rest = n
    p = 2
    while p * p <= rest:
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        m *= p ** (e // 2)
        if e % 2:
            k *= p
        p += 1 if p == 2 else 2
    k *= rest
    return m, k


@lru_cache(maxsize=4096)
def _key_product(a: int, b: int) -> tuple[int, int]:
    # sqrt(a)*sqrt(b) = g*sqrt(a*b/g^2) for squarefree a, b with g = gcd(a, b)
    g = gcd(a, b)
    return g, (a // g) * (b // g)


def _as_fraction(x: Scalar) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class FieldElement:
    """Immutable element of Q(sqrt(d1), ..., sqrt(dk))."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: dict[int, Fraction] | None = None):
        # callers inside this module pass already-normalized maps
        self._terms: dict[int, Fraction] = terms or {}
        self._hash: int | None = None

    # -- construction -----------------------------------------------------
    @classmethod
    def from_rational(cls, q: Scalar) -> FieldElement:
        q = _as_fraction(q)
        return cls({1: q}) if q else ZERO

    @classmethod
    def sqrt(cls, n: int) -> FieldElement:
        """``sqrt(n)`` for a non-negative integer, reduced to ``m*sqrt(k)``."""
        if n == 0:
            return cls({})
        m, k = squarefree_split(n)
        return cls({k: Fraction(m)})

    @classmethod
    def from_terms(cls, terms: dict[int, Scalar]) -> FieldElement:
        """Build from an arbitrary ``{radicand: coefficient}`` map, normalizing keys."""
        acc: dict[int, Fraction] = {}
        for n, q in terms.items():
            m, k = squarefree_split(n)
            acc[k] = acc.get(k, Fraction(0)) + m * _as_fraction(q)
        return cls({k: v for k, v in acc.items() if v})

    # -- inspection -------------------------------------------------------
    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 1 in self._terms)

    def rational(self) -> Fraction:
        """Rational value; raises ``ValueError`` when irrational."""
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self._terms.get(1, Fraction(0))

    def radicands(self) -> tuple[int, ...]:
        return tuple(sorted(k for k in self._terms if k != 1))

    def primes(self) -> set[int]:
        out: set[int] = set()
        for k in self._terms:
            out.update(prime_factors(k))
        return out

    def __float__(self) -> float:
        return sum((float(q) * (k ** 0.5) for k, q in self._terms.items()), 0.0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(other) -> FieldElement | None:
        if isinstance(other, FieldElement):
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement.from_rational(other)
        return None

    def __add__(self, other) -> FieldElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o._terms:
            return self
        if not self._terms:
            return o
        out = dict(self._terms)
        for k, q in o._terms.items():
            v = out.get(k)
            if v is None:
                out[k] = q
            else:
                v += q
                if v:
                    out[k] = v
                else:
                    del out[k]
        return FieldElement(out)

    __radd__ = __add__

    def __neg__(self) -> FieldElement:
        return FieldElement({k: -q for k, q in self._terms.items()})

    def __pos__(self) -> FieldElement:
        return self

    def __sub__(self, other) -> FieldElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> FieldElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> FieldElement:
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return FieldElement({k: q * other for k, q in self._terms.items()})
        if not isinstance(other, FieldElement):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(b) == 1 and 1 in b:
            s = b[1]
            return FieldElement({k: q * s for k, q in a.items()})
        if len(a) == 1 and 1 in a:
            s = a[1]
            return FieldElement({k: q * s for k, q in b.items()})
        out: dict[int, Fraction] = {}
        for ka, qa in a.items():
            for kb, qb in b.items():
                g, k = _key_product(ka, kb)
                out[k] = out.get(k, 0) + g * qa * qb
        return FieldElement({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def conjugate_at(self, p: int) -> FieldElement:
        """Galois conjugate sending ``sqrt(p) -> -sqrt(p)`` for a prime ``p``."""
        return FieldElement(
            {k: (-q if k % p == 0 else q) for k, q in self._terms.items()}
        )

    def inverse(self) -> FieldElement:
        """Exact inverse, rationalizing one prime generator at a time."""
        if not self._terms:
            raise ZeroDivisionError("inverse of zero field element")
        num = ONE
        den = self
        while not den.is_rational():
            p = min(den.primes())
            c = den.conjugate_at(p)
            num = num * c
            den = den * c
        return num * (1 / den._terms[1])

    def __truediv__(self, other) -> FieldElement:
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division of field element by zero")
            return self * (1 / Fraction(other))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> FieldElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int) -> FieldElement:
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- comparison -------------------------------------------------------
    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.rational())
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- text -------------------------------------------------------------
    def to_str(self) -> str:
        """Exact text form, e.g. ``"1/2 + 3/4*sqrt(2)"``; re-parses to ``self``."""
        if not self._terms:
            return "0"
        parts = []
        for k in sorted(self._terms):
            q = self._terms[k]
            mag = abs(q)
            if k == 1:
                body = str(mag)
            elif mag == 1:
                body = f"sqrt({k})"
            else:
                body = f"{mag}*sqrt({k})"
            parts.append(("-" if q < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"FieldElement({self.to_str()!r})"


ZERO = FieldElement({})
ONE = FieldElement({1: Fraction(1)})


def as_field(x) -> FieldElement:
    if isinstance(x, FieldElement):
        return x
    if isinstance(x, (int, Fraction)):
        return FieldElement.from_rational(x)
    raise TypeError(f"cannot interpret {x!r} as a field element")


class ComplexElement:
    """``re + i*im`` with both parts in a real multi-quadratic field."""

    __slots__ = ("re", "im")

    def __init__(self, re=ZERO, im=ZERO):
        self.re = as_field(re)
        self.im = as_field(im)

    @staticmethod
    def _coerce(other) -> ComplexElement | None:
        if isinstance(other, ComplexElement):
            return other
        if isinstance(other, (int, Fraction, FieldElement)):
            return ComplexElement(other, ZERO)
        return None

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def is_real(self) -> bool:
        return self.im.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def conjugate(self) -> ComplexElement:
        return ComplexElement(self.re, -self.im)

    def modulus_squared(self) -> FieldElement:
        return self.re * self.re + self.im * self.im

    def __add__(self, other) -> ComplexElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ComplexElement(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> ComplexElement:
        return ComplexElement(-self.re, -self.im)

    def __sub__(self, other) -> ComplexElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ComplexElement(self.re - o.re, self.im - o.im)

    def __rsub__(self, other) -> ComplexElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> ComplexElement:
        if isinstance(other, (int, Fraction, FieldElement)):
            return ComplexElement(self.re * other, self.im * other)
        if not isinstance(other, ComplexElement):
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if b.is_zero():
            return ComplexElement(a * c, a * d)
        if d.is_zero():
            return ComplexElement(a * c, b * c)
        return ComplexElement(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> ComplexElement:
        m = self.modulus_squared()
        if m.is_zero():
            raise ZeroDivisionError("inverse of complex zero")
        s = m.inverse()
        return ComplexElement(self.re * s, -self.im * s)

    def __truediv__(self, other) -> ComplexElement:
        if isinstance(other, (int, Fraction, FieldElement)):
            s = as_field(other).inverse()
            return ComplexElement(self.re * s, self.im * s)
        if not isinstance(other, ComplexElement):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> ComplexElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int) -> ComplexElement:
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result, base = C_ONE, self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __str__(self) -> str:
        if self.im.is_zero():
            return self.re.to_str()
        im = f"({self.im.to_str()})*i"
        if self.re.is_zero():
            return im
        return f"{self.re.to_str()} + {im}"

    def __repr__(self) -> str:
        return f"ComplexElement({self.re.to_str()!r}, {self.im.to_str()!r})"


C_ZERO = ComplexElement(ZERO, ZERO)
C_ONE = ComplexElement(ONE, ZERO)
I = ComplexElement(ZERO, ONE)
