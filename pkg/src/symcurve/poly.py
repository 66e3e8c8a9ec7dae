"""Dense univariate polynomials over the exact field and its complex pairs.

Coefficients are stored low degree first; ``coeffs[k]`` multiplies ``t**k``.
The zero polynomial has an empty coefficient tuple and degree ``-1``.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .field import (
    C_ONE,
    C_ZERO,
    ONE,
    ZERO,
    ComplexElement,
    FieldElement,
    as_field,
)

NEG_INF_DEGREE = -1


def _trim(coeffs: list) -> tuple:
    n = len(coeffs)
    while n and coeffs[n - 1].is_zero():
        n -= 1
    return tuple(coeffs[:n])


class _Poly:
    _zero = ZERO
    _one = ONE
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs: tuple = _trim([self._coerce(c) for c in coeffs])

    @staticmethod
    def _coerce(c):
        raise NotImplementedError

    @classmethod
    def _raw(cls, coeffs: list):
        p = cls.__new__(cls)
        p.coeffs = _trim(coeffs)
        return p

    @classmethod
    def monomial(cls, k: int, c=None):
        c = cls._one if c is None else cls._coerce(c)
        return cls._raw([cls._zero] * k + [c])

    @classmethod
    def constant(cls, c):
        return cls._raw([cls._coerce(c)])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self._zero

    def leading(self):
        return self.coeffs[-1] if self.coeffs else self._zero

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.coeffs))

    def _lift(self, other):
        if type(other) is type(self):
            return other
        if isinstance(other, _Poly):
            return None
        try:
            return self.constant(other)
        except TypeError:
            return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return self._raw(out)

    def __neg__(self):
        return self._raw([-c for c in self.coeffs])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -self + other

    def scale(self, s):
        return self._raw([c * s for c in self.coeffs])

    def __mul__(self, other):
        if type(other) is not type(self):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self._raw([])
        out = [self._zero] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca.is_zero():
                continue
            for j, cb in enumerate(b):
                if not cb.is_zero():
                    out[i + j] = out[i + j] + ca * cb
        return self._raw(out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = self._raw([self._one])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, v):
        """Horner evaluation."""
        acc = self._zero
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    eval = __call__

    def derivative(self):
        return self._raw([c * k for k, c in enumerate(self.coeffs) if k])

    def __repr__(self) -> str:
        return f"{type(self).__name__}([{', '.join(str(c) for c in self.coeffs)}])"


class RealPoly(_Poly):
    """Polynomial with :class:`FieldElement` coefficients."""

    __slots__ = ()
    _zero = ZERO
    _one = ONE

    @staticmethod
    def _coerce(c) -> FieldElement:
        return as_field(c)

    def divmod(self, other: RealPoly) -> tuple[RealPoly, RealPoly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lead_inv = other.leading().inverse()
        if len(rem) - 1 < db:
            return RealPoly(), self
        quot = [ZERO] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db]
            if c.is_zero():
                continue
            q = c * lead_inv
            quot[k] = q
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    rem[k + j] = rem[k + j] - q * b
        return RealPoly._raw(quot), RealPoly._raw(rem[:db])

    def monic(self) -> RealPoly:
        if self.is_zero():
            return self
        return self.scale(self.leading().inverse())


class ComplexPoly(_Poly):
    """Polynomial with :class:`ComplexElement` coefficients in a real variable."""

    __slots__ = ()
    _zero = C_ZERO
    _one = C_ONE

    @staticmethod
    def _coerce(c) -> ComplexElement:
        if isinstance(c, ComplexElement):
            return c
        return ComplexElement(as_field(c), ZERO)

    @classmethod
    def from_parts(cls, x: RealPoly, y: RealPoly) -> ComplexPoly:
        n = max(len(x), len(y))
        return cls._raw([ComplexElement(x.coeff(k), y.coeff(k)) for k in range(n)])

    def real_part(self) -> RealPoly:
        return RealPoly._raw([c.re for c in self.coeffs])

    def imag_part(self) -> RealPoly:
        return RealPoly._raw([c.im for c in self.coeffs])


def conjugate_poly(p: ComplexPoly) -> ComplexPoly:
    """Coefficient-wise conjugation; ``t`` is real."""
    return ComplexPoly._raw([c.conjugate() for c in p.coeffs])


# -- rational substitutions on integer channels ---------------------------------
#
# With alpha, beta rational the substitution acts on each (part, radicand)
# channel separately.  Writing alpha = a/d, beta = b/d and c_k = n_k/D, the
# result is sum_k n_k d^(n-k) (a t + b)^k / (D d^n), so all inner work is on
# Python ints and only the final coefficients are reduced.


def _channels(p: _Poly) -> dict[tuple[int, int], list[Fraction]]:
    n = p.degree
    complex_ = isinstance(p, ComplexPoly)
    chans: dict[tuple[int, int], list[Fraction]] = {}
    for k, c in enumerate(p.coeffs):
        parts = ((0, c.re), (1, c.im)) if complex_ else ((0, c),)
        for part, fe in parts:
            for r, q in fe.terms.items():
                chans.setdefault((part, r), [Fraction(0)] * (n + 1))[k] = q
    return chans


def _rebuild(cls, chans: dict[tuple[int, int], list[Fraction]], n: int) -> _Poly:
    re = [dict() for _ in range(n + 1)]
    im = [dict() for _ in range(n + 1)]
    for (part, r), qs in chans.items():
        target = im if part else re
        for k, q in enumerate(qs):
            if q:
                target[k][r] = q
    if cls is ComplexPoly:
        coeffs = [ComplexElement(FieldElement(a), FieldElement(b)) for a, b in zip(re, im)]
    else:
        coeffs = [FieldElement(a) for a in re]
    return cls._raw(coeffs)


def _integerize(qs: list[Fraction], alpha: Fraction, beta: Fraction):
    d = lcm(alpha.denominator, beta.denominator)
    a, b = int(alpha * d), int(beta * d)
    den = lcm(*(q.denominator for q in qs))
    return [int(q * den) for q in qs], a, b, d, den


def _horner_channel(qs: list[Fraction], alpha: Fraction, beta: Fraction) -> list[Fraction]:
    ns, a, b, d, den = _integerize(qs, alpha, beta)
    n = len(ns) - 1
    acc = [ns[n]]
    dp = 1
    for k in range(n - 1, -1, -1):
        dp *= d
        nxt = [0] * (len(acc) + 1)
        for j, v in enumerate(acc):
            if v:
                nxt[j + 1] += v * a
                nxt[j] += v * b
        nxt[0] += ns[k] * dp
        acc = nxt
    scale = den * dp
    return [Fraction(v, scale) for v in acc]


def _binomial_channel(qs: list[Fraction], alpha: Fraction, beta: Fraction) -> list[Fraction]:
    ns, a, b, d, den = _integerize(qs, alpha, beta)
    n = len(ns) - 1
    b_pow = [1]
    d_pow = [1]
    for _ in range(n):
        b_pow.append(b_pow[-1] * b)
        d_pow.append(d_pow[-1] * d)
    acc = [0] * (n + 1)
    row = [1]
    for k, v in enumerate(ns):
        if k:
            row = [1] + [row[j - 1] + row[j] for j in range(1, k)] + [1]
        if not v:
            continue
        w = v * d_pow[n - k]
        for i in range(k + 1):
            acc[i] += w * row[i] * b_pow[k - i]
    out = []
    a_pow = 1
    scale = den * d_pow[n]
    for i in range(n + 1):
        out.append(Fraction(acc[i] * a_pow, scale))
        a_pow *= a
    return out


def _rational_compose(p: _Poly, alpha: FieldElement, beta: FieldElement, kernel) -> _Poly:
    qa, qb = alpha.rational(), beta.rational()
    chans = {key: kernel(qs, qa, qb) for key, qs in _channels(p).items()}
    return _rebuild(type(p), chans, p.degree)


def compose_linear_horner(p: _Poly, alpha, beta) -> _Poly:
    """``p(alpha*t + beta)`` by nested (Horner) composition."""
    alpha, beta = as_field(alpha), as_field(beta)
    cls = type(p)
    if p.is_zero():
        return p
    if alpha.is_rational() and beta.is_rational():
        return _rational_compose(p, alpha, beta, _horner_channel)
    zero = cls._zero
    acc: list = [p.coeffs[-1]]
    for c in reversed(p.coeffs[:-1]):
        nxt = [zero] * (len(acc) + 1)
        for j, a in enumerate(acc):
            if a.is_zero():
                continue
            nxt[j + 1] = nxt[j + 1] + a * alpha
            if not beta.is_zero():
                nxt[j] = nxt[j] + a * beta
        nxt[0] = nxt[0] + c
        acc = nxt
    return cls._raw(acc)


def compose_linear_binomial(p: _Poly, alpha, beta) -> _Poly:
    """``p(alpha*t + beta)`` from the binomial expansion.

    The coefficient of ``t**i`` is ``alpha**i * sum_{k>=i} c_k*C(k,i)*beta**(k-i)``,
    with ``C(k, i)`` taken row by row from Pascal's triangle.
    """
    alpha, beta = as_field(alpha), as_field(beta)
    cls = type(p)
    n = p.degree
    if n < 0:
        return p
    if alpha.is_rational() and beta.is_rational():
        return _rational_compose(p, alpha, beta, _binomial_channel)
    beta_pow = [ONE]
    for _ in range(n):
        beta_pow.append(beta_pow[-1] * beta)
    acc = [cls._zero] * (n + 1)
    row = [1]
    for k, c in enumerate(p.coeffs):
        if k:
            row = [1] + [row[j - 1] + row[j] for j in range(1, k)] + [1]
        if c.is_zero():
            continue
        for i in range(k + 1):
            bp = beta_pow[k - i]
            if bp.is_zero():
                continue
            acc[i] = acc[i] + c * (bp * row[i])
    a_pow = ONE
    for i in range(n + 1):
        if i:
            a_pow = a_pow * alpha
        acc[i] = acc[i] * a_pow
    return cls._raw(acc)


def compose_linear(p: _Poly, alpha, beta, method: str = "horner") -> _Poly:
    if method == "horner":
        return compose_linear_horner(p, alpha, beta)
    if method == "binomial":
        return compose_linear_binomial(p, alpha, beta)
    raise ValueError(f"unknown composition method {method!r}")


def compose(p: RealPoly, q: RealPoly) -> RealPoly:
    """General composition ``p(q(t))``."""
    acc = RealPoly()
    for c in reversed(p.coeffs):
        acc = acc * q + RealPoly.constant(c)
    return acc


# -- univariate gcd over the field ------------------------------------------


def poly_gcd(a: RealPoly, b: RealPoly) -> RealPoly:
    """Monic gcd by the Euclidean algorithm over the field."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


# -- properness ---------------------------------------------------------------


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def right_component(f: RealPoly, d: int) -> RealPoly | None:
    """The monic, zero-constant ``h`` of degree ``d`` with ``f`` possibly in K[h].

    In characteristic zero a right composition factor of given degree is unique
    up to affine changes, so normalizing gives a single candidate.  It comes
    from the leading ``d`` coefficients of ``f`` via an ``m``-th root of the
    reversed series (J.C.P. Miller recurrence).  Membership of ``f`` in K[h] is
    not checked here.
    """
    n = f.degree
    if d <= 0 or n % d:
        return None
    m = n // d
    lead_inv = f.leading().inverse()
    # reversed monic series A(u) = u^n f(1/u) / lc, so A_0 = 1
    a = [f.coeff(n - k) * lead_inv for k in range(d)]
    b = [ONE]
    expo = Fraction(1, m)
    for k in range(1, d):
        acc = ZERO
        for j in range(1, k + 1):
            w = (expo + 1) * j - k
            if w and not a[j].is_zero():
                acc = acc + a[j] * b[k - j] * w
        b.append(acc * Fraction(1, k))
    # h(t) = sum_k b_k t^(d-k), constant dropped
    coeffs = [ZERO] * (d + 1)
    for k in range(d):
        coeffs[d - k] = b[k]
    return RealPoly._raw(coeffs)


def in_subalgebra(f: RealPoly, h: RealPoly) -> bool:
    """True when ``f = G(h)`` for some polynomial ``G`` (h-adic digits constant)."""
    rest = f
    while not rest.is_zero():
        q, r = rest.divmod(h)
        if r.degree > 0:
            return False
        rest = q
    return True


def bivariate_gcd_degree(x: RealPoly, y: RealPoly, method: str = "decompose") -> int:
    """deg_t gcd(x(t) - x(s), y(t) - y(s)) over K(s); 1 means proper.

    ``method="decompose"`` uses the fact that for polynomial maps this degree
    equals the largest ``d`` such that x and y are both polynomials in one
    ``h`` of degree ``d``.  ``method="prs"`` runs a primitive remainder sequence
    in t over K[s] and is only practical for small degrees.
    """
    if x.is_constant() and y.is_constant():
        raise ValueError("both components are constant")
    if method == "prs":
        return _gcd_degree_prs(x, y)
    if method != "decompose":
        raise ValueError(f"unknown method {method!r}")
    if x.is_constant() or y.is_constant():
        f = y if x.is_constant() else x
        ds = _divisors(f.degree)
        g = None
    else:
        from math import gcd

        g = gcd(x.degree, y.degree)
        ds = _divisors(g)
        f = x
    for d in reversed(ds):
        if d == 1:
            return 1
        h = right_component(f, d)
        if h is None or not in_subalgebra(f, h):
            continue
        if g is not None and not in_subalgebra(y, h):
            continue
        return d
    return 1


def _gcd_degree_prs(x: RealPoly, y: RealPoly) -> int:
    # bivariate polys as lists (index = power of t) of RealPoly in s
    def fiber(p: RealPoly) -> list[RealPoly]:
        cols = [RealPoly.constant(c) for c in p.coeffs]
        cols[0] = cols[0] - p
        return _btrim(cols)

    a, b = fiber(x), fiber(y)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        if not r:
            break
        a, b = b, _primitive(r)
    return len(b) - 1


def _btrim(p: list[RealPoly]) -> list[RealPoly]:
    while p and p[-1].is_zero():
        p.pop()
    return p


def _prem(a: list[RealPoly], b: list[RealPoly]) -> list[RealPoly]:
    rem = list(a)
    lb = b[-1]
    db = len(b) - 1
    while len(rem) - 1 >= db and rem:
        lr = rem[-1]
        shift = len(rem) - 1 - db
        rem = [c * lb for c in rem]
        for j, bc in enumerate(b):
            rem[j + shift] = rem[j + shift] - bc * lr
        rem = _btrim(rem)
    return rem


def _primitive(p: list[RealPoly]) -> list[RealPoly]:
    g = RealPoly()
    for c in p:
        g = poly_gcd(g, c) if not g.is_zero() else c.monic()
        if g.degree == 0:
            break
    if g.degree <= 0:
        # normalize the scalar content as well
        return [c.scale(p[-1].leading().inverse()) for c in p]
    return [c.divmod(g)[0] for c in p]
