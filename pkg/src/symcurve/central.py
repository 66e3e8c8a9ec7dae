"""Central symmetry: the triangular system with alpha = -1 and a unique beta."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .curve import ComplexCurve
from .field import C_ZERO, ONE, ZERO, ComplexElement, FieldElement
from .geometry import Point
from .poly import compose_linear


class CentralReason(str, Enum):
    EVEN_DEGREE_X = "even_degree_x"
    EVEN_DEGREE_Y = "even_degree_y"
    BETA_NOT_REAL = "beta_not_real"
    SYSTEM_FAILS = "system_fails"
    EVEN_COEFFICIENT_NONZERO = "even_coefficient_nonzero"


@dataclass(frozen=True)
class Rejection:
    reason: CentralReason
    index: int | None = None

    def __str__(self) -> str:
        text = self.reason.value.replace("_", " ")
        return f"{text} (index {self.index})" if self.index is not None else text


@dataclass(frozen=True)
class CentralResult:
    symmetric: bool
    center: Point | None = None
    rejection: Rejection | None = None
    beta: FieldElement | None = None
    # complex candidate, kept for diagnostics when beta is not real
    beta_complex: ComplexElement | None = None
    fastpath: bool = False

    def __post_init__(self):
        if self.symmetric != (self.center is not None):
            raise ValueError("center must be present exactly for symmetric verdicts")
        if self.symmetric == (self.rejection is not None):
            raise ValueError("rejection must be present exactly for negative verdicts")

    def same_verdict(self, other: CentralResult) -> bool:
        return (
            self.symmetric == other.symmetric
            and self.center == other.center
            and (self.beta == other.beta or not self.symmetric)
        )


_HALF = ONE / 2


def central_prefilter(curve: ComplexCurve) -> Rejection | None:
    """A centrally symmetric polynomial curve has odd deg x and odd deg y."""
    if curve.r % 2 == 0:
        return Rejection(CentralReason.EVEN_DEGREE_X)
    if curve.s % 2 == 0:
        return Rejection(CentralReason.EVEN_DEGREE_Y)
    return None


def central_beta_complex(curve: ComplexCurve) -> ComplexElement:
    """beta = -2 c_{n-1} / (n c_n), divided through |c_n|^2 so only reals are inverted."""
    n = curve.n
    cn = curve.coeff(n)
    num = curve.coeff(n - 1) * cn.conjugate()
    scale = (cn.modulus_squared() * n).inverse() * -2
    return num * scale


def central_candidate(curve: ComplexCurve) -> FieldElement | None:
    beta = central_beta_complex(curve)
    return beta.re if beta.is_real() else None


def _equation_rhs(c: tuple, i: int, beta_pow: list[FieldElement]) -> ComplexElement:
    # sum_{k=i}^n c_k C(k, i) beta^(k-i), binomials by C(k+1,i) = C(k,i)(k+1)/(k+1-i)
    acc = C_ZERO
    binom = 1
    n = len(c) - 1
    for k in range(i, n + 1):
        if k > i:
            binom = binom * k // (k - i)
        ck = c[k]
        bp = beta_pow[k - i]
        if ck.is_zero() or bp.is_zero():
            continue
        acc = acc + ck * (bp * binom)
    return acc


def verify_system_S(curve: ComplexCurve, beta: FieldElement) -> int | None:
    """Check equations (1)..(n) at alpha = -1; return the first failing index.

    Equation (i) reads ``-c_i = (-1)^i * sum_{k>=i} c_k C(k,i) beta^(k-i)``.
    Indices are tried from n-1 downward (short equations first).
    """
    c = curve.c
    n = curve.n
    beta_pow = [ONE]
    for _ in range(n):
        beta_pow.append(beta_pow[-1] * beta)
    order = list(range(n - 1, 0, -1)) + [n]
    for i in order:
        rhs = _equation_rhs(c, i, beta_pow)
        if i % 2:
            rhs = -rhs
        if rhs != -c[i]:
            return i
    return None


def verify_identity_S(curve: ComplexCurve, beta: FieldElement) -> bool:
    """Cross-check path: z(-t + beta) + z(t) is a constant polynomial."""
    total = compose_linear(curve.z, -1, beta) + curve.z
    return total.degree <= 0


def center_from(curve: ComplexCurve, beta: FieldElement) -> Point:
    """z0 = c_0 + (c_1 beta + ... + c_n beta^n) / 2."""
    z0 = curve.coeff(0) + tail_sum(curve, beta) * _HALF
    return Point.from_complex(z0)


def tail_sum(curve: ComplexCurve, beta: FieldElement) -> ComplexElement:
    """Q(beta) = c_1 beta + ... + c_n beta^n, i.e. z(beta) - c_0."""
    if beta.is_zero():
        return C_ZERO
    return curve.z(beta) - curve.coeff(0)


def central_fastpath_cn1_zero(curve: ComplexCurve) -> CentralResult | None:
    """Shortcut when c_{n-1} = 0 (then beta = 0)."""
    n = curve.n
    if not curve.coeff(n - 1).is_zero():
        return None
    center = Point.from_complex(curve.coeff(0))
    for k in range(2, n - 1, 2):
        if not curve.coeff(k).is_zero():
            return CentralResult(
                False,
                rejection=Rejection(CentralReason.EVEN_COEFFICIENT_NONZERO, k),
                beta=ZERO,
                fastpath=True,
            )
    return CentralResult(True, center=center, beta=ZERO, fastpath=True)


def detect_central(
    curve: ComplexCurve, use_fastpath: bool = True, use_prefilter: bool = True
) -> CentralResult:
    rejected = central_prefilter(curve) if use_prefilter else None
    if rejected is not None:
        # with n odd the candidate is still defined; keep it for diagnostics
        beta_c = central_beta_complex(curve) if curve.n % 2 else None
        return CentralResult(False, rejection=rejected, beta_complex=beta_c)
    # the shortcut presumes odd n, which only the prefilter guarantees
    if use_fastpath and curve.n % 2:
        quick = central_fastpath_cn1_zero(curve)
        if quick is not None:
            return quick
    beta_c = central_beta_complex(curve)
    if not beta_c.is_real():
        return CentralResult(
            False, rejection=Rejection(CentralReason.BETA_NOT_REAL), beta_complex=beta_c
        )
    beta = beta_c.re
    failing = verify_system_S(curve, beta)
    if failing is not None:
        return CentralResult(
            False, rejection=Rejection(CentralReason.SYSTEM_FAILS, failing), beta=beta
        )
    return CentralResult(True, center=center_from(curve, beta), beta=beta)
