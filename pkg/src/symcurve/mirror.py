"""Mirror symmetry through the reduced system with alpha = -1.

Two facts used below differ from the commonly quoted closed forms
and are pinned by tests:

* The constant equation of the reduced system carries ``conj(c_n) * Q(beta)``
  (not a bare ``Q(beta)``), so the axis is
  ``conj(c_n) z - (-1)^n c_n conj(z) + (-1)^n conj(c_0) c_n - conj(c_n) c_0
  - conj(c_n) Q(beta) = 0``.
* With ``beta = 0`` equation [k] reads ``(-1)^(n-k) w = conj(w)`` for
  ``w = c_n conj(c_k)``, so whether ``w`` must be real or imaginary follows
  the parity of ``n - k``, not of ``k``.

Realness of the phase-adjusted tail ``Q(beta) conj(c_n) / |c_n| *
sqrt((-1)^(n+1))`` is tested without radicals: ``|c_n|`` is a positive real and
the square root is 1 (n odd) or i (n even), so the test reduces to
``Im(Q conj(c_n)) = 0`` for odd n and ``Re(Q conj(c_n)) = 0`` for even n.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .central import _equation_rhs, tail_sum
from .curve import ComplexCurve
from .errors import InternalConsistencyError
from .field import ONE, ZERO, ComplexElement, FieldElement, I
from .geometry import Line


class MirrorReason(str, Enum):
    PARITY_PROHIBITION = "parity_prohibition"
    SYSTEM_FAILS = "system_fails"
    QSTAR_NOT_REAL = "qstar_not_real"
    SPECIAL_CASE_COEFFICIENT = "special_case_coefficient"


class ConstraintKind(str, Enum):
    PARALLEL_TO_X = "parallel_to_x"
    PARALLEL_TO_Y = "parallel_to_y"
    # r = s odd: the axis is orthogonal to the asymptotic direction (a_r, a_s)
    PERPENDICULAR_TO_VECTOR = "perpendicular_to_vector"


@dataclass(frozen=True)
class AxisConstraint:
    kind: ConstraintKind
    vector: tuple[FieldElement, FieldElement] | None = None

    def satisfied_by(self, line: Line) -> bool:
        if self.kind is ConstraintKind.PARALLEL_TO_X:
            return line.A.is_zero()
        if self.kind is ConstraintKind.PARALLEL_TO_Y:
            return line.B.is_zero()
        ar, as_ = self.vector
        return (line.A * as_ - line.B * ar).is_zero()

    def __str__(self) -> str:
        if self.vector is None:
            return self.kind.value
        return f"{self.kind.value}({self.vector[0]}, {self.vector[1]})"


@dataclass(frozen=True)
class MirrorRejection:
    reason: MirrorReason
    index: int | None = None
    case: str | None = None

    def __str__(self) -> str:
        text = self.reason.value.replace("_", " ")
        if self.case:
            text += f" ({self.case})"
        if self.index is not None:
            text += f" (index {self.index})"
        return text


@dataclass(frozen=True)
class PrefilterOutcome:
    rejected: bool
    constraint: AxisConstraint | None = None
    case: str = ""


@dataclass(frozen=True)
class MirrorResult:
    symmetric: bool
    axis: Line | None = None
    rejection: MirrorRejection | None = None
    beta: FieldElement | None = None
    constraint: AxisConstraint | None = None
    fastpath: bool = False

    def __post_init__(self):
        if self.symmetric != (self.axis is not None):
            raise ValueError("axis must be present exactly for symmetric verdicts")
        if self.symmetric == (self.rejection is not None):
            raise ValueError("rejection must be present exactly for negative verdicts")

    def same_verdict(self, other: MirrorResult) -> bool:
        return self.symmetric == other.symmetric and self.axis == other.axis


def mirror_prefilter(curve: ComplexCurve) -> PrefilterOutcome:
    """Parity table on (r, s) = (deg x, deg y)."""
    r, s = curve.r, curve.s
    case = f"r={r} {'odd' if r % 2 else 'even'}, s={s} {'odd' if s % 2 else 'even'}"
    if r % 2 and s % 2:
        if r != s:
            return PrefilterOutcome(True, case=case)
        ar, as_ = curve.leading_xy()
        return PrefilterOutcome(
            False, AxisConstraint(ConstraintKind.PERPENDICULAR_TO_VECTOR, (ar, as_)), case
        )
    if r % 2:
        return PrefilterOutcome(False, AxisConstraint(ConstraintKind.PARALLEL_TO_Y), case)
    if s % 2:
        return PrefilterOutcome(False, AxisConstraint(ConstraintKind.PARALLEL_TO_X), case)
    if r < s:
        return PrefilterOutcome(False, AxisConstraint(ConstraintKind.PARALLEL_TO_Y), case)
    if r > s:
        return PrefilterOutcome(False, AxisConstraint(ConstraintKind.PARALLEL_TO_X), case)
    return PrefilterOutcome(False, None, case)


def mirror_beta(curve: ComplexCurve) -> FieldElement:
    """beta = -2 Re(c_n conj(c_{n-1})) / (n |c_n|^2); always real."""
    n = curve.n
    cn = curve.coeff(n)
    re = (cn * curve.coeff(n - 1).conjugate()).re
    return re * -2 / (cn.modulus_squared() * n)


def verify_system_Wprime(curve: ComplexCurve, beta: FieldElement) -> int | None:
    """Equations [n-1]..[1] at alpha = -1; first failing index or None.

    [k]: conj(c_k) c_n (-1)^(n-k) = conj(c_n) * sum_{j>=k} c_j C(j,k) beta^(j-k)
    """
    c = curve.c
    n = curve.n
    cn = c[n]
    cn_bar = cn.conjugate()
    beta_pow = [ONE]
    for _ in range(n):
        beta_pow.append(beta_pow[-1] * beta)
    for k in range(n - 1, 0, -1):
        lhs = c[k].conjugate() * cn
        if (n - k) % 2:
            lhs = -lhs
        if lhs != cn_bar * _equation_rhs(c, k, beta_pow):
            return k
    return None


def _rotated_tail(curve: ComplexCurve, beta: FieldElement) -> ComplexElement:
    return tail_sum(curve, beta) * curve.coeff(curve.n).conjugate()


def qstar_is_real(curve: ComplexCurve, beta: FieldElement) -> bool:
    w = _rotated_tail(curve, beta)
    return w.im.is_zero() if curve.n % 2 else w.re.is_zero()


def axis_from(curve: ComplexCurve, beta: FieldElement) -> Line:
    """Real form of the axis equation, via conj(g) z + g conj(z) + C = 0."""
    n = curve.n
    cn, c0 = curve.coeff(n), curve.coeff(0)
    cn_bar = cn.conjugate()
    sign = -1 if n % 2 else 1
    d = c0.conjugate() * cn * sign - cn_bar * c0 - _rotated_tail(curve, beta)
    if n % 2:
        gamma, const = cn, d
    else:
        gamma, const = -(I * cn), I * d
    if not const.is_real():
        raise InternalConsistencyError(
            "axis constant is not real although the realness test passed",
            {"n": n, "beta": beta, "constant": const},
        )
    return Line.from_complex_form(gamma, const.re)


def mirror_fastpath_cn1_zero(curve: ComplexCurve) -> MirrorResult | None:
    n = curve.n
    if not curve.coeff(n - 1).is_zero():
        return None
    cn = curve.coeff(n)
    for k in range(n - 2, 0, -1):
        w = cn * curve.coeff(k).conjugate()
        ok = w.im.is_zero() if (n - k) % 2 == 0 else w.re.is_zero()
        if not ok:
            return MirrorResult(
                False,
                rejection=MirrorRejection(MirrorReason.SPECIAL_CASE_COEFFICIENT, index=k),
                beta=ZERO,
                fastpath=True,
            )
    return MirrorResult(True, axis=axis_from(curve, ZERO), beta=ZERO, fastpath=True)


def detect_mirror(
    curve: ComplexCurve, use_fastpath: bool = True, use_prefilter: bool = True
) -> MirrorResult:
    # without the prefilter the full system decides alone and no constraint is checked
    pre = mirror_prefilter(curve) if use_prefilter else PrefilterOutcome(False)
    if pre.rejected:
        return MirrorResult(
            False,
            rejection=MirrorRejection(MirrorReason.PARITY_PROHIBITION, case=pre.case),
        )
    result = mirror_fastpath_cn1_zero(curve) if use_fastpath else None
    if result is None:
        beta = mirror_beta(curve)
        # the O(n) realness test runs before the O(n^2) system check
        if not qstar_is_real(curve, beta):
            result = MirrorResult(
                False, rejection=MirrorRejection(MirrorReason.QSTAR_NOT_REAL), beta=beta
            )
        elif (failing := verify_system_Wprime(curve, beta)) is not None:
            result = MirrorResult(
                False,
                rejection=MirrorRejection(MirrorReason.SYSTEM_FAILS, index=failing),
                beta=beta,
            )
        else:
            result = MirrorResult(True, axis=axis_from(curve, beta), beta=beta)
    if result.symmetric and pre.constraint is not None:
        if not pre.constraint.satisfied_by(result.axis):
            raise InternalConsistencyError(
                "axis violates the degree-parity constraint",
                {"axis": result.axis, "constraint": pre.constraint},
            )
    return MirrorResult(
        result.symmetric,
        axis=result.axis,
        rejection=result.rejection,
        beta=result.beta,
        constraint=pre.constraint,
        fastpath=result.fastpath,
    )
