"""Benchmark harness: appendix timings and the degree-scaling ladder."""

from __future__ import annotations

import math
import statistics
import time
from dataclasses import asdict, dataclass, field

from .central import verify_system_S
from .curve import complex_form
from .detect import detect_all
from .fixtures import appendix_corpus, random_planted_central, random_planted_mirror
from .mirror import verify_system_Wprime


@dataclass(frozen=True)
class AppendixConfig:
    repeats: int = 1


@dataclass(frozen=True)
class ScalingConfig:
    degrees: tuple[int, ...] = (25, 50, 100, 200)
    seed: int = 7
    repeats: int = 3
    # rational-only motions keep coefficient growth comparable across degrees
    rational_only: bool = True
    # fixed t -> a*t + b so every rung has the same beta (beta = -2)
    substitution: tuple[int, int] = (1, 1)


@dataclass
class AppendixRow:
    id: str
    degree: int
    tested: str
    verdict: bool
    expected: bool
    seconds: float

    @property
    def matches(self) -> bool:
        return self.verdict == self.expected


@dataclass
class ScalingRow:
    degree: int
    kernel_seconds: float
    detect_seconds: float
    central_ok: bool
    mirror_ok: bool


@dataclass
class ScalingResult:
    rows: list[ScalingRow] = field(default_factory=list)
    slope: float = float("nan")

    def to_json(self) -> dict:
        return {"slope": self.slope, "rows": [asdict(r) for r in self.rows]}


def run_appendix(cfg: AppendixConfig = AppendixConfig()) -> list[AppendixRow]:
    rows = []
    for fx in appendix_corpus():
        p = fx.parametrization()
        best = math.inf
        for _ in range(cfg.repeats):
            t0 = time.perf_counter()
            report = detect_all(p)
            best = min(best, time.perf_counter() - t0)
        tested = fx.expected.tested
        verdict = report.central.symmetric if tested == "central" else report.mirror.symmetric
        expected = fx.expected.central if tested == "central" else fx.expected.mirror
        rows.append(AppendixRow(fx.id, report.degrees[2], tested, verdict, expected, best))
    return rows


def loglog_slope(degrees, seconds) -> float:
    xs = [math.log(d) for d in degrees]
    ys = [math.log(max(s, 1e-9)) for s in seconds]
    return statistics.linear_regression(xs, ys).slope


def _best_of(repeats: int, fn) -> float:
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def run_scaling(cfg: ScalingConfig = ScalingConfig()) -> ScalingResult:
    """Time the triangular-system checks on planted curves.

    At each degree d the kernel time is the sum of the central check on a
    planted central curve of degree d (d+1 when d is even) and the mirror
    check on a planted mirror curve of degree d, both at their true beta.
    """
    out = ScalingResult()
    for d in cfg.degrees:
        dc = d if d % 2 else d + 1
        opts = {"rational_only": cfg.rational_only, "substitution": cfg.substitution}
        pc = random_planted_central(dc, cfg.seed, **opts)
        pm = random_planted_mirror(d, cfg.seed, **opts)
        zc, zm = complex_form(pc.curve), complex_form(pm.curve)
        bc, bm = pc.truth.beta, pm.truth.beta
        kernel = _best_of(cfg.repeats, lambda: verify_system_S(zc, bc)) + _best_of(
            cfg.repeats, lambda: verify_system_Wprime(zm, bm)
        )
        t0 = time.perf_counter()
        rc, rm = detect_all(pc.curve), detect_all(pm.curve)
        full = time.perf_counter() - t0
        out.rows.append(
            ScalingRow(
                d,
                kernel,
                full,
                rc.central.symmetric and rc.central.center == pc.truth.center,
                rm.mirror.symmetric and rm.mirror.axis == pm.truth.axis,
            )
        )
    if len(out.rows) >= 2:
        out.slope = loglog_slope([r.degree for r in out.rows], [r.kernel_seconds for r in out.rows])
    return out
