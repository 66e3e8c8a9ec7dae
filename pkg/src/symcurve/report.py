"""JSON and text renderings of a SymmetryReport.

Exact values are strings that re-parse with ``parse_constant``; every exact
field has a ``*_float`` companion that is ``null`` when the value does not
fit in a double.
"""

from __future__ import annotations

import json
import math
from importlib import resources

from .central import CentralResult
from .detect import SymmetryReport
from .field import ComplexElement, FieldElement
from .mirror import MirrorResult

SCHEMA_VERSION = 1


def to_float(v: FieldElement) -> float | None:
    try:
        f = float(v)
    except OverflowError:
        return None
    return f if math.isfinite(f) else None


def _exact(obj: dict, key: str, v: FieldElement | None) -> None:
    obj[key] = None if v is None else v.to_str()
    obj[f"{key}_float"] = None if v is None else to_float(v)


def _complex(v: ComplexElement | None) -> dict | None:
    if v is None:
        return None
    out: dict = {}
    _exact(out, "re", v.re)
    _exact(out, "im", v.im)
    return out


def _central_json(res: CentralResult | None) -> dict | None:
    if res is None:
        return None
    out: dict = {"symmetric": res.symmetric}
    _exact(out, "beta", res.beta)
    if res.center is None:
        out["center"] = None
    else:
        center: dict = {}
        _exact(center, "x", res.center.x)
        _exact(center, "y", res.center.y)
        out["center"] = center
    out["reason"] = None if res.rejection is None else res.rejection.reason.value
    out["reason_index"] = None if res.rejection is None else res.rejection.index
    out["beta_complex"] = _complex(res.beta_complex)
    out["fastpath"] = res.fastpath
    return out


def _mirror_json(res: MirrorResult | None) -> dict | None:
    if res is None:
        return None
    out: dict = {"symmetric": res.symmetric}
    _exact(out, "beta", res.beta)
    if res.axis is None:
        out["axis"] = None
    else:
        axis: dict = {}
        for name in ("A", "B", "C"):
            _exact(axis, name, getattr(res.axis, name))
        axis["text"] = str(res.axis)
        out["axis"] = axis
    out["reason"] = None if res.rejection is None else res.rejection.reason.value
    out["reason_index"] = None if res.rejection is None else res.rejection.index
    out["constraint"] = None if res.constraint is None else str(res.constraint)
    out["fastpath"] = res.fastpath
    return out


def report_to_json(report: SymmetryReport) -> dict:
    r, s, n = report.degrees
    cls = report.curve_class
    return {
        "schema_version": SCHEMA_VERSION,
        "class": cls.tag.value,
        "gcd_degree": cls.gcd_degree,
        "degrees": {"r": r, "s": s, "n": n},
        "central": _central_json(report.central),
        "mirror": _mirror_json(report.mirror),
        "oracle_verified": report.oracle_verified,
        "notes": list(report.notes),
    }


def dumps(report: SymmetryReport) -> str:
    return json.dumps(report_to_json(report), indent=2)


def load_schema() -> dict:
    text = resources.files("symcurve").joinpath("schema", "report.schema.json").read_text()
    return json.loads(text)


def _verdict(flag: bool) -> str:
    return "yes" if flag else "no"


def report_to_text(report: SymmetryReport) -> str:
    r, s, n = report.degrees
    lines = [f"class: {report.curve_class.tag.value}", f"degrees: r={r} s={s} n={n}"]
    c, m = report.central, report.mirror
    if c is not None:
        if c.symmetric:
            lines.append(f"central: yes (center {c.center}, beta = {c.beta})")
        else:
            why = str(c.rejection)
            if c.rejection.reason.value.startswith("even_degree") and c.beta_complex is not None:
                if not c.beta_complex.is_real():
                    why += "; beta not real"
            lines.append(f"central: no ({why})")
    if m is not None:
        if m.symmetric:
            lines.append(f"mirror: yes (axis {m.axis}, beta = {m.beta})")
        else:
            lines.append(f"mirror: no ({m.rejection})")
    lines.append(f"oracle verified: {_verdict(report.oracle_verified)}")
    lines.extend(f"note: {note}" for note in report.notes)
    return "\n".join(lines)
