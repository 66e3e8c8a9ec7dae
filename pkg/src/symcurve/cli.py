"""Command line entry point: ``symcurve detect | bench | gen``.

Exit codes for ``detect``: 0 ran (the verdict is in the report), 1 parse
error, 2 degenerate or improper input, 3 internal-consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from pathlib import Path

from .bench import AppendixConfig, ScalingConfig, run_appendix, run_scaling
from .curve import CurveTag
from .detect import detect_all
from .errors import CurveParseError, InternalConsistencyError
from .fixtures import random_planted_central, random_planted_mirror
from .parse import format_curve, parse_curve
from .report import report_to_json, report_to_text, to_float

EXIT_OK, EXIT_PARSE, EXIT_DEGENERATE, EXIT_INTERNAL = 0, 1, 2, 3


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def cmd_detect(args) -> int:
    try:
        p = parse_curve(_read_source(args.file))
    except CurveParseError as exc:
        _emit_error(args, "parse_error", str(exc), line=exc.line, column=exc.column)
        return EXIT_PARSE
    try:
        report = detect_all(p)
    except InternalConsistencyError as exc:
        _emit_error(args, "internal_consistency", str(exc))
        return EXIT_INTERNAL
    if args.format == "json":
        print(json.dumps(report_to_json(report), indent=2))
    else:
        print(report_to_text(report))
    if report.curve_class.tag is not CurveTag.PROPER:
        if args.format == "text":
            print(f"error: {report.curve_class.describe()}", file=sys.stderr)
        return EXIT_DEGENERATE
    return EXIT_OK


def _emit_error(args, kind: str, message: str, **extra) -> None:
    if args.format == "json":
        print(json.dumps({"error": kind, "message": message, **extra}, indent=2))
    else:
        print(f"error: {message}", file=sys.stderr)


def _parse_degrees(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def cmd_bench(args) -> int:
    payload: dict = {}
    if args.suite == "appendix" or (args.suite is None and not args.scaling):
        rows = run_appendix(AppendixConfig(repeats=args.repeats))
        payload["appendix"] = [asdict(r) | {"matches": r.matches} for r in rows]
        if args.format == "text":
            print(f"{'id':<14} {'n':>4} {'tested':<8} {'verdict':<8} {'expected':<8} {'seconds':>9}")
            for r in rows:
                flag = "" if r.matches else "  MISMATCH"
                print(
                    f"{r.id:<14} {r.degree:>4} {r.tested:<8} {_yn(r.verdict):<8} "
                    f"{_yn(r.expected):<8} {r.seconds:>9.4f}{flag}"
                )
    if args.scaling:
        cfg = ScalingConfig(degrees=args.degrees, seed=args.seed, repeats=args.repeats)
        res = run_scaling(cfg)
        payload["scaling"] = res.to_json()
        if args.format == "text":
            print(f"{'degree':>6} {'kernel_s':>10} {'detect_s':>10} {'truth':>6}")
            for r in res.rows:
                ok = "ok" if r.central_ok and r.mirror_ok else "FAIL"
                print(f"{r.degree:>6} {r.kernel_seconds:>10.4f} {r.detect_seconds:>10.4f} {ok:>6}")
            print(f"log-log slope of kernel time vs degree: {res.slope:.3f}")
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    return EXIT_OK


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_gen(args) -> int:
    if args.kind == "central":
        if args.degree % 2 == 0:
            print("error: central symmetry requires an odd degree", file=sys.stderr)
            return 2
        planted = random_planted_central(args.degree, args.seed)
        truth = {
            "kind": "central",
            "center": {"x": planted.truth.center.x.to_str(), "y": planted.truth.center.y.to_str()},
        }
    else:
        if args.degree < 2:
            print("error: mirror fixtures need degree >= 2", file=sys.stderr)
            return 2
        planted = random_planted_mirror(args.degree, args.seed)
        axis = planted.truth.axis
        truth = {
            "kind": "mirror",
            "axis": {"A": axis.A.to_str(), "B": axis.B.to_str(), "C": axis.C.to_str(), "text": str(axis)},
        }
    truth["beta"] = planted.truth.beta.to_str()
    truth["beta_float"] = to_float(planted.truth.beta)
    truth["degree"] = args.degree
    truth["seed"] = args.seed
    text = f"# planted {args.kind} symmetry, degree {args.degree}, seed {args.seed}\n"
    text += format_curve(planted.curve)
    if args.out:
        out = Path(args.out)
        out.write_text(text)
        sidecar = out.with_suffix(".truth.json")
        sidecar.write_text(json.dumps(truth, indent=2) + "\n")
        if args.format == "json":
            print(json.dumps({"curve": str(out), "truth": str(sidecar), **truth}, indent=2))
        else:
            print(f"wrote {out} and {sidecar}")
    elif args.format == "json":
        print(json.dumps({"source": text, "truth": truth}, indent=2))
    else:
        print(text, end="")
        print(f"# truth: {json.dumps(truth)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="symcurve", description="Exact symmetry detection for polynomial curves")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    sub = ap.add_subparsers(dest="cmd", required=True)

    d = sub.add_parser("detect", parents=[fmt], help="detect central and mirror symmetry")
    d.add_argument("file", help="curve file, or - for stdin")
    d.set_defaults(func=cmd_detect)

    b = sub.add_parser("bench", parents=[fmt], help="timings on the appendix corpus and a degree ladder")
    b.add_argument("--suite", choices=("appendix", "none"), default=None)
    b.add_argument("--scaling", action="store_true")
    b.add_argument("--degrees", type=_parse_degrees, default=ScalingConfig.degrees)
    b.add_argument("--seed", type=int, default=ScalingConfig.seed)
    b.add_argument("--repeats", type=int, default=1)
    b.set_defaults(func=cmd_bench)

    g = sub.add_parser("gen", parents=[fmt], help="write a curve with a planted symmetry")
    g.add_argument("--kind", choices=("central", "mirror"), required=True)
    g.add_argument("--degree", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", default=None, help="curve file path; the truth goes to <stem>.truth.json")
    g.set_defaults(func=cmd_gen)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
