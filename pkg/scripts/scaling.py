"""Degree ladder for the verification kernel; prints times and the log-log slope.

    python scripts/scaling.py --degrees 25,50,100,200 --seed 7 --repeats 3
"""

from __future__ import annotations

import argparse
import json

from symcurve.bench import ScalingConfig, run_scaling


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degrees", default="25,50,100,200")
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--irrational", action="store_true", help="allow sqrt(2), sqrt(3) rotations")
    ap.add_argument("--json", default=None)
    args = ap.parse_args()

    cfg = ScalingConfig(
        degrees=tuple(int(d) for d in args.degrees.split(",")),
        seed=args.seed,
        repeats=args.repeats,
        rational_only=not args.irrational,
    )
    res = run_scaling(cfg)
    for r in res.rows:
        print(f"n={r.degree:<4} kernel {r.kernel_seconds:8.4f}s  detect {r.detect_seconds:8.3f}s  "
              f"truth {'ok' if r.central_ok and r.mirror_ok else 'FAIL'}")
    print(f"slope {res.slope:.3f}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(res.to_json(), fh, indent=2)


if __name__ == "__main__":
    main()
