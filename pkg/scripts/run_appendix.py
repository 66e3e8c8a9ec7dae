"""Run both detectors on the appendix corpus and compare with the tables.

    python scripts/run_appendix.py [--json out.json]
"""

from __future__ import annotations

import argparse
import json
import time

from symcurve.central import central_beta_complex
from symcurve.curve import complex_form
from symcurve.detect import detect_all
from symcurve.fixtures import appendix_corpus, extra_fixtures
from symcurve.mirror import mirror_beta
from symcurve.report import report_to_json


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--json", default=None, help="write full reports to this file")
    args = ap.parse_args()

    fixtures = list(appendix_corpus()) + list(extra_fixtures().values())
    dump = {}
    print(f"{'id':<20} {'n':>3} {'test':<7} {'got':<4} {'table':<5} {'beta':<22} {'secs':>6}  result")
    for fx in fixtures:
        p = fx.parametrization()
        t0 = time.perf_counter()
        rep = detect_all(p)
        secs = time.perf_counter() - t0
        z = complex_form(p)
        if fx.expected.tested == "central":
            got, want, beta = rep.central.symmetric, fx.expected.central, central_beta_complex(z)
            result = rep.central.center if got else rep.central.rejection
        else:
            got, want, beta = rep.mirror.symmetric, fx.expected.mirror, mirror_beta(z)
            result = rep.mirror.axis if got else rep.mirror.rejection
        flag = "" if got == want else "  <-- differs"
        print(
            f"{fx.id:<20} {rep.degrees[2]:>3} {fx.expected.tested:<7} "
            f"{'yes' if got else 'no':<4} {'yes' if want else 'no':<5} {str(beta):<22} {secs:>6.3f}  {result}{flag}"
        )
        dump[fx.id] = report_to_json(rep)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(dump, fh, indent=2)


if __name__ == "__main__":
    main()
