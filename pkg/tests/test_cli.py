from __future__ import annotations

import json
import subprocess
import sys
from importlib import resources

import pytest

from symcurve.cli import main
from symcurve.parse import parse_curve

DATA = resources.files("symcurve").joinpath("data", "appendix_v1")


def curve_path(name: str) -> str:
    return str(DATA.joinpath(f"{name}.curve"))


def test_detect_json(capsys):
    assert main(["detect", curve_path("appendix-6"), "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["mirror"]["symmetric"] is True
    assert data["mirror"]["axis"]["text"] == "x + y = 0"


def test_detect_text(capsys):
    assert main(["detect", curve_path("appendix-38")]) == 0
    out = capsys.readouterr().out
    assert "central: no (even degree x; beta not real)" in out
    assert main(["detect", curve_path("appendix-37")]) == 0
    assert "central: no (beta not real)" in capsys.readouterr().out


def test_detect_improper(tmp_path, capsys):
    f = tmp_path / "improper.curve"
    f.write_text("x(t) = t^2\ny(t) = t^4\n")
    assert main(["detect", str(f)]) == 2
    assert "gcd degree 2" in capsys.readouterr().err


def test_detect_parse_error(tmp_path, capsys):
    f = tmp_path / "bad.curve"
    f.write_text("x(t) = t +\ny(t) = t\n")
    assert main(["detect", str(f), "--format", "json"]) == 1
    data = json.loads(capsys.readouterr().out)
    assert data["error"] == "parse_error" and data["line"] == 1


def test_detect_stdin(monkeypatch, capsys):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO("x(t) = t\ny(t) = t^2\n"))
    assert main(["detect", "-"]) == 0
    assert "mirror: yes (axis x = 0" in capsys.readouterr().out


def test_gen(tmp_path, capsys):
    out = tmp_path / "c9.curve"
    assert main(["gen", "--kind", "central", "--degree", "9", "--seed", "3", "--out", str(out)]) == 0
    truth = json.loads(out.with_suffix(".truth.json").read_text())
    assert truth["kind"] == "central" and "center" in truth
    p = parse_curve(out.read_text())
    assert max(p.degrees) == 9
    capsys.readouterr()
    assert main(["detect", str(out), "--format", "json"]) == 0
    center = json.loads(capsys.readouterr().out)["central"]["center"]
    assert (center["x"], center["y"]) == (truth["center"]["x"], truth["center"]["y"])


def test_gen_mirror_json(capsys):
    assert main(["gen", "--kind", "mirror", "--degree", "8", "--seed", "3", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["truth"]["kind"] == "mirror" and "axis" in data["truth"]


def test_gen_rejects_even_central(capsys):
    assert main(["gen", "--kind", "central", "--degree", "8"]) == 2
    assert "odd" in capsys.readouterr().err


def test_bench_appendix_json(capsys):
    assert main(["bench", "--suite", "appendix", "--format", "json"]) == 0
    rows = json.loads(capsys.readouterr().out)["appendix"]
    assert len(rows) == 18 and all(r["matches"] for r in rows)


def test_bench_scaling_small(capsys):
    assert main(["bench", "--scaling", "--degrees", "9,17,33", "--seed", "7"]) == 0
    out = capsys.readouterr().out
    assert "log-log slope" in out and "appendix-2" not in out


def test_entry_point_module():
    proc = subprocess.run(
        [sys.executable, "-m", "symcurve.cli", "detect", curve_path("appendix-3")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "central: yes (center (-6, -2)" in proc.stdout


def test_bad_degrees_flag():
    with pytest.raises(SystemExit):
        main(["bench", "--scaling", "--degrees", "a,b"])
