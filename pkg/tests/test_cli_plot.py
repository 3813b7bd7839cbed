from __future__ import annotations

import json
import subprocess
import sys

import pytest

from hypgrow.cli import main, parse_point
from hypgrow.plot import emit_svg_plot


@pytest.fixture
def specs(tmp_path):
    out = {}
    for name, rec in {"ball": {"type": "ball", "center": [0, 0], "radius": 1.0}, "g2": {"type": "g2", "x": [1, 0]},
                      "comb": {"type": "comb", "max_teeth": 20}}.items():
        p = tmp_path / f"{name}.json"
        p.write_text(json.dumps(rec))
        out[name] = p
    return out


def test_dist_json(specs, capsys):
    assert main(["dist", "--domain", str(specs["ball"]), "--metric", "j", "--from", "0,0", "--to", "0.5,0"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["metric"] == "j" and abs(rec["value"] - 0.6931471805599453) < 1e-12


def test_dist_negative_coordinate(specs, capsys):
    assert main(["dist", "--domain", str(specs["ball"]), "--metric", "j", "--from=-0.5,0", "--to", "0,0"]) == 0


def test_exit_codes(specs, tmp_path, capsys):
    base = ["dist", "--domain", str(specs["ball"]), "--from", "0,0", "--to", "0.5,0"]
    assert main(base + ["--metric", "nope"]) == 2
    assert "valid metrics" in capsys.readouterr().err
    assert main(["dist", "--domain", str(tmp_path / "missing.json"), "--metric", "j", "--from", "0,0",
                 "--to", "0.5,0"]) == 3
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["dist", "--domain", str(bad), "--metric", "j", "--from", "0,0", "--to", "0.5,0"]) == 5
    assert main(base[:-1] + ["2,0", "--metric", "j"]) == 2           # outside the domain
    assert main(base[:-1] + ["0.5,0,0", "--metric", "j"]) == 2       # wrong dimension
    assert main(["profile", "--domain", str(specs["ball"]), "--metric", "j", "--out",
                 str(tmp_path / "no" / "dir.csv")]) == 4
    assert main(["profile", "--domain", str(specs["ball"]), "--metric", "j", "--direction", "1,0", "--t-max",
                 "1.5", "--out", str(tmp_path / "x.csv")]) == 2
    assert not (tmp_path / "x.csv").exists()


def test_parse_point():
    assert parse_point("0.5,0") == [0.5, 0.0]
    with pytest.raises(Exception):
        parse_point("a,b")


def test_profile_and_plot(specs, tmp_path):
    csv_path, svg_path = tmp_path / "p.csv", tmp_path / "p.svg"
    assert main(["profile", "--domain", str(specs["ball"]), "--metric", "sigma", "--direction", "1,0",
                 "--t-max", "0.9", "--steps", "16", "--out", str(csv_path)]) == 0
    assert main(["plot", "--in", str(csv_path), "--out", str(svg_path)]) == 0
    svg = svg_path.read_text()
    assert svg.count("<polyline") == 3 and ">t<" in svg and "f_m(t)" in svg
    emit_svg_plot(csv_path, tmp_path / "again.svg")
    assert (tmp_path / "again.svg").read_text() == svg


def test_g_only_profile_plot(specs, tmp_path):
    csv_path, svg_path = tmp_path / "c.csv", tmp_path / "c.svg"
    assert main(["profile", "--domain", str(specs["comb"]), "--metric", "none", "--direction", "1,0",
                 "--t-max", "0.9", "--steps", "90", "--out", str(csv_path)]) == 0
    assert main(["plot", "--in", str(csv_path), "--out", str(svg_path)]) == 0
    assert 'data-series="g"' in svg_path.read_text()


def test_plot_parse_error(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("t,g\n0,1\n")
    assert main(["plot", "--in", str(bad), "--out", str(tmp_path / "o.svg")]) == 5
    assert main(["plot", "--in", str(tmp_path / "none.csv"), "--out", str(tmp_path / "o.svg")]) == 3


def test_verify_report_deterministic(tmp_path):
    r1, r2 = tmp_path / "r1.json", tmp_path / "r2.json"
    for r in (r1, r2):
        assert main(["verify", "--select", "thm:distance-ratio", "thm:cassinian", "--report", str(r)]) == 0
    assert r1.read_bytes() == r2.read_bytes()
    assert main(["verify", "--select", "no-such-claim"]) == 2


def test_module_entry_point(specs):
    out = subprocess.run([sys.executable, "-m", "hypgrow", "dist", "--domain", str(specs["g2"]), "--metric",
                          "alpha", "--from", "0,0", "--to", "0.5,0"], capture_output=True, text=True, check=True)
    assert abs(json.loads(out.stdout)["value"] - 0.6931471805599453) < 1e-6
