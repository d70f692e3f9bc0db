import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from tkt import cli
from tkt.braids import family_to_json
from tkt.fixtures import clasp_braid_family, clasp_family, coherent_pair_family
from tkt.linkdiag import format_pd
from tkt.stablecli import (
    COLUMNS,
    StableReport,
    emit,
    family_report,
    slope_estimate,
    to_csv,
    to_json,
)
from tkt.skein import homfly
from tkt.twistgen import region_to_json, twist


def test_slope_estimate_examples():
    assert slope_estimate([4, 6, 8, 10]) == (Fraction(2), 0)
    assert slope_estimate([5, 6, 8, 10]) == (Fraction(2), 1)
    assert slope_estimate([1, 2, 4, 8]) is None
    assert slope_estimate([3, 3, 3]) == (Fraction(0), 0)
    with pytest.raises(ValueError):
        slope_estimate([1, 2])


def test_report_rows_and_sandwich():
    rep = family_report(coherent_pair_family(), 5)
    assert [r.n for r in rep.rows] == list(range(6))
    for a, b in zip(rep.rows, rep.rows[1:]):
        assert b.c_ub - a.c_ub == 2
    for r in rep.rows:
        assert r.ohyama_lb <= r.c_ub and r.diao_lb <= r.c_ub and r.mfw_lb <= r.braid_ub


def test_verdict_wording():
    rep = family_report(clasp_family(), 6, "both", clasp_braid_family())
    text = json.dumps(rep.verdicts).lower()
    assert "proof" not in text and "proved" not in text
    assert rep.verdicts["c_s"]["status"].startswith("upper and lower slopes agree")
    assert "consistent with" in rep.verdicts["c_s_vs_eta_eta_minus_1"]


def test_emit_formats(tmp_path):
    rep = family_report(coherent_pair_family(), 3)
    csv_text = to_csv(rep)
    assert csv_text.splitlines()[0] == ",".join(COLUMNS)
    assert "\r" not in csv_text
    back = StableReport.from_dict(json.loads(to_json(rep)))
    assert back == rep
    emit(rep, "json", str(tmp_path / "r.json"))
    assert (tmp_path / "r.json").read_bytes() == to_json(rep).encode()
    with pytest.raises(ValueError):
        to_csv(StableReport(2, 2, "diagram"))
    with pytest.raises(ValueError):
        emit(rep, "xml", str(tmp_path / "r.xml"))


def test_determinism():
    a = to_json(family_report(clasp_family(), 5))
    b = to_json(family_report(clasp_family(), 5))
    assert a == b


def test_negative_runs_by_mirroring():
    rep = family_report(coherent_pair_family(), -3)
    assert [r.n for r in rep.rows] == [0, -1, -2, -3]
    F = coherent_pair_family()
    for r in rep.rows:
        D = twist(F, r.n)
        assert r.c_ub == D.crossing_count
        assert (r.E, r.e) == homfly(D).l_degrees()
    with pytest.raises(Exception):
        family_report(clasp_family(), -3, "braid", clasp_braid_family())


def test_mode_requirements():
    with pytest.raises(Exception):
        family_report(clasp_family(), 3, "braid")
    with pytest.raises(ValueError):
        family_report(clasp_family(), 1)
    with pytest.raises(ValueError):
        family_report(clasp_family(), 3, "fast")


@pytest.fixture
def files(tmp_path: Path):
    F = clasp_family()
    (tmp_path / "base.pd").write_text(format_pd(F.base))
    (tmp_path / "region.json").write_text(json.dumps(region_to_json(F.region)))
    (tmp_path / "fam.json").write_text(json.dumps(family_to_json(clasp_braid_family())))
    return tmp_path


def test_cli_commands(files, capsys):
    assert cli.main(["homfly", str(files / "base.pd")]) == 0
    assert json.loads(capsys.readouterr().out)["homfly"] == [[0, 0, 1]]
    assert cli.main(["homfly", "PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]"]) == 0
    assert json.loads(capsys.readouterr().out)["writhe"] == -3
    assert cli.main(["bounds", str(files / "base.pd")]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["mfw_lb"] == 1 and out["s"] == 3
    out_csv = files / "rep.csv"
    args = ["family", str(files / "base.pd"), "--region", str(files / "region.json"),
            "--n", "5", "--out", str(out_csv), "--format", "csv"]
    assert cli.main(args) == 0
    first = out_csv.read_bytes()
    assert cli.main(args) == 0
    assert out_csv.read_bytes() == first
    assert cli.main(["family", str(files / "fam.json"), "--n", "3", "--mode", "both",
                     "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["mode"] == "both"
    assert cli.main(["braid-family", str(files / "fam.json"), "--n", "2"]) == 0
    assert json.loads(capsys.readouterr().out)["strands"] == 5
    assert cli.main(["satellite", "--eta-k", "3", "--omega-k", "3", "--eta-p", "3", "--omega-p", "1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert (out["eta_K"], out["omega_K"]) == (9, 3)
    assert cli.main(["norm", "--eta", "6", "--omega", "2"]) == 0
    assert json.loads(capsys.readouterr().out)["values"] == [3, 5]


def test_cli_errors(files, monkeypatch):
    assert cli.main(["homfly", str(files / "missing.pd")]) == 2
    assert cli.main(["homfly", "PD[X(1,2,3,4)]"]) == 2
    assert cli.main(["norm", "--eta", "5", "--omega", "2"]) == 2
    assert cli.main(["family", str(files / "base.pd"), "--n", "3"]) == 2
    assert cli.main(["bogus"]) == 2
    monkeypatch.setenv("TKT_NODE_CAP", "1")
    assert cli.main(["homfly", "PD[X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)]"]) == 3


def test_console_script(files):
    proc = subprocess.run(
        [sys.executable, "-m", "tkt.cli", "norm", "--eta", "3", "--omega", "3"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["lower"] == 2
