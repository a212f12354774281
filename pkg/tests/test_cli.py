import csv
import io
import json
import subprocess
import sys

import numpy as np
import pytest

from equivym.cli import run
from equivym.morrey import GridFunction, write_grid


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def report(capsys, *argv):
    code, out, err = call(capsys, *argv)
    return code, json.loads(out), err


def test_report_shape(capsys):
    code, rep, err = report(capsys, "index", "--label", "tau:2,1")
    assert code == 0
    assert set(rep) == {"tool", "version", "command", "config", "stage", "status", "result", "rows"}
    assert rep["result"] == {"label": "tau:2,1", "index": 2, "nullity": 0}
    assert "threads" not in rep["config"]
    assert "index 2, nullity 0" in err


def test_threads_do_not_change_output(capsys):
    outs = [call(capsys, "spectrum", "--label", "tau:3,2", "--stage", "invariant", "--lambda", "60",
                 "--threads", t)[1] for t in ("1", "3")]
    assert outs[0] == outs[1]


def test_spectrum_csv(capsys):
    code, out, _ = call(capsys, "spectrum", "--label", "tau:0,0", "--stage", "invariant", "--lambda", "4",
                        "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows == [{"label": "tau:0,0", "eigenvalue": "4", "multiplicity": "12", "stage": "invariant"}]


def test_spectrum_rejects_full_omega(capsys):
    assert call(capsys, "spectrum", "--label", "omega", "--stage", "full")[0] == 2


def test_lifts_and_reducibles(capsys):
    code, rep, _ = report(capsys, "lifts", "--chern", "6", "--wmax", "5")
    assert code == 0 and rep["result"]["count"] == len(rep["rows"]) > 0
    assert all(r["chern"] == 6 for r in rep["rows"])
    code, rep, _ = report(capsys, "reducibles", "--wplus", "4", "--wminus", "2")
    assert code == 0 and rep["result"]["orbits"]


def test_certify_exit_codes(capsys):
    code, rep, _ = report(capsys, "certify-cor2", "--chern", "6")
    assert code == 0 and rep["result"]["certified"]
    code, rep, err = report(capsys, "certify-cor2", "--chern", "4")
    assert code == 1 and not rep["result"]["certified"] and "refused" in err
    assert call(capsys, "certify-cor2", "--chern", "3")[0] == 2


@pytest.mark.parametrize("k,q,want", [("SU2", "Spin4", "3"), ("U1", "Spin3", "1"), ("SU2", "Spin3", "2"),
                                      ("SU2", "SO2", "Infinite")])
def test_splittings(capsys, k, q, want):
    code, rep, _ = report(capsys, "splittings", "--kernel", k, "--quotient", q)
    assert code == 0 and rep["result"]["count"] == want


def test_invalid_inputs(capsys):
    assert call(capsys, "index", "--label", "bogus")[0] == 2
    assert call(capsys, "nonsense")[0] == 2
    assert call(capsys, "hom-norms", "--n", "11")[0] == 2
    assert call(capsys, "chain-check", "--order", "9")[0] == 2
    assert call(capsys, "ymh", "minimize", "--k", "1", "--grid", "32")[0] == 2
    assert call(capsys, "index")[0] == 2


def test_morrey_norm_file(capsys, tmp_path):
    f = GridFunction.sample(lambda x, y: np.sin(2 * np.pi * x), (16, 16))
    write_grid(f, tmp_path / "f.txt")
    code, rep, _ = report(capsys, "morrey-norm", "--input", str(tmp_path / "f.txt"), "--p", "2", "--d", "1")
    assert code == 0
    assert rep["result"]["lp_norm"] == pytest.approx(np.sqrt(0.5), rel=1e-12)
    assert rep["result"]["morrey_norm"] >= rep["result"]["lp_norm"]
    assert call(capsys, "morrey-norm", "--input", str(tmp_path / "missing.txt"), "--p", "2", "--d", "1")[0] == 2


def test_morrey_checks(capsys):
    code, rep, _ = report(capsys, "morrey-check", "invariance", "--n", "2", "--d", "1", "--resolutions", "16", "32")
    assert code == 0 and rep["result"]["ok"]
    code, rep, _ = report(capsys, "morrey-check", "product", "--draws", "5", "--resolution", "16")
    assert code == 0 and rep["result"]["all_hold"]


def test_hom_norms_and_chain(capsys):
    code, rep, _ = report(capsys, "hom-norms", "--n", "3")
    assert code == 0
    assert rep["result"]["norms"] == {"[3]": "6/1", "[2,1]": "3/2", "[1,1,1]": "0/1"}
    assert rep["result"]["nontrivial"] == 2
    code, rep, _ = report(capsys, "chain-check", "--order", "4")
    assert code == 0 and rep["result"]["all_hold"]


def test_ymh_minimize_with_history(capsys, tmp_path):
    hist = tmp_path / "h.csv"
    code, rep, err = report(capsys, "ymh", "minimize", "--k", "1", "--grid", "64", "--history", str(hist))
    assert code == 0 and rep["result"]["converged"]
    assert hist.read_text().startswith("iteration,energy,grad_norm")


def test_out_file_and_tsv(capsys, tmp_path):
    out = tmp_path / "r.tsv"
    code, stdout, _ = call(capsys, "splittings", "--kernel", "SU2", "--quotient", "Spin4", "--format", "tsv",
                           "--out", str(out))
    assert code == 0 and stdout.strip() == "3"
    assert out.read_text().splitlines()[0].split("\t") == ["kernel", "quotient", "count"]


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "equivym.cli", "index", "--label", "omega"],
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert json.loads(r.stdout)["result"]["index"] == 0
