import json
import subprocess
import sys

import pytest

from ginfan.cli import main
from ginfan.family import family_ideal
from ginfan.poly import IdealSpec, Poly, ideal_to_json


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def report(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


@pytest.fixture
def xy_file(tmp_path):
    I = IdealSpec(tuple(Poly.monomial((3 - a, a, 0)) for a in range(4)))
    p = tmp_path / "xy3.json"
    p.write_text(json.dumps(ideal_to_json(I)))
    return str(p)


def test_verify_vertices(capsys):
    code, rep = report(capsys, "verify-vertices", "--dmax", "12")
    assert code == 0 and rep["verdict"] == "pass"
    assert rep["command"] == "verify-vertices" and rep["params"]["dmax"] == 12
    assert rep["results"]["failed"] == 0
    assert {(c["d"], c["n"]) for c in rep["results"]["cases"]} == \
        {(d, n) for d in range(3, 13) for n in range(d) if 3 * n < d}


def test_verify_vertices_usage(capsys):
    code, out, err = run(capsys, "verify-vertices", "--dmax", "2")
    assert code == 2 and out == "" and "at least 3" in err


def test_verify_appendix_reports_failures(capsys):
    code, rep = report(capsys, "verify-appendix", "--dmax", "5")
    assert code == 1 and rep["verdict"] == "fail"
    res = rep["results"]
    assert [4, 2] in res["det_B_zero"] and [3, 1] not in res["det_B_zero"]
    assert res["det_E_not_unimodular"] == []
    row = next(c for c in res["cases"] if (c["d"], c["n"]) == (3, 1))
    assert row["det_B"] == 3 and row["det_E"] == -1
    assert "1/4" in row["factors"]


def test_family_bound(capsys):
    code, rep = report(capsys, "family-bound", "--d", "4", "--samples", "3")
    res = rep["results"]
    assert code == 0
    assert res["count"] >= res["bound"] == 2 and res["agreement"]
    assert res["omega_distinct"] and res["omega_strict"]
    assert all(sum(v["m"]) == 20 for v in res["vertices"])
    assert "total_s" in rep["timings"]


def test_fan_with_brute(capsys, tmp_path):
    p = tmp_path / "i3.json"
    p.write_text(json.dumps(ideal_to_json(family_ideal(3))))
    code, rep = report(capsys, "fan", "--ideal", str(p), "--brute", "--samples", "2")
    assert code == 0
    assert rep["results"]["brute"]["equal"]
    assert rep["results"]["degree"] == 3


def test_fan_brute_limit(capsys, xy_file):
    code, rep = report(capsys, "fan", "--ideal", xy_file, "--brute", "--limit", "5")
    assert code == 0 and "skipped" in rep["results"]["brute"]


def test_fan_bad_inputs(capsys, tmp_path, xy_file):
    assert run(capsys, "fan", "--ideal", str(tmp_path / "none.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"generators": []}')
    assert run(capsys, "fan", "--ideal", str(bad))[0] == 2
    bad.write_text("not json")
    assert run(capsys, "fan", "--ideal", str(bad))[0] == 2
    assert run(capsys, "fan", "--ideal", xy_file, "--degree", "2")[0] == 2


def test_refine(capsys, xy_file):
    code, rep = report(capsys, "refine", "--ideal", xy_file, "--degrees", "3..4",
                       "--samples", "2")
    assert code == 0
    assert rep["results"]["cumulative"] == [3, 3]
    assert rep["params"]["degrees"] == "3..4"


@pytest.mark.parametrize("bad", ["4..3", "3-5", "x..4"])
def test_refine_bad_range(capsys, xy_file, bad):
    assert run(capsys, "refine", "--ideal", xy_file, "--degrees", bad)[0] == 2


def test_random_q(capsys):
    code, rep = report(capsys, "random-q", "--d", "4", "--trials", "2", "--samples", "2")
    assert code == 0 and rep["results"]["pass_rate"] == "2/2"


def test_random_q_degenerate(capsys):
    code, rep = report(capsys, "random-q", "--d", "4", "--trials", "2", "--degenerate")
    assert code == 0
    assert rep["results"]["dimension_failures"] == 2


def test_reports_are_deterministic(capsys):
    _, a = report(capsys, "family-bound", "--d", "5", "--seed", "3", "--samples", "2")
    _, b = report(capsys, "family-bound", "--d", "5", "--seed", "3", "--samples", "2")
    assert a["results"] == b["results"]


def test_csv_and_quiet(capsys):
    code, out, _ = run(capsys, "verify-vertices", "--dmax", "4", "--format", "csv")
    lines = out.strip().splitlines()
    assert lines[0] == "d,n,passed,boundary" and len(lines) == 4
    code, out, _ = run(capsys, "verify-vertices", "--dmax", "4", "--quiet")
    assert out.strip() == "pass"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ginfan", "verify-vertices", "--dmax", "5",
                           "--quiet"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "pass"


def test_missing_subcommand(capsys):
    assert run(capsys)[0] == 2
