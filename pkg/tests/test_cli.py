import json
import os
import subprocess
import sys

import pytest

from cspkit.cli import main, parse_range, UsageError


def run(args, stdin="", env=None):
    e = dict(os.environ)
    e.update(env or {})
    return subprocess.run(
        [sys.executable, "-m", "cspkit", *args], input=stdin, capture_output=True, text=True, env=e
    )


def test_poly_prints_polynomial(capsys):
    assert main(["poly", "CAT", "--n", "3"]) == 0
    assert capsys.readouterr().out.strip() == "1 + q^2 + q^3 + q^4 + q^6"


def test_poly_hexagon_ears(capsys):
    assert main(["poly", "TRI_EAR", "--n", "6", "--k", "2", "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["schema"] == 1
    assert sum(int(c) for c in out["coeffs"]) == 12


def test_enumerate_streams_objects(capsys):
    assert main(["enumerate", "NCM", "--n", "3"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 5
    assert json.loads(lines[0])["tag"] == "Matching"


def test_stat(capsys):
    assert main(["stat", "MAJ", "DYCK", "--n", "3"]) == 0
    assert capsys.readouterr().out.strip() == "1 + q^2 + q^3 + q^4 + q^6"


def test_biject_reads_stdin():
    r = run(["biject", "SYT_TO_NCM"], stdin='{"tag": "TwoRowSYT", "data": [1, 2]}')
    assert r.returncode == 0
    assert json.loads(r.stdout) == {"tag": "Matching", "data": [4, 3, 2, 1]}
    back = run(["biject", "SYT_TO_NCM", "--inverse"], stdin=r.stdout)
    assert json.loads(back.stdout) == {"tag": "TwoRowSYT", "data": [1, 2]}


def test_biject_bad_stdin():
    assert run(["biject", "SYT_TO_NCM"], stdin="not json").returncode == 2
    assert run(["biject", "BW_TO_NCM_SYM"], stdin='{"tag": "BinaryWord", "data": [0, 1]}').returncode == 2


def test_orbits(capsys):
    assert main(["orbits", "ROT", "NCC_K", "--n", "4", "--k", "2", "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["orbits"] == {"3": 2} and out["order"] == 3


def test_orbits_flags_non_dividing_order(capsys):
    assert main(["orbits", "K_PROMOTION", "SSYT_SKEW", "--n", "4", "--k", "2", "--s", "1"]) == 1
    assert "order 12 of declared 4" in capsys.readouterr().out


def test_verify_json():
    r = run(["verify", "T14", "--n-range", "2..8", "--format", "json"])
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["schema"] == 1 and out["pass"]
    assert [x["params"]["n"] for x in out["results"]] == list(range(2, 9))
    assert "metadata" not in out


def test_verify_text_and_csv(tmp_path):
    target = tmp_path / "out.csv"
    assert main(["verify", "T4", "--n-range", "1..4", "--format", "csv", "--output", str(target)]) == 0
    rows = target.read_text().splitlines()
    assert rows[0] == "triple,params,d,order,fixed,eval,ok"
    assert rows[1] == "T4,(n=1),1,2,1,1,1"


def test_verify_filters_parameters(capsys):
    assert main(["verify", "T6", "--n-range", "3..5", "--k", "2", "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert {r["params"]["k"] for r in out["results"]} == {2}


def test_verify_all_small(capsys):
    assert main(["verify-all", "--max-n", "3"]) == 0
    assert capsys.readouterr().out.splitlines()[-1].endswith("passed")


def test_mismatch_exit_codes():
    assert main(["verify", "NC_TWIST_B", "--n-range", "2..2"]) == 1
    assert main(["verify", "NC_TWIST_B", "--n-range", "2..2", "--no-strict"]) == 0


@pytest.mark.parametrize("argv", [
    ["verify", "T99", "--n-range", "1..2"],
    ["verify", "T4", "--n-range", "x"],
    ["verify", "T4", "--n-range", "5..2"],
    ["poly", "NOPE", "--n", "2"],
    ["enumerate", "TRI", "--n", "2"],
])
def test_usage_errors(argv):
    assert main(argv) == 2


def test_argparse_errors_exit_2():
    assert run(["verify"]).returncode == 2
    assert run(["frobnicate"]).returncode == 2


def test_output_is_deterministic_across_worker_counts():
    args = ["verify-all", "--max-n", "4", "--format", "json"]
    one = run(args, env={"CSPKIT_THREADS": "1"})
    four = run(args, env={"CSPKIT_THREADS": "4"})
    assert one.returncode == four.returncode == 0
    assert one.stdout == four.stdout


def test_timings_live_in_metadata():
    r = run(["verify", "T4", "--n-range", "1..3", "--format", "json", "--timings"])
    out = json.loads(r.stdout)
    assert set(out["metadata"]) == {"millis", "threads"}
    assert all("millis" not in x for x in out["results"])


def test_parse_range():
    assert parse_range("2..8") == (2, 8)
    assert parse_range("5") == (5, 5)
    with pytest.raises(UsageError):
        parse_range("a..b")
