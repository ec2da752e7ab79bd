import json
import subprocess
import sys

import numpy as np
import pytest

from skewbrace.catalog import NAMED_EXAMPLES, named_example, pq_family
from skewbrace.census import enumerate_braces
from skewbrace.cli import cli_main
from skewbrace.grouplib import group_by_name
from skewbrace.io import (brace_from_json, brace_to_json, dumps, group_from_json, group_to_json,
                          read_json, report_from_json, report_to_json, solution_from_json,
                          solution_to_json, write_json)
from skewbrace.isomorphism import brace_isomorphism
from skewbrace.ybe import solution_of

SPECS = ["pq:C p=5 q=2", "pq:E2 p=7 q=3", "p2:4 p=3", "triv:S3", "optriv:S3",
         "onevertex:J i=2 d=1", "onevertex:H i=1 d=3", "onevertex:K8d d=1 h=(0,1)", "onevertex:D2d d=5"]


def braces_for_round_trip():
    out = [named_example(k) for k in NAMED_EXAMPLES]
    out += pq_family(7, 3)
    from skewbrace.catalog import build
    out += [build(s) for s in SPECS]
    return out


def test_brace_round_trip():
    for A in braces_for_round_trip():
        B = brace_from_json(json.loads(dumps(brace_to_json(A))))
        assert np.array_equal(A.add.op, B.add.op) and np.array_equal(A.circ.op, B.circ.op)
        assert B.name == A.name


def test_group_and_solution_round_trip():
    G = group_by_name("D8")
    assert group_from_json(group_to_json(G)).same_table(G)
    S = solution_of(named_example("z12_cyclic"))
    T = solution_from_json(json.loads(dumps(solution_to_json(S))))
    assert np.array_equal(S.lam, T.lam) and np.array_equal(S.rho, T.rho)
    with pytest.raises(ValueError):
        solution_from_json({"n": 3, "lambda": [[0]], "rho": [[0]]})


def test_report_round_trip(tmp_path):
    r = enumerate_braces(6)
    path = write_json(tmp_path / "r.json", report_to_json(r))
    back = report_from_json(read_json(path))
    assert len(back) == 6
    for A, B in zip(r.braces, back.braces):
        assert brace_isomorphism(A, B) is not None
    with pytest.raises(ValueError):
        report_from_json(report_to_json(r, tables=False))


def test_declared_order_mismatch():
    data = brace_to_json(named_example("klein"))
    data["n"] = 5
    with pytest.raises(ValueError):
        brace_from_json(data)


def run(argv, capsys):
    code = cli_main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_build_and_analyze(capsys, tmp_path):
    code, out, _ = run(["build", "pq:F", "p=5", "q=2"], capsys)
    assert code == 0 and json.loads(out)["n"] == 10
    code, out, _ = run(["analyze", "pq:F", "p=5", "q=2", "--format", "json"], capsys)
    info = json.loads(out)
    assert code == 0
    assert sorted(info["lambda_graph"]["components"]) == [1, 2]
    code, out, _ = run(["analyze", "example:z12_cyclic", "--emit-json", str(tmp_path),
                        "--emit-dot", str(tmp_path)], capsys)
    assert code == 0 and "K3" in out
    dot = (tmp_path / "z12_cyclic_theta.dot").read_text()
    assert dot.count("[label=") == 3 and dot.count(" -- ") == 3
    data = read_json(tmp_path / "z12_cyclic.json")
    assert brace_from_json(data).n == 12


def test_cli_analyze_reads_json_files(capsys, tmp_path):
    path = write_json(tmp_path / "b.json", brace_to_json(named_example("optriv_S3")))
    code, out, _ = run(["analyze", str(path)], capsys)
    assert code == 0 and "• •" in out


def test_cli_dot_output(capsys):
    code, out, _ = run(["analyze", "example:z12_cyclic", "--format", "dot"], capsys)
    assert code == 0 and out.count("graph ") == 2


def test_cli_census_and_solution(capsys, tmp_path):
    code, out, _ = run(["census", "6", "--emit-json", str(tmp_path)], capsys)
    assert code == 0 and out.startswith("order 6: 6 skew braces")
    assert len(report_from_json(read_json(tmp_path / "census_6.json"))) == 6
    code, out, _ = run(["solution", "example:z4_radical"], capsys)
    assert code == 0 and json.loads(out)["ybe"] is True


def test_cli_exit_codes(capsys, tmp_path):
    assert run(["census", "13"], capsys)[0] == 2
    assert run(["census", "8", "--max-nodes", "3"], capsys)[0] == 1
    assert run(["analyze", "pq:Z", "p=5", "q=2"], capsys)[0] == 2
    assert run(["analyze", str(tmp_path / "missing.json")], capsys)[0] == 2
    (tmp_path / "bad.json").write_text("{}")
    assert run(["analyze", str(tmp_path / "bad.json")], capsys)[0] == 2
    assert run(["verify"], capsys)[0] == 2
    assert run(["verify", "no-such-suite"], capsys)[0] == 2
    assert run(["frobnicate"], capsys)[0] == 2
    assert run(["verify", "--list"], capsys)[0] == 0


def test_cli_verify_is_deterministic(capsys):
    code1, out1, _ = run(["verify", "order6-table", "--json"], capsys)
    code2, out2, _ = run(["verify", "order6-table", "--json"], capsys)
    assert code1 == code2 == 0 and out1 == out2
    assert json.loads(out1)[0]["passed"] is True


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "skewbrace", "analyze", "example:klein"],
                          capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0 and "klein" in proc.stdout


def test_cli_analyze_beyond_the_group_library(capsys):
    code, out, _ = run(["analyze", "onevertex:K8d", "d=3", "h=(1,1)", "--format", "json"], capsys)
    info = json.loads(out)
    assert code == 0 and info["n"] == 24
    assert info["lambda_graph"]["vertices"] == 1
