import json
import os
import subprocess
import sys

import pytest
import sympy as sp

from mstruct.cli import RunConfig, ConfigError, main
from mstruct.linalg import FieldMatrix
from conftest import SYMBOLS, matrix_to_sympy

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def read(path):
    with open(path, "rb") as fh:
        return fh.read()


@pytest.mark.parametrize("args,golden", [
    (["build", "--family", "A", "--k", "2", "--t", "sym"], "build_A_k2.json"),
    (["build", "--family", "E6"], "build_E6.json"),
])
def test_build_matches_golden(tmp_path, capsys, args, golden):
    code, _, _ = run(args + ["--out", str(tmp_path)], capsys)
    assert code == 0
    (produced,) = list(tmp_path.iterdir())
    assert read(produced) == read(os.path.join(GOLDEN, golden))


def test_golden_rank_two_generators_are_orthogonal_idempotents():
    data = json.loads(read(os.path.join(GOLDEN, "build_A_k2.json")))
    assert data["dim"] == 2
    e = [matrix_to_sympy(FieldMatrix.from_json(data["generators"][f"e[{i}]"])) for i in (1, 2)]
    for i in range(2):
        for j in range(2):
            want = e[i] if i == j else sp.zeros(2, 2)
            assert (e[i] * e[j] - want).applyfunc(sp.simplify) == sp.zeros(2, 2)


def test_golden_e6_has_dimension_twelve():
    data = json.loads(read(os.path.join(GOLDEN, "build_E6.json")))
    assert data["dim"] == 12 and len(data["basis"]) == 12
    # 1 + 1 + 1 + 9 tail matrix units, 3 * 4 head matrix units
    assert len(data["tail_generators"]) == 12 and len(data["head_generators"]) == 12


def test_degenerate_build_exits_with_message(capsys):
    code, out, err = run(["build", "--family", "A", "--k", "2", "--t", "1"], capsys)
    assert code == 2
    assert "degenerate parameter: 1 - t^k = 0" in err


@pytest.mark.parametrize("args", [
    ["build", "--family", "E6", "--k", "3"],
    ["build", "--family", "A"],
    ["build", "--family", "B", "--k", "2"],
    ["verify", "--family", "A", "--k", "2"],
    ["verify", "--family", "A", "--k", "2", "--suite", "nope"],
    ["build", "--family", "A", "--k", "2", "--t", "1/"],
    [],
])
def test_configuration_errors_exit_2(capsys, args):
    assert run(args, capsys)[0] == 2


def test_config_file_rejects_unknown_fields(tmp_path, capsys):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"command": "build", "family": "A", "k": 2, "colour": "red"}))
    code, _, err = run(["--config", str(cfg)], capsys)
    assert code == 2 and "unknown config fields" in err


def test_config_file_runs(tmp_path, capsys):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"command": "verify", "family": "A", "k": 2, "suites": ["dynkin"]}))
    code, out, _ = run(["--config", str(cfg)], capsys)
    assert code == 0 and json.loads(out)["status"] == "pass"


def test_thread_variable_validated(capsys, monkeypatch):
    monkeypatch.setenv("MSTRUCT_THREADS", "zero")
    assert run(["examples", "sect2_example"], capsys)[0] == 2
    monkeypatch.setenv("MSTRUCT_THREADS", "2")
    assert run(["examples", "sect2_example"], capsys)[0] == 0


def test_verify_all_symbolic(capsys):
    code, out, _ = run(["verify", "--family", "A", "--k", "3", "--suite", "all", "--mode", "symbolic"], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["status"] == "pass"
    assert [s["suite"] for s in rep["suites"]] == ["relations", "pencil", "r_identity", "inverse", "ybe_assoc",
                                                   "ybe_lie", "quiver", "dynkin"]


def test_verify_dynkin_star(capsys):
    code, out, _ = run(["verify", "--family", "D_even", "--k", "2", "--suite", "dynkin"], capsys)
    rep = json.loads(out)["suites"][0]["report"]
    assert code == 0
    assert sorted(v["mark"] for v in rep["diagram"]["vertices"]) == [1, 1, 1, 1, 2]
    assert rep["adm"]["status"] == "pass"


def test_verify_failure_exits_1(capsys):
    code, out, _ = run(["verify", "--family", "D_even", "--k", "2", "--suite", "inverse", "--mode", "symbolic"],
                       capsys)
    rep = json.loads(out)
    assert code == 1
    printed = rep["suites"][0]["report"]["printed"]
    assert printed["status"] == "fail" and "residual" in printed


def test_example2(capsys):
    code, out, _ = run(["examples", "example2", "--p", "2"], capsys)
    assert code == 0 and json.loads(out)["status"] == "pass"


def test_sect2_example(capsys):
    code, out, _ = run(["examples", "sect2_example", "--dim", "2", "--seed", "4"], capsys)
    assert code == 0


def test_example1_reports_each_relation(capsys):
    code, out, _ = run(["examples", "example1", "--dim", "2", "--seed", "3"], capsys)
    rep = json.loads(out)
    status = {r["id"]: r["status"] for r in rep["relations"]}
    assert status == {"ee": "pass", "ff": "pass", "ef_printed": "fail", "fe": "pass"}
    assert all(c["status"] == "pass" for c in rep["checks"])
    assert code == 1


def test_reports_are_byte_identical(tmp_path, capsys):
    args = ["verify", "--family", "D_odd", "--k", "3", "--suite", "ybe_assoc", "--suite", "relations",
            "--points", "2", "--seed", "9"]
    a, b = tmp_path / "a", tmp_path / "b"
    assert run(args + ["--out", str(a)], capsys)[0] == 0
    assert run(args + ["--out", str(b)], capsys)[0] == 0
    (fa,), (fb,) = list(a.iterdir()), list(b.iterdir())
    assert fa.name == fb.name and read(fa) == read(fb)


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "mstruct", "verify", "--family", "A", "--k", "2",
                           "--suite", "dynkin", "--out", str(tmp_path)], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "dynkin: pass" in proc.stdout


def test_run_config_from_json_requires_command():
    with pytest.raises(ConfigError):
        RunConfig.from_json({"family": "A"})
