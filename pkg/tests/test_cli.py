import json
import os
import subprocess
import sys
import time
from pathlib import Path

import pytest

from lawmeas.cli import EXIT_FAIL, EXIT_INPUT, EXIT_OK, RunConfig, dispatch, main

GOLDEN = Path(__file__).parent / "golden"
REGEN = os.environ.get("LAWMEAS_REGEN_GOLDEN") == "1"

CASES = [
    ("theory_check_z4_sub", ["theory", "check", "group.theory", "z4_sub.json"], EXIT_FAIL),
    ("theory_check_z4_sub_json", ["theory", "check", "group.theory", "z4_sub.json", "--json"], EXIT_FAIL),
    ("theory_check_z3", ["theory", "check", "Group", "z3_group.json"], EXIT_OK),
    ("theory_check_bad_arity", ["theory", "check", "bad_arity.theory", "z3_group.json"], EXIT_INPUT),
    ("borel_chain3", ["borel", "chain3.json"], EXIT_OK),
    ("borel_chain3_json", ["borel", "chain3.json", "--json"], EXIT_OK),
    ("borel_not_a_topology", ["borel", "not_a_topology.json", "--json"], EXIT_FAIL),
    ("borel_malformed", ["borel", "malformed.json"], EXIT_INPUT),
    ("borel_bad_label", ["borel", "bad_label.json"], EXIT_INPUT),
    ("borel_missing", ["borel", "nowhere.json"], EXIT_INPUT),
    ("meas_ring", ["meas", "verify", "indiscrete_ab.json", "z2_ring_discrete.json", "Ring"], EXIT_OK),
    ("meas_ring_json", ["meas", "verify", "indiscrete_ab.json", "z2_ring_discrete.json", "Ring", "--json"], EXIT_OK),
    (
        "meas_sierpinski_json",
        ["meas", "verify", "generated_abc.json", "z2_group_sierpinski.json", "group.theory", "--json"],
        EXIT_FAIL,
    ),
    ("meas_sierpinski", ["meas", "verify", "generated_abc.json", "z2_group_sierpinski.json", "Group"], EXIT_FAIL),
    ("meas_unknown_theory", ["meas", "verify", "indiscrete_ab.json", "z2_ring_discrete.json", "Field"], EXIT_INPUT),
    ("meas_missing_ops", ["meas", "verify", "indiscrete_ab.json", "z2_group_sierpinski.json", "Ring"], EXIT_INPUT),
    ("suite_too_large", ["suite", "--max-carrier", "5"], EXIT_INPUT),
    ("cocountable", ["cocountable", "demo"], EXIT_OK),
    ("cocountable_json", ["cocountable", "demo", "--json"], EXIT_OK),
]


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def check_golden(name, text):
    path = GOLDEN / f"{name}.out"
    if REGEN:
        path.write_text(text, encoding="utf-8")
    assert text == path.read_text(encoding="utf-8")


@pytest.fixture
def in_golden(monkeypatch):
    monkeypatch.chdir(GOLDEN)


@pytest.mark.parametrize("name, argv, expected", CASES, ids=[c[0] for c in CASES])
def test_golden(name, argv, expected, capsys, in_golden):
    code, out, err = run(argv, capsys)
    assert code == expected
    check_golden(name, out + err)


@pytest.mark.parametrize("name, argv, expected", CASES, ids=[c[0] for c in CASES])
def test_reports_are_deterministic(name, argv, expected, capsys, in_golden):
    first = run(argv, capsys)
    second = run(argv, capsys)
    assert first == second


def test_z4_sub_witness(capsys, in_golden):
    code, out, _ = run(["theory", "check", "group.theory", "z4_sub.json", "--json"], capsys)
    assert code == EXIT_FAIL
    doc = json.loads(out)
    assert doc["schema"] == "1" and doc["pass"] is False
    assoc = next(f for f in doc["failures"] if f["equation"] == "eq3")
    assert assoc["env"] == ["0", "0", "1"]


def test_meas_schema(capsys, in_golden):
    _, out, _ = run(["meas", "verify", "indiscrete_ab.json", "z2_ring_discrete.json", "Ring", "--json"], capsys)
    doc = json.loads(out)
    assert doc["schema"] == "1"
    assert doc["closure"] and doc["equations"] and doc["product_preservation"]
    assert doc["function_count"] == 2
    assert doc["failures"] == []


def test_suite_small_carrier_is_fast_and_stable(capsys):
    start = time.perf_counter()
    code, out, _ = run(["suite", "--max-carrier", "2", "--json"], capsys)
    elapsed = time.perf_counter() - start
    assert code == EXIT_OK
    assert elapsed < 5
    doc = json.loads(out)
    assert doc["pass"] and len(doc["criteria"]) == 8
    check_golden("suite_max2_json", out)
    assert run(["suite", "--max-carrier", "2", "--json"], capsys)[1] == out


def test_suite_text_has_one_line_per_criterion(capsys):
    code, out, _ = run(["suite", "--max-carrier", "3"], capsys)
    assert code == EXIT_OK
    lines = out.splitlines()
    assert sum(line.startswith("[PASS]") for line in lines) == 8
    assert lines[-1] == "8/8 criteria passed"


def test_argument_errors_exit_two(capsys):
    assert run(["borel"], capsys)[0] == EXIT_INPUT
    assert run(["frobnicate"], capsys)[0] == EXIT_INPUT
    assert run(["--help"], capsys)[0] == EXIT_OK


def test_dispatch_validates_before_work(tmp_path):
    out, err = _Buf(), _Buf()
    cfg = RunConfig("borel", [str(tmp_path / "absent.json")])
    assert dispatch(cfg, out, err) == EXIT_INPUT
    assert out.text == "" and "no such file" in err.text
    assert dispatch(RunConfig("launch"), out, err) == EXIT_INPUT


def test_cap_env_var_must_be_integer(capsys, monkeypatch):
    monkeypatch.setenv("LAWMEAS_CAP", "many")
    assert run(["cocountable", "demo"], capsys)[0] == EXIT_INPUT


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "lawmeas", "borel", "chain3.json", "--json"],
        cwd=GOLDEN,
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == EXIT_OK
    assert proc.stdout == (GOLDEN / "borel_chain3_json.out").read_text(encoding="utf-8")


class _Buf:
    def __init__(self):
        self.text = ""

    def write(self, s):
        self.text += s
