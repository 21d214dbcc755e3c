import json
import subprocess
import sys

import pytest

from rookmonoid.cli import main
from rookmonoid.diagrams import monoid_order


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv)
    return code, json.loads(out)


def test_enumerate_counts(capsys):
    code, data = run_json(capsys, "enumerate", "--n", "2")
    assert code == 0
    assert data["count"] == monoid_order(2) == 7
    assert [1, 2] in data["diagrams"]
    assert [0, 0] in data["diagrams"]


def test_enumerate_rank_class(capsys):
    code, data = run_json(capsys, "enumerate", "--n", "3", "--rank-class", "1")
    assert code == 0
    assert data["count"] == 18


def test_mul(capsys):
    code, data = run_json(capsys, "mul", "--diagram", "2,1", "--diagram", "0,2")
    assert code == 0
    assert data["product"] == [2, 0]


def test_mul_needs_two_diagrams(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["mul", "--diagram", "2,1"])
    assert exc.value.code == 2


def test_factorize_roundtrip(capsys):
    code, data = run_json(capsys, "factorize", "--diagram", "2,0")
    assert code == 0
    assert data["diagram"] == [2, 0]
    assert data["d1"] == [2, 1]
    assert data["d2"] == [1, 2]
    assert data["r"] == 1
    assert data["sigma"] == [1, 2]


def test_sign(capsys):
    code, data = run_json(capsys, "sign", "--diagram", "0,0")
    assert code == 0
    assert data["sign"] == 1
    code, data = run_json(capsys, "sign", "--diagram", "0,2")
    assert data["sign"] == -1


def test_symmetrizer_output(capsys):
    code, data = run_json(capsys, "symmetrizer", "--n", "2", "--kind", "anti")
    assert code == 0
    coeffs = {tuple(t["diagram"]): t["coeff"] for t in data["terms"]}
    assert coeffs[(1, 2)] == "1"
    assert coeffs[(2, 1)] == "-1"
    assert len(coeffs) == 6


def test_e_element_empty_shape(capsys):
    code, data = run_json(capsys, "e-element", "--n", "2", "--lambda", "empty")
    assert code == 0
    coeffs = {tuple(t["diagram"]): t["coeff"] for t in data["terms"]}
    assert coeffs == {(0, 0): "1"}


def test_specht_dims_json_and_csv(capsys):
    code, data = run_json(capsys, "specht-dims", "--n", "3")
    assert code == 0
    table = {tuple(row["shape"]): row["dimension"] for row in data["dimensions"]}
    assert table[(2, 1)] == 2
    assert table[(1,)] == 3
    assert data["sum_of_squares"] == data["monoid_order"] == monoid_order(3) == 34

    code, out = run_cli(capsys, "specht-dims", "--n", "3", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "shape,boxes,dimension"
    # one row per shape plus the two summary rows
    assert len(lines) == 1 + len(table) + 2
    assert lines[-1] == "monoid_order,,34"


def test_verify_presentation_exit_zero(capsys):
    code, data = run_json(capsys, "verify-presentation", "--n", "3")
    assert code == 0
    assert data["pass"] is True


def test_verify_schur_weyl_narrow(capsys):
    code, data = run_json(capsys, "verify-schur-weyl", "--n", "2", "--m", "1")
    assert code == 0
    assert data["pass"] is True
    assert data["check"] == "verify-schur-weyl"
    assert data["params"]["mode"] == "annihilator"


def test_verify_schur_weyl_wide(capsys):
    code, data = run_json(capsys, "verify-schur-weyl", "--n", "2", "--m", "2")
    assert code == 0
    assert data["params"]["mode"] == "faithful"


def test_verify_blocks(capsys):
    code, data = run_json(capsys, "verify-blocks", "--n", "2")
    assert code == 0
    assert data["pass"] is True


def test_verify_lemma_commands(capsys):
    code, data = run_json(capsys, "verify-lemma-3-10", "--n", "2")
    assert code == 0 and data["pass"] is True
    code, data = run_json(capsys, "verify-lemma-4-4", "--n", "2", "--m", "1")
    assert code == 0 and data["pass"] is True


def test_verify_all_small(capsys):
    code, data = run_json(capsys, "verify-all", "--n", "2", "--m", "1")
    assert code == 0
    assert data["pass"] is True
    assert data["check"] == "verify-all"
    assert data["assertions"]
    assert all(a["pass"] for a in data["assertions"])
    names = [a["name"] for a in data["assertions"]]
    assert len(names) == len(set(names))
    assert any(name.startswith("schur-weyl") or "annihilator" in name for name in names)


def test_cap_exit_code(capsys):
    code = main(["verify-schur-weyl", "--n", "99", "--m", "1"])
    capsys.readouterr()
    assert code == 3


def test_cap_message_on_stderr(capsys):
    code = main(["enumerate", "--n", "12"])
    captured = capsys.readouterr()
    assert code == 3
    assert "refusing" in captured.err
    assert captured.out == ""


def test_usage_error_bad_diagram(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["sign", "--diagram", "5,1"])
    assert exc.value.code == 2


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code = main(["sign", "--diagram", "1,2", "--out", str(target)])
    capsys.readouterr()
    assert code == 0
    data = json.loads(target.read_text())
    assert data["sign"] == 1


def test_output_is_deterministic(capsys):
    _, first = run_cli(capsys, "verify-blocks", "--n", "2")
    _, second = run_cli(capsys, "verify-blocks", "--n", "2")
    assert first == second


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "rookmonoid", "enumerate", "--n", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["count"] == 2


def test_failing_report_exits_one():
    from rookmonoid.cli import _report_exit

    class Args:
        format = "json"
        out = None

    failing = {"check": "x", "params": {}, "pass": False, "assertions": []}
    assert _report_exit(failing, Args()) == 1
