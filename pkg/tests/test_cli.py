"""The ud4table command-line interface, run in-process."""

import json

import pytest

from ud4table.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_classes(capsys):
    code, doc = run(capsys, "classes", "--p", "2", "--a", "1")
    assert code == 0 and doc["ok"]
    assert doc["count"] == 103
    assert doc["classes"][0]["family"] == "C^{p=2}_{1,2,3,4}"
    assert sum(c["class_size"] for c in doc["classes"]) == 4096


def test_eval(capsys):
    code, doc = run(capsys, "eval", "--p", "2", "--a", "2",
                    "--char", "F11[a11=1,b5=0,b6=2,b7=0,b3=1]",
                    "--elem", "x3(1)*x8(2)")
    assert code == 0 and doc["ok"]
    assert doc["value_coeffs"] == [-4]
    assert abs(doc["value_float"][0] + 4) < 1e-12


def test_verify_counts(capsys):
    code, doc = run(capsys, "verify", "--p", "3", "--a", "1",
                    "--checks", "counts")
    assert code == 0 and doc["ok"]
    assert doc["checks"][0]["check"] == "counts"
    assert doc["checks"][0]["classes_equation_ok"]


def test_verify_orthogonality_sampled(capsys):
    code, doc = run(capsys, "verify", "--p", "3", "--a", "1",
                    "--checks", "orthogonality", "--mode", "sampled",
                    "--samples", "40")
    assert code == 0 and doc["ok"]
    assert doc["checks"][0]["mode"] == "sampled"


def test_verify_oracle_q2(capsys):
    code, doc = run(capsys, "verify", "--p", "2", "--a", "1",
                    "--checks", "oracle")
    assert code == 0 and doc["ok"]
    oc = doc["checks"][0]
    assert oc["classes"]["oracle_classes"] == 103
    assert oc["constructions"]["ok"]


def test_verify_oracle_refused_large(capsys):
    code, doc = run(capsys, "verify", "--p", "5", "--a", "1",
                    "--checks", "oracle")
    assert code == 1 and not doc["ok"]
    assert "q <= 3" in doc["checks"][0]["error"]


def test_verify_unknown_check(capsys):
    code, doc = run(capsys, "verify", "--p", "2", "--a", "1",
                    "--checks", "counts,nonsense")
    assert code == 1 and not doc["ok"]
    assert "unknown checks" in doc["error"]


def test_build_to_file(capsys, tmp_path):
    out = tmp_path / "table.json"
    code, doc = run(capsys, "build", "--p", "2", "--a", "1",
                    "--format", "json", "--out", str(out))
    assert code == 0 and doc["ok"]
    data = json.loads(out.read_text())
    assert data["meta"]["q"] == 2
    assert len(data["rows"]) == 103


def test_build_stdout_csv(capsys):
    code = main(["build", "--p", "2", "--a", "1", "--format", "csv"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith("label,degree")


def test_poly_flag(capsys):
    # pin the defining polynomial of F_4 explicitly
    code, doc = run(capsys, "verify", "--p", "2", "--a", "2",
                    "--poly", "1,1,1", "--checks", "counts")
    assert code == 0 and doc["poly"] == [1, 1, 1]


def test_config_file(capsys, tmp_path):
    # pin the non-default irreducible x^3 + x^2 + 1 for F_8
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"polys": {"2,3": [1, 0, 1, 1]}}))
    code, doc = run(capsys, "verify", "--p", "2", "--a", "3",
                    "--config", str(cfg), "--checks", "counts")
    assert code == 0 and doc["poly"] == [1, 0, 1, 1]


def test_bad_label_exit_2(capsys):
    code, doc = run(capsys, "eval", "--p", "2", "--a", "1",
                    "--char", "F11[a11=0,b5=0,b6=0,b7=0,b3=0]",
                    "--elem", "1")
    assert code == 2 and not doc["ok"]
    assert "unit" in doc["error"]


def test_bad_field_exit_2(capsys):
    code, doc = run(capsys, "classes", "--p", "6", "--a", "1")
    assert code == 2 and not doc["ok"]
