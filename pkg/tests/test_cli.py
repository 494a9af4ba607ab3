"""End-to-end command line checks (subprocess level)."""

import json
import subprocess
import sys

import pytest

CLI = [sys.executable, "-m", "schurhr"]


def run(*args, **kw):
    return subprocess.run(
        CLI + list(args), capture_output=True, text=True, timeout=600, **kw
    )


@pytest.fixture()
def config(tmp_path):
    cfg = {
        "space": {"factors": [2, 3]},
        "bundles": {
            "E": {"lines": [[1, 0], [1, 0], [0, 1]], "twist": ["0", "0"]},
        },
        "partitions": {"col3": [1, 1, 1]},
        "seed": 42,
    }
    path = tmp_path / "config.json"
    path.write_text(json.dumps(cfg))
    return str(path)


def test_schur_prints_the_polynomial():
    r = run("schur", "--lambda", "1,1", "--vars", "2")
    assert r.returncode == 0
    assert r.stdout.strip() == "x1^2 + x1*x2 + x2^2"


def test_schur_elementary_basis():
    r = run("schur", "--lambda", "1,1,1", "--vars", "3", "--basis", "c")
    assert r.returncode == 0
    assert r.stdout.strip() == "c1^3 - 2*c1*c2 + c3"


def test_form_reproduces_the_counterexample_matrix(config):
    r = run(
        "form", "--config", config, "--bundle", "E",
        "--term", "3/4:3", "--term", "1/4:1,1,1",
    )
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert payload["matrix"] == [["1/4", "1/2"], ["1/2", "3/2"]]
    assert payload["inertia"] == {"n_plus": 2, "n_minus": 0, "n_zero": 0}
    assert payload["is_hr"] is False
    assert payload["is_weak_hr"] is False


def test_class_subcommand(config):
    r = run("class", "--config", config, "--bundle", "E", "--lambda", "col3")
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert payload["rendered"] == "3*t1^2*t2 + 2*t1*t2^2 + t2^3"


def test_chern_subcommand_inline_bundle():
    r = run(
        "chern", "--space", "2,3", "--lines", "1,0;1,0;0,1", "--twist", "0,0",
        "-p", "1",
    )
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert payload["rendered"] == "2*t1 + t2"
    assert payload["twist_rule_agrees"] is True


def test_kt_subcommand_json_and_csv(tmp_path):
    args = [
        "kt", "--space", "2", "--lines", "1;1", "--bundle2-lines", "1;1",
        "--lambda", "1,1", "--mu", "1,1",
    ]
    r = run(*args)
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert payload["sequence"]["values"] == ["9", "36", "9"]
    assert payload["log_concave"] is True
    r = run(*args, "--format", "csv")
    assert r.returncode == 0
    assert r.stdout.splitlines() == ["i,value", "0,9", "1,36", "2,9"]


def test_seq_subcommand():
    r = run("seq", "--lambda", "1,1", "--point", "1,1")
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert payload["sequence"]["values"] == ["3", "6", "3"]


def test_polya_subcommand():
    r = run("polya", "--mus", "1,2,1")
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert payload["minors_nonneg"] and payload["real_rooted"]
    r = run("polya", "--mus", "1,0,1")
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert payload["routes_agree"] and not payload["real_rooted"]


def test_hr_scan(config):
    r = run(
        "hr-scan", "--config", config, "--bundle", "E", "--lambda", "col3",
        "--t-values", "1/10,1/4,1",
    )
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert all(rec["is_hr"] for rec in payload["scan"])


def test_lorentzian_subcommand():
    r = run("lorentzian", "--lambda", "1,1", "--vars", "2", "--mode", "strict")
    assert r.returncode == 0
    assert json.loads(r.stdout)["ok"] is False
    r = run("lorentzian", "--lambda", "1,1", "--vars", "2", "--mode", "perturbed")
    assert r.returncode == 0
    assert json.loads(r.stdout)["ok"] is True


def test_lorentzian_expect_pass_exit_code():
    r = run(
        "lorentzian", "--lambda", "1,1", "--vars", "2", "--mode", "strict",
        "--expect-pass",
    )
    assert r.returncode == 2


def test_bridge_subcommands():
    r = run("bridge", "--mode", "lemma", "--lambda", "1,1", "--vars", "2",
            "--alpha", "0,0", "--eprime", "2")
    assert r.returncode == 0
    assert json.loads(r.stdout)["ok"] is True
    r = run("bridge", "--mode", "intersection", "--lambda", "1,1", "--vars", "2",
            "--n", "2", "--alpha", "0,0", "--epsilon", "1/100")
    assert r.returncode == 0
    assert json.loads(r.stdout)["ok"] is True


def test_paper_examples_flag():
    r = run("--paper-examples")
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert payload["ok"] is True
    assert payload["convex_mix"][1]["matrix"] == [["1/4", "1/2"], ["1/2", "3/2"]]


def test_usage_error_exit_code():
    r = run("schur", "--lambda", "1,1")  # missing --vars
    assert r.returncode == 1
    r = run("form", "--config", "/nonexistent.json", "--bundle", "E", "--lambda", "3")
    assert r.returncode == 1


def test_malformed_config_diagnostics(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{\n  \"space\": [2,\n}")
    r = run("form", "--config", str(bad), "--bundle", "E", "--lambda", "3")
    assert r.returncode == 1
    assert "line" in r.stderr


def test_verify_subset():
    r = run("verify", "--seed", "7", "--criteria", "1,2,4", "--workers", "1")
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert payload["ok"] is True
    assert [c["id"] for c in payload["criteria"]] == [1, 2, 4]
