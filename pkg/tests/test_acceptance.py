"""The acceptance gate: one test per exit criterion.

Each test prints a PASS/FAIL line (visible with -s) and enforces the
stated runtime budget where one exists.
"""

import json
import os
import subprocess
import sys
import time

import pytest

from schurhr import acceptance

SEED = int(os.environ.get("SCHURHR_SEED", acceptance.DEFAULT_SEED))

BUDGETS = {1: 1.0, 2: 5.0, 3: 60.0, 11: 300.0}

_FN = dict(acceptance.CRITERIA)


def _run(cid):
    t0 = time.perf_counter()
    record = _FN[cid](SEED, workers=1)
    elapsed = time.perf_counter() - t0
    status = "PASS" if record["ok"] else "FAIL"
    print(f"criterion {cid:2d} [{record['name']}]: {status} "
          f"({record['checks']} checks, {elapsed:.2f}s)")
    for f in record["failures"][:5]:
        print(f"    {f}")
    budget = BUDGETS.get(cid)
    if budget is not None:
        assert elapsed < budget, f"criterion {cid} took {elapsed:.1f}s (budget {budget}s)"
    assert record["ok"], record["failures"][:5]


def test_criterion_01_convex_mix_form():
    _run(1)


def test_criterion_02_low_degree_closed_forms():
    _run(2)


def test_criterion_03_determinant_vs_tableaux():
    _run(3)


def test_criterion_04_box_dual_reversal():
    _run(4)


def test_criterion_05_twist_rule():
    _run(5)


def test_criterion_06_characteristic_number_positivity():
    _run(6)


def test_criterion_07_hodge_riemann_predicates():
    _run(7)


def test_criterion_08_log_concave_sequences():
    _run(8)


def test_criterion_09_index_inequalities():
    _run(9)


def test_criterion_10_polya_suite():
    _run(10)


def test_criterion_11_lorentzian_certification():
    _run(11)


def test_criterion_12_verify_is_byte_deterministic(tmp_path):
    cmd = [sys.executable, "-m", "schurhr", "verify", "--seed", str(SEED),
           "--workers", "2"]
    t0 = time.perf_counter()
    first = subprocess.run(cmd, capture_output=True, timeout=900)
    second = subprocess.run(cmd, capture_output=True, timeout=900)
    elapsed = time.perf_counter() - t0
    assert first.returncode == 0, first.stderr.decode()[:500]
    assert second.returncode == 0
    status = "PASS" if first.stdout == second.stdout else "FAIL"
    print(f"criterion 12 [verify-determinism]: {status} "
          f"(two full runs, {elapsed:.2f}s)")
    assert first.stdout == second.stdout
    report = json.loads(first.stdout)
    assert report["ok"] is True
    assert [c["id"] for c in report["criteria"]] == list(range(1, 12))
