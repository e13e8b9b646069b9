"""Acceptance gate: every criterion at full size, exact, within its time budget.

Each test prints one PASS/FAIL line straight to the terminal.
"""

import time

import pytest

from hlf.props import ACCEPTANCE_COUNTS, default_config, run_suite, suite_size

CONFIG = default_config()

CRITERIA = [
    (1, "gauge-sup equivalence", "gauge_sup", 9 * 1000, 30),
    (2, "classification duality", "classification_duality", 9 * 500, 30),
    (3, "polar involution", "polar_involution", 500, 20),
    (4, "bicontinuity identity", "bicontinuity", 500, 30),
    (5, "duality round trip", "duality_roundtrip", 500, 10),
    (6, "ultrametric and membership bridges", "ultrametric_membership", 2000, 20),
    (7, "bounded multiplication", "bounded_multiplication", 300, 30),
    (8, "convergence of partial sums", "convergence", 100, 10),
    (9, "classifier-oracle consistency", "oracle_consistency", None, 60),
]


def test_config_matches_stated_sizes():
    assert CONFIG.window == 25 and CONFIG.sample_window == 15
    assert len(CONFIG.shapes) == 9
    for name, count in ACCEPTANCE_COUNTS.items():
        assert CONFIG.count(name) == count


@pytest.mark.parametrize("number,title,suite,cases,budget", CRITERIA, ids=[c[2] for c in CRITERIA])
def test_criterion(number, title, suite, cases, budget, capsys):
    if cases is not None:
        assert suite_size(CONFIG, suite) == cases
    start = time.perf_counter()
    result = run_suite(CONFIG, suite)
    elapsed = time.perf_counter() - start
    ok = result.ok and elapsed < budget and result.cases > 0
    line = (f"criterion {number} ({title}): {'PASS' if ok else 'FAIL'} "
            f"{result.passed}/{result.cases} cases in {elapsed:.1f}s (budget {budget}s)")
    if result.first_failure is not None:
        line += f"; first failure: case {result.first_failure[0]}: {result.first_failure[1]}"
    with capsys.disabled():
        print("\n" + line)
    assert result.ok, line
    assert elapsed < budget, line
