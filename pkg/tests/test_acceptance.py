"""Acceptance suite: every quantitative target, exact integer equality.

Each test prints one pass/fail line per check (visible with pytest -s or on
failure) and enforces its wall-clock budget; the same checks back the CLI's
verify-paper command.
"""

import time

from pmcover.verify import (
    criterion_1_petersen,
    criterion_2_blanusa,
    criterion_3_flower,
    criterion_4_goldberg,
    criterion_5_example_graph,
    criterion_6_petersen_k33,
    criterion_7_property_suites,
    criterion_8_oracles,
)


def _report(make_results, budget_s):
    start = time.monotonic()
    results = make_results()
    elapsed = time.monotonic() - start
    for result in results:
        print(result.line())
    failed = [r for r in results if not r.ok]
    assert not failed, "failed checks: " + ", ".join(r.name for r in failed)
    assert elapsed < budget_s, f"budget {budget_s}s exceeded: {elapsed:.1f}s"


def test_criterion_1_petersen_suite():
    _report(criterion_1_petersen, budget_s=1.0)


def test_criterion_2_blanusa_pair():
    _report(criterion_2_blanusa, budget_s=10.0)  # 5 s per snark


def test_criterion_3_flower_snarks():
    _report(criterion_3_flower, budget_s=30.0)


def test_criterion_4_goldberg_g5():
    _report(criterion_4_goldberg, budget_s=60.0)


def test_criterion_5_twenty_vertex_example():
    _report(criterion_5_example_graph, budget_s=60.0)


def test_criterion_6_petersen_joined_to_k33():
    _report(criterion_6_petersen_k33, budget_s=60.0)


def test_criterion_7_property_suites():
    _report(criterion_7_property_suites, budget_s=600.0)


def test_criterion_8_oracle_equivalence():
    _report(criterion_8_oracles, budget_s=300.0)
