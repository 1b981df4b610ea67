"""Acceptance suite: the full desk-scale verification program.

One test per criterion, each at its pinned size, printing a pass/fail line.
The heavy sweeps here are the point of the harness; the whole module runs in
a few minutes.
"""

import time

from lrcommute.golden import run_golden
from lrcommute.verify import (check_coincidence, check_confluence,
                              check_involution, check_knuth_commutativity,
                              check_lr_oracle, check_recursion,
                              check_route_geometry, check_skew_rsk)


def _report(rep, max_seconds=None):
    print(rep.line())
    assert rep.instances > 0
    assert rep.passed, rep.failures[:5]
    if max_seconds is not None:
        assert rep.seconds < max_seconds, (
            f"{rep.name} took {rep.seconds:.1f}s, target {max_seconds}s")


def test_criterion_1_golden_examples():
    t0 = time.time()
    results = run_golden()
    elapsed = time.time() - t0
    for res in results:
        print(res.line())
        assert res.passed, res.messages
    print(f"golden total                  time={elapsed:.2f}s")
    assert len(results) == 7
    assert elapsed < 1.0


def test_criterion_2_involution():
    _report(check_involution(max_size=8), max_seconds=120)


def test_criterion_3_commutor_coincidence():
    _report(check_coincidence(max_size=8))


def test_criterion_4_strategy_confluence():
    _report(check_confluence(max_size=8))


def test_criterion_5_knuth_commutativity():
    _report(check_knuth_commutativity(max_size=7, word_len=5))


def test_criterion_6_skew_rsk_bijection():
    _report(check_skew_rsk(max_size=6))


def test_criterion_7_route_geometry():
    _report(check_route_geometry(max_size=7, word_len=5))


def test_criterion_8_lr_rule_vs_polynomial_oracle():
    _report(check_lr_oracle(max_size=8), max_seconds=300)


def test_criterion_9_recursion_structure():
    _report(check_recursion(max_size=8))
