"""Acceptance gate: one test per criterion, each printing a verdict line.

Criterion 8 carries two sub-assertions that measurement shows cannot
pass (see the README and the failure messages below); they are kept at
original strength and fail honestly rather than being loosened.
"""

from functools import lru_cache

import pytest

from tournhom.suites import ExperimentConfig, RunReport, run_suite

CONFIG = ExperimentConfig(seed=0)


@lru_cache(maxsize=None)
def _report(suite: str) -> RunReport:
    return run_suite(suite, CONFIG)


def _verdict(criterion: str, items) -> str:
    ok = all(i.passed for i in items)
    lines = [f"[criterion {criterion}] {'PASS' if ok else 'FAIL'}"]
    for item in items:
        mark = "ok" if item.passed else "FAIL"
        lines.append(f"  [{mark}] {item.id}: {item.name}" + (f" ({item.details})" if item.details else ""))
    return "\n".join(lines)


def _assert_items(criterion: str, items):
    text = _verdict(criterion, items)
    print(text)
    assert all(i.passed for i in items), text


def test_criterion_1_oracle_equivalence():
    report = _report("core")
    items = [i for i in report.items if i.id.startswith("core.oracle")]
    assert len(items) == 2
    _assert_items("1", items)


def test_criterion_2_multiplicativity():
    report = _report("core")
    items = [i for i in report.items if i.id == "core.multiplicativity"]
    assert len(items) == 1
    _assert_items("2", items)


def test_criterion_3_trace_and_spectral_identity():
    _assert_items("3", _report("spectral").items)


def test_criterion_4_claim_suite():
    report = _report("claims")
    assert report.params["k"] == [29, 27]
    _assert_items("4", report.items)


def test_criterion_5_graphon_structure():
    _assert_items("5", _report("graphon").items)


def test_criterion_6_region_containment():
    _assert_items("6", _report("region").items)


def test_criterion_7_reduction_identity():
    _assert_items("7", _report("reduction").items)


def test_criterion_8_convergence_trend():
    """Two sub-assertions fail honestly; see the README.

    The pinned final bound 3(n q^8 + n q^12) omits the fourth-power
    spectral tail, which dominates the deviation at every measured size,
    and the pinned cross-check pairs a 6272-vertex host (beyond the
    intended scale) with a toy gadget whose block pattern is measurably
    false.  The trend assertions and the full-gadget cross-check pass.
    """
    _assert_items("8", _report("converge").items)
