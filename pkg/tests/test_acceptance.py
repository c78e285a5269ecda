"""Acceptance suite: one test per criterion, each printing a pass line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines and the recorded findings.
"""

from __future__ import annotations

import time

import pytest

from termwiener.bounds import upper_bound_by_diameter
from termwiener.checks import verify_fig1, verify_theorem, check_optimal_structure
from termwiener.counting import labeled_class_codes, unlabeled_tree_count
from termwiener.enumerate_trees import (
    EnumFilter,
    all_trees,
    diameter4_class_count,
    diameter5_class_count,
    extremal_search,
)
from termwiener.families import construct_fig1
from termwiener.fopt import certify_valley, f_max_bruteforce
from termwiener.tree import canonical_code, metrics
from termwiener.tw import tw_edgecut, tw_pairwise

FIG1_VALUES = {1: 582, 2: 1162, 3: 2508, 4: 2592}


@pytest.fixture(scope="module")
def fig1_report():
    return verify_fig1()


def _ok(criterion: int, detail: str) -> None:
    print(f"[acceptance] criterion {criterion}: PASS - {detail}")


def test_criterion_1_reference_values():
    start = time.perf_counter()
    values = {}
    for i in (1, 2, 3, 4):
        t = construct_fig1(i)
        values[i] = (tw_pairwise(t), tw_edgecut(t))
    elapsed = time.perf_counter() - start
    for i, expected in FIG1_VALUES.items():
        assert values[i] == (expected, expected)
    assert elapsed < 1.0
    _ok(1, f"TW(T1..T4) = 582, 1162, 2508, 2592 exactly, in {elapsed:.3f}s")


def test_criterion_2_order23_diameter4_scan():
    start = time.perf_counter()
    result = extremal_search(EnumFilter(n=23, diameter=4), "max")
    elapsed = time.perf_counter() - start
    t1 = construct_fig1(1)
    assert result.value == 582
    assert result.witnesses == frozenset({canonical_code(t1)})
    assert result.count_scanned == diameter4_class_count(23)
    formula = upper_bound_by_diameter(23, 4)
    assert formula.value == 580 < 582 and not formula.asserted_valid
    assert elapsed < 60.0
    _ok(
        2,
        f"complete scan of {result.count_scanned} classes: unique max 582 at T1; "
        f"closed form gives only 580 ({elapsed:.2f}s)",
    )


def test_criterion_3_order30_diameter5_scan(fig1_report):
    row = next(r for r in fig1_report.rows if r["params"].get("clause") == "c")
    assert row["status"] == "pass"
    assert row["observed"] == 1162
    assert fig1_report.counts["d5_scanned"] == diameter5_class_count(30)
    assert fig1_report.wall_time_s < 300.0
    _ok(
        3,
        f"complete scan of {fig1_report.counts['d5_scanned']} classes: max 1162 "
        f"attained by T2 ({fig1_report.wall_time_s:.1f}s for the whole campaign)",
    )


def test_criterion_4_diameter_maximum_census():
    start = time.perf_counter()
    report = verify_theorem("thm-2.5", n_max=14)
    elapsed = time.perf_counter() - start
    assert report.status == "pass" and not report.counterexamples
    boundary_note = next(
        r for r in report.rows if r["params"] == {"n": 14, "d": 4}
    )["note"]
    assert "at the asserted boundary" in boundary_note
    odd_note = next(r for r in report.rows if r["params"] == {"n": 9, "d": 5})["note"]
    assert "2 maximizer(s), want 2" in odd_note
    assert elapsed < 300.0
    _ok(4, f"max census over all n<=14 classes matches the closed form ({elapsed:.1f}s)")


def test_criterion_5_diameter_minimum_census():
    report = verify_theorem("thm-2.3", n_max=14)
    assert report.status == "pass" and not report.counterexamples
    _ok(5, "min census over all n<=14 classes: (n-1)(l0-1), all minimizers starlike of degree l0")


def test_criterion_6_max_degree3_closed_form():
    report = verify_theorem("thm-3.11", n_max=18)
    assert report.status == "pass" and not report.counterexamples
    assert len(report.rows) == 13  # n in 6..18
    spot = {r["params"]["n"]: r["observed"] for r in report.rows}
    assert (spot[8], spot[9], spot[10], spot[11]) == (32, 38, 55, 64)
    _ok(6, "exhaustive max over max-degree-3 trees equals the residue closed form for n=6..18")


def test_criterion_7_oracle_equivalence():
    report = verify_theorem("eq-1-vs-2", n_max=12)
    assert report.status == "pass" and not report.counterexamples
    assert report.counts["trees_scanned"] == sum(unlabeled_tree_count(n) for n in range(2, 13))
    spine = verify_theorem("eq-9", n_max=14)
    assert spine.status == "pass" and not spine.counterexamples
    _ok(
        7,
        f"pairwise = edge-cut on all {report.counts['trees_scanned']} classes through n=12 "
        f"(plus {report.counts['random_scanned']} random trees); spine formula exact on "
        f"{spine.counts['caterpillars_scanned']} caterpillars through n=14",
    )


def test_criterion_8_f_optimizer():
    report = verify_theorem("lem-3.2", n_max=8)
    assert report.status == "pass" and not report.counterexamples

    # recorded findings (kept honest, not smoothed over): the valley shape
    # always covers some optimum, but two literal readings fail on ties and
    # degenerate weights.
    zigzag = f_max_bruteforce((1, 1, 1, 0, 0))
    assert (1, 0, 1, 0, 1) in zigzag.argmax
    assert certify_valley((1, 0, 1, 0, 1)) is None  # a tied optimum with no certificate

    lopsided = f_max_bruteforce((2, 1, 0, 0, 0))
    assert lopsided.argmax == frozenset({(2, 0, 0, 0, 1)})
    cert = certify_valley((2, 0, 0, 0, 1))
    assert cert is not None and not cert.in_stated_window  # crossing lands at t=1

    for row in report.rows:
        if row["params"].get("k", 0) >= 5:
            assert "0 with none certified" in row["note"]
    _ok(
        8,
        "valley search = brute force on every multiset (k<=8, entries<=4) plus 500 "
        "random cases; every nonzero multiset has a certified optimum (findings on "
        "tied/degenerate arrangements recorded in the report)",
    )


def test_criterion_9_enumeration_soundness():
    known = {}
    for n in range(1, 11):
        known[n] = sum(1 for t in all_trees(n))
        assert known[n] == unlabeled_tree_count(n)
    assert known[10] == 106
    for n in range(2, 9):
        assert {canonical_code(t) for t in all_trees(n)} == labeled_class_codes(n)
    for n in range(11, 17):
        codes = [canonical_code(t) for t in all_trees(n)]
        assert len(codes) == len(set(codes)) == unlabeled_tree_count(n)
    _ok(
        9,
        "class counts match the counting recurrence for n<=16 and the labeled "
        "decode oracle for n<=8; no duplicate canonical codes at any n<=16",
    )


def test_criterion_10_structure_findings(fig1_report):
    missing_index = 0
    applicable_instances = 0
    optima_checked = 0
    for n in range(4, 15):
        buckets: dict[int, list] = {3: [], 4: [], 5: []}
        for t in all_trees(n):
            m = metrics(t)
            if m.max_degree in buckets:
                buckets[m.max_degree].append((t, tw_edgecut(t)))
        for delta, entries in buckets.items():
            if not entries:
                continue
            best = max(v for _, v in entries)
            for t, v in entries:
                if v != best:
                    continue
                optima_checked += 1
                report = check_optimal_structure(t, delta)
                assert report.applicable, (n, delta)
                assert report.valley, (n, delta, report.backbone)
                assert report.all_applicable_hold, (n, delta, report.backbone)
                for clause in report.clauses:
                    if clause.applicable:
                        applicable_instances += 1
                    elif "does not exist" in clause.note:
                        missing_index += 1
    # the order-40 reference trees stay family-restricted evidence
    assert fig1_report.status == "partial"
    partial_rows = [r for r in fig1_report.rows if r["status"] == "partial"]
    assert {r["params"]["tree"] for r in partial_rows} == {3, 4}
    assert all("not enumerated" in r["note"] for r in partial_rows)
    _ok(
        10,
        f"all {optima_checked} exhaustive optima (max degree 3..5, n<=14) are valley "
        f"caterpillars and every applicable structure clause holds "
        f"({applicable_instances} applicable at this scale; {missing_index} instance(s) "
        f"fire only toward an absent spine position, recorded as a finding); "
        "order-40 optimality reported as partial with family-restricted evidence",
    )
