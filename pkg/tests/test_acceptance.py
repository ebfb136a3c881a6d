"""Exit criteria, one test per criterion, each at its stated bound."""

import os
import time
from pathlib import Path

import pytest

from conftest import ACCEPTANCE_LINES
from fbwords import harness, kernels

GOLDEN = Path(__file__).parent / "golden" / "census_18.txt"
N = 18


def record(number, title, ok, detail=""):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {number}. {title}" + (f" ({detail})" if detail else ""))
    print(ACCEPTANCE_LINES[-1])


@pytest.fixture(scope="module")
def scans():
    return harness.scan_upto(N)


@pytest.fixture(scope="module")
def pairs(scans):
    return harness.fb_pairs_from_scans(scans)


@pytest.fixture(scope="module")
def lemma_reports(pairs):
    return {r.suite: r for r in harness.verify_lemma_suites(N, word_bound=14, pairs=pairs)}


def test_criterion_1_main_theorem():
    start = time.perf_counter()
    report = harness.verify_theorem_main(N)
    elapsed = time.perf_counter() - start
    ok = report.passed and report.items_checked == sum(1 << n for n in range(2, N + 1)) and elapsed < 120
    record(1, "main theorem equivalence, all words 2..18", ok,
           f"{report.items_checked} words, {report.failure_count} mismatches, {elapsed:.1f}s")
    assert report.passed, report.failures
    assert elapsed < 120


def test_criterion_2_palindromes(pairs):
    report = harness.verify_palindrome_theorem(N, pairs=pairs)
    record(2, "u and v palindromes, split at |u|", report.passed,
           f"{report.items_checked} pairs, {report.failure_count} failures")
    assert report.passed, report.failures
    assert report.items_checked == len(pairs) > 0


def test_criterion_3_descent(pairs):
    report = harness.verify_descent(N, pairs=pairs)
    cases = report.stats["cases"]
    ok = report.passed and report.stats["traces_replayed"] == len(pairs)
    record(3, "descent soundness and trace replay to 18", ok,
           f"cases {cases}, {report.stats['traces_replayed']} traces, {report.failure_count} failures")
    assert ok, report.failures
    assert cases["shrink-u"] > 0 and cases["shrink-v"] > 0


@pytest.mark.parametrize(
    "suite",
    ["lyndon-unbordered", "lyndon-prefix-root", "lyndon-extension", "unique-cyclic-occurrence", "two-unbordered-conjugates"],
)
def test_criterion_4_word_lemmas(lemma_reports, suite):
    report = lemma_reports[suite]
    record(4, f"{suite} to n=14", report.passed and report.bound == 14,
           f"{report.items_checked} checks, {report.failure_count} failures")
    assert report.bound == 14
    assert report.items_checked > 0
    assert report.passed, report.failures


@pytest.mark.parametrize("suite", ["f-properties", "pair-lyndon", "root-lyndon", "shortened-root-stable"])
def test_criterion_5_pair_lemmas(lemma_reports, suite):
    report = lemma_reports[suite]
    record(5, f"{suite} to 18", report.passed and report.bound == N,
           f"{report.items_checked} checks, {report.failure_count} failures")
    assert report.bound == N
    assert report.items_checked > 0
    assert report.passed, report.failures


def test_criterion_6_oracle_equivalence(lemma_reports):
    report = lemma_reports["oracle-equivalence"]
    expected_items = sum(1 << n for n in range(1, 13)) + 10_000
    ok = report.passed and report.items_checked == expected_items and report.stats["random_max_length"] == 64
    record(6, "failure-function and kernel vs naive oracles", ok,
           f"{report.items_checked} words, {report.failure_count} disagreements, backend={kernels.BACKEND}")
    assert ok, report.failures


def test_criterion_7_census_regression():
    rows = harness.census_table(N)
    bad = [(r.n, v) for r in rows for v in r.violations()]
    text = harness.format_census(rows)
    anchors = rows[0].fb_words == 2 and rows[1].fb_words == 6
    ok = not bad and anchors and text.encode() == GOLDEN.read_bytes()
    record(7, "census to 18: invariants, anchors, golden replay", ok, f"{len(rows)} rows")
    assert not bad
    assert anchors
    assert text.encode() == GOLDEN.read_bytes()


def test_criterion_8_thread_determinism():
    serial = harness.reports_to_json([harness.verify_theorem_main(N, threads=1)])
    workers = max(os.cpu_count() or 1, 8)
    parallel = harness.reports_to_json([harness.verify_theorem_main(N, threads=workers)])
    record(8, "criterion 1 identical with 1 and max threads", serial == parallel, f"1 vs {workers} threads")
    assert serial == parallel
