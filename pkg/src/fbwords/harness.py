"""Exhaustive verification suites, census tables and the golden census file.

Bulk work over all words of a length is split into shards by a fixed-length
prefix of the word.  Shards are independent and their results are merged in
shard order, so every report is the same for any number of threads.
"""

from __future__ import annotations

import itertools
import json
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterator, Optional

import numpy as np

from fbwords import kernels
from fbwords.fully_bordered import (
    DescentCase,
    census,
    derive_trace,
    descend,
    fb_pair_of,
    generate_f,
    is_fb_pair,
)
from fbwords.words import (
    Order,
    WordError,
    borders,
    conjugate_at,
    cyclic_occurrences,
    is_lyndon,
    is_palindrome,
    is_primitive,
    is_unbordered,
    lyndon_conjugate,
    period,
    periodic_root,
    reverse,
    root_decomposition,
    two_palindrome_splits,
)

MAX_FAILURES_SHOWN = 10
WORD_SUITE_BOUND = 14
PAIR_SUITE_BOUND = 18
CENSUS_BOUND = 22
SHARD_PREFIX_BITS = 4


# -- oracles ---------------------------------------------------------------


def enumerate_words(n: int) -> Iterator[str]:
    """All ``2**n`` words of length ``n`` in increasing order (0 < 1)."""
    if n < 1:
        raise WordError("word length must be positive")
    return ("".join(letters) for letters in itertools.product("01", repeat=n))


def naive_borders(w: str) -> list[str]:
    if not w:
        raise WordError("operation requires a nonempty word")
    return [w[:i] for i in range(1, len(w)) if w[:i] == w[len(w) - i :]]


def naive_is_unbordered(w: str) -> bool:
    """Quadratic scan of every proper prefix against the suffix of equal length."""
    if not w:
        raise WordError("operation requires a nonempty word")
    return not any(w[:i] == w[len(w) - i :] for i in range(1, len(w)))


def naive_period(w: str) -> int:
    n = len(w)
    return next(p for p in range(1, n + 1) if all(w[i] == w[i + p] for i in range(n - p)))


def naive_unbordered_points(w: str) -> list[int]:
    return [m for m in range(len(w)) if naive_is_unbordered(w[m:] + w[:m])]


# -- reports ---------------------------------------------------------------


@dataclass
class VerificationReport:
    suite: str
    bound: int
    items_checked: int = 0
    failures: list = field(default_factory=list)
    failure_count: int = 0
    stats: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def check(self, ok: bool, counterexample) -> None:
        self.items_checked += 1
        if not ok:
            self.fail(counterexample)

    def fail(self, counterexample) -> None:
        self.failure_count += 1
        if len(self.failures) < MAX_FAILURES_SHOWN:
            self.failures.append(counterexample)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d


def reports_to_json(reports: list[VerificationReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], sort_keys=True)


# -- sharded scans ---------------------------------------------------------


def _resolve_threads(threads: Optional[int]) -> int:
    return threads if threads and threads > 0 else (os.cpu_count() or 1)


def _shards(n: int) -> list[tuple[int, int]]:
    bits = min(n, SHARD_PREFIX_BITS)
    width = 1 << (n - bits)
    return [(i * width, (i + 1) * width) for i in range(1 << bits)]


def _scan_shard(n: int, lo: int, hi: int) -> tuple[np.ndarray, np.ndarray]:
    counts = kernels.unbordered_counts(n, lo, hi)
    hist = np.bincount(counts, minlength=n + 1)
    fb = lo + np.flatnonzero(counts == 2) if n > 1 else np.zeros(0, dtype=np.int64)
    return hist, fb


@dataclass(frozen=True)
class LengthScan:
    n: int
    histogram: dict
    fb_words: tuple  # fully bordered words of length n, increasing


def scan_length(n: int, threads: Optional[int] = None) -> LengthScan:
    """Unbordered-conjugate histogram and fully bordered words of length ``n``."""
    shards = _shards(n)
    workers = _resolve_threads(threads)
    if workers == 1:
        results = [_scan_shard(n, lo, hi) for lo, hi in shards]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda s: _scan_shard(n, *s), shards))
    hist = sum(r[0] for r in results)
    fb = [kernels.int_to_word(int(x), n) for r in results for x in r[1]]
    return LengthScan(n, {k: int(c) for k, c in enumerate(hist) if c}, tuple(fb))


def scan_upto(max_n: int, threads: Optional[int] = None) -> list[LengthScan]:
    return [scan_length(n, threads) for n in range(2, max_n + 1)]


def fb_pairs_from_scans(scans: list[LengthScan]) -> list[tuple[str, str]]:
    """All fully bordered pairs, ordered by (|uv|, uv, u)."""
    pairs = set()
    for scan in scans:
        for w in scan.fb_words:
            pairs.add(tuple(fb_pair_of(w)))
    return sorted(pairs, key=lambda p: (len(p[0]) + len(p[1]), p[0] + p[1], p[0]))


def fb_pairs_upto(max_n: int, threads: Optional[int] = None) -> list[tuple[str, str]]:
    return fb_pairs_from_scans(scan_upto(max_n, threads))


# -- census table ----------------------------------------------------------


@dataclass(frozen=True)
class CensusRow:
    n: int
    fb_words: int
    fb_classes: int
    f_pairs: int
    unbordered_histogram: dict

    def violations(self) -> list[str]:
        out = []
        if self.fb_words != self.unbordered_histogram.get(2, 0):
            out.append("fb_words != histogram[2]")
        if self.fb_words != self.n * self.fb_classes:
            out.append("fb_words != n * fb_classes")
        if self.f_pairs != 2 * self.fb_classes:
            out.append("f_pairs != 2 * fb_classes")
        return out

    def to_line(self) -> str:
        hist = ",".join(f"{k}:{v}" for k, v in sorted(self.unbordered_histogram.items()))
        return f"{self.n} {self.fb_words} {self.fb_classes} {self.f_pairs} {hist}"


def _is_min_rotation(w: str) -> bool:
    return all(w <= w[m:] + w[:m] for m in range(1, len(w)))


def census_table(max_n: int, threads: Optional[int] = None) -> list[CensusRow]:
    """One row per length ``2..max_n``, from full enumeration."""
    if not 2 <= max_n <= CENSUS_BOUND:
        raise WordError(f"census bound must be in 2..{CENSUS_BOUND}")
    generated = generate_f(max_n)
    pairs_by_length = {}
    for u, v in generated:
        pairs_by_length[len(u) + len(v)] = pairs_by_length.get(len(u) + len(v), 0) + 1
    rows = []
    for scan in scan_upto(max_n, threads):
        rows.append(
            CensusRow(
                n=scan.n,
                fb_words=len(scan.fb_words),
                fb_classes=sum(1 for w in scan.fb_words if _is_min_rotation(w)),
                f_pairs=pairs_by_length.get(scan.n, 0),
                unbordered_histogram=scan.histogram,
            )
        )
    return rows


def format_census(rows: list[CensusRow]) -> str:
    return "".join(row.to_line() + "\n" for row in sorted(rows, key=lambda r: r.n))


def parse_census(text: str) -> list[CensusRow]:
    rows = []
    for line in text.splitlines():
        if not line.strip():
            continue
        n, fb, classes, pairs, hist = line.split()
        rows.append(
            CensusRow(
                int(n),
                int(fb),
                int(classes),
                int(pairs),
                {int(k): int(c) for k, c in (item.split(":") for item in hist.split(","))},
            )
        )
    return rows


# -- suites ----------------------------------------------------------------


def verify_theorem_main(max_n: int = PAIR_SUITE_BOUND, threads: Optional[int] = None) -> VerificationReport:
    """Census-certified fully bordered pairs coincide with the generated family F."""
    if max_n < 2:
        raise WordError("bound must be at least 2")
    report = VerificationReport("main", max_n)
    generated = generate_f(max_n)
    scans = scan_upto(max_n, threads)
    lyndon_words = set()
    for scan in scans:
        report.items_checked += 1 << scan.n
        for w in scan.fb_words:
            pair = fb_pair_of(w)
            if tuple(pair) not in generated:
                report.fail({"word": w, "pair": list(pair), "problem": "fully bordered pair not generated"})
            lyndon_words.add(lyndon_conjugate(w, Order.ZERO_FIRST))
            lyndon_words.add(lyndon_conjugate(w, Order.ONE_FIRST))
    for u, v in generated:
        if not is_fb_pair(u, v):
            report.fail({"pair": [u, v], "problem": "generated pair is not fully bordered"})
    generated_words = {u + v for u, v in generated}
    for w in sorted(generated_words ^ lyndon_words):
        report.fail({"word": w, "problem": "uv set differs from the Lyndon conjugates of fully bordered words"})
    report.stats = {
        "fb_words": sum(len(s.fb_words) for s in scans),
        "generated_pairs": len(generated),
    }
    return report


def conjugate_palindrome_splits(scans: list[LengthScan]) -> dict:
    """How many fully bordered words (any conjugate) are a product of two palindromes.

    Only the unbordered conjugates are claimed to split; this is a measurement.
    """
    total = splittable = 0
    for scan in scans:
        for w in scan.fb_words:
            total += 1
            splittable += bool(two_palindrome_splits(w))
    return {"fb_words": total, "two_palindrome_products": splittable}


def verify_palindrome_theorem(
    max_n: int = PAIR_SUITE_BOUND, threads: Optional[int] = None, pairs=None, scans=None
) -> VerificationReport:
    report = VerificationReport("palindromes", max_n)
    if pairs is None:
        scans = scan_upto(max_n, threads) if scans is None else scans
        pairs = fb_pairs_from_scans(scans)
    for u, v in pairs:
        ok = is_palindrome(u) and is_palindrome(v) and len(u) in two_palindrome_splits(u + v)
        report.check(ok, {"pair": [u, v]})
    if scans is not None:
        report.stats = {"all_conjugates": conjugate_palindrome_splits(scans)}
    return report


def verify_descent(
    max_n: int = PAIR_SUITE_BOUND, threads: Optional[int] = None, pairs=None
) -> VerificationReport:
    """Descent soundness on every oriented pair, and trace replay on every pair."""
    report = VerificationReport("descent", max_n)
    counts = {case.value: 0 for case in DescentCase}
    replayed = 0
    for u, v in pairs if pairs is not None else fb_pairs_upto(max_n, threads):
        trace = derive_trace(u, v)
        replayed += 1
        report.check(trace.replay() == (u, v), {"pair": [u, v], "problem": "trace replay", "trace": str(trace)})
        if len(u) + len(v) <= 2 or len(v) > len(u):
            continue
        try:
            res = descend(u, v)
        except WordError as exc:
            report.fail({"pair": [u, v], "problem": str(exc)})
            continue
        counts[res.case.value] += 1
        nu, nv = res.next
        ok = len(nu) + len(nv) < len(u) + len(v) and is_fb_pair(nu, nv)
        report.check(ok, {"pair": [u, v], "next": [nu, nv], "case": res.case.value})
    report.stats = {"cases": counts, "traces_replayed": replayed}
    return report


def _words_upto(max_n: int) -> Iterator[str]:
    for n in range(1, max_n + 1):
        yield from enumerate_words(n)


def _suite_lyndon_unbordered(max_n: int) -> VerificationReport:
    report = VerificationReport("lyndon-unbordered", max_n)
    for w in _words_upto(max_n):
        for o in Order:
            if is_lyndon(w, o):
                report.check(not borders(w), {"word": w, "order": o.value})
    return report


def _suite_lyndon_prefix_root(lyndon: list) -> tuple[str, list]:
    failures = []
    for w, o in lyndon:
        for i in range(1, len(w) + 1):
            z = periodic_root(w[:i])
            if not is_lyndon(z, o):
                failures.append({"word": w, "order": o.value, "prefix": w[:i], "root": z})
    return "lyndon-prefix-root", failures


def _suite_lyndon_extension(lyndon: list) -> tuple[str, list, int]:
    failures = []
    checked = 0
    for w, o in lyndon:
        # in letter-swapped terms: a prefix z^k z' a with z' b a prefix of z, a the larger letter
        small, large = ("0", "1") if o is Order.ZERO_FIRST else ("1", "0")
        for i in range(2, len(w) + 1):
            x = w[:i]
            if x[-1] != large:
                continue
            y = x[:-1]
            p = period(y)
            z = y[:p]
            z1 = y[(len(y) // p) * p :]
            if not z.startswith(z1 + small):
                continue
            checked += 1
            if not is_lyndon(x, o):
                failures.append({"word": w, "order": o.value, "prefix": x})
    return "lyndon-extension", failures, checked


def verify_lemma_suites(
    max_n: int = PAIR_SUITE_BOUND,
    word_bound: Optional[int] = None,
    threads: Optional[int] = None,
    pairs=None,
) -> list[VerificationReport]:
    """Every lemma-level suite.

    Suites over all words run to ``word_bound`` (default ``min(max_n, 14)``);
    suites over fully bordered pairs and members of F run to ``max_n``.
    """
    wb = min(max_n, WORD_SUITE_BOUND) if word_bound is None else word_bound
    reports = [_suite_lyndon_unbordered(wb)]

    lyndon = [(w, o) for w in _words_upto(wb) for o in Order if is_lyndon(w, o)]
    name, failures = _suite_lyndon_prefix_root(lyndon)
    reports.append(_collect(name, wb, sum(len(w) for w, _ in lyndon), failures))
    name, failures, checked = _suite_lyndon_extension(lyndon)
    reports.append(_collect(name, wb, checked, failures))

    report = VerificationReport("unique-cyclic-occurrence", wb)
    for w, o in lyndon:
        for m in range(1, len(w)):
            u, v = w[:m], w[m:]
            if is_lyndon(v + u, o.other):
                report.check(cyclic_occurrences(u, w) == [0], {"u": u, "v": v})
    reports.append(report)

    report = VerificationReport("two-unbordered-conjugates", wb)
    for w in _words_upto(wb):
        if "0" in w and "1" in w and is_primitive(w):
            ok = (
                len(census(w).unbordered_points) >= 2
                and is_unbordered(lyndon_conjugate(w, Order.ZERO_FIRST))
                and is_unbordered(lyndon_conjugate(w, Order.ONE_FIRST))
            )
            report.check(ok, {"word": w})
    reports.append(report)

    scans = scan_upto(max_n, threads)
    if pairs is None:
        pairs = fb_pairs_from_scans(scans)
    reports.append(_suite_conjugation_invariance(min(max_n, 16)))
    reports.append(_suite_fb_lyndon_conjugates(scans))
    reports.extend(_suites_pair_roots(pairs, max_n))
    reports.append(_suite_f_properties(max_n))
    reports.append(verify_oracles())
    return reports


def _collect(name, bound, checked, failures) -> VerificationReport:
    report = VerificationReport(name, bound, items_checked=checked)
    for f in failures:
        report.fail(f)
    return report


def _suite_conjugation_invariance(max_n: int) -> VerificationReport:
    report = VerificationReport("conjugation-invariance", max_n)
    for n in range(2, max_n + 1):
        counts = kernels.unbordered_counts(n, 0, 1 << n)
        fb = counts == 2
        x = np.arange(1 << n, dtype=np.int64)
        full = (1 << n) - 1
        for m in range(1, n):
            rot = ((x << m) | (x >> (n - m))) & full
            for bad in np.flatnonzero(fb != fb[rot])[:MAX_FAILURES_SHOWN]:
                report.fail({"word": kernels.int_to_word(int(bad), n), "point": m})
            report.items_checked += 1 << n
    return report


def _suite_fb_lyndon_conjugates(scans: list[LengthScan]) -> VerificationReport:
    report = VerificationReport("fb-unbordered-are-lyndon", scans[-1].n if scans else 0)
    for scan in scans:
        for w in scan.fb_words:
            unb = {conjugate_at(w, m) for m in census(w).unbordered_points}
            lyn = {lyndon_conjugate(w, Order.ZERO_FIRST), lyndon_conjugate(w, Order.ONE_FIRST)}
            report.check(unb == lyn, {"word": w})
    return report


def _lyndon_orders(w: str) -> list[Order]:
    return [o for o in Order if is_lyndon(w, o)]


def _suites_pair_roots(pairs, max_n: int) -> list[VerificationReport]:
    b = VerificationReport("pair-lyndon", max_n)
    c = VerificationReport("root-lyndon", max_n)
    d = VerificationReport("shortened-root-stable", max_n)
    for u, v in pairs:
        words = [u + v, v + u, reverse(u) + reverse(v), reverse(v) + reverse(u)]
        b.check(all(len(_lyndon_orders(x)) == 1 for x in words), {"pair": [u, v]})

        dec = root_decomposition(u)
        orders = _lyndon_orders(u + v)
        ok = len(orders) == 1
        if ok:
            o = orders[0]
            ok = is_lyndon(dec.s + dec.t, o) and is_lyndon(reverse(dec.t + dec.s), o)
        c.check(ok, {"pair": [u, v]})

        if dec.k > 1:
            u1 = (dec.s + dec.t) * (dec.k - 1) + dec.s
            dec1 = root_decomposition(u1)
            d.check(dec1.s == dec.s and dec1.t == dec.t, {"pair": [u, v], "u'": u1})
    return [b, c, d]


def _suite_f_properties(max_n: int) -> VerificationReport:
    report = VerificationReport("f-properties", max_n)
    for u, v in generate_f(max_n):
        du, dv = root_decomposition(u), root_decomposition(v)
        problems = []
        if not (is_unbordered(u + v) and is_unbordered(v + u)):
            problems.append("A")
        if not (v.startswith(du.t) and v.endswith(du.t)):
            problems.append("B")
        if not all(is_fb_pair(y, v) for y in borders(u) if len(y) > len(dv.t)):
            problems.append("C")
        if du.t == "" and len(du.s) != 1 or du.t != "" and not is_fb_pair(du.s, du.t):
            problems.append("D")
        report.check(not problems, {"pair": [u, v], "failed": problems})
    return report


def verify_oracles(max_n: int = 12, samples: int = 10_000, max_len: int = 64, seed: int = 20140101) -> VerificationReport:
    """Failure-function borders/period and the census kernel against naive scans."""
    report = VerificationReport("oracle-equivalence", max_n)
    rng = random.Random(seed)
    randoms = ("".join(rng.choice("01") for _ in range(rng.randint(1, max_len))) for _ in range(samples))
    for w in itertools.chain(_words_upto(max_n), randoms):
        nb = naive_borders(w)
        ok = (
            borders(w) == nb
            and period(w) == naive_period(w)
            and is_unbordered(w) == naive_is_unbordered(w) == (not nb)
            and list(census(w).unbordered_points) == naive_unbordered_points(w)
        )
        report.check(ok, {"word": w})
    report.stats = {"random_samples": samples, "random_max_length": max_len, "seed": seed}
    return report


SUITES = ("main", "palindromes", "descent", "lemmas")


def run_suites(suite: str, max_n: int = PAIR_SUITE_BOUND, threads: Optional[int] = None) -> list[VerificationReport]:
    if suite not in SUITES + ("all",):
        raise WordError(f"unknown suite {suite!r}")
    scans = scan_upto(max_n, threads) if suite != "main" else None
    pairs = fb_pairs_from_scans(scans) if scans is not None else None
    reports = []
    if suite in ("main", "all"):
        reports.append(verify_theorem_main(max_n, threads))
    if suite in ("palindromes", "all"):
        reports.append(verify_palindrome_theorem(max_n, pairs=pairs, scans=scans))
    if suite in ("descent", "all"):
        reports.append(verify_descent(max_n, pairs=pairs))
    if suite in ("lemmas", "all"):
        reports.extend(verify_lemma_suites(max_n, threads=threads, pairs=pairs))
    return reports
