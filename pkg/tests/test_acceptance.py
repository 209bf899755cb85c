"""End-to-end acceptance checks over the shipped corpus.

One test per headline guarantee: the exact Qd facts, the four structure
suites at 100% pass, the exhaustive triple scan finding nothing, the three
brute-force oracle equivalences, scan-prune invariance, and byte-identical
reports across job counts.  Each runs at full corpus scale; together they
are the slowest tests in the tree.
"""

from __future__ import annotations

import subprocess
import time

import pytest

from newmanlab.bruteforce import isomorphic_by_table_search
from newmanlab.corpus import symmetric
from newmanlab.harness import find_newman_triples, verify_suite
from newmanlab.isomorphism import are_isomorphic
from newmanlab.structure import qd

from conftest import CORPUS_PATH

ISO_ORACLE_ORDER_BOUND = 48


def _failures(report):
    return "\n".join(l.to_tsv() for l in report.lines
                     if l.verdict in ("fail", "triple"))


def test_qd_facts_exact():
    started = time.monotonic()
    q2, q3, q5 = qd(2), qd(3), qd(5)
    assert q2.order == 24
    assert are_isomorphic(q2, symmetric(4)) is not None
    assert q3.order == 216
    assert sorted(q3.primes()) == [2, 3]
    assert not q5.is_solvable()
    assert len(q5.primes()) == 3
    assert time.monotonic() - started < 1.0


def test_lemma2_suite_full_corpus(corpus_entries):
    started = time.monotonic()
    rep = verify_suite(corpus_entries, "lemma2")
    assert rep.fails == 0, _failures(rep)
    assert rep.passes >= 200
    assert time.monotonic() - started < 600


def test_lemma1_suite_full_corpus(corpus_entries):
    rep = verify_suite(corpus_entries, "lemma1")
    assert rep.fails == 0, _failures(rep)
    assert rep.passes >= 200


def test_corollary3_suite_full_corpus(corpus_entries):
    rep = verify_suite(corpus_entries, "corollary3")
    assert rep.fails == 0, _failures(rep)
    assert rep.passes >= 200


def test_glauberman_suite_with_control(corpus_entries):
    rep = verify_suite(corpus_entries, "glauberman")
    assert rep.fails == 0, _failures(rep)
    assert rep.passes >= 170
    control = [l for l in rep.lines if l.instance == "qd3-control"]
    assert len(control) == 1 and control[0].verdict == "pass"
    assert "expected failure at r=3 observed" in control[0].detail


def test_newman_scan_zero_triples(corpus_entries):
    started = time.monotonic()
    assert any(e.name.startswith("s6-") for e in corpus_entries)
    rep = verify_suite(corpus_entries, "newman_scan")
    assert rep.triples_found == 0, _failures(rep)
    assert rep.fails == 0, _failures(rep)
    assert rep.passes >= 200
    assert time.monotonic() - started < 1800


def test_oracle_opi_equivalence(corpus_entries):
    rep = verify_suite(corpus_entries, "oracle_opi")
    assert rep.fails == 0, _failures(rep)
    assert rep.passes >= 200


def test_oracle_lattice_equivalence(corpus_entries):
    rep = verify_suite(corpus_entries, "oracle_lattice")
    assert rep.fails == 0, _failures(rep)
    assert rep.passes >= 200


def test_oracle_isomorphism_equivalence(corpus_entries):
    groups = [e.build() for e in corpus_entries
              if (e.declared_order or 0) <= ISO_ORACLE_ORDER_BOUND]
    groups = [g for g in groups if g.order <= ISO_ORACLE_ORDER_BOUND]
    pairs = 0
    for i, a in enumerate(groups):
        for b in groups[i + 1:]:
            if a.order != b.order:
                continue
            mine = are_isomorphic(a, b) is not None
            brute = isomorphic_by_table_search(a.degree, a.generators,
                                               b.degree, b.generators)
            assert mine == brute, f"{a!r} vs {b!r}: {mine} != {brute}"
            pairs += 1
    assert pairs >= 50


def test_scan_prune_invariance(corpus_entries):
    checked = 0
    for entry in corpus_entries:
        if (entry.declared_order or 0) > 200:
            continue
        g = entry.build()
        if g.order > 200 or not g.is_solvable():
            continue
        pruned = [t.describe() for t in find_newman_triples(g, prune=True)]
        full = [t.describe() for t in find_newman_triples(g, prune=False)]
        assert pruned == full, entry.name
        checked += 1
    assert checked >= 190


def test_determinism_across_job_counts(tmp_path):
    reports = []
    for jobs in ("1", "8"):
        target = tmp_path / f"scan-j{jobs}.tsv"
        proc = subprocess.run(
            ["newmanlab", "verify", str(CORPUS_PATH), "--suite", "newman_scan",
             "--jobs", jobs, "--report", str(target)],
            capture_output=True, text=True, timeout=1800)
        assert proc.returncode == 0, proc.stderr
        reports.append(target.read_bytes())
    assert reports[0] == reports[1]
    assert reports[0].endswith(b"\t-\n")
