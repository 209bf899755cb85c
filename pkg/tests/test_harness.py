"""Triple scan, constraint reduction, suite runners, and report format."""

from __future__ import annotations

import pytest

from newmanlab.corpus import (alternating, cyclic, dihedral, entry_from_group,
                              symmetric)
from newmanlab.errors import InputError, PreconditionError
from newmanlab.groups import (PermGroup, SubgroupRef, direct_product,
                              group_from_element_set)
from newmanlab.harness import (ConstraintReport, NewmanTriple, PredicateResult,
                               Report, ReportLine, check_triple_constraints,
                               find_newman_triples, suite_names, verify_suite)
from newmanlab.isomorphism import are_isomorphic
from newmanlab.lattice import subgroup_classes

PREDICATE_NAMES = [
    "p_le_3",
    "o_q_prime_equalities",
    "o_p_trivial",
    "qd_involved_in_O23_of_H",
    "no_char_subgroup_of_Q_normal_in_H",
    "hall23_involves_S3_A4_nonabelian8",
    "not_2closed",
    "not_2nilpotent",
    "not_3closed",
]


@pytest.mark.parametrize("make", [
    lambda: symmetric(4),
    lambda: symmetric(3),
    lambda: alternating(4),
    lambda: dihedral(4),
    lambda: cyclic(12),
    lambda: dihedral(6),
    lambda: direct_product(symmetric(3), cyclic(4)),
])
def test_small_groups_have_no_triples(make):
    assert find_newman_triples(make()) == []


def test_scan_requires_solvable(a5):
    with pytest.raises(PreconditionError):
        find_newman_triples(a5)


@pytest.mark.parametrize("make", [
    lambda: symmetric(4),
    lambda: alternating(4),
    lambda: dihedral(6),
    lambda: cyclic(24),
    lambda: direct_product(symmetric(3), cyclic(4)),
    lambda: direct_product(dihedral(4), cyclic(3)),
])
def test_prune_does_not_change_results(make):
    g = make()
    pruned = [t.describe() for t in find_newman_triples(g, prune=True)]
    full = [t.describe() for t in find_newman_triples(g, prune=False)]
    assert pruned == full


def _conjugate_pair_triple(s4):
    """A synthetic configuration: two conjugate Sylow 2-subgroups of S4
    cast as a triple (not a real one; K is maximal too)."""
    eights = [cls for cls in subgroup_classes(s4) if cls.order == 8]
    assert len(eights) == 1
    cls = eights[0]
    h = cls.representative.group
    other = next(m for m in sorted(cls.members, key=sorted)
                 if m != h.element_set())
    k = group_from_element_set(4, other)
    phi = are_isomorphic(h, k)
    return NewmanTriple(s4, SubgroupRef(s4, h), SubgroupRef(s4, k),
                        phi, p=3, a=1)


def test_constraint_chain_on_synthetic_pair(s4):
    triple = _conjugate_pair_triple(s4)
    report = check_triple_constraints(triple, verify_invariants=False)
    assert report.core_order == 4                  # the Klein subgroup
    assert report.reduced_order == 6               # S4 / V4
    assert [r.name for r in report.results] == PREDICATE_NAMES
    assert all(r.verdict in ("PASS", "FAIL", "NA") for r in report.results)
    assert not report.all_pass                     # e.g. O_3 equalities break
    assert "core=4 reduced=6" in report.render_compact()
    assert report.render().count("\n") == len(PREDICATE_NAMES)


def test_constraint_chain_rejects_fake_triple(s4):
    with pytest.raises(InputError):
        check_triple_constraints(_conjugate_pair_triple(s4))


def test_constraint_chain_flags_index_five(s4):
    # hand-built configuration with index 5: the p <= 3 predicate must FAIL
    # and the q-specific predicates must be NA
    g = cyclic(25)
    h = PermGroup(g.degree, [g.generators[0] ** 5])
    assert h.order == 5
    phi = are_isomorphic(h, h)
    triple = NewmanTriple(g, SubgroupRef(g, h), SubgroupRef(g, h), phi, p=5, a=1)
    report = check_triple_constraints(triple, verify_invariants=False)
    by_name = {r.name: r.verdict for r in report.results}
    assert by_name["p_le_3"] == "FAIL"
    assert by_name["o_q_prime_equalities"] == "NA"
    assert not report.all_pass


def test_all_pass_ignores_informational():
    base = dict(triple=None, core_order=1, reduced_order=6)
    ok = PredicateResult("p_le_3", "PASS", "")
    bad = PredicateResult("not_3closed", "FAIL", "")
    with_info = ConstraintReport(results=(ok, bad),
                                 informational=("not_3closed",), **base)
    without = ConstraintReport(results=(ok, bad), **base)
    assert with_info.all_pass
    assert not without.all_pass


def test_report_line_escapes_tabs_and_newlines():
    line = ReportLine("s", "inst", "pass", "a\tb\nc")
    assert line.to_tsv() == "s\tinst\tpass\ta b; c"


def test_report_totals_and_tsv():
    rep = Report("demo", [
        ReportLine("demo", "a", "pass", ""),
        ReportLine("demo", "b", "fail", "boom"),
        ReportLine("demo", "c", "skip", "why"),
        ReportLine("demo", "d", "triple", "found"),
    ])
    assert rep.passes == 1
    assert rep.fails == 2                          # fail + triple both count
    assert rep.triples_found == 1
    assert rep.to_tsv().endswith("TOTAL\t1\t2\t-\n")


def test_suite_names_are_sorted_and_complete():
    names = suite_names()
    assert names == sorted(names)
    assert set(names) == {"corollary3", "glauberman", "lemma1", "lemma2",
                          "newman_scan", "oracle_lattice", "oracle_opi",
                          "qd_facts"}


def test_verify_suite_rejects_unknown(s4):
    with pytest.raises(InputError):
        verify_suite([entry_from_group("s4", s4)], "nope")


MINI = None


def _mini_corpus():
    global MINI
    if MINI is None:
        MINI = [
            entry_from_group("s3", symmetric(3)),
            entry_from_group("c12", cyclic(12)),
            entry_from_group("d8", dihedral(4)),
            entry_from_group("s4", symmetric(4)),
            entry_from_group("a5", alternating(5)),
        ]
    return MINI


def test_newman_scan_suite_verdicts():
    rep = verify_suite(_mini_corpus(), "newman_scan")
    verdicts = {l.instance: l.verdict for l in rep.lines}
    assert verdicts == {"s3": "pass", "c12": "pass", "d8": "pass",
                        "s4": "pass", "a5": "skip"}
    assert rep.triples_found == 0


def test_glauberman_suite_has_control_line():
    rep = verify_suite(_mini_corpus(), "glauberman")
    assert rep.lines[-1].instance == "qd3-control"
    assert rep.lines[-1].verdict == "pass"
    assert rep.fails == 0


def test_qd_facts_suite_is_epilogue_only():
    rep = verify_suite(_mini_corpus(), "qd_facts")
    assert all(l.suite == "qd_facts" for l in rep.lines)
    assert {l.verdict for l in rep.lines} == {"pass"}
    # corpus entries contribute nothing; same lines with no corpus at all
    again = verify_suite([], "qd_facts")
    assert [l.to_tsv() for l in again.lines] == [l.to_tsv() for l in rep.lines]


@pytest.mark.parametrize("suite", ["lemma1", "lemma2", "corollary3"])
def test_structure_suites_pass_on_mini_corpus(suite):
    rep = verify_suite(_mini_corpus(), suite)
    assert rep.fails == 0
    assert rep.passes >= 1
    assert [l.instance for l in rep.lines] == [e.name for e in _mini_corpus()]


def test_reports_identical_across_job_counts():
    for suite in ("newman_scan", "lemma2", "oracle_opi"):
        solo = verify_suite(_mini_corpus(), suite, jobs=1).to_tsv()
        multi = verify_suite(_mini_corpus(), suite, jobs=2).to_tsv()
        assert solo == multi
