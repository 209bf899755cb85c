"""Search for maximality-transfer counterexamples and run verification
suites over a corpus.

A *transfer triple* for a finite solvable group G is a pair of isomorphic
subgroups H and K of G where H is maximal and K is not; exhibiting one
would answer the underlying maximality-transfer question negatively.  The
scanner enumerates subgroup classes, pairs each maximal class with every
same-order non-maximal class, and runs the isomorphism search on the
representatives.  Maximal subgroups of prime index can be skipped soundly
(prune=True): a subgroup of prime index is maximal in any group, so a
same-order non-maximal partner cannot exist.

check_triple_constraints evaluates necessary conditions a genuine triple
must satisfy, after the canonical reduction: conjugate K so that H and K
share a Hall p'-subgroup, compose the isomorphism with an inner
automorphism so a Sylow q-subgroup Q of H meet K is fixed setwise, quotient
G by the largest phi-invariant normal subgroup C inside H meet K, and
evaluate every predicate on the reduced triple.  Failing any predicate
refutes the candidate; the report doubles as a certificate either way.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .arith import is_prime_power, p_part, pi_of, prime_factors, prime_power_exponent
from .bruteforce import all_subgroup_sets_brute, max_normal_pi_subgroup
from .config import DEFAULT_LIMITS, Limits
from .corpus import (CorpusEntry, alternating, cyclic, dihedral,
                     elementary_abelian, quaternion8, symmetric)
from .errors import InputError, PreconditionError
from .groups import PermGroup, SubgroupRef, coset_action, group_from_element_set
from .isomorphism import IsoMap, are_isomorphic, maximal_phi_invariant_core
from .lattice import (all_subgroup_sets, is_maximal, is_normal,
                      maximal_subgroup_classes, normal_subgroups, subgroup_classes)
from .perms import Perm
from .structure import (glauberman_factorization_holds, hall_subgroup,
                        is_characteristic, is_involved, is_p_closed,
                        is_p_nilpotent, o_p, o_pi, qd, sylow_subgroup)

SCAN_ORDER_BOUND = 500
ORACLE_ORDER_BOUND = 200


# -- transfer triples ------------------------------------------------------

@dataclass
class NewmanTriple:
    """A candidate counterexample: isomorphic subgroups of G, one maximal
    and one not, with the witnessing isomorphism and the index p**a of the
    maximal one."""

    ambient: PermGroup
    maximal_sub: SubgroupRef
    other_sub: SubgroupRef
    iso: IsoMap
    p: int
    a: int

    def describe(self) -> str:
        h = " ".join(g.cycle_string() for g in self.maximal_sub.group.generators)
        k = " ".join(g.cycle_string() for g in self.other_sub.group.generators)
        return (f"|G|={self.ambient.order} |H|={self.maximal_sub.order} "
                f"index={self.p}^{self.a} H=<{h}> K=<{k}>")


def find_newman_triples(G: PermGroup, limits: Limits = DEFAULT_LIMITS,
                        prune: bool = True) -> list[NewmanTriple]:
    """All transfer triples of G up to conjugacy of the subgroup pair.

    G must be solvable.  With prune=True, maximal classes of prime index
    are skipped (their partners would be maximal automatically); with
    prune=False every maximal class is paired, which must find exactly the
    same triples.
    """
    if not G.is_solvable():
        raise PreconditionError("the triple scan applies to solvable groups")
    classes = subgroup_classes(G, limits)
    maximal = maximal_subgroup_classes(G, limits)
    maximal_ids = {id(cls) for cls in maximal}
    out: list[NewmanTriple] = []
    for mcls in maximal:
        index = G.order // mcls.order
        assert is_prime_power(index), \
            "maximal subgroup of solvable group has non-prime-power index"
        p = prime_factors(index)[0]
        a = prime_power_exponent(index, p)
        if prune and a == 1:
            continue
        partners = [cls for cls in classes
                    if cls.order == mcls.order and id(cls) not in maximal_ids]
        for kcls in partners:
            iso = are_isomorphic(mcls.representative.group,
                                 kcls.representative.group, limits)
            if iso is not None:
                out.append(NewmanTriple(G, mcls.representative,
                                        kcls.representative, iso, p, a))
    return out


# -- constraint reports ----------------------------------------------------

@dataclass
class PredicateResult:
    name: str
    verdict: str            # "PASS" | "FAIL" | "NA"
    witness: str

    def line(self) -> str:
        return f"[{self.verdict}] {self.name}: {self.witness}"


@dataclass
class ConstraintReport:
    """Necessary-condition evaluation for a candidate triple, on the
    reduced quotient.  Predicates marked informational do not count toward
    all_pass."""

    triple: NewmanTriple
    core_order: int
    reduced_order: int
    results: tuple[PredicateResult, ...]
    informational: tuple[str, ...] = ()

    @property
    def all_pass(self) -> bool:
        return not any(r.verdict == "FAIL" for r in self.results
                       if r.name not in self.informational)

    def render(self) -> str:
        head = (f"triple {self.triple.describe()}; core order {self.core_order}; "
                f"reduced |G*|={self.reduced_order}")
        return "\n".join([head] + [r.line() for r in self.results])

    def render_compact(self) -> str:
        parts = [f"{r.name}={r.verdict}" for r in self.results]
        return (f"core={self.core_order} reduced={self.reduced_order} "
                + " ".join(parts))


def _conjugating_element(G: PermGroup, source_gens: tuple[Perm, ...],
                         target_set: frozenset[Perm], limits: Limits) -> Perm:
    """First g in G (sorted) with source^g = target, for subgroups of equal
    order; existence is the caller's responsibility."""
    for g in sorted(G.elements(limits)):
        if all(x.conj(g) in target_set for x in source_gens):
            return g
    raise AssertionError("expected conjugating element not found")


def check_triple_constraints(triple: NewmanTriple,
                             limits: Limits = DEFAULT_LIMITS,
                             verify_invariants: bool = True) -> ConstraintReport:
    """Reduce the triple canonically and evaluate every necessary
    condition on the quotient.

    With verify_invariants=True the input is first checked to really be a
    transfer triple (solvable ambient, H maximal, K not, valid isomorphism);
    pass False to evaluate the predicates on a synthetic configuration.
    """
    G = triple.ambient
    H = triple.maximal_sub.group
    K = triple.other_sub.group
    phi = triple.iso
    p, a = triple.p, triple.a
    if verify_invariants:
        if not G.is_solvable():
            raise InputError("ambient group is not solvable")
        if H.order != K.order:
            raise InputError("subgroups have different orders")
        if G.order != H.order * p ** a:
            raise InputError(f"index is not {p}**{a}")
        if not phi.is_valid(limits):
            raise InputError("the isomorphism certificate does not validate")
        if not is_maximal(G, H, limits):
            raise InputError("claimed maximal subgroup is not maximal")
        if is_maximal(G, K, limits):
            raise InputError("claimed non-maximal subgroup is maximal")

    # step 1: conjugate K so that H and K share a Hall p'-subgroup
    p_rest = pi_of(G.order) - {p}
    hall_h = hall_subgroup(H, p_rest, limits)
    hall_k = hall_subgroup(K, p_rest, limits)
    g = _conjugating_element(G, hall_k.group.generators,
                             hall_h.element_set(limits), limits)
    k_group = PermGroup(G.degree, tuple(x.conj(g) for x in K.generators))
    phi = IsoMap(phi.source, k_group,
                 tuple(img.conj(g) for img in phi.gen_images))

    # step 2: fix a Sylow q-subgroup of H meet K under phi (q = 5 - p)
    q = 5 - p if p in (2, 3) else None
    meet_set = H.element_set(limits) & k_group.element_set(limits)
    meet = group_from_element_set(G.degree, meet_set)
    sylow_q = None
    if q is not None:
        sylow_q = sylow_subgroup(meet, q, limits).group
        if sylow_q.order > 1:
            image_gens = tuple(phi.apply(x, limits) for x in sylow_q.generators)
            k = _conjugating_element(k_group, image_gens,
                                     sylow_q.element_set(limits), limits)
            phi = IsoMap(phi.source, k_group,
                         tuple(img.conj(k) for img in phi.gen_images))
            assert all(phi.apply(x, limits) in sylow_q.element_set(limits)
                       for x in sylow_q.generators)

    # step 3: quotient by the largest phi-invariant normal subgroup
    core = maximal_phi_invariant_core(G, H, k_group, phi, limits)
    if core.order == 1:
        g_star, h_star, k_star = G, H, k_group
        phi_star, q_star = phi, sylow_q
    else:
        action, reps, coset_of = coset_action(G, core.element_set(limits), limits)
        n = action.degree

        def project(xs: Iterable[Perm]) -> tuple[Perm, ...]:
            # x acts on cosets by sending coset i to the coset of reps[i] * x
            return tuple(Perm(coset_of[rep * x] for rep in reps) for x in xs)

        g_star = action
        h_star = PermGroup(n, project(H.generators))
        k_star = PermGroup(n, project(k_group.generators))
        phi_star = IsoMap(h_star, k_star,
                          project(phi.apply(x, limits) for x in H.generators))
        q_star = (PermGroup(n, project(sylow_q.generators))
                  if sylow_q is not None else None)
        assert h_star.order * core.order == H.order
    assert phi_star.is_valid(limits)

    results: list[PredicateResult] = []

    def record(name: str, verdict: bool | None, witness: str) -> None:
        text = "PASS" if verdict else "FAIL"
        if verdict is None:
            text = "NA"
        results.append(PredicateResult(name, text, witness))

    record("p_le_3", p <= 3, f"[G:H] = {p}^{a}")

    if q is None:
        for name in ("o_q_prime_equalities", "o_p_trivial",
                     "qd_involved_in_O23_of_H",
                     "no_char_subgroup_of_Q_normal_in_H",
                     "hall23_involves_S3_A4_nonabelian8",
                     "not_2closed", "not_2nilpotent", "not_3closed"):
            record(name, None, f"p = {p} > 3, no complementary prime q")
        return ConstraintReport(triple, core.order, g_star.order, tuple(results),
                                informational=("not_3closed",))

    o_h = o_pi(h_star, pi_of(h_star.order) - {q}, limits).element_set(limits)
    o_g = o_pi(g_star, pi_of(g_star.order) - {q}, limits).element_set(limits)
    o_k = o_pi(k_star, pi_of(k_star.order) - {q}, limits).element_set(limits)
    record("o_q_prime_equalities", o_h == o_g == o_k,
           f"|O_{{{q}'}}|: H*={len(o_h)} G*={len(o_g)} K*={len(o_k)}")

    opg = o_p(g_star, p, limits).order
    record("o_p_trivial", opg == 1, f"|O_{p}(G*)| = {opg}")

    o23_h = o_pi(h_star, {2, 3}, limits).group
    involved = is_involved(o23_h, qd(q, limits), limits)
    record("qd_involved_in_O23_of_H", involved,
           f"|O_{{2,3}}(H*)| = {o23_h.order}, Qd({q}) "
           + ("involved" if involved else "not involved"))

    if q_star is None or q_star.order == 1:
        record("no_char_subgroup_of_Q_normal_in_H", True,
               "Sylow q-subgroup of H* meet K* is trivial")
    else:
        offender = None
        for sub in normal_subgroups(q_star, limits):
            if sub.order == 1:
                continue
            if is_characteristic(q_star, sub.group, limits) \
                    and is_normal(h_star, sub.group):
                offender = sub
                break
        record("no_char_subgroup_of_Q_normal_in_H", offender is None,
               "no nontrivial characteristic subgroup of Q* is normal in H*"
               if offender is None else
               "characteristic subgroup of order "
               f"{offender.order} generated by "
               + " ".join(x.cycle_string() for x in offender.group.generators)
               + " is normal in H*")

    hall23 = hall_subgroup(h_star, {2, 3}, limits).group
    needed = [("S3", symmetric(3)), ("A4", alternating(4))]
    missing = [name for name, grp in needed if not is_involved(hall23, grp, limits)]
    na8 = (is_involved(hall23, dihedral(4), limits)
           or is_involved(hall23, quaternion8(), limits))
    if not na8:
        missing.append("nonabelian-8")
    record("hall23_involves_S3_A4_nonabelian8", not missing,
           "involves S3, A4 and a nonabelian group of order 8"
           if not missing else f"missing: {', '.join(missing)}")

    closed2 = is_p_closed(hall23, 2, limits)
    record("not_2closed", not closed2,
           f"Hall {{2,3}}-subgroup of H* {'is' if closed2 else 'is not'} 2-closed")
    nilp2 = is_p_nilpotent(hall23, 2, limits)
    record("not_2nilpotent", not nilp2,
           f"Hall {{2,3}}-subgroup of H* {'is' if nilp2 else 'is not'} 2-nilpotent")
    closed3 = is_p_closed(hall23, 3, limits)
    record("not_3closed", not closed3,
           "informational companion predicate: Hall {2,3}-subgroup of H* "
           f"{'is' if closed3 else 'is not'} 3-closed")

    return ConstraintReport(triple, core.order, g_star.order, tuple(results),
                            informational=("not_3closed",))


# -- reports ---------------------------------------------------------------

@dataclass
class ReportLine:
    suite: str
    instance: str
    verdict: str            # "pass" | "fail" | "skip" | "triple"
    detail: str

    def to_tsv(self) -> str:
        detail = self.detail.replace("\t", " ").replace("\n", "; ")
        return f"{self.suite}\t{self.instance}\t{self.verdict}\t{detail}"


@dataclass
class Report:
    suite: str
    lines: list[ReportLine] = field(default_factory=list)
    wall_seconds: float = 0.0

    @property
    def passes(self) -> int:
        return sum(1 for l in self.lines if l.verdict == "pass")

    @property
    def fails(self) -> int:
        return sum(1 for l in self.lines if l.verdict in ("fail", "triple"))

    @property
    def triples_found(self) -> int:
        return sum(1 for l in self.lines if l.verdict == "triple")

    def to_tsv(self) -> str:
        # the elapsed-seconds column is normalised so that reruns are
        # byte-identical; wall time is reported on the console instead
        rows = [l.to_tsv() for l in self.lines]
        rows.append(f"TOTAL\t{self.passes}\t{self.fails}\t-")
        return "\n".join(rows) + "\n"

    def summary(self) -> str:
        return (f"suite {self.suite}: {self.passes} pass, {self.fails} fail, "
                f"{sum(1 for l in self.lines if l.verdict == 'skip')} skip "
                f"in {self.wall_seconds:.1f}s")


# -- verification suites ---------------------------------------------------

def _skip(suite: str, entry: CorpusEntry, reason: str) -> list[ReportLine]:
    return [ReportLine(suite, entry.name, "skip", reason)]


def _involvement_probes(limits: Limits) -> list[tuple[str, PermGroup]]:
    return [
        ("C2", cyclic(2)), ("C3", cyclic(3)), ("C4", cyclic(4)),
        ("V4", elementary_abelian(2, 2)), ("S3", symmetric(3)),
        ("D8", dihedral(4)), ("Q8", quaternion8()), ("A4", alternating(4)),
        ("C9", cyclic(9)), ("Qd2", qd(2, limits)),
    ]


def suite_lemma1(entry: CorpusEntry, limits: Limits) -> list[ReportLine]:
    """For pi in {2}, {3}, {2,3} and every pi-group probe, involvement in G
    must equal involvement in a Hall pi-subgroup of G, and the raw lattice
    scan must agree with the public reduced route."""
    G = entry.build(limits)
    if not G.is_solvable():
        return _skip("lemma1", entry, "non-solvable")
    if G.order > min(SCAN_ORDER_BOUND, limits.lattice_bound):
        return _skip("lemma1", entry, f"order {G.order} above bound")
    probes = _involvement_probes(limits)
    checked = 0
    for pi in (frozenset({2}), frozenset({3}), frozenset({2, 3})):
        hall = hall_subgroup(G, pi, limits).group
        for name, probe in probes:
            if not pi_of(probe.order) <= pi:
                continue
            raw = is_involved(G, probe, limits, reduce_to_hall=False)
            public = is_involved(G, probe, limits)
            via_hall = is_involved(hall, probe, limits, reduce_to_hall=False)
            if not raw == public == via_hall:
                return [ReportLine("lemma1", entry.name, "fail",
                                   f"pi={sorted(pi)} probe {name}: raw={raw} "
                                   f"hall={via_hall} public={public}")]
            checked += 1
    return [ReportLine("lemma1", entry.name, "pass", f"probes={checked}")]


def suite_lemma2(entry: CorpusEntry, limits: Limits) -> list[ReportLine]:
    """O_pi is monotone along subgroups of pi-bounded index: if every prime
    of [G:Y] lies in pi then O_pi(Y) <= O_pi(G)."""
    G = entry.build(limits)
    if not G.is_solvable():
        return _skip("lemma2", entry, "non-solvable")
    if G.order > min(SCAN_ORDER_BOUND, limits.lattice_bound):
        return _skip("lemma2", entry, f"order {G.order} above bound")
    from itertools import combinations
    primes = sorted(pi_of(G.order))
    subsets = [frozenset(c) for k in range(1, len(primes) + 1)
               for c in combinations(primes, k)]
    big = {ps: o_pi(G, ps, limits).element_set(limits) for ps in subsets}
    pairs = 0
    for cls in subgroup_classes(G, limits):
        y = cls.representative.group
        index_primes = pi_of(G.order // y.order)
        for ps in subsets:
            if not index_primes <= ps:
                continue
            small = o_pi(y, ps, limits).element_set(limits)
            if not small <= big[ps]:
                return [ReportLine("lemma2", entry.name, "fail",
                                   f"|Y|={y.order} pi={sorted(ps)}: "
                                   f"O_pi(Y) not inside O_pi(G)")]
            pairs += 1
    return [ReportLine("lemma2", entry.name, "pass", f"pairs={pairs}")]


def suite_corollary3(entry: CorpusEntry, limits: Limits) -> list[ReportLine]:
    """For Y of index s**b, O_{r,s}(Y) and O_{r,s}(G) share a Sylow
    r-subgroup for every other prime r: containment plus equal r-parts."""
    G = entry.build(limits)
    if not G.is_solvable():
        return _skip("corollary3", entry, "non-solvable")
    if G.order > min(SCAN_ORDER_BOUND, limits.lattice_bound):
        return _skip("corollary3", entry, f"order {G.order} above bound")
    pairs = 0
    for cls in subgroup_classes(G, limits):
        y = cls.representative.group
        index = G.order // y.order
        if index == 1 or not is_prime_power(index):
            continue
        s = prime_factors(index)[0]
        for r in pi_of(G.order) - {s}:
            a_set = o_pi(y, {r, s}, limits).element_set(limits)
            b_ref = o_pi(G, {r, s}, limits)
            b_set = b_ref.element_set(limits)
            if not a_set <= b_set:
                return [ReportLine("corollary3", entry.name, "fail",
                                   f"|Y|={y.order} r={r} s={s}: not contained")]
            if p_part(len(a_set), r) != p_part(len(b_set), r):
                return [ReportLine("corollary3", entry.name, "fail",
                                   f"|Y|={y.order} r={r} s={s}: r-parts differ")]
            pairs += 1
    return [ReportLine("corollary3", entry.name, "pass", f"pairs={pairs}")]


def suite_glauberman(entry: CorpusEntry, limits: Limits) -> list[ReportLine]:
    """The normalizer factorization X = O_{r'}(X) N_X(ZJ(R)) for odd r,
    except that no claim is made at r = 3 when Qd(3) is involved in a Hall
    {2,3}-subgroup."""
    G = entry.build(limits)
    if not G.is_solvable():
        return _skip("glauberman", entry, "non-solvable")
    if G.order > min(SCAN_ORDER_BOUND, limits.lattice_bound):
        return _skip("glauberman", entry, f"order {G.order} above bound")
    odd = [r for r in pi_of(G.order) if r != 2]
    if not odd:
        return _skip("glauberman", entry, "2-group: no odd prime")
    notes = []
    for r in sorted(odd):
        if r == 3:
            hall = hall_subgroup(G, {2, 3}, limits).group
            if is_involved(hall, qd(3, limits), limits):
                notes.append("r=3 no claim (Qd(3) involved)")
                continue
        if not glauberman_factorization_holds(G, r, limits):
            return [ReportLine("glauberman", entry.name, "fail",
                               f"factorization fails at r={r}")]
        notes.append(f"r={r} ok")
    return [ReportLine("glauberman", entry.name, "pass", "; ".join(notes))]


def _glauberman_epilogue(limits: Limits) -> list[ReportLine]:
    # negative control: the factorization must fail for Qd(3) itself
    failed = not glauberman_factorization_holds(qd(3, limits), 3, limits)
    return [ReportLine("glauberman", "qd3-control",
                       "pass" if failed else "fail",
                       "expected failure at r=3 "
                       + ("observed" if failed else "NOT observed"))]


def _qd_facts_epilogue(limits: Limits) -> list[ReportLine]:
    out = []

    def fact(instance: str, ok: bool, detail: str) -> None:
        out.append(ReportLine("qd_facts", instance, "pass" if ok else "fail", detail))

    orders_ok = all(qd(r, limits).order == r ** 3 * (r * r - 1) for r in (2, 3, 5, 7))
    fact("orders", orders_ok, "|Qd(r)| = r^3(r^2-1) for r in {2,3,5,7}")

    qd2 = qd(2, limits)
    fact("qd2-iso-s4", are_isomorphic(qd2, symmetric(4), limits) is not None,
         "Qd(2) isomorphic to S4")

    qd3 = qd(3, limits)
    fact("qd3-23group", set(qd3.primes()) == {2, 3} and qd3.is_solvable(),
         f"|Qd(3)| = {qd3.order}, solvable {{2,3}}-group")

    syl = sylow_subgroup(qd3, 3, limits).group
    expo3 = all(x.order() <= 3 for x in syl.elements(limits))
    fact("qd3-sylow3", syl.order == 27 and expo3 and not syl.is_abelian(),
         "Sylow 3-subgroup is extraspecial of order 27 and exponent 3")

    qd5 = qd(5, limits)
    fact("qd5-nonsolvable", not qd5.is_solvable() and len(qd5.primes()) == 3,
         f"|Qd(5)| = {qd5.order} with 3 prime divisors, non-solvable")

    fact("qd2-involved-in-s4", is_involved(symmetric(4), qd2, limits),
         "Qd(2) involved in S4")
    return out


def suite_newman_scan(entry: CorpusEntry, limits: Limits) -> list[ReportLine]:
    """Exhaustive transfer-triple scan; a found triple is reported with its
    constraint certificate rather than as a plain failure."""
    G = entry.build(limits)
    if not G.is_solvable():
        return _skip("newman_scan", entry, "non-solvable")
    if G.order > min(SCAN_ORDER_BOUND, limits.lattice_bound):
        return _skip("newman_scan", entry, f"order {G.order} above bound")
    triples = find_newman_triples(G, limits)
    if not triples:
        nmax = len(maximal_subgroup_classes(G, limits))
        return [ReportLine("newman_scan", entry.name, "pass",
                           f"max_classes={nmax} triples=0")]
    out = []
    for t in triples:
        report = check_triple_constraints(t, limits)
        out.append(ReportLine("newman_scan", entry.name, "triple",
                              t.describe() + " | " + report.render_compact()))
    return out


def suite_oracle_opi(entry: CorpusEntry, limits: Limits) -> list[ReportLine]:
    """o_pi against the chain-free enumeration oracle."""
    G = entry.build(limits)
    if not G.is_solvable():
        return _skip("oracle_opi", entry, "non-solvable")
    if G.order > ORACLE_ORDER_BOUND:
        return _skip("oracle_opi", entry, f"order {G.order} above oracle bound")
    from itertools import combinations
    primes = sorted(pi_of(G.order))
    checked = 0
    for k in range(1, len(primes) + 1):
        for combo in combinations(primes, k):
            mine = o_pi(G, set(combo), limits).element_set(limits)
            brute = max_normal_pi_subgroup(G.degree, G.generators, set(combo))
            if mine != brute:
                return [ReportLine("oracle_opi", entry.name, "fail",
                                   f"pi={combo}: {len(mine)} != {len(brute)}")]
            checked += 1
    return [ReportLine("oracle_opi", entry.name, "pass", f"subsets={checked}")]


def suite_oracle_lattice(entry: CorpusEntry, limits: Limits) -> list[ReportLine]:
    """Full subgroup enumeration against the chain-free oracle."""
    G = entry.build(limits)
    if G.order > ORACLE_ORDER_BOUND:
        return _skip("oracle_lattice", entry, f"order {G.order} above oracle bound")
    mine = all_subgroup_sets(G, limits)
    brute = all_subgroup_sets_brute(G.degree, G.generators)
    if mine != brute:
        return [ReportLine("oracle_lattice", entry.name, "fail",
                           f"{len(mine)} subgroups vs {len(brute)} brute")]
    return [ReportLine("oracle_lattice", entry.name, "pass",
                       f"subgroups={len(mine)}")]


_SUITES: dict[str, Callable[[CorpusEntry, Limits], list[ReportLine]]] = {
    "lemma1": suite_lemma1,
    "lemma2": suite_lemma2,
    "corollary3": suite_corollary3,
    "glauberman": suite_glauberman,
    "newman_scan": suite_newman_scan,
    "oracle_opi": suite_oracle_opi,
    "oracle_lattice": suite_oracle_lattice,
    "qd_facts": None,  # epilogue-only
}

_EPILOGUES: dict[str, Callable[[Limits], list[ReportLine]]] = {
    "glauberman": _glauberman_epilogue,
    "qd_facts": _qd_facts_epilogue,
}


def suite_names() -> list[str]:
    return sorted(_SUITES)


def _entry_worker(args) -> list[tuple[str, str, str, str]]:
    suite_name, fields, lattice_bound = args
    entry = CorpusEntry(*fields)
    limits = DEFAULT_LIMITS.with_lattice_bound(lattice_bound)
    lines = _SUITES[suite_name](entry, limits)
    return [(l.suite, l.instance, l.verdict, l.detail) for l in lines]


def verify_suite(entries: list[CorpusEntry], suite_name: str,
                 limits: Limits = DEFAULT_LIMITS, jobs: int = 1) -> Report:
    """Run one suite over the corpus; results are in corpus order followed
    by any suite-level control lines, independent of the job count."""
    if suite_name not in _SUITES:
        raise InputError(f"unknown suite {suite_name!r}; known: "
                         + ", ".join(suite_names()))
    started = time.monotonic()
    report = Report(suite_name)
    runner = _SUITES[suite_name]
    if runner is not None:
        if jobs > 1 and len(entries) > 1:
            from multiprocessing import Pool
            tasks = [(suite_name,
                      (e.name, e.degree, e.generator_strings, e.declared_order,
                       e.tags),
                      limits.lattice_bound) for e in entries]
            with Pool(processes=jobs) as pool:
                for chunk in pool.map(_entry_worker, tasks, chunksize=1):
                    report.lines.extend(ReportLine(*t) for t in chunk)
        else:
            for e in entries:
                report.lines.extend(runner(e, limits))
    epilogue = _EPILOGUES.get(suite_name)
    if epilogue is not None:
        report.lines.extend(epilogue(limits))
    report.wall_seconds = time.monotonic() - started
    return report
