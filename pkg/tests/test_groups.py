"""Stabilizer chains: orders, membership, element enumeration, quotients."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from newmanlab.bruteforce import closure
from newmanlab.config import DEFAULT_LIMITS, Limits
from newmanlab.corpus import alternating, cyclic, dihedral, symmetric
from newmanlab.errors import InputError, ResourceLimitError
from newmanlab.groups import (PermGroup, SubgroupRef, coset_action,
                              direct_product, group_from_element_set,
                              group_from_generators, normal_closure,
                              trivial_group)
from newmanlab.perms import Perm

perms5 = st.permutations(range(5)).map(lambda t: Perm(tuple(t)))


def test_known_orders(s4, s5, a4, a5, d8, q8):
    assert s4.order == 24
    assert s5.order == 120
    assert a4.order == 12
    assert a5.order == 60
    assert d8.order == 8
    assert q8.order == 8
    assert symmetric(7).order == 5040
    assert alternating(8).order == 20160


@given(st.lists(perms5, min_size=1, max_size=4))
@settings(max_examples=60)
def test_chain_order_matches_brute_closure(gens):
    group = PermGroup(5, gens)
    brute = closure(5, tuple(gens))
    assert group.order == len(brute)
    assert group.element_set() == brute


@given(st.lists(perms5, min_size=1, max_size=3), perms5)
@settings(max_examples=60)
def test_membership_matches_brute(gens, probe):
    group = PermGroup(5, gens)
    assert group.contains(probe) == (probe in closure(5, tuple(gens)))


def test_elements_deterministic_and_sorted_stable(s4):
    first = s4.elements()
    second = symmetric(4).elements()
    assert first == second
    assert len(set(first)) == 24


def test_element_bound_enforced():
    with pytest.raises(ResourceLimitError):
        symmetric(7).elements(Limits(degree_cap=64, lattice_bound=2000,
                                     iso_bound=2000, aut_bound=1000,
                                     element_bound=5000))


def test_solvability_and_derived_series(s4, a5):
    assert s4.is_solvable()
    assert not a5.is_solvable()
    orders = [g.order for g in s4.derived_series()]
    assert orders == [24, 12, 4, 1]
    assert a5.perfect_core().order == 60
    assert s4.perfect_core().order == 1


def test_derived_subgroup(s4, q8):
    assert s4.derived_subgroup().order == 12
    assert q8.derived_subgroup().order == 2


def test_abelian_flag(c12, v4, s3):
    assert c12.is_abelian()
    assert v4.is_abelian()
    assert not s3.is_abelian()


def test_group_from_generators_validation():
    with pytest.raises(InputError):
        group_from_generators(70, ["(1,2)"])        # degree cap
    g = group_from_generators(4, ["(1,2,3,4)", "(1,2)"], name="sym4")
    assert g.order == 24
    assert g.name == "sym4"


def test_group_from_element_set(s3):
    rebuilt = group_from_element_set(3, s3.element_set())
    assert rebuilt.order == 6
    assert rebuilt.element_set() == s3.element_set()


def test_direct_product_order(s3, v4):
    prod = direct_product(s3, v4)
    assert prod.degree == s3.degree + v4.degree
    assert prod.order == 24


def test_normal_closure(s4):
    # the normal closure of a transposition in S4 is all of S4
    t = Perm.from_cycles("(1,2)", 4)
    assert normal_closure(s4, [t]).order == 24
    # of a double transposition: V4
    d = Perm.from_cycles("(1,2)(3,4)", 4)
    assert normal_closure(s4, [d]).order == 4


def test_coset_action_is_quotient(s4):
    a4 = alternating(4)
    action, reps, coset_of = coset_action(s4, a4.element_set())
    assert action.degree == 2
    assert action.order == 2
    assert len(reps) == 2
    assert len(coset_of) == 24


def test_coset_action_faithful_for_core_free(s5):
    # point stabilizer gives back the natural degree-5 action
    stab = group_from_element_set(5, frozenset(
        x for x in s5.elements() if x.apply(5) == 5))
    action, _, _ = coset_action(s5, stab.element_set())
    assert action.degree == 5
    assert action.order == 120


def test_subgroup_ref_checks_containment(s4, q8):
    with pytest.raises(InputError):
        SubgroupRef(s4, q8)                         # degree mismatch
    with pytest.raises(InputError):
        SubgroupRef(alternating(4), symmetric(4))   # not contained
    ref = SubgroupRef(s4, alternating(4))
    assert ref.order == 12
    assert ref.index == 2


def test_trivial_group():
    t = trivial_group(5)
    assert t.order == 1
    assert t.is_trivial()


@given(st.lists(perms5, min_size=1, max_size=3))
@settings(max_examples=30)
def test_derived_subgroup_is_normal(gens):
    group = PermGroup(5, gens)
    derived = group.derived_subgroup()
    dset = derived.element_set()
    assert all(h.conj(g) in dset for h in derived.generators
               for g in group.generators)
