"""Subgroup lattice enumeration against known counts and the brute oracle."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from newmanlab.bruteforce import all_subgroup_sets_brute
from newmanlab.corpus import (alternating, cyclic, dihedral, elementary_abelian,
                              quaternion8, symmetric)
from newmanlab.errors import InputError, ResourceLimitError
from newmanlab.config import Limits
from newmanlab.groups import PermGroup, direct_product
from newmanlab.lattice import (all_subgroup_sets, core_in, is_maximal,
                               is_normal, maximal_subgroup_classes,
                               normal_subgroups, normalizer, subgroup_classes)
from newmanlab.perms import Perm

KNOWN_COUNTS = [
    # (builder, class count, subgroup count)
    (lambda: symmetric(3), 4, 6),
    (lambda: elementary_abelian(2, 2), 5, 5),
    (lambda: alternating(4), 5, 10),
    (lambda: dihedral(4), 8, 10),
    (lambda: quaternion8(), 6, 6),
    (lambda: symmetric(4), 11, 30),
    (lambda: alternating(5), 9, 59),
    (lambda: symmetric(5), 19, 156),
]


@pytest.mark.parametrize("builder,classes,subgroups",
                         KNOWN_COUNTS, ids=lambda v: getattr(v, "__name__", v))
def test_known_class_and_subgroup_counts(builder, classes, subgroups):
    if callable(builder):
        group = builder()
        assert len(subgroup_classes(group)) == classes
        assert len(all_subgroup_sets(group)) == subgroups


def test_s6_counts():
    s6 = symmetric(6)
    assert len(subgroup_classes(s6)) == 56
    assert len(all_subgroup_sets(s6)) == 1455


def test_a6_counts():
    a6 = alternating(6)
    assert len(subgroup_classes(a6)) == 22
    assert len(all_subgroup_sets(a6)) == 501


@pytest.mark.parametrize("builder", [
    lambda: symmetric(4),
    lambda: symmetric(3),
    lambda: dihedral(6),
    lambda: quaternion8(),
    lambda: alternating(4),
    lambda: cyclic(36),
    lambda: direct_product(symmetric(3), cyclic(4)),
    lambda: direct_product(alternating(4), cyclic(5)),
    lambda: direct_product(dihedral(4), dihedral(4)),
])
def test_lattice_matches_brute_oracle(builder):
    group = builder()
    mine = all_subgroup_sets(group)
    brute = all_subgroup_sets_brute(group.degree, group.generators)
    assert mine == brute


def test_classes_sorted_and_sizes_consistent(s4):
    classes = subgroup_classes(s4)
    orders = [cls.order for cls in classes]
    assert orders == sorted(orders)
    for cls in classes:
        assert cls.class_size * cls.normalizer_order == s4.order
        assert cls.class_size == len(cls.members)
        # canonical representative really is a member
        assert cls.representative.element_set() in cls.members


def test_normalizer_and_core(s4, a4, d8):
    syl2 = next(cls.representative for cls in subgroup_classes(s4)
                if cls.order == 8)
    assert normalizer(s4, syl2.group).order == 8
    assert core_in(s4, syl2.group).order == 4      # V4 is the 2-core
    assert normalizer(s4, a4).order == 24
    assert core_in(s4, a4).order == 12


def test_is_normal(s4, a4, v4):
    assert is_normal(s4, a4)
    syl2 = next(cls.representative for cls in subgroup_classes(s4)
                if cls.order == 8)
    assert not is_normal(s4, syl2.group)


def test_maximality(s4, a4):
    assert is_maximal(s4, a4)
    syl2 = next(cls.representative for cls in subgroup_classes(s4)
                if cls.order == 8)
    assert is_maximal(s4, syl2.group)
    v4_normal = next(cls.representative for cls in subgroup_classes(s4)
                     if cls.order == 4 and cls.class_size == 1)
    assert not is_maximal(s4, v4_normal.group)
    with pytest.raises(InputError):
        is_maximal(s4, s4)


def test_maximal_classes_of_s4(s4):
    orders = sorted(cls.order for cls in maximal_subgroup_classes(s4))
    assert orders == [6, 8, 12]


def test_normal_subgroups_of_s4(s4):
    orders = [ref.order for ref in normal_subgroups(s4)]
    assert orders == [1, 4, 12, 24]


def test_lattice_bound_enforced(s5):
    tight = Limits(degree_cap=64, lattice_bound=100, iso_bound=2000,
                   aut_bound=1000, element_bound=5000)
    with pytest.raises(ResourceLimitError):
        subgroup_classes(s5, tight)


@given(st.permutations(range(5)), st.permutations(range(5)))
@settings(max_examples=25, deadline=None)
def test_generated_subgroup_appears_in_lattice(t1, t2):
    s5 = symmetric(5)
    sub = PermGroup(5, [Perm(tuple(t1)), Perm(tuple(t2))])
    assert sub.element_set() in set(all_subgroup_sets(s5))


@given(st.permutations(range(4)))
@settings(max_examples=25, deadline=None)
def test_conjugate_subgroup_lands_in_same_class(g):
    s4 = symmetric(4)
    g = Perm(tuple(g))
    for cls in subgroup_classes(s4):
        rep_set = cls.representative.element_set()
        conj = frozenset(x.conj(g) for x in rep_set)
        assert conj in cls.members
