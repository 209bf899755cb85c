"""Sylow/Hall subgroups, cores, involvement, Qd(r), and the factorization."""

from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from newmanlab.arith import p_part, pi_of, pi_part
from newmanlab.bruteforce import max_normal_pi_subgroup
from newmanlab.corpus import (alternating, cyclic, dihedral, elementary_abelian,
                              extraspecial27_exponent3, quaternion8, symmetric)
from newmanlab.errors import InputError, PreconditionError
from newmanlab.groups import direct_product
from newmanlab.structure import (fitting_subgroup, glauberman_factorization_holds,
                                 hall_subgroup, is_characteristic, is_involved,
                                 is_p_closed, is_p_nilpotent, o_p, o_pi, qd,
                                 sylow_subgroup, thompson_subgroup, zj_subgroup)


def test_sylow_orders(s4, s5, a5):
    assert sylow_subgroup(s4, 2).order == 8
    assert sylow_subgroup(s4, 3).order == 3
    assert sylow_subgroup(s5, 2).order == 8
    assert sylow_subgroup(s5, 5).order == 5
    assert sylow_subgroup(a5, 2).order == 4       # works without solvability


@given(st.sampled_from([2, 3, 5, 7]))
def test_sylow_order_is_p_part(p):
    g = direct_product(symmetric(4), cyclic(15))
    assert sylow_subgroup(g, p).order == p_part(g.order, p)


def test_hall_subgroups(s4):
    assert hall_subgroup(s4, {2}).order == 8
    assert hall_subgroup(s4, {3}).order == 3
    assert hall_subgroup(s4, {2, 3}).order == 24
    assert hall_subgroup(s4, set()).order == 1
    g = direct_product(symmetric(3), cyclic(5))
    assert hall_subgroup(g, {2, 5}).order == 10
    assert hall_subgroup(g, {3, 5}).order == 15


def test_hall_requires_solvable(a5):
    with pytest.raises(PreconditionError):
        hall_subgroup(a5, {2, 3})


def test_o_pi_known_values(s4, a4):
    assert o_pi(s4, {2}).order == 4               # V4
    assert o_pi(s4, {3}).order == 1
    assert o_pi(s4, {2, 3}).order == 24
    assert o_pi(a4, {2}).order == 4
    g = direct_product(symmetric(3), cyclic(4))
    assert o_pi(g, {2}).order == 4
    assert o_pi(g, {3}).order == 3


@pytest.mark.parametrize("builder", [
    lambda: symmetric(4),
    lambda: symmetric(3),
    lambda: cyclic(30),
    lambda: direct_product(symmetric(3), cyclic(4)),
    lambda: direct_product(alternating(4), cyclic(5)),
    lambda: dihedral(6),
])
def test_o_pi_matches_brute_over_all_prime_subsets(builder):
    g = builder()
    primes = sorted(pi_of(g.order))
    for k in range(1, len(primes) + 1):
        for combo in combinations(primes, k):
            mine = o_pi(g, set(combo)).element_set()
            brute = max_normal_pi_subgroup(g.degree, g.generators, set(combo))
            assert mine == brute


def test_o_p(s4, a5):
    assert o_p(s4, 2).order == 4
    assert o_p(a5, 2).order == 1                  # defined without solvability


def test_fitting(s4, q8, a5):
    assert fitting_subgroup(s4).order == 4
    assert fitting_subgroup(q8).order == 8
    assert fitting_subgroup(a5).order == 1
    g = direct_product(symmetric(3), cyclic(4))
    assert fitting_subgroup(g).order == 12        # C3 x C4


def test_involvement_basics(s4, q8, a4):
    s3 = symmetric(3)
    assert is_involved(s4, s3)
    assert is_involved(s4, a4)
    assert is_involved(s4, dihedral(4))
    assert not is_involved(s4, q8)                # Q8 is not a section of S4
    assert not is_involved(q8, s3)
    assert is_involved(q8, elementary_abelian(2, 2))   # Q8/Z(Q8)
    assert is_involved(s4, cyclic(2))
    assert not is_involved(s4, cyclic(8))


def test_involvement_raw_equals_reduced(s4):
    for probe in (symmetric(3), cyclic(4), alternating(4)):
        assert is_involved(s4, probe, reduce_to_hall=False) == \
            is_involved(s4, probe)


def test_involvement_in_abelian():
    e16 = elementary_abelian(2, 4)
    assert is_involved(e16, elementary_abelian(2, 3))
    assert not is_involved(e16, cyclic(4))
    assert not is_involved(e16, dihedral(4))


def test_qd_orders_and_solvability():
    assert qd(2).order == 24
    assert qd(3).order == 216
    assert qd(5).order == 3000
    assert qd(3).is_solvable()
    assert not qd(5).is_solvable()
    assert sorted(qd(5).primes()) == [2, 3, 5]
    with pytest.raises(InputError):
        qd(4)
    with pytest.raises(InputError):
        qd(9)


def test_qd2_is_symmetric4(s4):
    from newmanlab.isomorphism import are_isomorphic
    assert are_isomorphic(qd(2), s4) is not None


def test_qd3_sylow3_is_extraspecial():
    syl = sylow_subgroup(qd(3), 3).group
    assert syl.order == 27
    assert not syl.is_abelian()
    assert all(x.order() <= 3 for x in syl.elements())
    from newmanlab.isomorphism import are_isomorphic
    assert are_isomorphic(syl, extraspecial27_exponent3()) is not None


def test_thompson_and_zj(d8):
    es = extraspecial27_exponent3()
    assert thompson_subgroup(es).order == 27
    assert zj_subgroup(es).order == 3
    assert zj_subgroup(d8).order == 2
    with pytest.raises(InputError):
        thompson_subgroup(symmetric(3))           # not a prime-power order


def test_glauberman_factorization(s3, s4):
    assert glauberman_factorization_holds(s3, 3)
    assert glauberman_factorization_holds(s4, 3)
    assert glauberman_factorization_holds(direct_product(s3, cyclic(5)), 5)
    # the exceptional configuration: fails for qd(3) at r = 3
    assert not glauberman_factorization_holds(qd(3), 3)
    with pytest.raises(InputError):
        glauberman_factorization_holds(s4, 2)     # r must be odd
    with pytest.raises(InputError):
        glauberman_factorization_holds(s4, 5)     # r must divide the order


def test_p_closed_and_p_nilpotent(s3, s4, a4, q8, c12):
    assert is_p_closed(a4, 2)
    assert not is_p_closed(s4, 2)
    assert is_p_closed(q8, 2)
    assert is_p_nilpotent(s3, 2)                  # normal C3 complement
    assert not is_p_nilpotent(s3, 3)
    assert not is_p_nilpotent(s4, 2)
    assert is_p_nilpotent(c12, 2)


def test_is_characteristic(s4, d8):
    from newmanlab.groups import group_from_element_set
    from newmanlab.lattice import subgroup_classes

    assert is_characteristic(s4, alternating(4))
    assert is_characteristic(s4, o_pi(s4, {2}).group)
    # the two Klein subgroups of D8 swap under an automorphism
    klein = [cls.representative.group for cls in subgroup_classes(d8)
             if cls.order == 4
             and all(x.order() <= 2 for x in cls.representative.group.elements())]
    assert len(klein) == 2
    assert not is_characteristic(d8, klein[0])
    # the centre is characteristic
    z = group_from_element_set(d8.degree, frozenset(
        x for x in d8.elements() if all(x * g == g * x for g in d8.generators)))
    assert z.order == 2
    assert is_characteristic(d8, z)
