"""Structure theory: Sylow and Hall subgroups, pi-cores, involvement,
the quadratic groups Qd(r), Thompson-subgroup centres and the Glauberman
normalizer factorization.

Conventions.  pi denotes a set of primes; a pi-group has order divisible
only by members of pi.  O_pi(G) is the largest normal pi-subgroup.  A group
L is *involved* in G when some section H/K (K normal in H <= G) is
isomorphic to L.

Sylow subgroups are built by normalizer ascent: while P is not yet full,
p divides [N_G(P):P], so some z in N_G(P) outside P has z**p in P and
<P, z> is a p-group of order p|P|.  Hall subgroups of solvable groups are
read off the subgroup lattice (they exist and form one conjugacy class by
Hall's theorem), and O_pi(G) is the normal core of a Hall pi-subgroup,
since O_pi is contained in every Hall pi-subgroup and the intersection of
all conjugates is a normal pi-subgroup.
"""

from __future__ import annotations

from .arith import (PrimeSet, as_prime_set, is_prime, is_prime_power, pi_of,
                    pi_part, p_part)
from .config import DEFAULT_LIMITS, Limits
from .errors import InputError, PreconditionError, ResourceLimitError
from .groups import (PermGroup, SubgroupRef, coset_action, group_from_element_set)
from .isomorphism import are_isomorphic, iter_automorphisms
from .lattice import (core_in, is_normal, normal_subgroups, normalizer,
                      subgroup_classes)
from .perms import Perm

_INVOLVED_CACHE: dict = {}


def clear_caches() -> None:
    _INVOLVED_CACHE.clear()


# -- Sylow and Hall subgroups ----------------------------------------------

def sylow_subgroup(G: PermGroup, p: int,
                   limits: Limits = DEFAULT_LIMITS) -> SubgroupRef:
    """A Sylow p-subgroup, grown deterministically by normalizer ascent."""
    if not is_prime(p):
        raise InputError(f"{p} is not a prime")
    target = p_part(G.order, p)
    current = PermGroup(G.degree, [])
    while current.order < target:
        n_ref = normalizer(G, current, limits)
        p_set = current.element_set(limits)
        z = next(x for x in sorted(n_ref.group.elements(limits))
                 if x not in p_set and x ** p in p_set)
        current = PermGroup(G.degree, current.generators + (z,))
        assert current.order == p * len(p_set)
    return SubgroupRef(G, current)


def hall_subgroup(G: PermGroup, pi,
                  limits: Limits = DEFAULT_LIMITS) -> SubgroupRef:
    """A Hall pi-subgroup of a solvable group, from the subgroup lattice."""
    ps = as_prime_set(pi)
    if not G.is_solvable():
        raise PreconditionError("Hall subgroups are only computed for solvable groups")
    target = pi_part(G.order, ps)
    if target == G.order:
        return SubgroupRef(G, G)
    for cls in subgroup_classes(G, limits):
        if cls.order == target:
            return cls.representative
    raise AssertionError(f"no subgroup of order {target} in solvable group of "
                         f"order {G.order}")


def o_pi(G: PermGroup, pi, limits: Limits = DEFAULT_LIMITS) -> SubgroupRef:
    """O_pi(G), the largest normal pi-subgroup of a solvable group, as the
    core of a Hall pi-subgroup."""
    hall = hall_subgroup(G, pi, limits)
    return core_in(G, hall.group, limits)


def o_p(G: PermGroup, p: int, limits: Limits = DEFAULT_LIMITS) -> SubgroupRef:
    """O_p(G) = core of a Sylow p-subgroup (no solvability needed)."""
    if not is_prime(p):
        raise InputError(f"{p} is not a prime")
    return core_in(G, sylow_subgroup(G, p, limits).group, limits)


def fitting_subgroup(G: PermGroup, limits: Limits = DEFAULT_LIMITS) -> SubgroupRef:
    """F(G): the join of the subgroups O_p(G) over primes p dividing |G|."""
    gens: list[Perm] = []
    expected = 1
    for p in G.primes():
        part = o_p(G, p, limits)
        gens.extend(part.group.generators)
        expected *= part.order
    fit = PermGroup(G.degree, gens)
    # the O_p's centralise each other, so F(G) is their direct product
    assert fit.order == expected
    return SubgroupRef(G, fit)


# -- involvement -----------------------------------------------------------

def _sections_isomorphic(G: PermGroup, L: PermGroup, limits: Limits) -> bool:
    """Raw scan: does some section H/K of G realise L?  Quotients are taken
    as coset actions, which are faithful for the quotient group.

    An abelian G only has abelian sections, and each is isomorphic to a
    subgroup of G (true for finite abelian groups), so the quotient loop
    collapses to a subgroup scan there.
    """
    if G.is_abelian():
        if not L.is_abelian():
            return False
        return any(cls.order == L.order
                   and are_isomorphic(cls.representative.group, L, limits)
                   for cls in subgroup_classes(G, limits))
    for cls in subgroup_classes(G, limits):
        h = cls.representative.group
        if h.order % L.order:
            continue
        for k in normal_subgroups(h, limits):
            if h.order != k.order * L.order:
                continue
            if k.order == 1:
                quotient = h
            else:
                quotient = coset_action(h, k.element_set(limits), limits)[0]
            if are_isomorphic(quotient, L, limits) is not None:
                return True
    return False


def is_involved(G: PermGroup, L: PermGroup, limits: Limits = DEFAULT_LIMITS,
                reduce_to_hall: bool = True) -> bool:
    """True when L is isomorphic to a section of G.

    For solvable G and a pi-group L with pi a proper subset of pi(|G|), the
    scan first drops to a Hall pi-subgroup: a section isomorphic to L exists
    in G iff one exists in a Hall pi-subgroup.
    """
    if G.order > limits.lattice_bound:
        raise ResourceLimitError(
            f"order {G.order} exceeds lattice bound {limits.lattice_bound}")
    if L.order == 1:
        return True
    if G.order % L.order:
        return False
    key = (G.element_key(limits), L.element_key(limits), reduce_to_hall)
    hit = _INVOLVED_CACHE.get(key)
    if hit is None:
        scope = G
        if reduce_to_hall:
            pl = pi_of(L.order)
            if pl < pi_of(G.order) and G.is_solvable():
                scope = hall_subgroup(G, pl, limits).group
        hit = _sections_isomorphic(scope, L, limits)
        _INVOLVED_CACHE[key] = hit
    return hit


# -- the groups Qd(r) ------------------------------------------------------

def qd(r: int, limits: Limits = DEFAULT_LIMITS) -> PermGroup:
    """Qd(r): the natural module F_r^2 extended by SL(2, r), acting as
    affine maps on the r**2 points of the plane.

    Generated by the two coordinate translations and the standard matrices
    S = [[0,-1],[1,0]] and T = [[1,1],[0,1]] (which generate SL(2, r)).
    The order is r**3 (r**2 - 1).
    """
    if not is_prime(r):
        raise InputError(f"{r} is not a prime")
    if r * r > limits.degree_cap:
        raise InputError(f"degree {r * r} for Qd({r}) exceeds cap {limits.degree_cap}")

    def idx(a: int, b: int) -> int:
        return (a % r) * r + (b % r)

    def affine(fn) -> Perm:
        return Perm(idx(*fn(a, b)) for a in range(r) for b in range(r))

    t1 = affine(lambda a, b: (a + 1, b))
    t2 = affine(lambda a, b: (a, b + 1))
    s = affine(lambda a, b: (-b, a))
    t = affine(lambda a, b: (a + b, b))
    group = PermGroup(r * r, (t1, t2, s, t), name=f"Qd({r})")
    assert group.order == r ** 3 * (r * r - 1)
    return group


# -- Thompson subgroup and Glauberman factorization ------------------------

def thompson_subgroup(R: PermGroup, limits: Limits = DEFAULT_LIMITS) -> SubgroupRef:
    """J(R): the subgroup generated by all abelian subgroups of largest
    order.  Input must be a group of prime-power order."""
    if not is_prime_power(R.order):
        raise InputError(f"order {R.order} is not a prime power")
    classes = subgroup_classes(R, limits)
    best = max(cls.order for cls in classes if cls.representative.group.is_abelian())
    pool: set[Perm] = set()
    for cls in classes:
        if cls.order == best and cls.representative.group.is_abelian():
            for member in cls.members:
                pool |= member
    return SubgroupRef(R, PermGroup(R.degree, sorted(pool)))


def zj_subgroup(R: PermGroup, limits: Limits = DEFAULT_LIMITS) -> SubgroupRef:
    """ZJ(R): the centre of the Thompson subgroup J(R)."""
    j = thompson_subgroup(R, limits).group
    centre = [z for z in j.elements(limits)
              if all(z * g == g * z for g in j.generators)]
    return SubgroupRef(R, group_from_element_set(R.degree, frozenset(centre)))


def glauberman_factorization_holds(X: PermGroup, r: int,
                                   limits: Limits = DEFAULT_LIMITS) -> bool:
    """Does X = O_{r'}(X) * N_X(ZJ(R)) hold for a Sylow r-subgroup R?

    Validates that X is solvable and r is an odd prime dividing |X|; the
    factorization is then tested by exact order arithmetic on the two
    factors' element sets.
    """
    if not is_prime(r) or r == 2:
        raise InputError(f"{r} must be an odd prime")
    if X.order % r:
        raise InputError(f"{r} does not divide the group order {X.order}")
    if not X.is_solvable():
        raise InputError("the factorization check expects a solvable group")
    sylow = sylow_subgroup(X, r, limits)
    w = zj_subgroup(sylow.group, limits)
    n = normalizer(X, w.group, limits)
    o = o_pi(X, pi_of(X.order) - {r}, limits)
    n_set = n.element_set(limits)
    o_set = o.element_set(limits)
    product_order = len(o_set) * len(n_set) // len(o_set & n_set)
    return product_order == X.order


# -- closure and nilpotency predicates -------------------------------------

def is_p_closed(G: PermGroup, p: int, limits: Limits = DEFAULT_LIMITS) -> bool:
    """True when a Sylow p-subgroup is normal."""
    return is_normal(G, sylow_subgroup(G, p, limits).group)


def is_p_nilpotent(G: PermGroup, p: int, limits: Limits = DEFAULT_LIMITS) -> bool:
    """True when G has a normal p-complement, i.e. O_{p'}(G) has full
    p'-order.  Computed through o_pi, so G must be solvable."""
    if not is_prime(p):
        raise InputError(f"{p} is not a prime")
    rest = pi_of(G.order) - {p}
    return o_pi(G, rest, limits).order == pi_part(G.order, rest)


def is_characteristic(G: PermGroup, S, limits: Limits = DEFAULT_LIMITS) -> bool:
    """True when every automorphism of G maps the subgroup S onto itself.

    Short-circuits on the first automorphism that moves S; the trivial and
    full subgroups are characteristic without any enumeration.
    """
    group = S.group if isinstance(S, SubgroupRef) else S
    ref = SubgroupRef(G, group)
    if ref.order in (1, G.order):
        return True
    s_set = ref.element_set(limits)
    for alpha in iter_automorphisms(G, limits):
        if any(alpha.apply(g, limits) not in s_set for g in group.generators):
            return False
    return True
