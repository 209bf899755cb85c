"""Complete subgroup-lattice enumeration up to conjugacy.

Subgroup classes are grown upward from the trivial group by two extension
rules applied to each class representative H:

  A. cyclic prime extensions: for x in N_G(H) with x**p in H for a prime p,
     the product <H, x> is a subgroup containing H with prime index.  Walking
     a composition series shows every step with cyclic quotient arises this
     way, so rule A alone is complete whenever all subgroups are solvable.

  B. perfect extensions: for a perfect subgroup S <= N_G(H), the product
     H*S is a subgroup.  If U/H is a nonabelian simple composition factor
     then U = H * U^infinity with U^infinity perfect and contained in
     N_G(U-side conjugate of H), so rule B supplies exactly the steps rule A
     cannot.  All perfect subgroups live inside the perfect core G^infinity;
     they are found there by closing two-generated subgroups (every finite
     simple group is 2-generated) under joins and conjugation.

Each discovered subgroup is expanded to its full conjugacy class at once,
so the worklist runs over classes, with the class size cross-checked
against the normalizer index.  Everything is deterministic: elements are
scanned in sorted order and orbits grown breadth-first in generator order.
"""

from __future__ import annotations

from collections import deque

from .arith import is_prime, prime_factors
from .config import DEFAULT_LIMITS, Limits
from .errors import InputError, ResourceLimitError
from .groups import (PermGroup, SubgroupRef, group_from_element_set)
from .perms import Perm

_CLASS_CACHE: dict = {}


def clear_caches() -> None:
    _CLASS_CACHE.clear()


class SubgroupClass:
    """A conjugacy class of subgroups of a fixed ambient group.

    representative is the class member whose sorted element list is
    lexicographically least, so it is reproducible across runs.  members
    holds the element sets of all conjugates in discovery order.
    """

    __slots__ = ("representative", "members", "normalizer_order")

    def __init__(self, representative: SubgroupRef,
                 members: tuple[frozenset[Perm], ...], normalizer_order: int):
        self.representative = representative
        self.members = members
        self.normalizer_order = normalizer_order

    @property
    def order(self) -> int:
        return self.representative.order

    @property
    def class_size(self) -> int:
        return len(self.members)

    def contains_subgroup(self, elem_set: frozenset[Perm]) -> bool:
        """True when some member of this class contains the given set."""
        return any(elem_set <= m for m in self.members)

    def __repr__(self) -> str:
        return (f"<class of {self.class_size} subgroup(s) of order {self.order}>")


def _normalizer_elements(ambient_elems: list[Perm], sub_gens: tuple[Perm, ...],
                         sub_set: frozenset[Perm]) -> list[Perm]:
    out = []
    for x in ambient_elems:
        if all(h.conj(x) in sub_set for h in sub_gens):
            out.append(x)
    return out


def element_conjugacy_classes(G: PermGroup,
                              limits: Limits = DEFAULT_LIMITS) -> list[list[Perm]]:
    """Conjugacy classes of elements; each class is listed with its
    lexicographically least member first, classes sorted by that member."""
    seen: set[Perm] = set()
    classes = []
    for x in sorted(G.elements(limits)):
        if x in seen:
            continue
        orbit = [x]
        seen.add(x)
        i = 0
        while i < len(orbit):
            y = orbit[i]
            i += 1
            for g in G.generators:
                z = y.conj(g)
                if z not in seen:
                    seen.add(z)
                    orbit.append(z)
        classes.append([orbit[0]] + sorted(orbit[1:]))
    return classes


def _perfect_subgroup_sets(G: PermGroup, limits: Limits):
    """All nontrivial perfect subgroups of G, as (element_set, generators)
    pairs sorted deterministically.  Found inside the perfect core by a
    two-generator scan, then closed under conjugation and joins."""
    core = G.perfect_core()
    if core.order == 1:
        return []
    found: dict[frozenset[Perm], tuple[Perm, ...]] = {}

    def note(group: PermGroup) -> bool:
        if group.is_perfect():
            s = group.element_set(limits)
            if s not in found:
                found[s] = group.generators
                return True
        return False

    reps = [cls[0] for cls in element_conjugacy_classes(core, limits)]
    core_elems = sorted(core.elements(limits))
    for a in reps:
        if a.is_identity():
            continue
        for b in core_elems:
            cand = PermGroup(G.degree, (a, b))
            # Burnside: a group with fewer than 3 prime divisors is solvable,
            # hence not perfect -- cheap rejection before the derived series
            if cand.order >= 60 and len(prime_factors(cand.order)) >= 3:
                note(cand)
    # close under ambient conjugation and pairwise joins
    changed = True
    while changed:
        changed = False
        for s, gens in list(found.items()):
            for g in G.generators:
                cset = frozenset(x.conj(g) for x in s)
                if cset not in found:
                    found[cset] = tuple(h.conj(g) for h in gens)
                    changed = True
        pairs = list(found.items())
        for i1, (s1, gens1) in enumerate(pairs):
            for s2, gens2 in pairs[i1 + 1:]:
                if s1 <= s2 or s2 <= s1:
                    continue
                join = PermGroup(G.degree, gens1 + gens2)
                if join.order <= limits.lattice_bound and note(join):
                    changed = True
    return sorted(found.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))


def subgroup_classes(G: PermGroup,
                     limits: Limits = DEFAULT_LIMITS) -> tuple[SubgroupClass, ...]:
    """All conjugacy classes of subgroups of G, sorted by (order, elements
    of the representative).  Results are cached by group content."""
    if G.order > limits.lattice_bound:
        raise ResourceLimitError(
            f"order {G.order} exceeds lattice bound {limits.lattice_bound}")
    key = G.element_key(limits)
    hit = _CLASS_CACHE.get(key)
    if hit is not None:
        return hit

    elems = sorted(G.elements(limits))
    ident = G.identity()

    class_members: list[list[frozenset[Perm]]] = []
    class_of: dict[frozenset[Perm], int] = {}

    def register(elem_set: frozenset[Perm]) -> bool:
        """Record the conjugacy class of a new subgroup; True when new."""
        if elem_set in class_of:
            return False
        idx = len(class_members)
        orbit = [elem_set]
        class_of[elem_set] = idx
        i = 0
        while i < len(orbit):
            s = orbit[i]
            i += 1
            for g in G.generators:
                t = frozenset(x.conj(g) for x in s)
                if t not in class_of:
                    class_of[t] = idx
                    orbit.append(t)
        class_members.append(orbit)
        return True

    perfects = _perfect_subgroup_sets(G, limits)

    register(frozenset({ident}))
    queue: deque[int] = deque([0])
    results: list[tuple[frozenset[Perm], tuple[frozenset[Perm], ...], int]] = []
    processed = 0
    while queue:
        idx = queue.popleft()
        processed += 1
        orbit = class_members[idx]
        canonical = min(orbit, key=lambda s: sorted(s))
        h_group = group_from_element_set(G.degree, canonical)
        h_gens = h_group.generators
        h_set = canonical
        n_elems = _normalizer_elements(elems, h_gens, h_set) if h_gens else elems
        assert len(orbit) * len(n_elems) == G.order, "class size != normalizer index"
        results.append((canonical, tuple(orbit), len(n_elems)))

        before = len(class_members)
        # rule A: adjoin x in N_G(H) with x**p in H
        covered = set(h_set)
        for x in n_elems:
            if x in covered:
                continue
            k = 1
            y = x
            while y not in h_set:
                y = y * x
                k += 1
            if is_prime(k):
                ext = PermGroup(G.degree, h_gens + (x,))
                assert ext.order == k * len(h_set)
                covered |= ext.element_set(limits)
                register(ext.element_set(limits))
        # rule B: adjoin a perfect subgroup of the normalizer
        if perfects:
            n_set = frozenset(n_elems)
            for s_set, s_gens in perfects:
                if s_set <= n_set and not s_set <= h_set:
                    ext = PermGroup(G.degree, h_gens + s_gens)
                    register(ext.element_set(limits))
        queue.extend(range(before, len(class_members)))

    assert processed == len(class_members)
    order_index = sorted(range(len(results)),
                         key=lambda i: (len(results[i][0]), sorted(results[i][0])))
    out = []
    for i in order_index:
        canonical, members, n_order = results[i]
        rep = SubgroupRef(G, group_from_element_set(G.degree, canonical))
        out.append(SubgroupClass(rep, members, n_order))
    result = tuple(out)
    _CLASS_CACHE[key] = result
    return result


def all_subgroup_sets(G: PermGroup,
                      limits: Limits = DEFAULT_LIMITS) -> list[frozenset[Perm]]:
    """Element sets of every subgroup of G (all classes expanded)."""
    sets = [m for cls in subgroup_classes(G, limits) for m in cls.members]
    return sorted(sets, key=lambda s: (len(s), sorted(s)))


def _as_ref(G: PermGroup, H) -> SubgroupRef:
    if isinstance(H, SubgroupRef):
        if H.ambient is not G and H.ambient.element_key() != G.element_key():
            raise InputError("subgroup reference belongs to a different ambient group")
        return H
    return SubgroupRef(G, H)


def is_normal(G: PermGroup, H) -> bool:
    """True when H is a normal subgroup of G (checked on generators)."""
    ref = _as_ref(G, H)
    h_set = ref.element_set()
    return all(h.conj(g) in h_set
               for h in ref.group.generators for g in G.generators)


def normalizer(G: PermGroup, H, limits: Limits = DEFAULT_LIMITS) -> SubgroupRef:
    """N_G(H), by scanning the elements of G."""
    ref = _as_ref(G, H)
    n_elems = _normalizer_elements(sorted(G.elements(limits)),
                                   ref.group.generators, ref.element_set(limits))
    return SubgroupRef(G, group_from_element_set(G.degree, n_elems))


def core_in(G: PermGroup, H, limits: Limits = DEFAULT_LIMITS) -> SubgroupRef:
    """The normal core of H in G: the intersection of all conjugates of H."""
    ref = _as_ref(G, H)
    h_set = ref.element_set(limits)
    inter = set(h_set)
    orbit = [h_set]
    seen = {h_set}
    i = 0
    while i < len(orbit) and len(inter) > 1:
        s = orbit[i]
        i += 1
        for g in G.generators:
            t = frozenset(x.conj(g) for x in s)
            if t not in seen:
                seen.add(t)
                orbit.append(t)
                inter &= t
    return SubgroupRef(G, group_from_element_set(G.degree, frozenset(inter)))


def is_maximal(G: PermGroup, H, limits: Limits = DEFAULT_LIMITS) -> bool:
    """True when H is maximal in G: proper, with nothing strictly between."""
    ref = _as_ref(G, H)
    if ref.order == G.order:
        raise InputError("maximality is undefined for the whole group")
    h_set = ref.element_set(limits)
    for cls in subgroup_classes(G, limits):
        if ref.order < cls.order < G.order and cls.order % ref.order == 0:
            if cls.contains_subgroup(h_set):
                return False
    return True


def maximal_subgroup_classes(G: PermGroup,
                             limits: Limits = DEFAULT_LIMITS) -> tuple[SubgroupClass, ...]:
    """The classes whose members are maximal subgroups of G."""
    classes = subgroup_classes(G, limits)
    out = []
    for cls in classes:
        if cls.order == G.order:
            continue
        canonical = cls.representative.element_set(limits)
        blocked = any(other.order > cls.order and other.order < G.order
                      and other.order % cls.order == 0
                      and other.contains_subgroup(canonical)
                      for other in classes)
        if not blocked:
            out.append(cls)
    return tuple(out)


def normal_subgroups(G: PermGroup,
                     limits: Limits = DEFAULT_LIMITS) -> tuple[SubgroupRef, ...]:
    """All normal subgroups (the singleton conjugacy classes), by order."""
    return tuple(cls.representative for cls in subgroup_classes(G, limits)
                 if cls.class_size == 1)
