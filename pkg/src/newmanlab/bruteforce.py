"""Brute-force reference computations, independent of stabilizer chains.

Everything here works by plain product closure over element sets, so these
routines share no code path with the chain-based engine and can serve as
oracles for it.  They are only feasible for small groups (order a few
hundred) and are used by the oracle verification suites and the test
suite's frozen expected values.

Subgroup enumeration adjoins elements of prime-power order one at a time:
every finite group is generated by its elements of prime-power order
(decompose each element's cyclic group into its primary parts), so closing
the discovered family under single-element adjunction finds every subgroup.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .arith import as_prime_set, is_prime_power, pi_of
from .errors import ResourceLimitError
from .perms import Perm

_SUBGROUP_CACHE: dict = {}

BRUTE_ORDER_BOUND = 400


def clear_caches() -> None:
    _SUBGROUP_CACHE.clear()


def closure(degree: int, gens: Sequence[Perm]) -> frozenset[Perm]:
    """Product closure of a generator list, by breadth-first search."""
    ident = Perm.identity(degree)
    seen = {ident}
    frontier = deque([ident])
    while frontier:
        x = frontier.popleft()
        for g in gens:
            y = x * g
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return frozenset(seen)


def all_subgroup_sets_brute(degree: int, gens: Sequence[Perm],
                            order_bound: int = BRUTE_ORDER_BOUND) -> list[frozenset[Perm]]:
    """Every subgroup of <gens>, as element sets, by exhaustive closure.

    Starts from the trivial group and repeatedly adjoins one prime-power
    order element to each known subgroup.  Sorted deterministically by
    (order, element list)."""
    elems = closure(degree, gens)
    if len(elems) > order_bound:
        raise ResourceLimitError(
            f"order {len(elems)} exceeds brute-force bound {order_bound}")
    key = (degree, elems)
    hit = _SUBGROUP_CACHE.get(key)
    if hit is not None:
        return hit
    pp = sorted(x for x in elems if is_prime_power(x.order()))
    ident = Perm.identity(degree)
    triv = frozenset({ident})
    found: dict[frozenset[Perm], tuple[Perm, ...]] = {triv: ()}
    queue = deque([triv])
    while queue:
        s = queue.popleft()
        sgens = found[s]
        for x in pp:
            if x in s:
                continue
            t = closure(degree, sgens + (x,))
            if t not in found:
                found[t] = sgens + (x,)
                queue.append(t)
    result = sorted(found, key=lambda s: (len(s), sorted(s)))
    _SUBGROUP_CACHE[key] = result
    return result


def is_normal_set(ambient_gens: Sequence[Perm], sub: frozenset[Perm]) -> bool:
    return all(x.conj(g) in sub for x in sub for g in ambient_gens)


def max_normal_pi_subgroup(degree: int, gens: Sequence[Perm],
                           pi: Iterable[int],
                           order_bound: int = BRUTE_ORDER_BOUND) -> frozenset[Perm]:
    """The largest normal pi-subgroup, filtered out of the full subgroup
    list.  Checks that the maximum contains every other normal pi-subgroup
    (it must, since a product of normal pi-subgroups is one)."""
    ps = as_prime_set(pi)
    candidates = [s for s in all_subgroup_sets_brute(degree, gens, order_bound)
                  if pi_of(len(s)) <= ps and is_normal_set(gens, s)]
    best = max(candidates, key=len)
    assert all(s <= best for s in candidates), "normal pi-subgroups not directed"
    return best


TABLE_SEARCH_ORDER_BOUND = 48


def isomorphic_by_table_search(degree_a: int, gens_a: Sequence[Perm],
                               degree_b: int, gens_b: Sequence[Perm],
                               order_bound: int = TABLE_SEARCH_ORDER_BOUND) -> bool:
    """Isomorphism decision by backtracking bijection search over the full
    multiplication tables, with no generating-set or invariant machinery.

    Elements of the first group are mapped one at a time to same-order
    elements of the second; each assignment is propagated through the
    multiplication constraint f(x*y) = f(x)*f(y), which forces the images
    of all products of mapped elements and prunes contradictions early.
    """
    a_set = closure(degree_a, tuple(gens_a))
    b_set = closure(degree_b, tuple(gens_b))
    if len(a_set) != len(b_set):
        return False
    if len(a_set) > order_bound:
        raise ResourceLimitError(
            f"order {len(a_set)} exceeds table-search bound {order_bound}")
    a_elems = sorted(a_set)
    b_elems = sorted(b_set)
    ord_a = {x: x.order() for x in a_elems}
    ord_b = {y: y.order() for y in b_elems}
    if sorted(ord_a.values()) != sorted(ord_b.values()):
        return False

    fwd: dict[Perm, Perm] = {}
    used: set[Perm] = set()

    def propagate(x: Perm, y: Perm, trail: list[Perm]) -> bool:
        """Assign f(x) = y, then force images of products; trail records
        assignments for undo on failure."""
        queue = [(x, y)]
        while queue:
            x, y = queue.pop()
            cur = fwd.get(x)
            if cur is not None:
                if cur != y:
                    return False
                continue
            if y in used or ord_a[x] != ord_b[y]:
                return False
            fwd[x] = y
            used.add(y)
            trail.append(x)
            for z, w in list(fwd.items()):
                queue.append((x * z, y * w))
                if z != x:
                    queue.append((z * x, w * y))
        return True

    def undo(trail: list[Perm]) -> None:
        for x in trail:
            used.discard(fwd.pop(x))

    def extend() -> bool:
        x = next((e for e in a_elems if e not in fwd), None)
        if x is None:
            return True
        for y in b_elems:
            if y in used or ord_b[y] != ord_a[x]:
                continue
            trail: list[Perm] = []
            if propagate(x, y, trail) and extend():
                return True
            undo(trail)
        return False

    ident_a = Perm.identity(degree_a)
    ident_b = Perm.identity(degree_b)
    seed: list[Perm] = []
    if not propagate(ident_a, ident_b, seed):
        return False
    return extend()
