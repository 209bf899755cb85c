"""Explicit isomorphisms between small permutation groups.

An IsoMap carries a source group, a target group and one image per source
generator; the full element map is the closure table built breadth-first
from the identity.  Building the table checks every (element, generator)
product edge, which is exactly the statement that the map is a
homomorphism, and an injectivity check alongside makes it an isomorphism
onto its image.

are_isomorphic searches for such a map by backtracking over generator
images.  Cheap invariants (order, abelianness, element-order multiset,
derived-series shape) run first and can only reject genuinely
non-isomorphic pairs; candidate images are filtered by element order and
conjugacy-class size.  The search is deterministic: the source generating
sequence is greedily minimised preferring high-order elements, and
candidates are tried in sorted element order.
"""

from __future__ import annotations

from collections import Counter, deque
from typing import Iterator, Sequence

from .config import DEFAULT_LIMITS, Limits
from .errors import InputError, ResourceLimitError
from .groups import PermGroup, SubgroupRef, _Chain
from .lattice import element_conjugacy_classes
from .perms import Perm

_INVARIANT_CACHE: dict = {}

AUTOMORPHISM_COUNT_CAP = 200_000


def clear_caches() -> None:
    _INVARIANT_CACHE.clear()


class IsoMap:
    """A homomorphism given by images of the source group's generators.

    Validity as an isomorphism is certified by building the closure table;
    construction alone only checks degrees and that images lie in the
    target.
    """

    __slots__ = ("source", "target", "gen_images", "_table")

    def __init__(self, source: PermGroup, target: PermGroup,
                 gen_images: Sequence[Perm], _table: dict | None = None):
        gen_images = tuple(gen_images)
        if len(gen_images) != len(source.generators):
            raise InputError("need exactly one image per source generator")
        for h in gen_images:
            if not target.contains(h):
                raise InputError("generator image lies outside the target group")
        self.source = source
        self.target = target
        self.gen_images = gen_images
        self._table = _table

    def table(self, limits: Limits = DEFAULT_LIMITS) -> dict[Perm, Perm]:
        if self._table is None:
            t = _closure_table(self.source, self.gen_images, self.target.identity())
            if t is None:
                raise InputError("generator images do not define an injective homomorphism")
            self._table = t
        return self._table

    def apply(self, x: Perm, limits: Limits = DEFAULT_LIMITS) -> Perm:
        t = self.table(limits)
        img = t.get(x)
        if img is None:
            raise InputError("element lies outside the source group")
        return img

    def is_valid(self, limits: Limits = DEFAULT_LIMITS) -> bool:
        """True when this is an isomorphism from source onto target."""
        if self.source.order != self.target.order:
            return False
        try:
            t = self.table(limits)
        except InputError:
            return False
        return len(t) == self.source.order

    def inverse(self, limits: Limits = DEFAULT_LIMITS) -> "IsoMap":
        t = self.table(limits)
        if len(t) != self.source.order or self.source.order != self.target.order:
            raise InputError("only a bijective map can be inverted")
        rev = {v: k for k, v in t.items()}
        return IsoMap(self.target, self.source,
                      tuple(rev[g] for g in self.target.generators), _table=rev)

    def __repr__(self) -> str:
        return (f"<isomap {self.source!r} -> {self.target!r} on "
                f"{len(self.gen_images)} generators>")


def _closure_table(source: PermGroup, gen_images: Sequence[Perm],
                   target_identity: Perm) -> dict[Perm, Perm] | None:
    """BFS closure of the generator assignment; None on any homomorphism
    conflict or injectivity failure."""
    table = {source.identity(): target_identity}
    used = {target_identity}
    frontier = deque([source.identity()])
    pairs = list(zip(source.generators, gen_images))
    while frontier:
        x = frontier.popleft()
        fx = table[x]
        for g, h in pairs:
            y = x * g
            fy = fx * h
            cur = table.get(y)
            if cur is not None:
                if cur != fy:
                    return None
            else:
                if fy in used:
                    return None
                table[y] = fy
                used.add(fy)
                frontier.append(y)
    return table


def _structure_invariants(G: PermGroup, limits: Limits):
    """(order, abelian, element-order multiset, derived-series orders) --
    agreeing on all four is necessary for isomorphism."""
    key = G.element_key(limits)
    hit = _INVARIANT_CACHE.get(key)
    if hit is None:
        orders = tuple(sorted(Counter(x.order() for x in G.elements(limits)).items()))
        series = tuple(d.order for d in G.derived_series())
        hit = (G.order, G.is_abelian(), orders, series)
        _INVARIANT_CACHE[key] = hit
    return hit


def _element_invariant_map(G: PermGroup, limits: Limits) -> dict[Perm, tuple[int, int]]:
    """Per-element (order, conjugacy-class size), preserved by any
    isomorphism."""
    out: dict[Perm, tuple[int, int]] = {}
    for cls in element_conjugacy_classes(G, limits):
        inv = (cls[0].order(), len(cls))
        for x in cls:
            out[x] = inv
    return out


def _greedy_generating_sequence(G: PermGroup, limits: Limits) -> list[Perm]:
    """A short deterministic generating sequence: scan elements preferring
    high order, keeping those that enlarge the group generated so far."""
    gens: list[Perm] = []
    chain = _Chain(G.degree)
    for x in sorted(G.elements(limits), key=lambda p: (-p.order(), p)):
        if chain.contains(x):
            continue
        gens.append(x)
        chain.add_generator(x)
        if chain.order() == G.order:
            break
    return gens


def _search_isomorphisms(source: PermGroup, target: PermGroup,
                         limits: Limits) -> Iterator[IsoMap]:
    """Yield isomorphisms source -> target in deterministic order.

    Assumes the structure invariants already agree.  The trivial group is
    handled inline (one empty map)."""
    src_gens = _greedy_generating_sequence(source, limits)
    if not src_gens:
        base = PermGroup(source.degree, [])
        yield IsoMap(base, target, ())
        return
    s_inv = _element_invariant_map(source, limits)
    t_inv = _element_invariant_map(target, limits)
    t_elems = sorted(target.elements(limits))
    candidates = []
    for g in src_gens:
        inv = s_inv[g]
        cand = [h for h in t_elems if t_inv[h] == inv]
        if not cand:
            return
        candidates.append(cand)
    # depth-first over generator images, rebuilding the partial closure
    # table at each node; a None table prunes the branch immediately
    partials = [PermGroup(source.degree, tuple(src_gens[:d + 1]))
                for d in range(len(src_gens))]
    sub_source = partials[-1]
    t_ident = target.identity()
    assignment: list[Perm] = []

    def rec(depth: int) -> Iterator[IsoMap]:
        last = depth + 1 == len(src_gens)
        partial = partials[depth]
        for h in candidates[depth]:
            assignment.append(h)
            table = _closure_table(partial, tuple(assignment), t_ident)
            if table is not None:
                if last:
                    if len(table) == source.order:
                        yield IsoMap(sub_source, target, tuple(assignment),
                                     _table=table)
                else:
                    yield from rec(depth + 1)
            assignment.pop()

    yield from rec(0)


def are_isomorphic(G: PermGroup, H: PermGroup,
                   limits: Limits = DEFAULT_LIMITS) -> IsoMap | None:
    """An explicit isomorphism G -> H, or None when none exists."""
    for grp in (G, H):
        if grp.order > limits.iso_bound:
            raise ResourceLimitError(
                f"order {grp.order} exceeds isomorphism bound {limits.iso_bound}")
    if _structure_invariants(G, limits) != _structure_invariants(H, limits):
        return None
    for iso in _search_isomorphisms(G, H, limits):
        return iso
    return None


def iter_automorphisms(G: PermGroup,
                       limits: Limits = DEFAULT_LIMITS) -> Iterator[IsoMap]:
    """All automorphisms of G, lazily, in deterministic order."""
    if G.order > limits.aut_bound:
        raise ResourceLimitError(
            f"order {G.order} exceeds automorphism bound {limits.aut_bound}")
    count = 0
    for iso in _search_isomorphisms(G, G, limits):
        count += 1
        if count > AUTOMORPHISM_COUNT_CAP:
            raise ResourceLimitError(
                f"more than {AUTOMORPHISM_COUNT_CAP} automorphisms")
        yield iso


def automorphism_generators(G: PermGroup,
                            limits: Limits = DEFAULT_LIMITS) -> list[IsoMap]:
    """Every automorphism of G (a generating set, exhaustively listed)."""
    return list(iter_automorphisms(G, limits))


def is_phi_invariant(N, phi: IsoMap, limits: Limits = DEFAULT_LIMITS) -> bool:
    """True when phi maps the subgroup N onto itself.

    N must lie inside both the source and the target of phi; generator
    images decide, since phi(N) has the same order as N."""
    group = N.group if isinstance(N, SubgroupRef) else N
    n_set = group.element_set(limits)
    for g in group.generators:
        if not phi.source.contains(g):
            raise InputError("subgroup is not contained in the map's source")
    return all(phi.apply(g, limits) in n_set for g in group.generators)


def maximal_phi_invariant_core(G: PermGroup, H, K, phi: IsoMap,
                               limits: Limits = DEFAULT_LIMITS) -> SubgroupRef:
    """The largest normal subgroup of G inside H and K with phi(N) = N.

    Candidates are the normal subgroups of G contained in both H and K and
    mapped to themselves by phi; their join is again normal, phi-invariant
    and contained in H and K, hence is the unique maximum.
    """
    from .lattice import normal_subgroups

    h_group = H.group if isinstance(H, SubgroupRef) else H
    k_group = K.group if isinstance(K, SubgroupRef) else K
    if phi.source.element_set(limits) != h_group.element_set(limits):
        raise InputError("phi's source is not H")
    if phi.target.element_set(limits) != k_group.element_set(limits):
        raise InputError("phi's target is not K")
    meet = h_group.element_set(limits) & k_group.element_set(limits)
    gens: list[Perm] = []
    for n in normal_subgroups(G, limits):
        if not n.element_set(limits) <= meet:
            continue
        if all(phi.apply(g, limits) in n.element_set(limits)
               for g in n.group.generators):
            gens.extend(n.group.generators)
    core = PermGroup(G.degree, gens) if gens else PermGroup(G.degree, [])
    result = SubgroupRef(G, core)
    assert result.element_set(limits) <= meet
    return result
