"""Permutation groups backed by deterministic stabilizer chains.

The chain construction is the classical Schreier-Sims procedure run without
randomisation: base points are always the smallest point moved by the
incoming residue, orbits are extended breadth-first in generator order, and
Schreier generators are processed from a FIFO queue.  For a fixed generator
list the resulting chain, group order, element enumeration order and
membership tests are therefore fully reproducible.

Degrees are capped (Limits.degree_cap) at the public entry points
group_from_generators and direct_product; internally constructed groups
such as coset actions may exceed the cap.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .arith import prime_factors
from .config import DEFAULT_LIMITS, Limits
from .errors import InputError, ResourceLimitError
from .perms import Perm


class _Level:
    """One stabilizer-chain level: a base point, the strong generators that
    fix all earlier bases, and a right transversal of the base orbit."""

    __slots__ = ("base", "gens", "transversal", "orbit")

    def __init__(self, base: int, degree: int):
        self.base = base
        self.gens: list[Perm] = []
        self.transversal: dict[int, Perm] = {base: Perm.identity(degree)}
        self.orbit: list[int] = [base]

    def extend_orbit(self, new_gen: Perm) -> list[int]:
        """Grow the orbit after appending new_gen, keeping existing
        transversal entries intact.  Returns the newly reached points."""
        added: list[int] = []
        for pt in list(self.orbit):
            img = new_gen[pt]
            if img not in self.transversal:
                self.transversal[img] = self.transversal[pt] * new_gen
                self.orbit.append(img)
                added.append(img)
        idx = len(self.orbit) - len(added)
        while idx < len(self.orbit):
            pt = self.orbit[idx]
            idx += 1
            rep = self.transversal[pt]
            for g in self.gens:
                img = g[pt]
                if img not in self.transversal:
                    self.transversal[img] = rep * g
                    self.orbit.append(img)
                    added.append(img)
        return added


class _Chain:
    """A mutable stabilizer chain supporting incremental generator insertion.

    A residue discovered at level j fixes the first j base points, so it is
    appended to the generator lists of every level up to j; only the Schreier
    generators touching the new generator or newly reached orbit points are
    re-examined.
    """

    __slots__ = ("degree", "levels")

    def __init__(self, degree: int):
        self.degree = degree
        self.levels: list[_Level] = []

    def sift_to_level(self, g: Perm) -> tuple[Perm, int]:
        for idx, lvl in enumerate(self.levels):
            rep = lvl.transversal.get(g[lvl.base])
            if rep is None:
                return g, idx
            g = g * rep.inverse()
        return g, len(self.levels)

    def sift(self, g: Perm) -> Perm:
        return self.sift_to_level(g)[0]

    def contains(self, g: Perm) -> bool:
        return self.sift_to_level(g)[0].is_identity()

    def order(self) -> int:
        n = 1
        for lvl in self.levels:
            n *= len(lvl.transversal)
        return n

    def add_generator(self, g: Perm) -> None:
        queue: deque[Perm] = deque([g])
        while queue:
            residue, lev = self.sift_to_level(queue.popleft())
            if residue.is_identity():
                continue
            if lev == len(self.levels):
                self.levels.append(_Level(residue.min_moved(), self.degree))
            for i in range(lev + 1):
                lvl = self.levels[i]
                old_orbit = list(lvl.orbit)
                lvl.gens.append(residue)
                added = lvl.extend_orbit(residue)
                for pt in old_orbit:
                    rep = lvl.transversal[pt]
                    queue.append(rep * residue * lvl.transversal[residue[pt]].inverse())
                for pt in added:
                    rep = lvl.transversal[pt]
                    for s in lvl.gens:
                        queue.append(rep * s * lvl.transversal[s[pt]].inverse())


def _build_chain(degree: int, gens: Iterable[Perm]) -> _Chain:
    chain = _Chain(degree)
    for g in gens:
        chain.add_generator(g)
    return chain


class PermGroup:
    """A finite permutation group with an eagerly built stabilizer chain.

    Instances are immutable once constructed and safe to share across
    threads.  Construct through group_from_generators for input validation;
    the bare constructor skips the degree cap (used for coset actions).
    """

    __slots__ = ("degree", "generators", "name", "_chain", "_order",
                 "_elements", "_elemset", "_abelian")

    def __init__(self, degree: int, generators: Iterable[Perm],
                 name: str | None = None, _chain: _Chain | None = None):
        if degree < 1:
            raise InputError(f"degree must be positive, got {degree}")
        gens = []
        for g in generators:
            if not isinstance(g, Perm):
                g = Perm.from_images(g)
            if len(g) != degree:
                raise InputError(f"generator degree {len(g)} != group degree {degree}")
            gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self.name = name
        self._chain = _chain if _chain is not None else _build_chain(degree, gens)
        self._order = self._chain.order()
        self._elements: list[Perm] | None = None
        self._elemset: frozenset[Perm] | None = None
        self._abelian: bool | None = None

    # -- basic queries -----------------------------------------------------

    @property
    def order(self) -> int:
        return self._order

    @property
    def base_points(self) -> tuple[int, ...]:
        """The chain's base points, 1-based."""
        return tuple(lvl.base + 1 for lvl in self._chain.levels)

    def is_trivial(self) -> bool:
        return self._order == 1

    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def contains(self, g: Perm) -> bool:
        if len(g) != self.degree:
            return False
        return self._chain.contains(g)

    def sift(self, g: Perm) -> Perm:
        """Residue of g after stripping through the chain (identity iff member)."""
        return self._chain.sift(g)

    def __contains__(self, g: Perm) -> bool:
        return self.contains(g)

    def __repr__(self) -> str:
        label = self.name or "group"
        return f"<{label}: degree {self.degree}, order {self._order}>"

    # -- element enumeration -----------------------------------------------

    def elements(self, limits: Limits = DEFAULT_LIMITS) -> list[Perm]:
        """All elements, in a deterministic chain-derived order."""
        if self._elements is None:
            if self._order > limits.element_bound:
                raise ResourceLimitError(
                    f"order {self._order} exceeds element enumeration bound "
                    f"{limits.element_bound}")
            elems = [Perm.identity(self.degree)]
            for lvl in reversed(self._chain.levels):
                reps = [lvl.transversal[pt] for pt in sorted(lvl.transversal)]
                elems = [h * rep for rep in reps for h in elems]
            assert len(elems) == self._order
            self._elements = elems
        return self._elements

    def element_set(self, limits: Limits = DEFAULT_LIMITS) -> frozenset[Perm]:
        if self._elemset is None:
            self._elemset = frozenset(self.elements(limits))
        return self._elemset

    def element_key(self, limits: Limits = DEFAULT_LIMITS):
        """Content-based cache key: (degree, frozenset of elements)."""
        return (self.degree, self.element_set(limits))

    # -- structural predicates ---------------------------------------------

    def is_abelian(self) -> bool:
        if self._abelian is None:
            gens = self.generators
            self._abelian = all(a * b == b * a
                                for i, a in enumerate(gens) for b in gens[i + 1:])
        return self._abelian

    def primes(self) -> tuple[int, ...]:
        """Sorted prime divisors of the group order."""
        return prime_factors(self._order)

    def derived_subgroup(self) -> "PermGroup":
        """The commutator subgroup, as the normal closure of generator
        commutators."""
        seeds = [a.comm(b) for i, a in enumerate(self.generators)
                 for b in self.generators[i + 1:]]
        gens, chain = _normal_closure_gens(self.degree, self.generators, seeds)
        return PermGroup(self.degree, gens, _chain=chain)

    def derived_series(self) -> list["PermGroup"]:
        """G >= G' >= G'' >= ... down to the first repetition."""
        series = [self]
        while True:
            nxt = series[-1].derived_subgroup()
            if nxt.order == series[-1].order:
                break
            series.append(nxt)
            if nxt.order == 1:
                break
        return series

    def is_solvable(self) -> bool:
        return self.derived_series()[-1].order == 1

    def perfect_core(self) -> "PermGroup":
        """The last term of the derived series (trivial iff solvable)."""
        return self.derived_series()[-1]

    def is_perfect(self) -> bool:
        return self.order > 1 and self.derived_subgroup().order == self.order


def _normal_closure_gens(degree: int, ambient_gens: Iterable[Perm],
                         seeds: Iterable[Perm]) -> tuple[list[Perm], _Chain]:
    """Generators and chain for the normal closure of seeds under the group
    generated by ambient_gens."""
    ambient_gens = tuple(ambient_gens)
    ngens: list[Perm] = []
    chain = _Chain(degree)
    pending: deque[Perm] = deque(s for s in seeds if not s.is_identity())
    while pending:
        x = pending.popleft()
        if chain.contains(x):
            continue
        ngens.append(x)
        chain.add_generator(x)
        pending.extend(x.conj(g) for g in ambient_gens)
    return ngens, chain


def normal_closure(group: PermGroup, seeds: Iterable[Perm]) -> PermGroup:
    """Smallest normal subgroup of group containing the seed permutations."""
    seeds = list(seeds)
    for s in seeds:
        if not group.contains(s):
            raise InputError("seed permutation lies outside the group")
    gens, chain = _normal_closure_gens(group.degree, group.generators, seeds)
    return PermGroup(group.degree, gens, _chain=chain)


def group_from_generators(degree: int, generators: Iterable, name: str | None = None,
                          limits: Limits = DEFAULT_LIMITS) -> PermGroup:
    """Validated public constructor.

    Generators may be Perm instances, 1-based image lists, or cycle-notation
    strings.  Degrees above limits.degree_cap are rejected.
    """
    if degree > limits.degree_cap:
        raise InputError(f"degree {degree} exceeds cap {limits.degree_cap}")
    gens = []
    for g in generators:
        if isinstance(g, str):
            g = Perm.from_cycles(g, degree)
        elif not isinstance(g, Perm):
            g = Perm.from_images(g)
        if len(g) != degree:
            raise InputError(f"generator degree {len(g)} != requested degree {degree}")
        gens.append(g)
    return PermGroup(degree, gens, name=name)


def trivial_group(degree: int) -> PermGroup:
    return PermGroup(degree, [])


def group_from_element_set(degree: int, elements: Iterable[Perm],
                           name: str | None = None) -> PermGroup:
    """Group from a full element set, with a greedy reduced generating list.

    Elements are scanned in sorted order and kept only when they enlarge the
    group so far, giving a short deterministic generating sequence.  The
    input must be closed under the group operations (asserted).
    """
    elems = sorted(elements)
    target = len(elems)
    gens: list[Perm] = []
    chain = _Chain(degree)
    for x in elems:
        if x.is_identity() or chain.contains(x):
            continue
        gens.append(x)
        chain.add_generator(x)
        if chain.order() == target:
            break
    assert chain.order() == target, "element set is not a subgroup"
    return PermGroup(degree, gens, name=name, _chain=chain)


def direct_product(a: PermGroup, b: PermGroup, name: str | None = None,
                   limits: Limits = DEFAULT_LIMITS) -> PermGroup:
    """External direct product acting on the disjoint union of the two
    point sets (degree = sum of degrees, capped)."""
    degree = a.degree + b.degree
    if degree > limits.degree_cap:
        raise InputError(f"product degree {degree} exceeds cap {limits.degree_cap}")
    pad_b = tuple(range(a.degree, degree))
    pad_a = tuple(range(a.degree))
    gens = [Perm(tuple(g) + pad_b) for g in a.generators]
    gens += [Perm(pad_a + tuple(i + a.degree for i in g)) for g in b.generators]
    prod = PermGroup(degree, gens, name=name)
    assert prod.order == a.order * b.order
    return prod


def coset_action(group: PermGroup, sub_elements: frozenset[Perm],
                 limits: Limits = DEFAULT_LIMITS):
    """Right-coset action of group on the cosets of a subgroup.

    Returns (action, reps, coset_of): the image group on index-many points,
    a deterministic transversal with reps[0] the identity, and the map from
    group elements to 0-based coset numbers.  For a normal subgroup this is
    the quotient group as a faithful permutation group on the cosets.
    """
    ident = group.identity()
    if ident not in sub_elements:
        raise InputError("subgroup element set lacks the identity")
    if group.order > limits.element_bound:
        raise ResourceLimitError(
            f"order {group.order} exceeds bound {limits.element_bound} for coset action")
    sub_sorted = sorted(sub_elements)
    coset_of: dict[Perm, int] = {k: 0 for k in sub_sorted}
    reps = [ident]
    queue = deque([ident])
    while queue:
        r = queue.popleft()
        for g in group.generators:
            x = r * g
            if x not in coset_of:
                idx = len(reps)
                reps.append(x)
                for k in sub_sorted:
                    coset_of[k * x] = idx
                queue.append(x)
    n = len(reps)
    assert n * len(sub_elements) == group.order == len(coset_of)
    images = [Perm(coset_of[reps[i] * g] for i in range(n)) for g in group.generators]
    action = PermGroup(n, images)
    return action, reps, coset_of


class SubgroupRef:
    """A subgroup together with the ambient group it lives in.

    Construction checks that every generator of the subgroup actually sifts
    through the ambient chain, so a SubgroupRef is containment-verified by
    construction.
    """

    __slots__ = ("ambient", "group")

    def __init__(self, ambient: PermGroup, group: PermGroup):
        if ambient.degree != group.degree:
            raise InputError("subgroup and ambient degrees differ")
        for g in group.generators:
            if not ambient.contains(g):
                raise InputError("claimed subgroup is not contained in the ambient group")
        self.ambient = ambient
        self.group = group

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def index(self) -> int:
        return self.ambient.order // self.group.order

    def element_set(self, limits: Limits = DEFAULT_LIMITS) -> frozenset[Perm]:
        return self.group.element_set(limits)

    def __repr__(self) -> str:
        return f"<subgroup of order {self.order} and index {self.index} in {self.ambient!r}>"
