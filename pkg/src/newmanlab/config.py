"""Size bounds used throughout the package.

All the heavy operations (lattice enumeration, isomorphism search,
automorphism enumeration) take an explicit ``limits`` argument so a caller
can raise or lower budgets for a single call without touching global state.
"""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Limits:
    """Resource budgets for group computations.

    degree_cap        -- largest permutation degree accepted from callers
    lattice_bound     -- largest group order for subgroup-lattice enumeration
    iso_bound         -- largest group order for isomorphism testing
    aut_bound         -- largest group order for automorphism enumeration
    element_bound     -- largest group order for full element listing
    """

    degree_cap: int = 64
    lattice_bound: int = 2000
    iso_bound: int = 2000
    aut_bound: int = 1000
    element_bound: int = 5000

    def with_lattice_bound(self, bound: int) -> "Limits":
        return replace(self, lattice_bound=bound)


DEFAULT_LIMITS = Limits()
