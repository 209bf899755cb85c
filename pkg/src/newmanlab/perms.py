"""Permutations of {1, ..., n} as immutable image tuples.

A Perm is a tuple subclass: entry i holds the 0-based image of point i, so
multiplication and hashing stay cheap enough for the closure-heavy code in
the rest of the package.  The public face (constructors, ``images``,
``apply``, cycle notation) is 1-based throughout; only the raw tuple layer
is 0-based.

Products compose left to right: ``(p * q)(x) = q(p(x))``, i.e. points are
acted on by p first.  This matches the exponent convention x^(pq) = (x^p)^q
used in the group-theory modules.
"""

from __future__ import annotations

import re
from math import lcm
from typing import Iterable, Iterator

from .errors import InputError

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Perm(tuple):
    """A permutation, stored as the tuple of 0-based images."""

    __slots__ = ()

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(range(degree))

    @classmethod
    def from_images(cls, images: Iterable[int]) -> "Perm":
        """Build from the 1-based image list [p(1), p(2), ..., p(n)]."""
        imgs = tuple(images)
        n = len(imgs)
        if sorted(imgs) != list(range(1, n + 1)):
            raise InputError(f"image list {imgs!r} is not a bijection of 1..{n}")
        return cls(i - 1 for i in imgs)

    @classmethod
    def from_cycles(cls, text: str, degree: int) -> "Perm":
        """Parse product-of-cycles notation, e.g. ``(1,2,3)(4,5)``.

        Points may be separated by commas or whitespace.  ``()`` and the
        empty string denote the identity.  Cycles are applied left to right
        (irrelevant for the disjoint cycles used in corpus files).
        """
        if degree < 1:
            raise InputError(f"degree must be positive, got {degree}")
        text = text.strip()
        if text in ("", "()"):
            return cls.identity(degree)
        stripped = _CYCLE_RE.sub("", text).strip()
        if stripped:
            raise InputError(f"unparsable cycle text {text!r}")
        images = list(range(degree))
        for body in _CYCLE_RE.findall(text):
            body = body.strip()
            if not body:
                continue
            try:
                points = [int(tok) for tok in re.split(r"[,\s]+", body)]
            except ValueError:
                raise InputError(f"bad cycle {body!r} in {text!r}") from None
            if len(set(points)) != len(points):
                raise InputError(f"repeated point in cycle ({body})")
            for pt in points:
                if not 1 <= pt <= degree:
                    raise InputError(f"point {pt} outside 1..{degree}")
            cyc = {points[i] - 1: points[(i + 1) % len(points)] - 1 for i in range(len(points))}
            images = [cyc.get(img, img) for img in images]
        return cls(images)

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self)

    @property
    def images(self) -> tuple[int, ...]:
        """The 1-based image tuple (p(1), ..., p(n))."""
        return tuple(i + 1 for i in self)

    def apply(self, point: int) -> int:
        """Image of a 1-based point."""
        if not 1 <= point <= len(self):
            raise InputError(f"point {point} outside 1..{len(self)}")
        return self[point - 1] + 1

    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self))

    def min_moved(self) -> int | None:
        """Smallest (0-based) moved point, or None for the identity."""
        for i, img in enumerate(self):
            if img != i:
                return i
        return None

    def support(self) -> tuple[int, ...]:
        """The 1-based points this permutation moves."""
        return tuple(i + 1 for i, img in enumerate(self) if img != i)

    # -- arithmetic --------------------------------------------------------

    def __mul__(self, other: "Perm") -> "Perm":  # type: ignore[override]
        assert len(self) == len(other)
        return Perm(other[i] for i in self)

    def inverse(self) -> "Perm":
        inv = [0] * len(self)
        for i, img in enumerate(self):
            inv[img] = i
        return Perm(inv)

    def __pow__(self, k: int) -> "Perm":  # type: ignore[override]
        if k < 0:
            return self.inverse() ** (-k)
        out = Perm.identity(len(self))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self, g: "Perm") -> "Perm":
        """The conjugate g^-1 * self * g, computed in one pass."""
        assert len(self) == len(g)
        out = [0] * len(self)
        for i, si in enumerate(self):
            out[g[i]] = g[si]
        return Perm(out)

    def comm(self, other: "Perm") -> "Perm":
        """The commutator self^-1 * other^-1 * self * other."""
        return self.inverse() * other.inverse() * self * other

    def order(self) -> int:
        return lcm(*(len(c) for c in self._cycles())) if not self.is_identity() else 1

    # -- formatting --------------------------------------------------------

    def _cycles(self) -> Iterator[list[int]]:
        """Nontrivial cycles as 0-based point lists, smallest point first."""
        seen = [False] * len(self)
        for start in range(len(self)):
            if seen[start] or self[start] == start:
                continue
            cyc = [start]
            seen[start] = True
            pt = self[start]
            while pt != start:
                cyc.append(pt)
                seen[pt] = True
                pt = self[pt]
            yield cyc

    def cycle_string(self) -> str:
        """Disjoint-cycle notation on 1-based points, ``()`` for identity."""
        parts = ["(" + ",".join(str(p + 1) for p in cyc) + ")" for cyc in self._cycles()]
        return "".join(parts) if parts else "()"

    def __repr__(self) -> str:
        return f"Perm[{self.cycle_string()}]"


def all_perms_of_degree(degree: int) -> list[Perm]:
    """Every permutation of 1..degree, in lexicographic image order."""
    from itertools import permutations

    return [Perm(p) for p in permutations(range(degree))]
