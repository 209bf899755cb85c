"""Corpus files: named generator lists for benchmark groups.

A corpus is a UTF-8 text file, one entry per line:

    name<TAB>degree<TAB>generators[<TAB>order[<TAB>tags]]

where generators is a semicolon-separated list of cycle-notation strings
(e.g. ``(1,2,3,4);(1,2)``), order is the optional declared group order and
tags an optional comma-separated label list.  Lines starting with ``#`` and
blank lines are ignored.  Loading validates each entry: the generator
strings must parse at the declared degree, names must be unique, and a
declared order must match the constructed group.

The module also provides builders for the standard families the shipped
corpus is assembled from.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .config import DEFAULT_LIMITS, Limits
from .errors import CorpusError, NewmanlabError
from .groups import PermGroup, direct_product, group_from_generators
from .perms import Perm
from .structure import qd, sylow_subgroup


@dataclass(frozen=True)
class CorpusEntry:
    """One named group: degree, generator strings, declared order, tags."""

    name: str
    degree: int
    generator_strings: tuple[str, ...]
    declared_order: int | None = None
    tags: tuple[str, ...] = ()

    def build(self, limits: Limits = DEFAULT_LIMITS) -> PermGroup:
        group = group_from_generators(self.degree, self.generator_strings,
                                      name=self.name, limits=limits)
        if self.declared_order is not None and group.order != self.declared_order:
            raise CorpusError(
                f"entry {self.name!r}: declared order {self.declared_order} but "
                f"generators give {group.order}")
        return group

    def to_line(self) -> str:
        fields = [self.name, str(self.degree), ";".join(self.generator_strings)]
        if self.declared_order is not None or self.tags:
            fields.append("" if self.declared_order is None else str(self.declared_order))
        if self.tags:
            fields.append(",".join(self.tags))
        return "\t".join(fields)


def entry_from_group(name: str, group: PermGroup,
                     tags: tuple[str, ...] = ()) -> CorpusEntry:
    gens = tuple(g.cycle_string() for g in group.generators) or ("()",)
    return CorpusEntry(name, group.degree, gens, group.order, tags)


def parse_corpus(text: str) -> list[CorpusEntry]:
    """Parse corpus text; raises CorpusError with a line number on any
    malformed line or duplicate name."""
    entries: list[CorpusEntry] = []
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) < 3:
            raise CorpusError("expected at least name, degree and generators "
                              f"separated by tabs, got {len(fields)} field(s)", lineno)
        name = fields[0].strip()
        if not name:
            raise CorpusError("empty entry name", lineno)
        if name in seen:
            raise CorpusError(f"duplicate entry name {name!r} "
                              f"(first seen on line {seen[name]})", lineno)
        seen[name] = lineno
        try:
            degree = int(fields[1])
        except ValueError:
            raise CorpusError(f"degree {fields[1]!r} is not an integer", lineno) from None
        gen_strings = tuple(s.strip() for s in fields[2].split(";") if s.strip())
        if not gen_strings:
            gen_strings = ("()",)
        declared: int | None = None
        if len(fields) >= 4 and fields[3].strip():
            try:
                declared = int(fields[3])
            except ValueError:
                raise CorpusError(f"order {fields[3]!r} is not an integer", lineno) from None
        tags: tuple[str, ...] = ()
        if len(fields) >= 5 and fields[4].strip():
            tags = tuple(t.strip() for t in fields[4].split(",") if t.strip())
        entries.append(CorpusEntry(name, degree, gen_strings, declared, tags))
    return entries


def load_corpus(path, validate: bool = True,
                limits: Limits = DEFAULT_LIMITS) -> list[CorpusEntry]:
    """Read and (by default) validate a corpus file.

    Validation builds every group, which checks cycle strings against the
    degree, the degree against the cap, and the declared order against the
    constructed one."""
    text = Path(path).read_text(encoding="utf-8")
    entries = parse_corpus(text)
    if validate:
        for entry in entries:
            try:
                entry.build(limits)
            except CorpusError:
                raise
            except NewmanlabError as exc:
                raise CorpusError(f"entry {entry.name!r}: {exc}") from exc
    return entries


def write_corpus(entries, path, header: str | None = None) -> None:
    lines = []
    if header:
        lines.extend("# " + h for h in header.splitlines())
    lines.extend(e.to_line() for e in entries)
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


# -- family builders -------------------------------------------------------

def cyclic(n: int) -> PermGroup:
    """C_n as the n-cycle on n points (C_1 on one point)."""
    if n == 1:
        return PermGroup(1, [], name="C1")
    gen = Perm.from_cycles("(" + ",".join(str(i) for i in range(1, n + 1)) + ")", n)
    return PermGroup(n, [gen], name=f"C{n}")


def dihedral(n: int) -> PermGroup:
    """Dihedral group of order 2n on n points (n >= 3)."""
    rot = Perm(tuple((i + 1) % n for i in range(n)))
    flip = Perm(tuple((n - i) % n for i in range(n)))
    group = PermGroup(n, [rot, flip], name=f"D{2 * n}")
    assert group.order == 2 * n
    return group


def symmetric(n: int) -> PermGroup:
    gens = [Perm.from_cycles("(" + ",".join(map(str, range(1, n + 1))) + ")", n)]
    if n >= 2:
        gens.append(Perm.from_cycles("(1,2)", n))
    return PermGroup(n, gens, name=f"S{n}")


def alternating(n: int) -> PermGroup:
    gens = [Perm.from_cycles(f"({i},{i + 1},{i + 2})", n) for i in range(1, n - 1)]
    group = PermGroup(n, gens, name=f"A{n}")
    assert group.order * 2 == symmetric(n).order
    return group


def elementary_abelian(p: int, k: int) -> PermGroup:
    """C_p^k on p*k points (one p-cycle per factor)."""
    group = cyclic(p)
    for _ in range(k - 1):
        group = direct_product(group, cyclic(p))
    return PermGroup(group.degree, group.generators, name=f"E{p ** k}",
                     _chain=group._chain)


def quaternion8() -> PermGroup:
    """Q_8 in its regular representation on 8 points."""
    group = PermGroup(8, [Perm.from_cycles("(1,2,3,4)(5,8,7,6)", 8),
                          Perm.from_cycles("(1,5,3,7)(2,6,4,8)", 8)], name="Q8")
    assert group.order == 8
    # exactly one involution: the defining property separating Q8 from D8
    assert sum(1 for x in group.elements() if x.order() == 2) == 1
    return group


def extraspecial27_exponent3() -> PermGroup:
    """3^(1+2) of exponent 3: the Sylow 3-subgroup of Qd(3), on 9 points."""
    group = sylow_subgroup(qd(3), 3).group
    named = PermGroup(group.degree, group.generators, name="ES27+")
    assert named.order == 27
    assert all(x.order() <= 3 for x in named.elements())
    return named


def extraspecial27_exponent9() -> PermGroup:
    """3^(1+2) of exponent 9: C_9 extended by the x -> 4x automorphism."""
    a = Perm.from_cycles("(1,2,3,4,5,6,7,8,9)", 9)
    # on points 0..8 of Z/9: multiplication by 4, an order-3 automorphism
    b = Perm(tuple((4 * i) % 9 for i in range(9)))
    group = PermGroup(9, [a, b], name="ES27-")
    assert group.order == 27
    assert any(x.order() == 9 for x in group.elements())
    assert not group.is_abelian()
    return group
