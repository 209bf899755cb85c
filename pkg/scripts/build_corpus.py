#!/usr/bin/env python3
"""Regenerate corpus/standard.tsv.

The corpus mixes classical families (cyclic, dihedral, elementary abelian,
extraspecial), the affine groups Qd(r), every subgroup-conjugacy-class
representative of S5 and S6, and curated direct products.  Most entries
are solvable of order at most 500 so the transfer-triple scan covers them;
a few larger or non-solvable groups are kept to exercise the skip paths.

The output is deterministic: running this script twice produces identical
bytes, and the shipped file must match.
"""

from __future__ import annotations

import sys
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from newmanlab.corpus import (CorpusEntry, alternating, cyclic, dihedral,
                              elementary_abelian, entry_from_group,
                              extraspecial27_exponent3,
                              extraspecial27_exponent9, quaternion8,
                              symmetric, write_corpus)
from newmanlab.groups import PermGroup, direct_product
from newmanlab.lattice import subgroup_classes
from newmanlab.structure import qd


def harvested(prefix: str, group: PermGroup, tag: str) -> list[CorpusEntry]:
    """One entry per proper nontrivial subgroup class, named by order with
    a disambiguating counter."""
    seen: Counter[int] = Counter()
    out = []
    for cls in subgroup_classes(group):
        if cls.order in (1, group.order):
            continue
        seen[cls.order] += 1
        name = f"{prefix}-{cls.order}-{seen[cls.order]}"
        out.append(entry_from_group(name, cls.representative.group, (tag,)))
    return out


def build_entries() -> list[CorpusEntry]:
    entries: list[CorpusEntry] = []

    for n in range(1, 65):
        entries.append(entry_from_group(f"c{n}", cyclic(n), ("cyclic",)))

    for n in range(3, 33):
        entries.append(entry_from_group(f"d{2 * n}", dihedral(n), ("dihedral",)))

    for p, kmax in ((2, 6), (3, 3), (5, 2), (7, 2)):
        for k in range(2, kmax + 1):
            entries.append(entry_from_group(f"e{p ** k}", elementary_abelian(p, k),
                                            ("elementary-abelian",)))

    entries.append(entry_from_group("q8", quaternion8(), ("special",)))
    entries.append(entry_from_group("es27p", extraspecial27_exponent3(), ("special",)))
    entries.append(entry_from_group("es27m", extraspecial27_exponent9(), ("special",)))

    for n in (3, 4, 5, 6):
        entries.append(entry_from_group(f"s{n}", symmetric(n), ("symmetric",)))
    for n in (4, 5, 6):
        entries.append(entry_from_group(f"a{n}", alternating(n), ("alternating",)))

    for r in (2, 3, 5):
        entries.append(entry_from_group(f"qd{r}", qd(r), ("qd",)))

    entries.extend(harvested("s5", symmetric(5), "s5class"))
    entries.extend(harvested("s6", symmetric(6), "s6class"))

    factors = {
        "s3": symmetric(3), "s4": symmetric(4), "s5": symmetric(5),
        "a4": alternating(4), "a5": alternating(5),
        "d8": dihedral(4), "d10": dihedral(5), "d12": dihedral(6),
        "q8": quaternion8(), "es27p": extraspecial27_exponent3(),
        "qd3": qd(3),
        "c2": cyclic(2), "c3": cyclic(3), "c4": cyclic(4), "c5": cyclic(5),
        "c6": cyclic(6), "c7": cyclic(7), "c9": cyclic(9),
    }
    products = [
        ("c4", "c2"), ("c4", "c4"), ("c8x", "c2"), ("c9", "c3"),
        ("c6", "c2"), ("c6", "c6"), ("c12x", "c2"), ("c10x", "c2"),
        ("s3", "c2"), ("s3", "c3"), ("s3", "c4"), ("s3", "c5"),
        ("s3", "c6"), ("s3", "c7"), ("s3", "c9"), ("s3", "s3"),
        ("s3", "d8"), ("s3", "q8"), ("s3", "a4"),
        ("d8", "c2"), ("d8", "c3"), ("d8", "c5"), ("d8", "d8"),
        ("d10", "c5"), ("d12", "c3"), ("d12", "d8"),
        ("q8", "c2"), ("q8", "c3"), ("q8", "q8"),
        ("a4", "c2"), ("a4", "c3"), ("a4", "c4"), ("a4", "c5"),
        ("a4", "c6"), ("a4", "a4"),
        ("s4", "c2"), ("s4", "c3"), ("s4", "c4"), ("s4", "c6"),
        ("s4", "s3"), ("s4", "d8"), ("s4", "a4"),
        ("es27p", "c2"), ("es27p", "c4"),
        ("qd3", "c2"),
        ("a5", "c2"), ("a5", "c3"), ("a5", "c4"),
        ("s5", "c2"), ("s5", "c3"),
    ]
    extra = {"c8x": cyclic(8), "c12x": cyclic(12), "c10x": cyclic(10)}
    for left, right in products:
        a = extra.get(left) or factors[left]
        b = factors[right]
        name = f"{left.rstrip('x')}x{right}"
        entries.append(entry_from_group(name, direct_product(a, b), ("product",)))

    names = [e.name for e in entries]
    assert len(names) == len(set(names)), "duplicate corpus names"
    return entries


def main() -> int:
    out = Path(__file__).resolve().parent.parent / "corpus" / "standard.tsv"
    out.parent.mkdir(parents=True, exist_ok=True)
    entries = build_entries()
    write_corpus(entries, out,
                 header="standard corpus: name, degree, generators, order, tags\n"
                        "regenerate with scripts/build_corpus.py")
    print(f"wrote {len(entries)} entries to {out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
