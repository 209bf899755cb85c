"""Finite permutation-group computations probing whether maximality
transfers between isomorphic subgroups of a finite solvable group.

The package provides a deterministic stabilizer-chain engine (perms,
groups), complete subgroup-lattice enumeration up to conjugacy (lattice)
with a chain-free brute-force oracle (bruteforce), Sylow/Hall/core and
involvement machinery (structure), generator-mapping isomorphism and
automorphism search (isomorphism), corpus files of benchmark groups
(corpus), and the transfer-triple scanner plus verification suites
(harness) behind a small CLI (cli).
"""

from .arith import pi_of, prime_factors
from .config import DEFAULT_LIMITS, Limits
from .errors import (CorpusError, InputError, NewmanlabError,
                     PreconditionError, ResourceLimitError)
from .groups import (PermGroup, SubgroupRef, coset_action, direct_product,
                     group_from_element_set, group_from_generators,
                     normal_closure, trivial_group)
from .harness import (ConstraintReport, NewmanTriple, PredicateResult, Report,
                      ReportLine, check_triple_constraints, find_newman_triples,
                      suite_names, verify_suite)
from .isomorphism import (IsoMap, are_isomorphic, automorphism_generators,
                          iter_automorphisms, maximal_phi_invariant_core)
from .lattice import (SubgroupClass, is_maximal, is_normal,
                      maximal_subgroup_classes, normal_subgroups, normalizer,
                      subgroup_classes)
from .corpus import (CorpusEntry, alternating, cyclic, dihedral,
                     elementary_abelian, entry_from_group,
                     extraspecial27_exponent3, extraspecial27_exponent9,
                     load_corpus, parse_corpus, quaternion8, symmetric,
                     write_corpus)
from .perms import Perm
from .structure import (fitting_subgroup, glauberman_factorization_holds,
                        hall_subgroup, is_characteristic, is_involved,
                        is_p_closed, is_p_nilpotent, o_p, o_pi, qd,
                        sylow_subgroup, thompson_subgroup, zj_subgroup)

__version__ = "0.1.0"

__all__ = [
    "CorpusEntry", "ConstraintReport", "CorpusError", "DEFAULT_LIMITS",
    "InputError", "IsoMap", "Limits", "NewmanTriple", "NewmanlabError",
    "Perm", "PermGroup", "PreconditionError", "PredicateResult", "Report",
    "ReportLine", "ResourceLimitError", "SubgroupClass", "SubgroupRef",
    "alternating", "are_isomorphic", "automorphism_generators",
    "check_triple_constraints", "coset_action", "cyclic", "dihedral",
    "direct_product", "elementary_abelian", "entry_from_group",
    "extraspecial27_exponent3", "extraspecial27_exponent9",
    "find_newman_triples", "fitting_subgroup",
    "glauberman_factorization_holds", "group_from_element_set",
    "group_from_generators", "hall_subgroup", "is_characteristic",
    "is_involved", "is_maximal", "is_normal", "is_p_closed",
    "is_p_nilpotent", "iter_automorphisms", "load_corpus",
    "maximal_phi_invariant_core", "maximal_subgroup_classes",
    "normal_closure", "normal_subgroups", "normalizer", "o_p", "o_pi",
    "parse_corpus", "pi_of", "prime_factors", "qd", "quaternion8",
    "subgroup_classes", "suite_names", "sylow_subgroup", "symmetric",
    "thompson_subgroup", "trivial_group", "verify_suite", "write_corpus",
    "zj_subgroup",
]
