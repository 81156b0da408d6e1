"""Computational group theory on permutation groups and finite presentations.

Permutation groups (Schreier-Sims), presentations and verified
homomorphisms, coset enumeration, Reidemeister-Schreier rewriting with
Tietze simplification, Smith normal form, low-index subgroups, Gassmann
equivalence, and a small automorphism-group toolkit.
"""

__version__ = "0.1.0"

from .errors import (CapExceeded, CosetLimitExceeded, CosetlabError, HomomorphismError,
                     IncompleteTable, NotASubgroup, ParseError)
from .perm import (Permutation, PermGroup, StabilizerChain, alternating_group, center,
                   conjugacy_classes, coset_action, cyclic_group, fiber_product, group_order,
                   isomorphism_search, membership, quotient_group, subgroup_conjugator,
                   symmetric_group)
from .fp import Presentation, abelian_invariants, image_is_full, verify_homomorphism
from .homs import GroupHomomorphism
from .zlinalg import IntMatrix, smith_normal_form
from .cosets import CosetTable, table_from_homomorphism, todd_coxeter, validate_table
from .rewriting import reidemeister_schreier, schreier_transversal, tietze_simplify
from .low_index import low_index_classes
from .gassmann import (ClassProfile, fixed_point_character, gassmann_equivalent,
                       intersection_profile, preimage_subgroup)
from .formats import parse_perm_group, parse_presentation

__all__ = [
    "CapExceeded", "ClassProfile", "CosetLimitExceeded", "CosetTable", "CosetlabError",
    "GroupHomomorphism", "HomomorphismError", "IncompleteTable", "IntMatrix", "NotASubgroup",
    "ParseError", "PermGroup", "Permutation", "Presentation", "StabilizerChain",
    "abelian_invariants", "alternating_group", "center", "conjugacy_classes", "coset_action",
    "cyclic_group", "fiber_product", "fixed_point_character", "gassmann_equivalent",
    "group_order", "image_is_full", "intersection_profile", "isomorphism_search",
    "low_index_classes", "membership", "parse_perm_group", "parse_presentation",
    "preimage_subgroup", "quotient_group", "reidemeister_schreier", "schreier_transversal",
    "smith_normal_form", "subgroup_conjugator", "symmetric_group", "table_from_homomorphism",
    "tietze_simplify", "todd_coxeter", "validate_table", "verify_homomorphism",
]
