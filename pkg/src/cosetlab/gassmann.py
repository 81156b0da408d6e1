"""Gassmann (rational coset) equivalence of subgroups.

Two subgroups ``H1, H2`` of a finite group ``G`` give isomorphic rational
permutation modules exactly when ``|c & H1| == |c & H2|`` for every
conjugacy class ``c`` of ``G``.  This is necessary for integral coset
equivalence but not sufficient, and only the rational condition is decided
here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import limits
from .errors import CapExceeded, NotASubgroup
from .homs import GroupHomomorphism
from .perm import Permutation, PermGroup, coset_action, conjugacy_classes, subgroup_from_mask


@dataclass(frozen=True)
class ClassProfile:
    """``counts[i] = |classes[i] & H|`` over the canonical class list of G."""

    descriptors: tuple  # (element order, class size) per class
    counts: tuple

    @property
    def subgroup_order(self):
        return sum(self.counts)

    def as_dict(self):
        return {"descriptors": [list(d) for d in self.descriptors], "counts": list(self.counts)}


@dataclass(frozen=True)
class GassmannVerdict:
    equivalent: bool
    witness: int | None = None        # index of the first differing class
    descriptor: tuple | None = None   # its (element order, class size)

    def __bool__(self):
        return self.equivalent


def _check(g, h):
    if g.order() > limits.enumeration_cap:
        raise CapExceeded(f"order {g.order()} exceeds enumeration cap {limits.enumeration_cap}")
    if not h.is_subgroup_of(g):
        raise NotASubgroup("h is not a subgroup of g")


def intersection_profile(g: PermGroup, h: PermGroup) -> ClassProfile:
    _check(g, h)
    classes = conjugacy_classes(g)
    ranks = g.rank_many(h.elements_array())
    counts = np.bincount(classes.class_of[ranks], minlength=len(classes))
    return ClassProfile(tuple(c.descriptor for c in classes), tuple(int(x) for x in counts))


def gassmann_equivalent(g: PermGroup, h1: PermGroup, h2: PermGroup) -> GassmannVerdict:
    """Compare both profiles over the same class list of ``g``."""
    p1 = intersection_profile(g, h1)
    p2 = intersection_profile(g, h2)
    for i, (a, b) in enumerate(zip(p1.counts, p2.counts)):
        if a != b:
            return GassmannVerdict(False, i, p1.descriptors[i])
    return GassmannVerdict(True)


def fixed_point_counts(g: PermGroup, h: PermGroup, xs):
    """Fixed cosets of each ``x`` in ``xs`` acting on ``G/h``."""
    _check(g, h)
    hom, _ = coset_action(g, h)
    out = []
    for x in xs:
        img = hom(x).array
        out.append(int((img == np.arange(len(img))).sum()))
    return out


def fixed_point_character(g: PermGroup, h: PermGroup, x: Permutation) -> int:
    """Number of right cosets of ``h`` fixed by ``x``."""
    return fixed_point_counts(g, h, [x])[0]


def character_from_profile(g: PermGroup, h: PermGroup):
    """``[g:h] * |x^G & h| / |x^G|`` for each class, from the profile alone."""
    prof = intersection_profile(g, h)
    index = g.order() // h.order()
    out = []
    for (_, size), count in zip(prof.descriptors, prof.counts):
        num = index * count
        if num % size:
            raise ArithmeticError("profile is inconsistent with a permutation character")
        out.append(num // size)
    return out


def preimage_subgroup(e: GroupHomomorphism, h: PermGroup) -> PermGroup:
    """``{x in source : e(x) in h}``."""
    src = e.source
    if not isinstance(src, PermGroup):
        raise TypeError("preimage_subgroup needs a permutation-group source")
    if src.order() > limits.enumeration_cap:
        raise CapExceeded(f"order {src.order()} exceeds enumeration cap {limits.enumeration_cap}")
    if not h.is_subgroup_of(e.target):
        raise NotASubgroup("h is not a subgroup of the target")
    imgs = e.images_of(src.elements_array())
    return subgroup_from_mask(src, h.rank_many(imgs) >= 0)
