"""Embedded fixture groups.

``gamma`` is a three-generator presentation on ``x, y, z``.  Its three
images generate PSL(2,29) on 30 points,
and ``m4`` and ``m5`` are generators of two non-conjugate A5 subgroups
of index 203.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .formats import parse_perm_group, parse_presentation
from .perm import Permutation, PermGroup, alternating_group

GAMMA_TEXT = "gens x, y, z; rels x^2, y^2, z^3, (y*z)^2, (z*x)^5, (x*y)^3;"

IMAGES_TEXT = """degree: 30
(1, 9)(2, 19)(3, 16)(4, 26)(5, 11)(6, 20)(7, 8)(10, 13)(12, 21)
(14, 23)(15, 29)(22, 25)(24, 30)(27, 28),
(1, 16)(2, 30)(3, 22)(4, 24)
(5, 18)(6, 13)(7, 23)(8, 28)(9, 25)(10, 29)(12, 17)(14, 27)
(15, 20)(19, 26),
(1, 2, 26)(3, 20, 18)(4, 6, 14)(5, 15, 22)(7, 9, 29)(8, 21, 28)
(10, 25, 23)(11, 12, 17)(13, 24, 27)
(16, 19, 30)
"""

M4_TEXT = """degree: 30
(1, 7)(2, 6)(3, 5)(8, 30)(9, 29)(10, 28)(11, 27)
(12, 26)(13, 25)(14, 24)(15, 23)(16, 22)(17, 21)(18, 20),
(1, 17, 6)(2, 19, 10)(3, 11, 7)(4, 25, 12)(5, 9, 22)
(8, 27, 13)(14, 20, 21)(15, 26, 16)(18, 29, 28)(23, 24, 30)
"""

M5_TEXT = """degree: 30
(1, 29)(3, 26)(4, 24)(5, 11)(6, 30)(7, 17)(8, 15)
(10, 12)(13, 22)(14, 18)(16, 21)(19, 28)(20, 25)(23, 27),
(1, 17, 6)(2, 19, 10)(3, 11, 7)(4, 25, 12)(5, 9, 22)
(8, 27, 13)(14, 20, 21)(15, 26, 16)(18, 29, 28)(23, 24, 30)
"""

PSL27_TEXT = """degree: 7
(1, 2, 3, 4, 5, 6, 7),
(2, 3)(4, 7)
"""

S3_TEXT = """degree: 3
(1, 2),
(1, 2, 3)
"""


@lru_cache(maxsize=None)
def gamma():
    return parse_presentation(GAMMA_TEXT)


@lru_cache(maxsize=None)
def gamma_images():
    return parse_perm_group(IMAGES_TEXT).generators


@lru_cache(maxsize=None)
def psl2_29():
    """PSL(2,29) of degree 30, generated by the three images."""
    return parse_perm_group(IMAGES_TEXT)


@lru_cache(maxsize=None)
def m4():
    return parse_perm_group(M4_TEXT)


@lru_cache(maxsize=None)
def m5():
    return parse_perm_group(M5_TEXT)


@lru_cache(maxsize=None)
def psl2_7():
    g = parse_perm_group(PSL27_TEXT)
    if g.order() != 168:
        raise RuntimeError("PSL(2,7) fixture does not have order 168")
    return g


@lru_cache(maxsize=None)
def s3():
    return parse_perm_group(S3_TEXT)


@lru_cache(maxsize=None)
def a5():
    """A5 on five points, generated by (1,2,3,4,5) and (1,2,3)."""
    return PermGroup([Permutation.from_cycles([(1, 2, 3, 4, 5)], 5),
                      Permutation.from_cycles([(1, 2, 3)], 5)], 5)


def subgroups_of_order(g: PermGroup, order: int):
    """All 2-generated subgroups of ``g`` of the given order, by exhaustive
    pair closure over the Cayley table.  Returned in order of their least
    generating pair; each as a sorted array of element ranks."""
    table = g.cayley_table()
    m = g.order()
    found = {}
    for x in range(1, m):
        for y in range(x, m):
            members = _closure(table, (x, y), order)
            if members is not None:
                key = members.tobytes()
                if key not in found:
                    found[key] = members
    return list(found.values())


def _closure(table, gens, limit):
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for e in frontier:
            for s in gens:
                f = int(table[e, s])
                if f not in seen:
                    seen.add(f)
                    if len(seen) > limit:
                        return None
                    nxt.append(f)
        frontier = nxt
    if len(seen) != limit:
        return None
    return np.array(sorted(seen))


@lru_cache(maxsize=None)
def psl2_7_s4_pair():
    """Representatives of the two conjugacy classes of S4 in PSL(2,7).

    Found by exhaustive search over order-24 subgroups; the first
    representative of each class in search order is returned.
    """
    from .perm import subgroup_conjugator, subgroup_from_mask

    g = psl2_7()
    reps = []
    for members in subgroups_of_order(g, 24):
        mask = np.zeros(g.order(), dtype=bool)
        mask[members] = True
        h = subgroup_from_mask(g, mask)
        if all(subgroup_conjugator(g, r, h) is None for r in reps):
            reps.append(h)
    if len(reps) != 2:
        raise RuntimeError(f"expected two classes of S4 in PSL(2,7), found {len(reps)}")
    return tuple(reps)


__all__ = ["alternating_group", "gamma", "gamma_images", "psl2_29", "m4", "m5",
           "psl2_7", "psl2_7_s4_pair", "s3", "a5", "subgroups_of_order"]
