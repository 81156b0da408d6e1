"""A supersolvable group N with Out(N) of order 2.

``N = F_p^2 x| (F_p^*)^2`` with ``(u, a) * (v, b) = (u + a.v, a b)``, where
``a.v`` scales coordinates.  Swapping both coordinates is an outer
automorphism of order 2.  ``N`` is realized as its right regular
permutation representation, points being the elements themselves.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .autsearch import all_automorphisms, homomorphisms_to
from .config import limits
from .errors import CapExceeded
from .gassmann import preimage_subgroup
from .perm import (INT, Permutation, PermGroup, center, conjugacy_classes, cyclic_group,
                   derived_subgroup, is_normal, quotient_group, isomorphism_search,
                   subgroup_from_mask)


@dataclass(frozen=True)
class NElement:
    """``(u, a)`` with ``u`` in ``F_p^2`` and ``a`` in ``(F_p^*)^2``."""

    p_part: tuple
    q_part: tuple
    p: int

    @classmethod
    def identity(cls, p):
        return cls((0, 0), (1, 1), p)

    def __mul__(self, other):
        p = self.p
        u = tuple((x + a * y) % p for x, a, y in zip(self.p_part, self.q_part, other.p_part))
        a = tuple((x * y) % p for x, y in zip(self.q_part, other.q_part))
        return NElement(u, a, p)

    def inverse(self):
        p = self.p
        ainv = tuple(pow(a, -1, p) for a in self.q_part)
        u = tuple((-b * x) % p for b, x in zip(ainv, self.p_part))
        return NElement(u, ainv, p)

    def swap(self):
        return NElement(self.p_part[::-1], self.q_part[::-1], self.p)

    def index(self):
        p = self.p
        u0, u1 = self.p_part
        a0, a1 = self.q_part
        return ((u0 * p + u1) * (p - 1) + (a0 - 1)) * (p - 1) + (a1 - 1)

    @classmethod
    def from_index(cls, i, p):
        i, a1 = divmod(i, p - 1)
        i, a0 = divmod(i, p - 1)
        u0, u1 = divmod(i, p)
        return cls((u0, u1), (a0 + 1, a1 + 1), p)


def _is_prime(n):
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))


def _primitive_root(p):
    for g in range(2, p):
        if len({pow(g, k, p) for k in range(1, p)}) == p - 1:
            return g
    return 1


def _coords(p):
    """Arrays ``u0, u1, a0, a1`` for all elements in index order."""
    m = p * p * (p - 1) ** 2
    i = np.arange(m)
    i, a1 = np.divmod(i, p - 1)
    i, a0 = np.divmod(i, p - 1)
    u0, u1 = np.divmod(i, p)
    return u0, u1, a0 + 1, a1 + 1


def _index(p, u0, u1, a0, a1):
    return ((u0 * p + u1) * (p - 1) + (a0 - 1)) * (p - 1) + (a1 - 1)


def _right_mult(p, g: NElement):
    u0, u1, a0, a1 = _coords(p)
    v0, v1 = g.p_part
    b0, b1 = g.q_part
    return _index(p, (u0 + a0 * v0) % p, (u1 + a1 * v1) % p, (a0 * b0) % p, (a1 * b1) % p)


def n_generators(p):
    r = _primitive_root(p)
    return [NElement((1, 0), (1, 1), p), NElement((0, 1), (1, 1), p),
            NElement((0, 0), (r, 1), p), NElement((0, 0), (1, r), p)]


def build_N(p: int) -> PermGroup:
    """Right regular representation of N on its ``p^2 (p-1)^2`` elements."""
    if not _is_prime(p) or p < 5:
        raise ValueError("p must be a prime >= 5")
    m = p * p * (p - 1) ** 2
    gens = [Permutation(_right_mult(p, g).astype(INT)) for g in n_generators(p)]
    g = PermGroup(gens, m)
    if not swap_is_automorphism(p):
        raise ArithmeticError("coordinate swap is not an automorphism")
    return g


def swap_is_automorphism(p):
    """Check ``s(xy) = s(x)s(y)`` for all pairs by vectorized arithmetic."""
    u0, u1, a0, a1 = _coords(p)
    x = np.arange(len(u0))
    sw = _index(p, u1, u0, a1, a0)
    for y in range(len(u0)):
        v0, v1, b0, b1 = int(u0[y]), int(u1[y]), int(a0[y]), int(a1[y])
        xy = _index(p, (u0 + a0 * v0) % p, (u1 + a1 * v1) % p, (a0 * b0) % p, (a1 * b1) % p)
        sx = sw[x]
        w0, w1, c0, c1 = u0[sx], u1[sx], a0[sx], a1[sx]
        sy = NElement((v0, v1), (b0, b1), p).swap()
        prod = _index(p, (w0 + c0 * sy.p_part[0]) % p, (w1 + c1 * sy.p_part[1]) % p,
                      (c0 * sy.q_part[0]) % p, (c1 * sy.q_part[1]) % p)
        if not np.array_equal(sw[xy], prod):
            return False
    return True


def swap_point_permutation(p):
    u0, u1, a0, a1 = _coords(p)
    return Permutation(_index(p, u1, u0, a1, a0).astype(INT))


def _rank_map_of_point_automorphism(n: PermGroup, sigma: Permutation):
    """Automorphism ``rho_g -> sigma^-1 rho_g sigma`` as a rank map."""
    E = n.elements_array()
    s, sinv = sigma.array, sigma.inverse().array
    conj = s[E[:, sinv]]
    return n.rank_many(conj)


def automorphism_group(n: PermGroup) -> PermGroup:
    """Aut(n) acting on the element ranks of ``n``."""
    if n.order() > limits.isomorphism_cap:
        raise CapExceeded(f"order {n.order()} exceeds cap {limits.isomorphism_cap}")
    maps = all_automorphisms(n)
    return _group_from_maps(maps, n.order())


def _group_from_maps(maps, degree):
    kept = []
    current = PermGroup([], degree)
    for m in maps:
        x = Permutation(np.asarray(m, dtype=INT))
        if not current.contains(x):
            kept.append(x)
            current = PermGroup(kept, degree)
    return current


def inner_automorphisms(n: PermGroup) -> PermGroup:
    """Conjugation maps ``x -> s^-1 x s`` for the generators ``s``."""
    E = n.elements_array()
    gens = []
    for s in n.generators:
        conj = s.array[E[:, s.inverse().array]]
        gens.append(Permutation(n.rank_many(conj).astype(INT)))
    return PermGroup(gens, n.order())


def index_two_subgroups(g: PermGroup):
    """All subgroups of index 2, as preimages of kernels of maps ``g/g' -> C2``."""
    d = derived_subgroup(g)
    q, proj = quotient_group(g, d)
    c2 = cyclic_group(2)
    out = []
    for img in homomorphisms_to(q, c2):
        if not img.any():
            continue
        ker = subgroup_from_mask(q, img == 0)
        out.append(preimage_subgroup(proj, ker))
    return out


def supersolvable(g: PermGroup) -> bool:
    """True iff ``g`` is trivial or has a normal subgroup of prime order
    whose quotient is supersolvable."""
    if g.order() > limits.enumeration_cap:
        raise CapExceeded(f"order {g.order()} exceeds enumeration cap {limits.enumeration_cap}")
    while g.order() > 1:
        for c in conjugacy_classes(g):
            q = c.element_order
            # a normal subgroup <x> of prime order contains the class of x
            if not _is_prime(q) or c.size > q - 1:
                continue
            sub = PermGroup([c.representative], g.degree)
            if is_normal(g, sub):
                g, _ = quotient_group(g, sub)
                break
        else:
            return False
    return True


@dataclass
class SambaleReport:
    p: int
    order_N: int
    order_Aut: int
    order_Out: int
    property_flags: list             # five booleans, properties (1)-(5)
    witnesses: dict = field(default_factory=dict)

    @property
    def all_true(self):
        return all(self.property_flags)

    def as_dict(self):
        return {"p": self.p, "order_N": self.order_N, "order_Aut": self.order_Aut,
                "order_Out": self.order_Out, "property_flags": list(self.property_flags),
                "witnesses": self.witnesses}


def verify_sambale_properties(n: PermGroup, p: int, section=None) -> SambaleReport:
    """Check the five properties of ``n`` by brute force.

    (1) Out(n) has order 2; (2) Z(n) = 1; (3) Inn(n) is the only index-2
    subgroup of Aut(n) isomorphic to n; (4) some automorphism of order 2 lies
    outside Inn(n); (5) n is supersolvable.  ``section`` optionally names a
    candidate outer involution as a point permutation normalizing ``n``.
    """
    aut = automorphism_group(n)
    inn = inner_automorphisms(n)
    z = center(n)
    order_out = aut.order() // inn.order() if is_normal(aut, inn) else 0
    flag1 = order_out == 2 and quotient_group(aut, inn)[0].order() == 2
    flag2 = z.order() == 1

    iso_hits = []
    subgroups = index_two_subgroups(aut) if aut.order() % 2 == 0 else []
    for i, k in enumerate(subgroups):
        if isomorphism_search(k, n) is not None:
            iso_hits.append(i)
    inn_pos = [i for i, k in enumerate(subgroups)
               if k.order() == inn.order() and inn.is_subgroup_of(k)]
    flag3 = len(iso_hits) == 1 and iso_hits == inn_pos

    witness = None
    if section is not None:
        cand = Permutation(_rank_map_of_point_automorphism(n, section).astype(INT))
        if aut.contains(cand) and cand.order() == 2 and not inn.contains(cand):
            witness = cand
    if witness is None:
        E = aut.elements_array()
        orders = aut.element_orders()
        inside = inn.rank_many(E) >= 0
        hits = np.nonzero((orders == 2) & ~inside)[0]
        if len(hits):
            witness = aut.element(int(hits[0]))
    flag4 = witness is not None
    flag5 = supersolvable(n)

    witnesses = {
        "n_index_two_subgroups": len(subgroups),
        "isomorphic_index_two": iso_hits,
        "inn_position": inn_pos,
        "section_moved_points": 0 if witness is None else int((witness.array != np.arange(
            witness.degree)).sum()),
        "order_center": z.order(),
    }
    return SambaleReport(p, n.order(), aut.order(), order_out,
                         [flag1, flag2, flag3, flag4, flag5], witnesses)


def sambale_report(p: int = 5) -> SambaleReport:
    return verify_sambale_properties(build_N(p), p, section=swap_point_permutation(p))
