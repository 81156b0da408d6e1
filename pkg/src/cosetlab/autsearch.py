"""Backtracking search for isomorphisms and automorphisms of small groups.

Both groups are handled through their Cayley tables (element ranks).  A
partial assignment of generator images is kept only if it extends to an
injective homomorphism on the subgroup generated so far.
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .config import limits
from .errors import CapExceeded
from .perm import PermGroup, Permutation, conjugacy_classes


def _check_cap(g):
    if g.order() > limits.isomorphism_cap:
        raise CapExceeded(f"order {g.order()} exceeds isomorphism cap {limits.isomorphism_cap}")


def greedy_generators(g: PermGroup):
    """Ranks of a greedily reduced generating set (each one enlarges the span)."""
    table = g.cayley_table()
    m = g.order()
    seen = np.zeros(m, dtype=bool)
    seen[0] = True
    span = [0]
    kept = []
    for s in g.generators:
        r = g.index_of(s)
        if seen[r]:
            continue
        kept.append(r)
        seen[:] = False
        seen[0] = True
        span = [0]
        for e in span:
            for t in kept:
                f = int(table[e, t])
                if not seen[f]:
                    seen[f] = True
                    span.append(f)
    return kept


def _class_sizes(g):
    classes = conjugacy_classes(g)
    return np.array([classes[c].size for c in classes.class_of])


class _Search:
    def __init__(self, a, b, gens, candidates, injective=True):
        self.mul_a = np.ascontiguousarray(a.cayley_table())
        self.mul_b = np.ascontiguousarray(b.cayley_table())
        self.order_a = a.order()
        self.gens = np.array(gens, dtype=np.int64)
        self.candidates = candidates
        self.injective = injective
        self.imgs = np.zeros(len(gens), dtype=np.int64)
        self.img = np.full(self.order_a, -1, dtype=np.int64)
        self.used = np.zeros(b.order(), dtype=np.bool_)
        self.queue = np.zeros(self.order_a, dtype=np.int64)

    def run(self, find_all):
        found = []
        self._dfs(0, find_all, found)
        return found

    def _dfs(self, level, find_all, found):
        k = len(self.gens)
        for c in self.candidates[level]:
            self.imgs[level] = c
            size = kernels.extend_map(self.mul_a, self.mul_b, self.gens, self.imgs, level + 1,
                                      self.injective, self.img, self.used, self.queue)
            if size < 0:
                continue
            if level + 1 == k:
                if size == self.order_a:
                    found.append(self.img.copy())
                    if not find_all:
                        return True
            elif self._dfs(level + 1, find_all, found):
                return True
        return False


def _candidates(a, b, gens, first_class_reps):
    oa, ob = a.element_orders(), b.element_orders()
    ca, cb = _class_sizes(a), _class_sizes(b)
    cands = []
    reps = None
    if first_class_reps:
        classes = conjugacy_classes(b)
        reps = {int(c.members[0]) for c in classes}
    for i, r in enumerate(gens):
        ok = (ob == oa[r]) & (cb == ca[r])
        idx = np.nonzero(ok)[0]
        if i == 0 and reps is not None:
            idx = np.array([x for x in idx if int(x) in reps], dtype=np.int64)
        cands.append(idx)
    return cands


def order_profile(g):
    orders, counts = np.unique(g.element_orders(), return_counts=True)
    return dict(zip(orders.tolist(), counts.tolist()))


def find_isomorphism(a: PermGroup, b: PermGroup):
    """Isomorphism ``a -> b`` as ``{generator: image}`` over a reduced
    generating set of ``a``, or ``None``."""
    if a.order() != b.order():
        return None
    _check_cap(a)
    _check_cap(b)
    if order_profile(a) != order_profile(b):
        return None
    gens = greedy_generators(a)
    if not gens:
        return {}
    search = _Search(a, b, gens, _candidates(a, b, gens, first_class_reps=True))
    found = search.run(find_all=False)
    if not found:
        return None
    img = found[0]
    return {a.element(int(r)): b.element(int(img[r])) for r in gens}


def all_automorphisms(g: PermGroup):
    """Every automorphism of ``g`` as an array ``rank -> rank``, rank order
    of the generator images."""
    _check_cap(g)
    gens = greedy_generators(g)
    if not gens:
        return [np.zeros(1, dtype=np.int64)]
    search = _Search(g, g, gens, _candidates(g, g, gens, first_class_reps=False))
    return search.run(find_all=True)


def homomorphisms_to(a: PermGroup, b: PermGroup):
    """All homomorphisms ``a -> b`` (not necessarily injective)."""
    _check_cap(a)
    _check_cap(b)
    gens = greedy_generators(a)
    if not gens:
        return [np.zeros(1, dtype=np.int64)]
    oa, ob = a.element_orders(), b.element_orders()
    cands = [np.nonzero(oa[r] % ob == 0)[0] for r in gens]
    return _Search(a, b, gens, cands, injective=False).run(find_all=True)


def as_permutations(maps):
    return [Permutation(np.asarray(m)) for m in maps]
