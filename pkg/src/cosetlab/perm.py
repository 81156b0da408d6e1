"""Permutations and finite permutation groups.

Points are ``1..degree`` in everything user-facing (cycle notation,
``Permutation.images``); the numpy arrays underneath are 0-based.
Permutations act on the right: ``(p * q)(i) == q(p(i))``.

Groups carry a deterministic Schreier-Sims stabilizer chain.  Every brute
force routine (classes, centers, conjugators, ...) works over the element
array produced by :meth:`PermGroup.elements_array`, whose row order is the
chain's mixed-radix rank order, so results are reproducible run to run.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from . import kernels
from .config import limits
from .errors import CapExceeded, NotASubgroup

INT = np.int32


class Permutation:
    """An immutable bijection of ``{1..degree}``.

    Build from 0-based images with the constructor, or use
    :meth:`from_cycles` / :meth:`from_images` for 1-based input.
    """

    __slots__ = ("_a", "_key")

    def __init__(self, images):
        a = np.array(images, dtype=INT).reshape(-1)
        n = len(a)
        if n == 0:
            raise ValueError("degree must be positive")
        seen = np.zeros(n, dtype=bool)
        if a.min() < 0 or a.max() >= n:
            raise ValueError("image out of range")
        seen[a] = True
        if not seen.all():
            raise ValueError("not a bijection")
        a.flags.writeable = False
        self._a = a
        self._key = None

    @classmethod
    def _wrap(cls, arr):
        p = cls.__new__(cls)
        a = np.ascontiguousarray(arr, dtype=INT)
        if a.flags.writeable:
            a = a.copy()
            a.flags.writeable = False
        p._a = a
        p._key = None
        return p

    @classmethod
    def identity(cls, degree):
        return cls._wrap(np.arange(degree, dtype=INT))

    @classmethod
    def from_images(cls, images):
        """From 1-based images ``[p(1), ..., p(n)]``."""
        return cls(np.asarray(images) - 1)

    @classmethod
    def from_cycles(cls, cycles, degree):
        """From a list of 1-based cycles, e.g. ``[(1, 9), (2, 19)]``."""
        a = np.arange(degree, dtype=INT)
        seen = set()
        for cyc in cycles:
            for pt in cyc:
                if not 1 <= pt <= degree:
                    raise ValueError(f"point {pt} outside 1..{degree}")
                if pt in seen:
                    raise ValueError(f"point {pt} repeated")
                seen.add(pt)
            for i, pt in enumerate(cyc):
                a[pt - 1] = cyc[(i + 1) % len(cyc)] - 1
        return cls._wrap(a)

    @property
    def degree(self):
        return len(self._a)

    @property
    def array(self):
        """Read-only 0-based image array."""
        return self._a

    @property
    def images(self):
        return tuple(int(x) + 1 for x in self._a)

    def __call__(self, point):
        return int(self._a[point - 1]) + 1

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return Permutation._wrap(other._a[self._a])

    def inverse(self):
        inv = np.empty_like(self._a)
        inv[self._a] = np.arange(self.degree, dtype=INT)
        return Permutation._wrap(inv)

    def __invert__(self):
        return self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self, x):
        """``x^-1 * self * x``."""
        return x.inverse() * self * x

    def is_identity(self):
        return bool((self._a == np.arange(self.degree)).all())

    def cycles(self):
        """Nontrivial cycles, 1-based, each starting at its smallest point."""
        out = []
        seen = np.zeros(self.degree, dtype=bool)
        for start in range(self.degree):
            if seen[start] or self._a[start] == start:
                continue
            cyc = [start + 1]
            seen[start] = True
            j = int(self._a[start])
            while j != start:
                seen[j] = True
                cyc.append(j + 1)
                j = int(self._a[j])
            out.append(tuple(cyc))
        return out

    def order(self):
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def _bytes(self):
        if self._key is None:
            self._key = self._a.tobytes()
        return self._key

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.degree == other.degree and self._bytes() == other._bytes()

    def __hash__(self):
        return hash(self._bytes())

    def __lt__(self, other):
        return tuple(self._a) < tuple(other._a)

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ", ".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self):
        return f"Permutation({self}, degree={self.degree})"


def _compose(p, q):
    return q[p]


def _invert(p):
    inv = np.empty_like(p)
    inv[p] = np.arange(len(p), dtype=p.dtype)
    return inv


def _is_identity(p):
    return bool((p == np.arange(len(p))).all())


def _first_moved(p):
    moved = np.nonzero(p != np.arange(len(p)))[0]
    return int(moved[0]) if len(moved) else -1


class _Level:
    __slots__ = ("point", "gens", "orbit", "reps", "index_of", "_stacked")

    def __init__(self, point, degree):
        self.point = point
        self.gens = []
        self.index_of = np.full(degree, -1, dtype=np.int64)
        self.orbit = []
        self.reps = []
        self._stacked = None

    def rebuild(self):
        n = len(self.index_of)
        self.index_of[:] = -1
        self.orbit = [self.point]
        self.reps = [np.arange(n, dtype=INT)]
        self.index_of[self.point] = 0
        i = 0
        while i < len(self.orbit):
            x = self.orbit[i]
            u = self.reps[i]
            for s in self.gens:
                y = int(s[x])
                if self.index_of[y] < 0:
                    self.index_of[y] = len(self.orbit)
                    self.orbit.append(y)
                    self.reps.append(_compose(u, s))
            i += 1
        self._stacked = None

    def stacked(self):
        """(reps, inverse reps) as 2-d arrays, cached."""
        if self._stacked is None:
            reps = np.array(self.reps, dtype=INT)
            inv = np.empty_like(reps)
            rows = np.arange(len(reps))[:, None]
            inv[rows, reps] = np.arange(reps.shape[1], dtype=INT)
            self._stacked = (reps, inv)
        return self._stacked


class StabilizerChain:
    """Base and strong generating set built by deterministic Schreier-Sims."""

    def __init__(self, degree, generators):
        self.degree = degree
        self.levels: list[_Level] = []
        gens = [np.asarray(g, dtype=INT) for g in generators]
        self._build([g for g in gens if not _is_identity(g)])

    @property
    def base(self):
        return [lv.point for lv in self.levels]

    @property
    def transversal_sizes(self):
        return [len(lv.orbit) for lv in self.levels]

    def order(self):
        return math.prod(self.transversal_sizes)

    def strip(self, g, start=0):
        """Sift ``g`` from level ``start``; return (residue, level reached)."""
        for i in range(start, len(self.levels)):
            lv = self.levels[i]
            j = lv.index_of[g[lv.point]]
            if j < 0:
                return g, i
            _, inv = lv.stacked()
            g = inv[j][g]
        return g, len(self.levels)

    def _add_level(self, point):
        lv = _Level(point, self.degree)
        self.levels.append(lv)
        return lv

    def _build(self, gens):
        if not gens:
            return
        for g in gens:
            if all(g[lv.point] == lv.point for lv in self.levels):
                self._add_level(_first_moved(g))
        for i, lv in enumerate(self.levels):
            base = self.base[:i]
            lv.gens = [g for g in gens if all(g[b] == b for b in base)]
            lv.rebuild()
        i = len(self.levels) - 1
        while i >= 0:
            lv = self.levels[i]
            restart = False
            for xi in range(len(lv.orbit)):
                x = lv.orbit[xi]
                ux = lv.reps[xi]
                for s in lv.gens:
                    y = int(s[x])
                    uxs = _compose(ux, s)
                    uy = lv.reps[lv.index_of[y]]
                    if np.array_equal(uxs, uy):
                        continue
                    h, j = self.strip(_compose(uxs, _invert(uy)), i + 1)
                    if _is_identity(h):
                        continue
                    if j == len(self.levels):
                        self._add_level(_first_moved(h))
                    for m in range(i + 1, j + 1):
                        self.levels[m].gens.append(h)
                        self.levels[m].rebuild()
                    i = j
                    restart = True
                    break
                if restart:
                    break
            if not restart:
                i -= 1

    def sift_many(self, X):
        """Ranks of the rows of ``X`` (``-1`` for non-members)."""
        X = np.asarray(X, dtype=INT)
        m = len(X)
        rank = np.zeros(m, dtype=np.int64)
        ok = np.ones(m, dtype=bool)
        cur = X
        stride = 1
        for lv in self.levels:
            idx = lv.index_of[cur[:, lv.point]]
            bad = idx < 0
            ok &= ~bad
            idx[bad] = 0
            _, inv = lv.stacked()
            cur = inv[idx[:, None], cur]
            rank += idx * stride
            stride *= len(lv.orbit)
        ok &= (cur == np.arange(self.degree, dtype=INT)).all(axis=1)
        rank[~ok] = -1
        return rank

    def all_elements(self):
        """All elements; row ``r`` has rank ``r``."""
        E = np.arange(self.degree, dtype=INT)[None, :]
        for lv in reversed(self.levels):
            reps, _ = lv.stacked()
            prod = reps[:, E]  # [d, i, x] = reps[d, E[i, x]]
            E = prod.transpose(1, 0, 2).reshape(-1, self.degree)
        return np.ascontiguousarray(E)


class PermGroup:
    """A permutation group given by generators.

    The stabilizer chain, element list and derived tables are computed on
    first use and cached; the group itself never changes.
    """

    def __init__(self, generators, degree=None):
        gens = list(generators)
        if degree is None:
            if not gens:
                raise ValueError("degree required for an empty generator list")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise ValueError("generator degree mismatch")
        if not gens:
            gens = [Permutation.identity(degree)]
        self.degree = degree
        self.generators = tuple(gens)

    @classmethod
    def from_arrays(cls, arrays, degree=None):
        arrays = list(arrays)
        if degree is None:
            degree = len(arrays[0])
        return cls([Permutation._wrap(a) for a in arrays], degree)

    @cached_property
    def gens_array(self):
        return np.array([g.array for g in self.generators], dtype=INT)

    @cached_property
    def chain(self):
        return StabilizerChain(self.degree, self.gens_array)

    def order(self):
        return self.chain.order()

    def __len__(self):
        return self.order()

    def identity(self):
        return Permutation.identity(self.degree)

    def is_trivial(self):
        return self.order() == 1

    def contains(self, p):
        if p.degree != self.degree:
            raise ValueError("degree mismatch")
        h, _ = self.chain.strip(p.array)
        return _is_identity(h)

    def __contains__(self, p):
        return self.contains(p)

    def rank_many(self, X):
        return self.chain.sift_many(X)

    def index_of(self, p):
        return int(self.rank_many(p.array[None, :])[0])

    def is_subgroup_of(self, other):
        if self.degree != other.degree:
            return False
        return all(other.contains(g) for g in self.generators)

    def _check_enumerable(self, cap=None):
        cap = limits.enumeration_cap if cap is None else cap
        if self.order() > cap:
            raise CapExceeded(f"group order {self.order()} exceeds enumeration cap {cap}")

    @cached_property
    def _elements(self):
        self._check_enumerable()
        E = self.chain.all_elements()
        E.flags.writeable = False
        return E

    def elements_array(self):
        """All elements as an ``(order, degree)`` array in rank order."""
        return self._elements

    def elements(self):
        return [Permutation._wrap(row) for row in self._elements]

    def element(self, rank):
        return Permutation._wrap(self._elements[rank])

    @cached_property
    def _element_orders(self):
        return kernels.element_orders(self._elements)

    def element_orders(self):
        return self._element_orders

    @cached_property
    def _inverse_ranks(self):
        E = self._elements
        inv = np.empty_like(E)
        rows = np.arange(len(E))[:, None]
        inv[rows, E] = np.arange(self.degree, dtype=INT)
        return self.rank_many(inv)

    def inverse_ranks(self):
        return self._inverse_ranks

    def right_mult_ranks(self, p):
        """``r -> rank(element_r * p)`` for every element."""
        return self.rank_many(p.array[self._elements])

    @cached_property
    def _cayley(self):
        m = self.order()
        if m > max(limits.isomorphism_cap, 1):
            raise CapExceeded(f"Cayley table needs order <= {limits.isomorphism_cap}, got {m}")
        right = [self.right_mult_ranks(g) for g in self.generators]
        table = np.empty((m, m), dtype=INT)
        table[:, 0] = np.arange(m)
        done = np.zeros(m, dtype=bool)
        done[0] = True
        queue = [0]
        for y in queue:
            for r in right:
                z = int(r[y])
                if not done[z]:
                    done[z] = True
                    table[:, z] = r[table[:, y]]
                    queue.append(z)
        table.flags.writeable = False
        return table

    def cayley_table(self):
        """``table[x, y] = rank(x * y)``; identity has rank 0."""
        return self._cayley

    def subgroup(self, gens):
        return PermGroup(list(gens), self.degree)

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, generators={len(self.generators)})"


def cyclic_group(n):
    return PermGroup([Permutation.from_cycles([tuple(range(1, n + 1))], n)] if n > 1 else [], n)


def symmetric_group(n):
    if n < 2:
        return PermGroup([], max(n, 1))
    gens = [Permutation.from_cycles([(1, 2)], n)]
    if n > 2:
        gens.append(Permutation.from_cycles([tuple(range(1, n + 1))], n))
    return PermGroup(gens, n)


def alternating_group(n):
    if n < 3:
        return PermGroup([], max(n, 1))
    gens = [Permutation.from_cycles([(1, 2, 3)], n)]
    if n > 3:
        cyc = tuple(range(1, n + 1)) if n % 2 else tuple(range(2, n + 1))
        gens.append(Permutation.from_cycles([cyc], n))
    return PermGroup(gens, n)


def group_order(g: PermGroup) -> int:
    return g.order()


def membership(g: PermGroup, p: Permutation) -> bool:
    return g.contains(p)


def subgroup_from_mask(g: PermGroup, mask) -> PermGroup:
    """Subgroup generated by the elements of ``g`` selected by ``mask``.

    Generators are chosen greedily in rank order, so the result is
    deterministic for a given mask.
    """
    cand = g.elements_array()[np.asarray(mask, dtype=bool)]
    kept = []
    current = PermGroup([], g.degree)
    while True:
        ranks = current.rank_many(cand)
        outside = np.nonzero(ranks < 0)[0]
        if not len(outside):
            return current
        kept.append(Permutation._wrap(cand[outside[0]]))
        current = PermGroup(kept, g.degree)


def reduce_generators(g: PermGroup) -> PermGroup:
    """Drop generators already in the span of the earlier ones."""
    kept = []
    for s in g.generators:
        if s.is_identity():
            continue
        if kept and PermGroup(kept, g.degree).contains(s):
            continue
        kept.append(s)
    return PermGroup(kept, g.degree)


def is_normal(g: PermGroup, n: PermGroup) -> bool:
    return all(n.contains(t.conjugate(s)) for s in g.generators for t in n.generators)


def normal_closure(g: PermGroup, elements) -> PermGroup:
    gens = [x for x in elements if not x.is_identity()]
    closure = PermGroup(gens, g.degree)
    queue = list(gens)
    while queue:
        h = queue.pop(0)
        for s in g.generators:
            c = h.conjugate(s)
            if not closure.contains(c):
                gens.append(c)
                closure = PermGroup(gens, g.degree)
                queue.append(c)
    return closure


def commutator(a: Permutation, b: Permutation) -> Permutation:
    return a.inverse() * b.inverse() * a * b


def derived_subgroup(g: PermGroup) -> PermGroup:
    gens = g.generators
    comms = [commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
    return normal_closure(g, comms)


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Permutation
    size: int
    element_order: int
    members: np.ndarray  # element ranks, ascending

    @property
    def descriptor(self):
        return (self.element_order, self.size)


class ConjugacyClasses:
    """Canonically ordered classes plus a class id for every element rank."""

    def __init__(self, classes, class_of):
        self.classes = classes
        self.class_of = class_of

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def __getitem__(self, i):
        return self.classes[i]

    def sizes(self):
        return [c.size for c in self.classes]


def _lex_order(E):
    return np.lexsort(E.T[::-1])


def conjugacy_classes(g: PermGroup) -> ConjugacyClasses:
    cached = getattr(g, "_classes_cache", None)
    if cached is not None:
        return cached
    E = g.elements_array()
    m = len(E)
    rows, cols = [], []
    idx = np.arange(m)
    for s in g.generators:
        sinv = s.inverse().array
        conj = s.array[E[:, sinv]]  # s^-1 x s
        rows.append(idx)
        cols.append(g.rank_many(conj))
    graph = coo_matrix((np.ones(m * len(rows), dtype=np.int8),
                        (np.concatenate(rows), np.concatenate(cols))), shape=(m, m))
    _, labels = connected_components(graph, directed=True, connection="weak")
    orders = g.element_orders()
    lex_pos = np.empty(m, dtype=np.int64)
    lex_pos[_lex_order(E)] = np.arange(m)
    ncls = labels.max() + 1
    sizes = np.bincount(labels, minlength=ncls)
    min_lex = np.full(ncls, m, dtype=np.int64)
    np.minimum.at(min_lex, labels, lex_pos)
    info = []
    for c in range(ncls):
        rep_rank = int(np.nonzero((labels == c) & (lex_pos == min_lex[c]))[0][0])
        info.append((int(orders[rep_rank]), int(sizes[c]), int(min_lex[c]), c, rep_rank))
    info.sort()
    class_of = np.empty(m, dtype=np.int64)
    classes = []
    for new_id, (order, size, _, old, rep_rank) in enumerate(info):
        members = np.nonzero(labels == old)[0]
        class_of[members] = new_id
        classes.append(ConjugacyClass(g.element(rep_rank), size, order, members))
    result = ConjugacyClasses(classes, class_of)
    g._classes_cache = result
    return result


def _lexmin_row(X):
    idx = np.arange(len(X))
    for c in range(X.shape[1]):
        col = X[idx, c]
        idx = idx[col == col.min()]
        if len(idx) == 1:
            break
    return X[idx[0]]


def right_coset_orbit(h_elements, start, gens, cap):
    """Orbit of the coset ``H*start`` under right multiplication by ``gens``.

    Returns (representatives, action) where ``action[j][i]`` is the index of
    the coset ``H*reps[i]*gens[j]``; cosets are numbered in breadth-first
    order (coset ascending, generator ascending).
    """
    def key(x):
        return _lexmin_row(x[h_elements]).tobytes()

    reps = [np.asarray(start, dtype=INT)]
    index = {key(reps[0]): 0}
    action = [[] for _ in gens]
    i = 0
    while i < len(reps):
        r = reps[i]
        for j, s in enumerate(gens):
            x = _compose(r, s)
            k = key(x)
            t = index.get(k)
            if t is None:
                t = len(reps)
                if t >= cap:
                    raise CapExceeded(f"coset orbit exceeds cap {cap}")
                index[k] = t
                reps.append(x)
            action[j].append(t)
        i += 1
    return reps, action


def coset_action(g: PermGroup, h: PermGroup):
    """Action of ``g`` on the right cosets of ``h``.

    Returns ``(hom, transversal)``: ``hom`` maps ``g`` onto a group of
    degree ``[g:h]`` in which point 1 is the coset ``h`` itself, and
    ``transversal[i]`` represents coset ``i + 1``.
    """
    from .homs import GroupHomomorphism

    if not h.is_subgroup_of(g):
        raise NotASubgroup("h is not a subgroup of g")
    index = g.order() // h.order()
    if index > limits.index_cap:
        raise CapExceeded(f"index {index} exceeds cap {limits.index_cap}")
    reps, action = right_coset_orbit(h.elements_array(), np.arange(g.degree, dtype=INT),
                                     list(g.gens_array), index + 1)
    assert len(reps) == index
    images = [Permutation(a) for a in action]
    target = PermGroup(images, index)
    hom = GroupHomomorphism(g, target, images)
    return hom, [Permutation._wrap(r) for r in reps]


def subgroup_conjugator(g: PermGroup, h1: PermGroup, h2: PermGroup):
    """Least ``x`` (in rank order) with ``x * h1 * x^-1 == h2``, else ``None``."""
    for h in (h1, h2):
        if not h.is_subgroup_of(g):
            raise NotASubgroup("argument is not a subgroup of g")
    if h1.order() != h2.order():
        return None
    E = g.elements_array()
    inv = np.empty_like(E)
    rows = np.arange(len(E))[:, None]
    inv[rows, E] = np.arange(g.degree, dtype=INT)
    ok = np.ones(len(E), dtype=bool)
    for a in h1.generators:
        conj = inv[rows, a.array[E]]  # x * a * x^-1
        ok &= h2.rank_many(conj) >= 0
    hits = np.nonzero(ok)[0]
    return g.element(int(hits[0])) if len(hits) else None


def center(g: PermGroup) -> PermGroup:
    E = g.elements_array()
    ok = np.ones(len(E), dtype=bool)
    for s in g.generators:
        ok &= (s.array[E] == E[:, s.array]).all(axis=1)
    return subgroup_from_mask(g, ok)


def quotient_group(g: PermGroup, n: PermGroup):
    """``g / n`` as the action on cosets of ``n``, with the projection."""
    if not n.is_subgroup_of(g) or not is_normal(g, n):
        raise NotASubgroup("n is not a normal subgroup of g")
    hom, _ = coset_action(g, n)
    return hom.target, hom


def isomorphism_search(a: PermGroup, b: PermGroup):
    """An isomorphism ``a -> b`` as a dict generator -> image, or ``None``.

    Exhaustive backtracking over order- and class-size-compatible images of
    a greedily reduced generating set of ``a``; each partial assignment is
    checked by extending it along the Cayley graph.
    """
    from .autsearch import find_isomorphism

    return find_isomorphism(a, b)


def fiber_product(f, g) -> PermGroup:
    """``{(x, y) : f(x) == g(y)}`` acting on the disjoint union of domains.

    Points ``1..A.degree`` carry the first coordinate and the following
    ``B.degree`` points the second.
    """
    A, B = f.source, g.source
    if not isinstance(A, PermGroup) or not isinstance(B, PermGroup):
        raise TypeError("fiber_product needs permutation-group sources")
    if A.order() * B.order() > limits.enumeration_cap:
        raise CapExceeded("|A|*|B| exceeds enumeration cap")
    C = f.target
    if C.degree != g.target.degree:
        raise ValueError("homomorphisms must share a codomain")
    na, nb = A.degree, B.degree
    fimg = f.images_of(A.elements_array())
    gimg = g.images_of(B.elements_array())
    image_f = PermGroup(f.images, C.degree)
    image_g = PermGroup(g.images, C.degree)
    inter = subgroup_from_mask(image_f, image_g.rank_many(image_f.elements_array()) >= 0)
    gens = []
    ida = np.arange(na, dtype=INT)
    idb = np.arange(nb, dtype=INT)
    ker_f = subgroup_from_mask(A, (fimg == np.arange(C.degree)).all(axis=1))
    ker_g = subgroup_from_mask(B, (gimg == np.arange(C.degree)).all(axis=1))
    for k in ker_f.generators:
        gens.append(np.concatenate([k.array, idb + na]))
    for k in ker_g.generators:
        gens.append(np.concatenate([ida, k.array + na]))
    for c in inter.generators:
        ia = int(np.nonzero((fimg == c.array).all(axis=1))[0][0])
        ib = int(np.nonzero((gimg == c.array).all(axis=1))[0][0])
        gens.append(np.concatenate([A.elements_array()[ia], B.elements_array()[ib] + na]))
    gens = [x for x in gens if not _is_identity(x)]
    if not gens:
        return PermGroup([], na + nb)
    return PermGroup.from_arrays(gens, na + nb)


def restriction(g: PermGroup, start: int, stop: int):
    """Homomorphism restricting ``g`` to the invariant block of points
    ``start+1..stop`` (1-based, inclusive), e.g. a fiber-product projection."""
    from .homs import GroupHomomorphism

    imgs = []
    for s in g.generators:
        block = s.array[start:stop] - start
        if block.min() < 0 or block.max() >= stop - start:
            raise ValueError("points are not an invariant block")
        imgs.append(Permutation._wrap(block))
    return GroupHomomorphism(g, PermGroup(imgs, stop - start), imgs)
