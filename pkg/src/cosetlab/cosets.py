"""Coset tables and coset enumeration.

Columns are ordered ``x1, x1^-1, x2, x2^-1, ...``; the column of letter
``k`` is ``2(k-1)`` and of ``-k`` is ``2(k-1)+1``, so ``col ^ 1`` is the
inverse column.  Cosets are 0-based in memory and 1-based in text.
"""

from __future__ import annotations

import numpy as np

from .config import limits
from .errors import CapExceeded, CosetLimitExceeded, IncompleteTable, NotASubgroup
from .fp import Presentation
from .perm import INT, Permutation, PermGroup, right_coset_orbit


def column(letter):
    return 2 * (abs(letter) - 1) + (1 if letter < 0 else 0)


def letter(col):
    k = col // 2 + 1
    return -k if col & 1 else k


def word_columns(w):
    return [column(x) for x in w]


class CosetTable:
    """A (possibly partial) coset table; ``-1`` marks an undefined entry."""

    def __init__(self, n_generators, rows):
        rows = np.array(rows, dtype=INT)
        rows = rows.reshape(len(rows), 2 * n_generators) if n_generators == 0 else \
            rows.reshape(-1, 2 * n_generators)
        rows.flags.writeable = False
        self.n_generators = n_generators
        self.rows = rows

    @property
    def n_cosets(self):
        return len(self.rows)

    def __len__(self):
        return len(self.rows)

    @property
    def complete(self):
        return bool(self.n_cosets > 0 and (self.rows >= 0).all())

    def trace(self, coset, word):
        """Coset reached from ``coset`` (0-based) along ``word``, or -1."""
        c = coset
        for x in word:
            c = int(self.rows[c, column(x)])
            if c < 0:
                return -1
        return c

    def permutations(self):
        """Action of each generator as a permutation of the cosets."""
        if not self.complete:
            raise IncompleteTable("table is incomplete")
        return [Permutation(self.rows[:, 2 * j]) for j in range(self.n_generators)]

    def standardize(self):
        """Renumber cosets in order of first appearance scanning rows in
        order and columns left to right, starting from coset 0."""
        order = standard_order(self.rows, 0)
        if len(order) != self.n_cosets:
            raise IncompleteTable("table is not connected from coset 1")
        return CosetTable(self.n_generators, renumber(self.rows, order))

    def to_text(self):
        lines = []
        for r in self.rows:
            lines.append(" ".join("-" if x < 0 else str(int(x) + 1) for x in r))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text, n_generators=None):
        rows = []
        for line in text.splitlines():
            if not line.strip():
                continue
            rows.append([-1 if tok == "-" else int(tok) - 1 for tok in line.split()])
        if n_generators is None:
            n_generators = len(rows[0]) // 2
        return cls(n_generators, rows)

    def __eq__(self, other):
        if not isinstance(other, CosetTable):
            return NotImplemented
        return self.n_generators == other.n_generators and np.array_equal(self.rows, other.rows)

    def __hash__(self):
        return hash((self.n_generators, self.rows.tobytes()))

    def __repr__(self):
        state = "complete" if self.complete else "partial"
        return f"CosetTable({self.n_cosets} cosets, {self.n_generators} generators, {state})"


def standard_order(rows, start):
    order = [start]
    seen = {start}
    i = 0
    while i < len(order):
        for d in rows[order[i]]:
            d = int(d)
            if d >= 0 and d not in seen:
                seen.add(d)
                order.append(d)
        i += 1
    return order


def renumber(rows, order):
    new = np.full(len(rows), -1, dtype=np.int64)
    new[np.array(order)] = np.arange(len(order))
    out = rows[np.array(order)].astype(np.int64)
    mask = out >= 0
    out[mask] = new[out[mask]]
    return out


def table_from_homomorphism(e, h: PermGroup) -> CosetTable:
    """Coset table of the preimage ``e^-1(h)`` in ``e``'s presentation."""
    target = e.target
    if not h.is_subgroup_of(target):
        raise NotASubgroup("h is not a subgroup of the target")
    index = target.order() // h.order()
    if index > limits.index_cap:
        raise CapExceeded(f"index {index} exceeds cap {limits.index_cap}")
    gens = []
    for x in e.images:
        gens.append(x.array)
        gens.append(x.inverse().array)
    reps, action = right_coset_orbit(h.elements_array(), np.arange(target.degree, dtype=INT),
                                     gens, index + 1)
    rows = np.array(action, dtype=INT).T
    return CosetTable(len(e.images), rows).standardize()


def validate_table(t: CosetTable, p: Presentation, subgroup_words=()) -> bool:
    """Complete, consistent, every relator closes at every coset, and
    coset 1 is fixed by each subgroup word."""
    if t.n_generators != p.n_generators or not t.complete:
        return False
    rows = t.rows
    idx = np.arange(t.n_cosets)
    for col in range(rows.shape[1]):
        if not np.array_equal(rows[rows[:, col], col ^ 1], idx):
            return False
    for r in p.relators:
        cur = idx
        for col in word_columns(r):
            cur = rows[cur, col]
        if not np.array_equal(cur, idx):
            return False
    return all(t.trace(0, w) == 0 for w in subgroup_words)


class _Enumerator:
    def __init__(self, ncols, max_cosets):
        self.ncols = ncols
        self.max_cosets = max_cosets
        self.table = [[-1] * ncols]
        self.parent = [0]
        self.live = 1

    def rep(self, c):
        p = self.parent
        r = c
        while p[r] != r:
            r = p[r]
        while p[c] != r:
            p[c], c = r, p[c]
        return r

    def define(self, c, x):
        if self.live >= self.max_cosets:
            raise CosetLimitExceeded(f"more than {self.max_cosets} live cosets; raise the limit")
        d = len(self.table)
        self.table.append([-1] * self.ncols)
        self.parent.append(d)
        self.live += 1
        self.table[c][x] = d
        self.table[d][x ^ 1] = c
        return d

    def _merge(self, a, b, queue):
        a, b = self.rep(a), self.rep(b)
        if a != b:
            lo, hi = min(a, b), max(a, b)
            self.parent[hi] = lo
            self.live -= 1
            queue.append(hi)

    def coincidence(self, a, b):
        queue = []
        self._merge(a, b, queue)
        T = self.table
        i = 0
        while i < len(queue):
            g = queue[i]
            i += 1
            for x in range(self.ncols):
                d = T[g][x]
                if d < 0:
                    continue
                if T[d][x ^ 1] == g:
                    T[d][x ^ 1] = -1
                mu, nu = self.rep(g), self.rep(d)
                if T[mu][x] >= 0:
                    self._merge(nu, T[mu][x], queue)
                elif T[nu][x ^ 1] >= 0:
                    self._merge(mu, T[nu][x ^ 1], queue)
                else:
                    T[mu][x] = nu
                    T[nu][x ^ 1] = mu

    def scan_and_fill(self, alpha, w):
        T = self.table
        n = len(w)
        f, i = alpha, 0
        b, j = alpha, n - 1
        while True:
            while i <= j and T[f][w[i]] >= 0:
                f = T[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and T[b][w[j] ^ 1] >= 0:
                b = T[b][w[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                T[f][w[i]] = b
                T[b][w[i] ^ 1] = f
                return
            self.define(f, w[i])

    def result(self, n_generators):
        alive = [c for c in range(len(self.table)) if self.parent[c] == c]
        new = {c: k for k, c in enumerate(alive)}
        rows = [[new[self.rep(d)] for d in self.table[c]] for c in alive]
        return CosetTable(n_generators, rows).standardize()


def todd_coxeter(p: Presentation, subgroup_words=(), max_cosets=None) -> CosetTable:
    """HLT coset enumeration with a coincidence queue.

    Raises :class:`CosetLimitExceeded` when more than ``max_cosets`` live
    cosets would be needed; that says nothing about the true index.
    """
    if max_cosets is None:
        max_cosets = limits.default_max_cosets
    k = p.n_generators
    if k == 0:
        return CosetTable(0, np.zeros((1, 0), dtype=INT))
    for w in subgroup_words:
        if any(abs(x) > k for x in w):
            raise ValueError("subgroup word uses an unknown generator")
    en = _Enumerator(2 * k, max_cosets)
    rels = [word_columns(r) for r in p.relators]
    for w in subgroup_words:
        if w:
            en.scan_and_fill(0, word_columns(w))
    alpha = 0
    while alpha < len(en.table):
        if en.parent[alpha] == alpha:
            for r in rels:
                en.scan_and_fill(alpha, r)
                if en.parent[alpha] != alpha:
                    break
            if en.parent[alpha] == alpha:
                for x in range(2 * k):
                    if en.table[alpha][x] < 0:
                        en.define(alpha, x)
        alpha += 1
    return en.result(k)
