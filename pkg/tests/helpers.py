"""Independent oracles and generated corpora shared by the test modules."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import numpy as np

from cosetlab.cosets import CosetTable
from cosetlab.fp import Presentation, free_reduce
from cosetlab.homs import GroupHomomorphism
from cosetlab.perm import (Permutation, PermGroup, alternating_group, cyclic_group, restriction,
                           symmetric_group)


# --- integer matrices -------------------------------------------------------

def det_laplace(rows):
    """Determinant by cofactor expansion (fine up to 5x5)."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * det_laplace(minor)
    return total


def gcd_of_minors(m, k):
    """gcd of all k x k minors of ``m``."""
    n_rows, n_cols = len(m), len(m[0]) if m else 0
    g = 0
    for ri in itertools.combinations(range(n_rows), k):
        for ci in itertools.combinations(range(n_cols), k):
            g = math.gcd(g, det_laplace([[m[i][j] for j in ci] for i in ri]))
    return g


def smith_diagonal_oracle(m):
    """Invariant factors from determinantal divisors ``d_k = D_k / D_{k-1}``."""
    n = min(len(m), len(m[0]) if m else 0)
    out = []
    prev = 1
    for k in range(1, n + 1):
        dk = gcd_of_minors(m, k)
        if dk == 0:
            out.extend([0] * (n - k + 1))
            break
        out.append(dk // prev)
        prev = dk
    return out


def random_matrix(rng, max_dim=5, bound=10):
    r, c = rng.integers(1, max_dim + 1, size=2)
    return rng.integers(-bound, bound + 1, size=(r, c)).tolist()


def det_fraction(rows):
    """Exact determinant by Gaussian elimination over the rationals."""
    a = [[Fraction(x) for x in r] for r in rows]
    n = len(a)
    d = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            d = -d
        d *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    return int(d)


# --- free groups --------------------------------------------------------------

def hall_counts(rank, max_index):
    """Subgroup counts of index 1..max_index in the free group of given rank."""
    counts = []
    for n in range(1, max_index + 1):
        a = n * math.factorial(n) ** (rank - 1)
        for i in range(1, n):
            a -= math.factorial(n - i) ** (rank - 1) * counts[i - 1]
        counts.append(a)
    return counts


def random_transitive_table(rng, rank, index):
    """Coset table of a random transitive action of the free group."""
    while True:
        perms = [rng.permutation(index) for _ in range(rank)]
        seen = {0}
        stack = [0]
        while stack:
            c = stack.pop()
            for p in perms:
                for d in (int(p[c]), int(np.argsort(p)[c])):
                    if d not in seen:
                        seen.add(d)
                        stack.append(d)
        if len(seen) == index:
            break
    rows = np.zeros((index, 2 * rank), dtype=np.int64)
    for j, p in enumerate(perms):
        rows[:, 2 * j] = p
        rows[:, 2 * j + 1] = np.argsort(p)
    return CosetTable(rank, rows).standardize()


# --- random presentations ---------------------------------------------------

def random_word(rng, letters, length):
    w = []
    while len(w) < length:
        x = int(rng.choice(letters)) * int(rng.choice([1, -1]))
        w.append(x)
        w = list(free_reduce(w))
    return tuple(w)


def random_presentation(rng):
    """At most 6 generators, 8 relators, relator length 12.

    Generators beyond the first two get a defining relator over earlier
    ones, so the group stays small enough for low-index counting while
    Tietze elimination has real work to do.
    """
    k = int(rng.integers(1, 7))
    base = min(k, 2)
    rels = []
    for g in range(base + 1, k + 1):
        w = random_word(rng, list(range(1, g)), int(rng.integers(1, 6)))
        rels.append(free_reduce((-g,) + w))
    extra = int(rng.integers(1, min(3, 8 - len(rels)) + 1))
    for _ in range(extra):
        length = int(rng.integers(2, 13))
        w = random_word(rng, list(range(1, k + 1)), length)
        if w:
            rels.append(w)
    rels = [r for r in rels if len(r) <= 12]
    return Presentation.on(k, rels[:8], prefix="g")


# --- covers for the preimage property ------------------------------------------

def direct_product(a: PermGroup, b: PermGroup) -> PermGroup:
    na, nb = a.degree, b.degree
    gens = []
    for s in a.generators:
        gens.append(np.concatenate([s.array, np.arange(na, na + nb)]))
    for s in b.generators:
        gens.append(np.concatenate([np.arange(na), s.array + na]))
    return PermGroup.from_arrays(gens, na + nb)


def sign_map(g: PermGroup):
    """Sign homomorphism onto C2 = <(1,2)>."""
    c2 = cyclic_group(2)
    imgs = []
    for s in g.generators:
        parity = sum(len(c) - 1 for c in s.cycles()) % 2
        imgs.append(c2.generators[0] if parity else Permutation.identity(2))
    return GroupHomomorphism(g, c2, imgs)


def trivial_map(g: PermGroup):
    c1 = PermGroup([], 1)
    return GroupHomomorphism(g, c1, [Permutation.identity(1)] * len(g.generators))


def s4_onto_s3():
    """S4 -> S3 via the action on the three pair partitions of {1,2,3,4}."""
    s4 = symmetric_group(4)
    parts = [frozenset({frozenset({1, 2}), frozenset({3, 4})}),
             frozenset({frozenset({1, 3}), frozenset({2, 4})}),
             frozenset({frozenset({1, 4}), frozenset({2, 3})})]
    imgs = []
    for s in s4.generators:
        img = []
        for pt in parts:
            moved = frozenset(frozenset(s(x) for x in pair) for pair in pt)
            img.append(parts.index(moved))
        imgs.append(Permutation(img))
    return GroupHomomorphism(s4, symmetric_group(3), imgs)


def covers_of(g: PermGroup, to_c2=None):
    """Surjections ``Gamma' -> g`` with ``|Gamma'| <= 10**4``.

    Direct-product covers ``g x K`` and fiber products over ``C2`` (when a
    map ``g -> C2`` is given) or over ``g`` itself (for ``S3``).
    """
    from cosetlab.perm import fiber_product

    out = []
    smalls = [("C2", cyclic_group(2)), ("C3", cyclic_group(3)), ("C4", cyclic_group(4)),
              ("S3", symmetric_group(3)), ("C5", cyclic_group(5)), ("C6", cyclic_group(6)),
              ("A4", alternating_group(4)), ("S4", symmetric_group(4))]
    for label, k in smalls:
        if g.order() * k.order() <= 10**4:
            prod = direct_product(g, k)
            out.append((f"G x {label}", restriction(prod, 0, g.degree)))
    if to_c2 is not None:
        for label, k in [("C2", cyclic_group(2)), ("C4", cyclic_group(4)),
                         ("C6", cyclic_group(6)), ("S3", symmetric_group(3)),
                         ("S4", symmetric_group(4)),
                         ("C2xC3", direct_product(cyclic_group(2), cyclic_group(3)))]:
            fp = fiber_product(to_c2, sign_map(k))
            if fp.order() <= 10**4:
                out.append((f"G x_C2 {label}", restriction(fp, 0, g.degree)))
    if g.order() == 6:
        ident = GroupHomomorphism(g, g, g.generators)
        cover = s4_onto_s3()
        fp = fiber_product(ident, cover)
        out.append(("G x_S3 S4", restriction(fp, 0, g.degree)))
        fp2 = fiber_product(ident, GroupHomomorphism(g, g, g.generators))
        out.append(("G x_S3 S3", restriction(fp2, 0, g.degree)))
    return out
