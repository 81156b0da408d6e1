"""Words and finitely presented groups.

A word is a tuple of nonzero ints: ``k`` is generator ``k`` (1-based) and
``-k`` its inverse.  Words handed around by this package are always freely
reduced.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .zlinalg import abelian_invariants_of

Word = tuple

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def free_reduce(letters) -> Word:
    out = []
    for x in letters:
        if x == 0:
            raise ValueError("letter 0 is not allowed")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def inverse_word(w) -> Word:
    return tuple(-x for x in reversed(w))


def multiply(*words) -> Word:
    out = []
    for w in words:
        out.extend(w)
    return free_reduce(out)


def power(w, k) -> Word:
    if k < 0:
        w, k = inverse_word(w), -k
    return free_reduce(tuple(w) * k)


def cyclic_reduce(w) -> Word:
    w = free_reduce(w)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j]


def exponent_sums(w, n_generators):
    row = [0] * n_generators
    for x in w:
        row[abs(x) - 1] += 1 if x > 0 else -1
    return row


def format_word(w, names) -> str:
    """Render in the presentation grammar, e.g. ``x^2*y^-1``; empty -> ``1``.

    ``1`` is not valid inside a relator list; callers format nonempty words.
    """
    if not w:
        return "1"
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        k = (j - i) * (1 if w[i] > 0 else -1)
        name = names[abs(w[i]) - 1]
        parts.append(name if k == 1 else f"{name}^{k}")
        i = j
    return "*".join(parts)


@dataclass(frozen=True)
class Presentation:
    generator_names: tuple
    relators: tuple

    def __post_init__(self):
        names = tuple(self.generator_names)
        if len(set(names)) != len(names):
            raise ValueError("generator names must be distinct")
        for name in names:
            if not _NAME.match(name):
                raise ValueError(f"invalid generator name {name!r}")
        n = len(names)
        rels = []
        for r in self.relators:
            r = free_reduce(r)
            if any(abs(x) > n for x in r):
                raise ValueError(f"relator {r} uses a generator beyond {n}")
            if r:
                rels.append(r)
        object.__setattr__(self, "generator_names", names)
        object.__setattr__(self, "relators", tuple(rels))

    @classmethod
    def on(cls, n, relators=(), prefix="s"):
        """Presentation on generators ``s1..sn``."""
        return cls(tuple(f"{prefix}{i}" for i in range(1, n + 1)), tuple(relators))

    @property
    def n_generators(self):
        return len(self.generator_names)

    def relation_matrix(self):
        return [exponent_sums(r, self.n_generators) for r in self.relators]

    def format(self) -> str:
        gens = ", ".join(self.generator_names)
        rels = ", ".join(format_word(r, self.generator_names) for r in self.relators)
        return f"gens {gens}; rels {rels};"

    def total_length(self):
        return sum(len(r) for r in self.relators)

    def __str__(self):
        return self.format()


def evaluate_word(w, image_arrays, degree):
    """Product of generator images along ``w`` as a 0-based array."""
    cur = np.arange(degree, dtype=np.int32)
    inverses = {}
    for x in w:
        g = abs(x) - 1
        if x > 0:
            a = image_arrays[g]
        else:
            a = inverses.get(g)
            if a is None:
                a = np.empty_like(image_arrays[g])
                a[image_arrays[g]] = np.arange(degree, dtype=a.dtype)
                inverses[g] = a
        cur = a[cur]
    return cur


def abelian_invariants(p: Presentation):
    """(torsion invariants d1 | d2 | ..., free rank) of the abelianization."""
    return abelian_invariants_of(p.relation_matrix(), p.n_generators)


def verify_homomorphism(p: Presentation, images):
    from .homs import GroupHomomorphism
    from .perm import PermGroup

    images = list(images)
    if not images:
        raise ValueError("need at least one image")
    return GroupHomomorphism(p, PermGroup(images, images[0].degree), images)


def image_is_full(h, target) -> bool:
    from .perm import PermGroup

    if not all(target.contains(x) for x in h.images):
        raise ValueError("images do not lie in the target")
    return PermGroup(h.images, target.degree).order() == target.order()
