"""Homomorphisms into permutation groups."""

from __future__ import annotations

from functools import cached_property

import numpy as np

from .errors import HomomorphismError
from .fp import Presentation, evaluate_word, format_word
from .perm import INT, Permutation, PermGroup, StabilizerChain, subgroup_from_mask


class GroupHomomorphism:
    """A verified homomorphism from a presentation or permutation group.

    For a presentation every relator is evaluated on the images.  For a
    permutation group the graph ``<(s, f(s))>`` acting on the disjoint union
    of both domains must have the order of the source; that is exactly the
    condition for ``s -> f(s)`` to extend to a well-defined map.
    """

    def __init__(self, source, target: PermGroup, images):
        images = list(images)
        self.source = source
        self.target = target
        self.images = tuple(images)
        for x in images:
            if x.degree != target.degree:
                raise ValueError("image degree differs from target degree")
        if isinstance(source, Presentation):
            if len(images) != source.n_generators:
                raise ValueError("need one image per generator")
            arrays = [x.array for x in images]
            for r in source.relators:
                if not np.array_equal(evaluate_word(r, arrays, target.degree),
                                      np.arange(target.degree)):
                    text = format_word(r, source.generator_names)
                    raise HomomorphismError(f"relator {text} is not mapped to the identity",
                                            relator=r)
        elif isinstance(source, PermGroup):
            if len(images) != len(source.generators):
                raise ValueError("need one image per generator")
            if self._graph.order() != source.order():
                raise HomomorphismError("generator images do not define a homomorphism")
        else:
            raise TypeError("source must be a Presentation or PermGroup")

    @cached_property
    def _graph(self):
        na = self.source.degree
        gens = [np.concatenate([s.array, x.array + na])
                for s, x in zip(self.source.generators, self.images)]
        return StabilizerChain(na + self.target.degree, gens)

    def images_of(self, X):
        """Images of the rows of ``X`` (elements of a permutation source)."""
        X = np.atleast_2d(np.asarray(X, dtype=INT))
        na, nb = self.source.degree, self.target.degree
        cur = np.concatenate([X, np.broadcast_to(np.arange(na, na + nb, dtype=INT),
                                                 (len(X), nb))], axis=1)
        for lv in self._graph.levels:
            idx = lv.index_of[cur[:, lv.point]]
            if (idx < 0).any():
                raise ValueError("element not in the source group")
            _, inv = lv.stacked()
            cur = inv[idx[:, None], cur]
        if not (cur[:, :na] == np.arange(na)).all():
            raise ValueError("element not in the source group")
        res = cur[:, na:] - na  # f(x)^-1
        out = np.empty_like(res)
        rows = np.arange(len(res))[:, None]
        out[rows, res] = np.arange(nb, dtype=INT)
        return out

    def __call__(self, x):
        if isinstance(self.source, Presentation):
            arrays = [g.array for g in self.images]
            return Permutation._wrap(evaluate_word(x, arrays, self.target.degree))
        return Permutation._wrap(self.images_of(x.array[None, :])[0])

    def image(self) -> PermGroup:
        return PermGroup(self.images, self.target.degree)

    def is_surjective(self):
        return self.image().order() == self.target.order()

    def kernel(self) -> PermGroup:
        src = self.source
        if not isinstance(src, PermGroup):
            raise TypeError("kernel needs a permutation-group source")
        imgs = self.images_of(src.elements_array())
        return subgroup_from_mask(src, (imgs == np.arange(self.target.degree)).all(axis=1))
