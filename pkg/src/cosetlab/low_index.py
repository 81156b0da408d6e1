"""Conjugacy classes of low-index subgroups of finitely presented groups.

Sims' algorithm: a backtrack over standardized partial coset tables in
which the first undefined entry (row-major scan) is filled with each
existing coset whose inverse slot is free, then with one new coset.
Relator deductions are propagated after every choice, and a partial table
is pruned once renumbering it from some other base coset gives a
lexicographically smaller table.  Each surviving complete table is the
least member of its conjugacy class.

Long relators rarely force an entry before a table is nearly full, yet
scanning them dominates the cost per node.  Only relators of length at most
``limits.deduction_length`` drive deductions; every complete table is then
checked against the full relator set.  The output does not depend on the
threshold.
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .config import limits
from .cosets import CosetTable, standard_order, renumber, validate_table, word_columns
from .errors import CapExceeded
from .fp import Presentation, cyclic_reduce


def _relator_index(p: Presentation, max_length=None):
    """Flat relator columns plus, for each column, every (relator, position)
    whose letter is that column."""
    ncols = 2 * p.n_generators
    wcols = []
    starts = []
    for r in p.relators:
        if max_length is not None and len(r) > max_length:
            continue
        r = cyclic_reduce(r)
        if not r:
            continue
        starts.append((len(wcols), len(r)))
        wcols.extend(word_columns(r))
    by_col = [[] for _ in range(ncols)]
    for start, length in starts:
        for pos in range(length):
            by_col[wcols[start + pos]].append((start, length, pos))
    conj_start = np.zeros(ncols + 1, dtype=np.int64)
    flat = []
    for x in range(ncols):
        flat.extend(by_col[x])
        conj_start[x + 1] = len(flat)
    arr = np.array(flat, dtype=np.int64).reshape(-1, 3)
    return (np.array(wcols, dtype=np.int64), conj_start,
            np.ascontiguousarray(arr[:, 0]), np.ascontiguousarray(arr[:, 1]),
            np.ascontiguousarray(arr[:, 2]))


def search(p: Presentation, min_index: int, max_index: int, deduction_length=None):
    """(list of CosetTable, nodes visited)."""
    if min_index < 1 or max_index < min_index:
        raise ValueError("need 1 <= min_index <= max_index")
    if max_index > limits.low_index_cap:
        raise CapExceeded(f"max index {max_index} exceeds low-index cap {limits.low_index_cap}")
    ncols = 2 * p.n_generators
    if deduction_length is None:
        deduction_length = limits.deduction_length
    short = all(len(r) <= deduction_length for r in p.relators)
    index = _relator_index(p, None if short else deduction_length)
    tables, sizes, nodes = kernels.low_index_search(ncols, min_index, max_index, *index)
    out = []
    for t, n in zip(tables, sizes):
        table = CosetTable(p.n_generators, t[:n])
        if short or validate_table(table, p):
            out.append(table)
    return out, int(nodes)


def low_index_classes(p: Presentation, min_index: int, max_index: int):
    """One coset table per conjugacy class of subgroups of index in
    ``[min_index, max_index]``, in backtrack order."""
    return search(p, min_index, max_index)[0]


def class_size(t: CosetTable) -> int:
    """Number of conjugates, counted as distinct standardized renumberings."""
    seen = set()
    for beta in range(t.n_cosets):
        order = standard_order(t.rows, beta)
        seen.add(renumber(t.rows, order).tobytes())
    return len(seen)


def count_subgroups(p: Presentation, index: int) -> int:
    """Number of subgroups (not classes) of exactly the given index."""
    return sum(class_size(t) for t in low_index_classes(p, index, index))


def index_histogram(tables):
    """``{index: number of classes}`` for a list of tables."""
    hist = {}
    for t in tables:
        hist[t.n_cosets] = hist.get(t.n_cosets, 0) + 1
    return dict(sorted(hist.items()))
