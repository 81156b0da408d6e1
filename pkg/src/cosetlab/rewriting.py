"""Reidemeister-Schreier rewriting and Tietze simplification."""

from __future__ import annotations

from dataclasses import dataclass, field

from .config import limits
from .cosets import CosetTable, column, letter, validate_table
from .errors import IncompleteTable
from .fp import Presentation, cyclic_reduce, free_reduce, inverse_word, multiply


@dataclass(frozen=True)
class SchreierData:
    """Coset representatives and Schreier generator numbering.

    ``transversal[c]`` is the representative word of coset ``c`` (0-based).
    ``schreier_generators[(c, j)]`` is the 1-based subgroup generator index
    of ``u_c * x_{j+1} * (u_{c.x_{j+1}})^-1``, or ``None`` when it is
    freely trivial (a spanning-tree edge).
    """

    transversal: list
    schreier_generators: dict
    words: list = field(default_factory=list)  # generator i+1 as a word in the parent group

    @property
    def n_generators(self):
        return len(self.words)


def schreier_transversal(t: CosetTable) -> SchreierData:
    if not t.complete:
        raise IncompleteTable("Schreier transversal needs a complete table")
    rows = t.rows
    n = t.n_cosets
    transversal = [None] * n
    transversal[0] = ()
    tree = set()
    order = [0]
    for c in order:
        for col in range(rows.shape[1]):
            d = int(rows[c, col])
            if transversal[d] is None:
                transversal[d] = transversal[c] + (letter(col),)
                tree.add((c, col))
                tree.add((d, col ^ 1))
                order.append(d)
    if len(order) != n:
        raise IncompleteTable("table is not transitive")
    gens = {}
    words = []
    for c in range(n):
        for j in range(t.n_generators):
            if (c, 2 * j) in tree:
                gens[(c, j)] = None
                continue
            d = int(rows[c, 2 * j])
            words.append(multiply(transversal[c], (j + 1,), inverse_word(transversal[d])))
            gens[(c, j)] = len(words)
    return SchreierData(transversal, gens, words)


def rewrite(word, coset, t: CosetTable, data: SchreierData):
    """Rewrite ``word`` read from ``coset`` as a word in Schreier generators."""
    rows = t.rows
    out = []
    d = coset
    for x in word:
        if x > 0:
            s = data.schreier_generators[(d, x - 1)]
            if s is not None:
                out.append(s)
            d = int(rows[d, column(x)])
        else:
            d2 = int(rows[d, column(x)])
            s = data.schreier_generators[(d2, -x - 1)]
            if s is not None:
                out.append(-s)
            d = d2
    return free_reduce(out)


def reidemeister_schreier(p: Presentation, t: CosetTable, data: SchreierData | None = None):
    """Presentation of the stabilizer of coset 1, on generators ``s1, s2, ...``."""
    if not validate_table(t, p):
        raise IncompleteTable("table is not a complete valid table for the presentation")
    if data is None:
        data = schreier_transversal(t)
    rels = []
    for c in range(t.n_cosets):
        for r in p.relators:
            w = rewrite(r, c, t, data)
            if w:
                rels.append(w)
    return Presentation.on(data.n_generators, rels)


def least_rotation(w):
    """Lexicographically least rotation (Booth's algorithm)."""
    n = len(w)
    if n < 2:
        return tuple(w)
    s = tuple(w) + tuple(w)
    f = [-1] * len(s)
    k = 0
    for j in range(1, len(s)):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return s[k:k + n]


def canonical_relator(w):
    """Canonical representative of ``w`` up to rotation and inversion."""
    w = cyclic_reduce(w)
    if not w:
        return w
    return min(least_rotation(w), least_rotation(inverse_word(w)))


def _find_elimination(rels, alive):
    best = None
    for rid, r in rels.items():
        if best is not None and len(r) > best[0]:
            continue
        counts = {}
        for x in r:
            counts[abs(x)] = counts.get(abs(x), 0) + 1
        for g, c in counts.items():
            if c == 1 and g in alive:
                key = (len(r), g, r)
                if best is None or key < best:
                    best = key + (rid,)
    return best


def _substitute(r, g, repl, repl_inv):
    out = []
    for x in r:
        if x == g:
            out.extend(repl)
        elif x == -g:
            out.extend(repl_inv)
        else:
            out.append(x)
    return canonical_relator(out)


@dataclass
class TietzeResult:
    presentation: Presentation
    kept: list          # original 1-based generator index of each new generator
    eliminations: list  # (original generator, word in original generators), in order
    stopped_by_cap: bool = False


def tietze_reduce(p: Presentation, length_cap=None) -> TietzeResult:
    """Generator elimination with bookkeeping; see :func:`tietze_simplify`."""
    if length_cap is None:
        length_cap = limits.tietze_length_cap
    rels = {}
    seen = set()
    for r in p.relators:
        c = canonical_relator(r)
        if c and c not in seen:
            seen.add(c)
            rels[len(rels)] = c
    next_id = len(rels)
    alive = set(range(1, p.n_generators + 1))
    eliminations = []
    stopped = False
    total = sum(len(r) for r in rels.values())
    while True:
        best = _find_elimination(rels, alive)
        if best is None:
            break
        _, g, r, rid = best
        pos = next(i for i, x in enumerate(r) if abs(x) == g)
        rot = r[pos:] + r[:pos]
        rest = rot[1:]
        repl = inverse_word(rest) if rot[0] == g else tuple(rest)
        repl_inv = inverse_word(repl)
        new_rels = {}
        touched = []
        for k, w in rels.items():
            if k == rid:
                continue
            if g in w or -g in w:
                touched.append(k)
        new_total = total - len(r)
        for k in touched:
            w = _substitute(rels[k], g, repl, repl_inv)
            new_rels[k] = w
            new_total += len(w) - len(rels[k])
        if new_total > length_cap:
            stopped = True
            break
        del rels[rid]
        seen.discard(r)
        for k in touched:
            seen.discard(rels[k])
            del rels[k]
        for k in touched:
            w = new_rels[k]
            if w and w not in seen:
                seen.add(w)
                rels[next_id] = w
                next_id += 1
        total = sum(len(w) for w in rels.values())
        alive.discard(g)
        eliminations.append((g, repl))
    kept = sorted(alive)
    renum = {g: i + 1 for i, g in enumerate(kept)}
    out = []
    for w in sorted(rels.values(), key=lambda w: (len(w), w)):
        out.append(tuple(renum[x] if x > 0 else -renum[-x] for x in w))
    pres = Presentation.on(len(kept), out)
    return TietzeResult(pres, kept, eliminations, stopped)


def tietze_simplify(p: Presentation, length_cap=None) -> Presentation:
    """Eliminate generators that occur exactly once in some relator.

    Each round the shortest such relator is used (ties: lowest generator
    index), then every relator is freely and cyclically reduced and
    duplicates up to rotation/inversion are dropped.  Stops, leaving the
    presentation valid, when an elimination would push the total relator
    length above ``length_cap``.
    """
    return tietze_reduce(p, length_cap).presentation


def generator_expressions(result: TietzeResult, n_original):
    """Each original generator as a word in the simplified generators."""
    renum = {g: i + 1 for i, g in enumerate(result.kept)}
    expr = {g: (renum[g],) for g in result.kept}
    for g, repl in reversed(result.eliminations):
        out = []
        for x in repl:
            out.extend(expr[x] if x > 0 else inverse_word(expr[-x]))
        expr[g] = free_reduce(out)
    return [expr[g] for g in range(1, n_original + 1)]
