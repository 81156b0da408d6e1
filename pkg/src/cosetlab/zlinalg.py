"""Exact integer matrices, Smith normal form and abelian invariants.

Elimination runs on numpy arrays: ``int64`` while every entry stays below
2**31 (so no single update can overflow), then Python-int ``object`` arrays
from that point on.  Results are always exact.
"""

from __future__ import annotations

import numpy as np

_SAFE = 2**31


class IntMatrix:
    """A dense matrix of Python ints."""

    def __init__(self, rows, n_cols=None):
        rows = [[int(x) for x in r] for r in rows]
        if n_cols is None:
            n_cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != n_cols:
                raise ValueError("ragged matrix")
        self.rows = rows
        self.n_rows = len(rows)
        self.n_cols = n_cols

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, n_rows, n_cols):
        return cls([[0] * n_cols for _ in range(n_rows)], n_cols)

    @classmethod
    def from_text(cls, text):
        rows = [[int(tok) for tok in line.split()] for line in text.splitlines() if line.strip()]
        return cls(rows)

    def to_text(self):
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows) + "\n"

    def tolist(self):
        return [list(r) for r in self.rows]

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if isinstance(other, IntMatrix):
            return self.n_cols == other.n_cols and self.rows == other.rows
        return NotImplemented

    def __matmul__(self, other):
        if self.n_cols != other.n_rows:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other.rows)) if other.rows else [()] * other.n_cols
        return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows],
                         other.n_cols)

    def diagonal(self):
        return [self.rows[i][i] for i in range(min(self.n_rows, self.n_cols))]

    def is_diagonal(self):
        return all(x == 0 for i, r in enumerate(self.rows) for j, x in enumerate(r) if i != j)

    def det(self):
        """Exact determinant (Bareiss fraction-free elimination)."""
        n = self.n_rows
        if n != self.n_cols:
            raise ValueError("square matrix required")
        a = [list(r) for r in self.rows]
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1

    def __repr__(self):
        return f"IntMatrix({self.rows})"


def _as_array(m):
    if isinstance(m, IntMatrix):
        rows, n_cols = m.rows, m.n_cols
    else:
        rows = [list(r) for r in m]
        n_cols = len(rows[0]) if rows else 0
    a = np.zeros((len(rows), n_cols), dtype=np.int64)
    big = any(abs(int(x)) >= _SAFE for r in rows for x in r)
    if big:
        a = a.astype(object)
    for i, r in enumerate(rows):
        a[i, :] = [int(x) for x in r]
    return a


class _Eliminator:
    def __init__(self, a, transforms):
        self.a = a
        m, n = a.shape
        self.transforms = transforms
        self.u = np.eye(m, dtype=a.dtype) if transforms else None
        self.v = np.eye(n, dtype=a.dtype) if transforms else None

    def _guard(self):
        if self.a.dtype == object:
            return
        arrays = [self.a] + ([self.u, self.v] if self.transforms else [])
        if any(x.size and np.abs(x).max() >= _SAFE for x in arrays):
            self.a = self.a.astype(object)
            if self.transforms:
                self.u = self.u.astype(object)
                self.v = self.v.astype(object)

    def swap_rows(self, i, j):
        if i != j:
            self.a[[i, j]] = self.a[[j, i]]
            if self.transforms:
                self.u[[i, j]] = self.u[[j, i]]

    def swap_cols(self, i, j):
        if i != j:
            self.a[:, [i, j]] = self.a[:, [j, i]]
            if self.transforms:
                self.v[:, [i, j]] = self.v[:, [j, i]]

    def clear_col(self, t):
        a = self.a
        q = a[t + 1:, t] // a[t, t]
        rows = np.nonzero(q)[0]
        if len(rows):
            self._guard()
            a = self.a
            q = q[rows].astype(a.dtype)
            rows = rows + t + 1
            a[rows, t:] -= q[:, None] * a[t, t:][None, :]
            if self.transforms:
                self.u[rows, :] -= q[:, None] * self.u[t, :][None, :]

    def clear_row(self, t):
        a = self.a
        q = a[t, t + 1:] // a[t, t]
        cols = np.nonzero(q)[0]
        if len(cols):
            self._guard()
            a = self.a
            q = q[cols].astype(a.dtype)
            cols = cols + t + 1
            a[t:, cols] -= a[t:, t][:, None] * q[None, :]
            if self.transforms:
                self.v[:, cols] -= self.v[:, t][:, None] * q[None, :]

    def add_row(self, src, dst):
        self._guard()
        self.a[dst, :] += self.a[src, :]
        if self.transforms:
            self.u[dst, :] += self.u[src, :]

    def negate_row(self, t):
        self.a[t, :] = -self.a[t, :]
        if self.transforms:
            self.u[t, :] = -self.u[t, :]

    def run(self):
        a = self.a
        m, n = a.shape
        t = 0
        while t < min(m, n):
            sub = self.a[t:, t:]
            nz = sub != 0
            if not nz.any():
                break
            absval = np.where(nz, np.abs(sub), 0)
            best = absval[nz].min()
            i, j = np.argwhere(nz & (absval == best))[0]
            self.swap_rows(t, t + int(i))
            self.swap_cols(t, t + int(j))
            while True:
                self.clear_col(t)
                self.clear_row(t)
                a = self.a
                col = a[t + 1:, t]
                row = a[t, t + 1:]
                if col.any() or row.any():
                    ci = np.nonzero(col)[0]
                    ri = np.nonzero(row)[0]
                    cbest = np.abs(col[ci]).min() if len(ci) else None
                    rbest = np.abs(row[ri]).min() if len(ri) else None
                    if rbest is None or (cbest is not None and cbest <= rbest):
                        k = int(ci[np.argmax(np.abs(col[ci]) == cbest)])
                        self.swap_rows(t, t + 1 + k)
                    else:
                        k = int(ri[np.argmax(np.abs(row[ri]) == rbest)])
                        self.swap_cols(t, t + 1 + k)
                    continue
                p = a[t, t]
                rest = a[t + 1:, t + 1:]
                bad = np.argwhere(rest % p != 0) if rest.size else np.zeros((0, 2))
                if len(bad):
                    self.add_row(t + 1 + int(bad[0][0]), t)
                    continue
                break
            if self.a[t, t] < 0:
                self.negate_row(t)
            t += 1
        return self


def _to_matrix(a):
    return IntMatrix([[int(x) for x in r] for r in a], a.shape[1])


def smith_normal_form(m):
    """Return ``(d, u, v)`` with ``u @ m @ v == d`` and ``d1 | d2 | ...``."""
    a = _as_array(m)
    e = _Eliminator(a, transforms=True).run()
    return _to_matrix(e.a), _to_matrix(e.u), _to_matrix(e.v)


def smith_diagonal(m):
    """Diagonal of the Smith form only (no transforms, cheaper)."""
    a = _as_array(m)
    if a.size == 0:
        return []
    e = _Eliminator(a, transforms=False).run()
    return [int(x) for x in np.diagonal(e.a)]


def abelian_invariants_of(m, n_generators):
    """(torsion list, free rank) for the relation matrix ``m`` (rows = relators)."""
    a = _as_array(m)
    if a.shape[0] and a.shape[1] != n_generators:
        raise ValueError("relation matrix needs one column per generator")
    diag = smith_diagonal(m) if a.size else []
    torsion = [d for d in diag if d > 1]
    rank = n_generators - sum(1 for d in diag if d != 0)
    return torsion, rank
