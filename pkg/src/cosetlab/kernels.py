"""Hot inner loops.

Each kernel is a plain-loop function compiled with ``numba.njit`` unless
``COSETLAB_DISABLE_NUMBA=1`` is set.  Where a loop has a natural
vectorized form (element orders) the disabled path uses that numpy version
instead of interpreting the loop.  Results never depend on which path runs.
"""

import numpy as np

from ._accel import ENABLED, njit


@njit
def _element_orders_loop(E):
    m, n = E.shape
    out = np.ones(m, dtype=np.int64)
    seen = np.zeros(n, dtype=np.bool_)
    for r in range(m):
        seen[:] = False
        order = 1
        for start in range(n):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = E[r, j]
                length += 1
            a, b = order, length
            while b:
                a, b = b, a % b
            order = order // a * length
        out[r] = order
    return out


def _element_orders_numpy(E):
    m, n = E.shape
    ident = np.arange(n)
    cur = np.broadcast_to(ident, (m, n)).copy()
    cycle = np.zeros((m, n), dtype=np.int64)
    rows = np.arange(m)[:, None]
    for step in range(1, n + 1):
        cur = E[rows, cur]
        hit = (cur == ident) & (cycle == 0)
        cycle[hit] = step
        if step % 8 == 0 and (cycle > 0).all():
            break
    return np.lcm.reduce(cycle, axis=1).astype(np.int64)


def element_orders(E):
    """Order of every row of an element array."""
    E = np.ascontiguousarray(E)
    if len(E) == 0:
        return np.zeros(0, dtype=np.int64)
    if ENABLED:
        return _element_orders_loop(E)
    return _element_orders_numpy(E)


@njit
def extend_map(mul_a, mul_b, gens_a, imgs_b, k, injective, img, used, queue):
    """Extend ``gens_a[:k] -> imgs_b[:k]`` along the Cayley graph of ``a``.

    ``img`` receives the map on the subgroup generated by the first ``k``
    generators (``-1`` elsewhere).  Returns the subgroup order, or ``-1`` if
    the assignment does not extend to a homomorphism (or, with
    ``injective``, to an injective one).  Identity has rank 0 in both.
    """
    img[:] = -1
    used[:] = False
    img[0] = 0
    used[0] = True
    queue[0] = 0
    head = 0
    tail = 1
    while head < tail:
        e = queue[head]
        head += 1
        ie = img[e]
        for j in range(k):
            f = mul_a[e, gens_a[j]]
            v = mul_b[ie, imgs_b[j]]
            w = img[f]
            if w < 0:
                if injective and used[v]:
                    return -1
                img[f] = v
                used[v] = True
                queue[tail] = f
                tail += 1
            elif w != v:
                return -1
    return tail


@njit
def _scan_deduce(T, c, wcols, start, length, pos, log, top, queue, qtail):
    """Scan the rotation of one relator beginning at ``pos`` from coset ``c``.

    Returns (status, top, qtail) with status 0 = fine, 1 = conflict.
    A gap of exactly one entry is filled and queued as a deduction.
    """
    f = c
    i = 0
    while i < length:
        x = wcols[start + (pos + i) % length]
        nx = T[f, x]
        if nx < 0:
            break
        f = nx
        i += 1
    if i == length:
        if f != c:
            return 1, top, qtail
        return 0, top, qtail
    b = c
    j = length - 1
    while j >= i:
        x = wcols[start + (pos + j) % length]
        nx = T[b, x ^ 1]
        if nx < 0:
            break
        b = nx
        j -= 1
    if j < i:
        return 1, top, qtail
    if j == i:
        x = wcols[start + (pos + i) % length]
        ncols = T.shape[1]
        T[f, x] = b
        log[top] = f * ncols + x
        top += 1
        if T[b, x ^ 1] < 0:
            T[b, x ^ 1] = f
            log[top] = b * ncols + (x ^ 1)
            top += 1
        elif T[b, x ^ 1] != f:
            return 1, top, qtail
        queue[qtail, 0] = f
        queue[qtail, 1] = x
        qtail += 1
        queue[qtail, 0] = b
        queue[qtail, 1] = x ^ 1
        qtail += 1
    return 0, top, qtail


@njit
def _deduce(T, queue, qtail, wcols, conj_start, conj_rstart, conj_rlen, conj_pos, log, top):
    qhead = 0
    while qhead < qtail:
        c = queue[qhead, 0]
        x = queue[qhead, 1]
        qhead += 1
        for k in range(conj_start[x], conj_start[x + 1]):
            status, top, qtail = _scan_deduce(T, c, wcols, conj_rstart[k], conj_rlen[k],
                                              conj_pos[k], log, top, queue, qtail)
            if status:
                return False, top
    return True, top


@njit
def _is_first_in_class(T, n, num, order):
    ncols = T.shape[1]
    for beta in range(1, n):
        for i in range(n):
            num[i] = -1
        num[beta] = 0
        order[0] = beta
        nxt = 1
        decided = False
        for k in range(n):
            if k >= nxt:
                break
            old = order[k]
            for col in range(ncols):
                t = T[old, col]
                if t < 0:
                    decided = True
                    break
                if num[t] < 0:
                    num[t] = nxt
                    order[nxt] = t
                    nxt += 1
                v = num[t]
                w = T[k, col]
                if w < 0:
                    decided = True
                    break
                if v < w:
                    return False
                if v > w:
                    decided = True
                    break
            if decided:
                break
    return True


@njit
def low_index_search(ncols, min_n, max_n, wcols, conj_start, conj_rstart, conj_rlen, conj_pos):
    """Sims' backtrack over standardized partial coset tables.

    Returns (tables, sizes, nodes): ``tables[i, :sizes[i]]`` is the i-th
    first-in-class complete table with index in ``[min_n, max_n]``.
    """
    T = np.full((max_n, ncols), -1, dtype=np.int32)
    cells = max_n * ncols
    log = np.zeros(cells + 4, dtype=np.int64)
    queue = np.zeros((2 * cells + 4, 2), dtype=np.int64)
    num = np.zeros(max_n, dtype=np.int64)
    order = np.zeros(max_n, dtype=np.int64)
    st_c = np.zeros(cells + 1, dtype=np.int64)
    st_col = np.zeros(cells + 1, dtype=np.int64)
    st_cand = np.zeros(cells + 1, dtype=np.int64)
    st_top = np.zeros(cells + 1, dtype=np.int64)
    st_n = np.zeros(cells + 1, dtype=np.int64)
    out = np.zeros((16, max_n, ncols), dtype=np.int32)
    sizes = np.zeros(16, dtype=np.int64)
    found = 0
    nodes = 0
    top = 0
    n = 1
    if ncols == 0:
        if min_n <= 1:
            sizes[0] = 1
            return out[:1], sizes[:1], 1
        return out[:0], sizes[:0], 1
    depth = 0
    st_c[0] = 0
    st_col[0] = 0
    st_cand[0] = 0
    st_top[0] = 0
    st_n[0] = 1
    while depth >= 0:
        while top > st_top[depth]:
            top -= 1
            p = log[top]
            T[p // ncols, p % ncols] = -1
        n = st_n[depth]
        c = st_c[depth]
        col = st_col[depth]
        d = st_cand[depth]
        inv = col ^ 1
        while d < n and T[d, inv] >= 0:
            d += 1
        if d > n or (d == n and n >= max_n):
            depth -= 1
            continue
        st_cand[depth] = d + 1
        nodes += 1
        if d == n:
            n += 1
        T[c, col] = d
        log[top] = c * ncols + col
        top += 1
        if T[d, inv] < 0:
            T[d, inv] = c
            log[top] = d * ncols + inv
            top += 1
        queue[0, 0] = c
        queue[0, 1] = col
        queue[1, 0] = d
        queue[1, 1] = inv
        ok, top = _deduce(T, queue, 2, wcols, conj_start, conj_rstart, conj_rlen, conj_pos,
                          log, top)
        if not ok:
            continue
        if not _is_first_in_class(T, n, num, order):
            continue
        nc = -1
        ncol = -1
        pos = c * ncols + col
        while pos < n * ncols:
            if T[pos // ncols, pos % ncols] < 0:
                nc = pos // ncols
                ncol = pos % ncols
                break
            pos += 1
        if nc < 0:
            if n >= min_n:
                if found == len(sizes):
                    bigger = np.zeros((2 * found, max_n, ncols), dtype=np.int32)
                    bigger[:found] = out
                    out = bigger
                    bs = np.zeros(2 * found, dtype=np.int64)
                    bs[:found] = sizes
                    sizes = bs
                out[found] = T
                sizes[found] = n
                found += 1
            continue
        depth += 1
        st_c[depth] = nc
        st_col[depth] = ncol
        st_cand[depth] = 0
        st_top[depth] = top
        st_n[depth] = n
    return out[:found], sizes[:found], nodes
