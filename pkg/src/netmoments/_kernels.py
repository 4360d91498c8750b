"""Compiled per-node cycle counters over CSR adjacency.

All kernels take ``indptr``/``indices`` of a simple graph with sorted
adjacency lists and return int64 arrays.  They only read shared data and
keep per-call scratch buffers, so results do not depend on scheduling.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def triangle_counts(indptr, indices):
    n = len(indptr) - 1
    t = np.zeros(n, dtype=np.int64)
    for u in range(n):
        for p in range(indptr[u], indptr[u + 1]):
            v = indices[p]
            if v <= u:
                continue
            # sorted merge of N(u) and N(v), only w > v so each triangle is seen once
            i, j = indptr[u], indptr[v]
            iend, jend = indptr[u + 1], indptr[v + 1]
            while i < iend and j < jend:
                a, b = indices[i], indices[j]
                if a < b:
                    i += 1
                elif b < a:
                    j += 1
                else:
                    if a > v:
                        t[u] += 1
                        t[v] += 1
                        t[a] += 1
                    i += 1
                    j += 1
    return t


@njit(cache=True)
def quadrangle_counts(indptr, indices):
    n = len(indptr) - 1
    q = np.zeros(n, dtype=np.int64)
    cn = np.zeros(n, dtype=np.int64)
    touched = np.empty(n, dtype=np.int64)
    for i in range(n):
        nt = 0
        for p in range(indptr[i], indptr[i + 1]):
            a = indices[p]
            for r in range(indptr[a], indptr[a + 1]):
                j = indices[r]
                if j == i:
                    continue
                if cn[j] == 0:
                    touched[nt] = j
                    nt += 1
                cn[j] += 1
        total = 0
        for k in range(nt):
            c = cn[touched[k]]
            total += c * (c - 1) // 2
            cn[touched[k]] = 0
        q[i] = total
    return q


@njit(cache=True)
def pentagon_counts(indptr, indices):
    """Per-node 5-cycle counts by enumerating simple paths i-a-b-c and closing via d.

    For a fixed start ``i`` the closing vertex ``d`` must be a common
    neighbor of ``c`` and ``i`` distinct from ``a`` and ``b``; the common
    neighbor counts ``|N(c) & N(i)|`` are tabulated once per ``i`` so the
    last hop costs O(1).  Every 5-cycle through ``i`` is found in both
    directions, hence the final halving.
    """
    n = len(indptr) - 1
    p = np.zeros(n, dtype=np.int64)
    cn = np.zeros(n, dtype=np.int64)  # |N(v) & N(i)| for current i
    in_ni = np.zeros(n, dtype=np.uint8)  # v in N(i)
    in_na = np.zeros(n, dtype=np.uint8)  # v in N(a)
    touched = np.empty(n, dtype=np.int64)
    for i in range(n):
        lo, hi = indptr[i], indptr[i + 1]
        if hi - lo < 2:
            continue
        nt = 0
        for s in range(lo, hi):
            x = indices[s]
            in_ni[x] = 1
            for r in range(indptr[x], indptr[x + 1]):
                v = indices[r]
                if cn[v] == 0:
                    touched[nt] = v
                    nt += 1
                cn[v] += 1
        total = 0
        for s in range(lo, hi):
            a = indices[s]
            for r in range(indptr[a], indptr[a + 1]):
                in_na[indices[r]] = 1
            for r in range(indptr[a], indptr[a + 1]):
                b = indices[r]
                if b == i:
                    continue
                bi = in_ni[b]
                for w in range(indptr[b], indptr[b + 1]):
                    c = indices[w]
                    if c == i or c == a:
                        continue
                    # d ranges over N(c) & N(i) minus {a, b}; a in N(i) always, b in N(c) always
                    k = cn[c] - in_na[c] - bi
                    total += k
            for r in range(indptr[a], indptr[a + 1]):
                in_na[indices[r]] = 0
        for s in range(lo, hi):
            in_ni[indices[s]] = 0
        for k in range(nt):
            cn[touched[k]] = 0
        p[i] = total // 2
    return p
