"""Compiled inner loop for rank mutation.

The GA spends most of its time identifying vertices of large join offspring
(orders reach a few hundred), one random attempt at a time.  The loop is
kept here, compiled with numba, so ``ga`` stays readable.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def mutate_kernel(adj, attempts, xs):
    """Identification attempts on ``adj`` (modified in place).

    ``xs`` holds at least ``attempts + order`` upcoming uniform draws.
    Returns (alive, pairs, used): surviving original vertex ids in order,
    the (keep, remove) pairs in the numbering current at each attempt, and
    the number of draws consumed.
    """
    n = adj.shape[0]
    size = n
    und = np.empty((size, size), dtype=np.bool_)
    deg = np.zeros(size, dtype=np.int64)
    for a in range(size):
        for b in range(size):
            und[a, b] = adj[a, b] or adj[b, a]
            if und[a, b]:
                deg[a] += 1
    alive = np.arange(size)
    pairs = np.empty((size, 2), dtype=np.int64)
    m = 0
    pos = 0

    nfree = 0
    for c in range(n):
        if deg[alive[c]] < n - 1:
            nfree += 1

    while attempts > 0:
        if nfree == 0:
            pos += attempts
            break
        x = xs[pos]
        pos += 1
        attempts -= 1
        cu = min(int(x * n), n - 1)
        u = alive[cu]
        if deg[u] >= n - 1:
            continue
        cnt = n - 1 - deg[u]
        k = min(int(xs[pos] * cnt), cnt - 1)
        pos += 1
        cv = -1
        j = -1
        for c in range(n):
            w = alive[c]
            if w != u and not und[u, w]:
                j += 1
                if j == k:
                    cv = c
                    break
        v = alive[cv]

        # v takes over u's arcs; u's row and column are cleared
        gained = 0
        for c in range(n):
            w = alive[c]
            if und[u, w]:
                if und[v, w]:
                    deg[w] -= 1
                else:
                    gained += 1
                    und[v, w] = True
                    und[w, v] = True
                if adj[u, w]:
                    adj[v, w] = True
                if adj[w, u]:
                    adj[w, v] = True
                und[u, w] = False
                und[w, u] = False
                adj[u, w] = False
                adj[w, u] = False
        deg[v] += gained
        for c in range(cu, n - 1):
            alive[c] = alive[c + 1]
        n -= 1
        pairs[m, 0] = cv
        pairs[m, 1] = cu
        m += 1

        nfree = 0
        for c in range(n):
            if deg[alive[c]] < n - 1:
                nfree += 1
    return alive[:n].copy(), pairs[:m].copy(), pos
