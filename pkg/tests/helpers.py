"""Independent oracles and fixtures shared by the test modules."""

from itertools import combinations, permutations, product

import numpy as np
from hypothesis import strategies as st

from hajosga.digraph import Digraph


@st.composite
def digraphs(draw, min_order=0, max_order=6):
    n = draw(st.integers(min_order, max_order))
    bits = draw(st.lists(st.booleans(), min_size=n * n, max_size=n * n))
    adj = np.array(bits, dtype=bool).reshape(n, n)
    np.fill_diagonal(adj, False)
    return Digraph(adj)


@st.composite
def digraphs_with_arcs(draw, max_order=8):
    d = draw(digraphs(min_order=2, max_order=max_order))
    if d.arc_count == 0:
        d = d.with_arc(0, 1)
    arc = draw(st.sampled_from(d.arcs()))
    return d, arc


def random_digraph(rng, n, p=0.4):
    adj = rng.random((n, n)) < p
    np.fill_diagonal(adj, False)
    return Digraph(adj)


def all_digraphs(n):
    """Every labeled loop-free digraph on n vertices."""
    slots = [(i, j) for i in range(n) for j in range(n) if i != j]
    for bits in product((0, 1), repeat=len(slots)):
        yield Digraph.from_arcs(n, [s for s, b in zip(slots, bits) if b])


def brute_counts(d):
    """(asymmetric arcs, digons, non-adjacent pairs) by looking at every pair."""
    asym = dig = non = 0
    for u, v in combinations(range(d.order), 2):
        f, b = d.has_arc(u, v), d.has_arc(v, u)
        if f and b:
            dig += 1
        elif f or b:
            asym += 1
        else:
            non += 1
    return asym, dig, non


def brute_triangles(d):
    """(all-digon triples, adjacent triples with a non-digon pair) by enumeration."""
    sym = mixed = 0
    for tri in combinations(range(d.order), 3):
        pairs = list(combinations(tri, 2))
        adjacent = [d.has_arc(u, v) or d.has_arc(v, u) for u, v in pairs]
        digon = [d.has_arc(u, v) and d.has_arc(v, u) for u, v in pairs]
        if all(digon):
            sym += 1
        elif all(adjacent):
            mixed += 1
    return sym, mixed


def brute_isomorphic(d1, d2):
    if d1.order != d2.order:
        return False
    a1 = set(map(tuple, d1.arcs()))
    a2 = set(map(tuple, d2.arcs()))
    return any({(p[t], p[h]) for t, h in a1} == a2 for p in permutations(range(d1.order)))


def brute_chromatic_number(n, edges):
    """Chromatic number of an undirected graph by trying every coloring."""
    if n == 0:
        return 0
    for k in range(1, n + 1):
        for col in product(range(k), repeat=n):
            if all(col[u] != col[v] for u, v in edges):
                return k
    return n


def symmetric_of(n, edges):
    return Digraph.from_arcs(n, [a for u, v in edges for a in ((u, v), (v, u))])


# checkpoint digraphs of the built-in construction, entered by hand
STAGE_D0 = Digraph.from_arcs(5, [(0, 1), (1, 0), (1, 2), (2, 1), (0, 4), (4, 0), (3, 4), (4, 3),
                                (3, 0), (2, 3), (0, 2)])
C5_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
STAGE_D1 = Digraph.from_arcs(5, [a for u, v in C5_EDGES for a in ((u, v), (v, u))] + [(3, 0), (4, 1)])
STAGE_D2 = Digraph.from_arcs(5, [a for u, v in C5_EDGES for a in ((u, v), (v, u))] + [(4, 1)])
