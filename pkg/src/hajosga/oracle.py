"""Brute-force ground truth: acyclic colorings, dichromatic number, criticality.

These routines are exponential and only meant for small digraphs
(order <= MAX_ORACLE_ORDER).
"""

from __future__ import annotations

from typing import Sequence

from .digraph import Digraph
from .errors import InstanceTooLarge, InvalidArgument

MAX_ORACLE_ORDER = 10

WHITE, GREY, BLACK = 0, 1, 2


def _out_lists(d: Digraph) -> list[list[int]]:
    adj = d.adjacency
    return [[int(h) for h in adj[t].nonzero()[0]] for t in range(d.order)]


def color_class_acyclic(d: Digraph, coloring: Sequence[int], color: int) -> bool:
    """True iff the vertices colored ``color`` induce an acyclic subdigraph."""
    if len(coloring) != d.order:
        raise InvalidArgument("coloring must assign a color to every vertex")
    out = _out_lists(d)
    members = [v for v in range(d.order) if coloring[v] == color]
    state = [WHITE] * d.order
    for root in members:
        if state[root] != WHITE:
            continue
        state[root] = GREY
        stack = [(root, iter(out[root]))]
        while stack:
            v, it = stack[-1]
            for w in it:
                if coloring[w] != color:
                    continue
                if state[w] == GREY:
                    return False
                if state[w] == WHITE:
                    state[w] = GREY
                    stack.append((w, iter(out[w])))
                    break
            else:
                state[v] = BLACK
                stack.pop()
    return True


def is_acyclic_coloring(d: Digraph, coloring: Sequence[int]) -> bool:
    return all(color_class_acyclic(d, coloring, c) for c in set(coloring))


def _closes_cycle(out, coloring, v) -> bool:
    # does v reach itself through vertices sharing its color (uncolored = -1 excluded)?
    c = coloring[v]
    seen = set()
    stack = [w for w in out[v] if coloring[w] == c]
    while stack:
        w = stack.pop()
        if w == v:
            return True
        if w in seen:
            continue
        seen.add(w)
        stack.extend(x for x in out[w] if coloring[x] == c)
    return False


def find_acyclic_coloring(d: Digraph, k: int) -> list[int] | None:
    """An acyclic k-coloring of ``d`` in canonical form, or None if none exists.

    Vertices are colored in index order; vertex 0 gets color 0 and color c+1 is
    never used before color c.
    """
    _check_size(d)
    n = d.order
    if n == 0:
        return []
    if k < 1:
        return None
    out = _out_lists(d)
    coloring = [-1] * n

    def assign(v, used):
        if v == n:
            return True
        for c in range(min(used + 1, k)):
            coloring[v] = c
            if not _closes_cycle(out, coloring, v) and assign(v + 1, max(used, c + 1)):
                return True
        coloring[v] = -1
        return False

    return list(coloring) if assign(0, 0) else None


def dichromatic_number(d: Digraph) -> int:
    _check_size(d)
    if d.order == 0:
        raise InvalidArgument("dichromatic number of the empty digraph is not defined here")
    for k in range(1, d.order + 1):
        if find_acyclic_coloring(d, k) is not None:
            return k
    raise AssertionError("unreachable: n colors always suffice")


def is_r_critical(d: Digraph, r: int) -> bool:
    """dc(d) == r and every single arc or vertex deletion drops dc below r."""
    if dichromatic_number(d) != r:
        return False
    for t, h in d.arcs():
        if find_acyclic_coloring(d.without_arc(t, h), r - 1) is None:
            return False
    for v in range(d.order):
        if find_acyclic_coloring(d.without_vertex(v), r - 1) is None:
            return False
    return True


def _check_size(d: Digraph) -> None:
    if d.order > MAX_ORACLE_ORDER:
        raise InstanceTooLarge(f"oracle is limited to order <= {MAX_ORACLE_ORDER}, got {d.order}")
