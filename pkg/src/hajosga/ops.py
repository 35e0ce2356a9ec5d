"""Directed Hajós join and identification of independent vertices.

Numbering contract for :func:`hajos_join` (needed for script replay): left
vertices keep their indices, the merged vertex sits at the left index ``v1``,
and right vertex ``j`` moves to ``n1 + j`` when ``j < v2`` and to
``n1 + j - 1`` when ``j > v2``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .digraph import ArcRef, Digraph
from .errors import InvalidArgument, NotIndependentError


@dataclass(frozen=True)
class JoinSpec:
    left: Digraph
    left_arc: ArcRef    # u1 -> v1, deleted from left
    right: Digraph
    right_arc: ArcRef   # v2 -> u2, deleted from right


def identify(d: Digraph, keep: int, remove: int) -> Digraph:
    """Merge independent vertices ``keep`` and ``remove`` into ``keep``.

    The merged vertex gets the union of both in- and out-neighbourhoods, then
    ``remove`` is deleted (indices above it shift down by one, including
    ``keep`` when ``keep > remove``).
    """
    n = d.order
    if not (0 <= keep < n and 0 <= remove < n):
        raise InvalidArgument(f"identify({keep}, {remove}) out of range for order {n}")
    adj = d.adjacency
    if keep == remove or adj[keep, remove] or adj[remove, keep]:
        raise NotIndependentError(f"vertices {keep} and {remove} are not independent")
    merged = adj.copy()
    merged[keep] |= adj[remove]
    merged[:, keep] |= adj[:, remove]
    survivors = np.arange(n) != remove
    return Digraph._wrap(merged[np.ix_(survivors, survivors)])


def right_index_map(n_left: int, n_right: int, v1: int, v2: int) -> list[int]:
    """Where each right-operand vertex lands in the joined digraph."""
    return [v1 if j == v2 else (n_left + j if j < v2 else n_left + j - 1) for j in range(n_right)]


def hajos_join(spec: JoinSpec) -> Digraph:
    """Directed Hajós join ``(left, u1, v1) ▽ (right, v2, u2)``."""
    u1, v1 = spec.left_arc
    v2, u2 = spec.right_arc
    if not spec.left.has_arc(u1, v1):
        raise InvalidArgument(f"left operand has no arc {u1}->{v1}")
    if not spec.right.has_arc(v2, u2):
        raise InvalidArgument(f"right operand has no arc {v2}->{u2}")
    n1, n2 = spec.left.order, spec.right.order
    adj = np.zeros((n1 + n2 - 1, n1 + n2 - 1), dtype=bool)
    adj[:n1, :n1] = spec.left.adjacency
    adj[u1, v1] = False
    right = spec.right.adjacency.copy()
    right[v2, u2] = False
    idx = right_index_map(n1, n2, v1, v2)
    adj[np.ix_(idx, idx)] |= right
    adj[u1, idx[u2]] = True
    return Digraph._wrap(adj)


def join(left: Digraph, left_arc, right: Digraph, right_arc) -> Digraph:
    """Shorthand for ``hajos_join(JoinSpec(...))`` taking plain tuples."""
    return hajos_join(JoinSpec(left, ArcRef(*left_arc), right, ArcRef(*right_arc)))
