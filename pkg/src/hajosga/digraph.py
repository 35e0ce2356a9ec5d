"""Loop-free digraphs stored as boolean adjacency matrices.

A :class:`Digraph` is an immutable value: every operation that "changes" a
digraph returns a new one.  Arcs are always enumerated in row-major order
(by tail, then head), which keeps random draws and serialization
deterministic.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import InstanceTooLarge, InvalidArgument, ParseError

MAX_ISOMORPHISM_ORDER = 9


class ArcRef(NamedTuple):
    tail: int
    head: int


class PairCounts(NamedTuple):
    asymmetric_arcs: int
    digons: int
    non_adjacent_pairs: int


class Digraph:
    """Immutable loop-free digraph on vertices ``0..order-1``."""

    __slots__ = ("_adj",)

    def __init__(self, adjacency):
        adj = np.array(adjacency, copy=True)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise InvalidArgument(f"adjacency must be square, got shape {adj.shape}")
        if adj.size and not np.isin(adj, (0, 1)).all():
            raise InvalidArgument("adjacency entries must be 0 or 1")
        adj = adj.astype(bool)
        if adj.diagonal().any():
            raise InvalidArgument("loops are not allowed")
        adj.flags.writeable = False
        self._adj = adj

    @classmethod
    def _wrap(cls, adj: np.ndarray) -> "Digraph":
        # trusted fast path: adj is a fresh, loop-free bool matrix we own
        adj.flags.writeable = False
        d = cls.__new__(cls)
        d._adj = adj
        return d

    @classmethod
    def from_arcs(cls, order: int, arcs: Iterable[Sequence[int]]) -> "Digraph":
        if order < 0:
            raise InvalidArgument("order must be nonnegative")
        adj = np.zeros((order, order), dtype=bool)
        for tail, head in arcs:
            if not (0 <= tail < order and 0 <= head < order):
                raise InvalidArgument(f"arc ({tail}, {head}) out of range for order {order}")
            if tail == head:
                raise InvalidArgument(f"loop at vertex {tail}")
            adj[tail, head] = True
        return cls._wrap(adj)

    @classmethod
    def empty(cls, order: int) -> "Digraph":
        if order < 0:
            raise InvalidArgument("order must be nonnegative")
        return cls._wrap(np.zeros((order, order), dtype=bool))

    @property
    def order(self) -> int:
        return self._adj.shape[0]

    @property
    def adjacency(self) -> np.ndarray:
        """Read-only boolean view of the adjacency matrix."""
        return self._adj

    @property
    def arc_count(self) -> int:
        return int(np.count_nonzero(self._adj))

    def arcs(self) -> list[ArcRef]:
        tails, heads = np.nonzero(self._adj)
        return [ArcRef(int(t), int(h)) for t, h in zip(tails, heads)]

    def has_arc(self, tail: int, head: int) -> bool:
        n = self.order
        return 0 <= tail < n and 0 <= head < n and bool(self._adj[tail, head])

    def out_neighbors(self, v: int) -> set[int]:
        return set(np.flatnonzero(self._adj[v]).tolist())

    def in_neighbors(self, v: int) -> set[int]:
        return set(np.flatnonzero(self._adj[:, v]).tolist())

    def non_adjacent_vertices(self, v: int) -> list[int]:
        """Vertices independent from ``v``, ascending."""
        row = ~(self._adj[v] | self._adj[:, v])
        row[v] = False
        return np.flatnonzero(row).tolist()

    def with_arc(self, tail: int, head: int) -> "Digraph":
        _check_vertex(self, tail)
        _check_vertex(self, head)
        if tail == head:
            raise InvalidArgument(f"loop at vertex {tail}")
        adj = self._adj.copy()
        adj[tail, head] = True
        return Digraph._wrap(adj)

    def without_arc(self, tail: int, head: int) -> "Digraph":
        if not self.has_arc(tail, head):
            raise InvalidArgument(f"no arc {tail}->{head}")
        adj = self._adj.copy()
        adj[tail, head] = False
        return Digraph._wrap(adj)

    def without_vertex(self, v: int) -> "Digraph":
        """Delete ``v``; indices above ``v`` shift down by one."""
        _check_vertex(self, v)
        keep = np.arange(self.order) != v
        return Digraph._wrap(self._adj[np.ix_(keep, keep)].copy())

    def permuted(self, perm: Sequence[int]) -> "Digraph":
        """Relabel vertex ``i`` as ``perm[i]``."""
        perm = np.asarray(perm, dtype=int)
        if sorted(perm.tolist()) != list(range(self.order)):
            raise InvalidArgument("perm must be a permutation of the vertex indices")
        adj = np.zeros_like(self._adj)
        adj[np.ix_(perm, perm)] = self._adj
        return Digraph._wrap(adj)

    def reversed(self) -> "Digraph":
        return Digraph._wrap(self._adj.T.copy())

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._adj.shape == other._adj.shape and bool(np.array_equal(self._adj, other._adj))

    def __hash__(self):
        return hash((self.order, self._adj.tobytes()))

    def __repr__(self):
        return f"Digraph(order={self.order}, arcs={[tuple(a) for a in self.arcs()]})"


def _check_vertex(d: Digraph, v: int) -> None:
    if not 0 <= v < d.order:
        raise InvalidArgument(f"vertex {v} out of range for order {d.order}")


# --- generators -------------------------------------------------------------

def complete_symmetric(k: int) -> Digraph:
    """D(K_k): every ordered pair of distinct vertices is an arc."""
    if k < 1:
        raise InvalidArgument("complete_symmetric needs k >= 1")
    adj = ~np.eye(k, dtype=bool)
    return Digraph._wrap(adj)


def symmetric_cycle(k: int) -> Digraph:
    """D(C_k), the cycle 0-1-...-(k-1)-0 with every edge a digon."""
    if k < 3:
        raise InvalidArgument("symmetric_cycle needs k >= 3")
    arcs = [(i, (i + 1) % k) for i in range(k)]
    arcs += [(h, t) for t, h in arcs]
    return Digraph.from_arcs(k, arcs)


def directed_cycle(k: int) -> Digraph:
    """Arcs i -> i+1 (mod k).  For k = 2 this is a single digon."""
    if k < 2:
        raise InvalidArgument("directed_cycle needs k >= 2")
    return Digraph.from_arcs(k, [(i, (i + 1) % k) for i in range(k)])


# --- counting -----------------------------------------------------------------

def pair_counts(d: Digraph) -> PairCounts:
    adj = d.adjacency
    arcs = int(np.count_nonzero(adj))
    digons = int(np.count_nonzero(adj & adj.T)) // 2
    asym = arcs - 2 * digons
    n = d.order
    return PairCounts(asym, digons, n * (n - 1) // 2 - asym - digons)


def _triangles(mask: np.ndarray) -> int:
    # mask is symmetric 0/1 with zero diagonal; trace(M^3) counts each triangle 6 times.
    # float64 matmul is exact here (entries of M^2 are at most n).
    m = mask.astype(np.float64)
    return int(round(float(((m @ m) * m).sum()))) // 6


def symmetric_triangle_count(d: Digraph) -> int:
    """Number of vertex triples inducing a copy of D(K_3)."""
    adj = d.adjacency
    return _triangles(adj & adj.T)


def underlying_triangle_count(d: Digraph) -> int:
    adj = d.adjacency
    return _triangles(adj | adj.T)


def mixed_triangle_count(d: Digraph) -> int:
    """Triples whose three pairs are all adjacent, at least one of them not a digon."""
    return underlying_triangle_count(d) - symmetric_triangle_count(d)


def are_independent(d: Digraph, u: int, v: int) -> bool:
    _check_vertex(d, u)
    _check_vertex(d, v)
    if u == v:
        return False
    adj = d.adjacency
    return not (adj[u, v] or adj[v, u])


# --- isomorphism ---------------------------------------------------------------

def _signatures(adj: np.ndarray) -> list[tuple[int, int, int]]:
    out_deg = adj.sum(axis=1)
    in_deg = adj.sum(axis=0)
    dig = (adj & adj.T).sum(axis=1)
    return [(int(o), int(i), int(s)) for o, i, s in zip(out_deg, in_deg, dig)]


def find_isomorphism(d1: Digraph, d2: Digraph) -> list[int] | None:
    """Return ``perm`` with ``d1.permuted(perm) == d2``, or None.

    Backtracking over vertex bijections, restricted to vertices with equal
    (out-degree, in-degree, digon-degree) signatures.
    """
    for d in (d1, d2):
        if d.order > MAX_ISOMORPHISM_ORDER:
            raise InstanceTooLarge(
                f"isomorphism search is limited to order <= {MAX_ISOMORPHISM_ORDER}, got {d.order}")
    n = d1.order
    if n != d2.order or d1.arc_count != d2.arc_count:
        return None
    a, b = d1.adjacency, d2.adjacency
    sig_a, sig_b = _signatures(a), _signatures(b)
    if sorted(sig_a) != sorted(sig_b):
        return None
    candidates = [[w for w in range(n) if sig_b[w] == sig_a[v]] for v in range(n)]
    mapping = [-1] * n
    used = [False] * n

    def extend(v):
        if v == n:
            return True
        for w in candidates[v]:
            if used[w]:
                continue
            if all(a[v, u] == b[w, mapping[u]] and a[u, v] == b[mapping[u], w] for u in range(v)):
                mapping[v] = w
                used[w] = True
                if extend(v + 1):
                    return True
                used[w] = False
        mapping[v] = -1
        return False

    return list(mapping) if extend(0) else None


def is_isomorphic(d1: Digraph, d2: Digraph) -> bool:
    return find_isomorphism(d1, d2) is not None


# --- text formats ----------------------------------------------------------------

def serialize_digraph(d: Digraph) -> str:
    lines = [f"n {d.order}"]
    lines += [f"arc {t} {h}" for t, h in d.arcs()]
    return "\n".join(lines) + "\n"


def parse_digraph(text: str) -> Digraph:
    """Parse the ``n <order>`` / ``arc <tail> <head>`` line format."""
    order = None
    adj = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if order is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ParseError(f"expected 'n <order>', got {raw!r}", lineno)
            order = _parse_int(parts[1], lineno)
            if order < 0:
                raise ParseError("order must be nonnegative", lineno)
            adj = np.zeros((order, order), dtype=bool)
            continue
        if len(parts) != 3 or parts[0] != "arc":
            raise ParseError(f"expected 'arc <tail> <head>', got {raw!r}", lineno)
        tail, head = _parse_int(parts[1], lineno), _parse_int(parts[2], lineno)
        if not (0 <= tail < order and 0 <= head < order):
            raise ParseError(f"arc {tail} {head} out of range for order {order}", lineno)
        if tail == head:
            raise ParseError(f"loop at vertex {tail}", lineno)
        if adj[tail, head]:
            raise ParseError(f"duplicate arc {tail} {head}", lineno)
        adj[tail, head] = True
    if order is None:
        raise ParseError("missing 'n <order>' line")
    return Digraph._wrap(adj)


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"not an integer: {token!r}", lineno) from None


def to_dot(d: Digraph, name: str = "D") -> str:
    """Graphviz DOT text; a digon becomes one edge with ``dir=both``."""
    adj = d.adjacency
    lines = [f"digraph {name} {{"]
    lines += [f"  {v};" for v in range(d.order)]
    for t, h in d.arcs():
        if adj[h, t]:
            if t < h:
                lines.append(f"  {t} -> {h} [dir=both];")
        else:
            lines.append(f"  {t} -> {h};")
    lines.append("}")
    return "\n".join(lines) + "\n"

