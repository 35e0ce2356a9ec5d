"""Origin records for GA individuals and replayable construction scripts.

Every individual points at an :class:`OriginRecord` in a :class:`LineageStore`.
:func:`extract_script` walks that DAG back to the initial D(K_3) copies and
emits a :class:`ConstructionScript`; :func:`replay_script` executes one.

Script grammar (one statement per line, ``#`` starts a comment)::

    init <handle> K 3
    join <out> = <left> <u1> <v1> <right> <v2> <u2>
    identify <out> = <in> <keep> <remove>
    result <handle>
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Union

from .digraph import ArcRef, Digraph, complete_symmetric
from .errors import CorruptStoreError, HajosError, ParseError, ReplayError
from .ops import JoinSpec, hajos_join, identify

INIT, CLONE, JOIN, IDENTIFY = "init", "clone", "join", "identify"


@dataclass(frozen=True)
class OriginRecord:
    id: int
    kind: str
    parents: tuple[int, ...] = ()
    args: tuple[int, ...] = ()
    generation: int = 0


class LineageStore:
    """Append-only store of origin records keyed by integer id.

    :meth:`prune` may drop records no longer reachable from the live
    population; ids are never reused.
    """

    def __init__(self):
        self._nodes: dict[int, OriginRecord] = {}
        self._next_id = 0

    def _add(self, kind, parents=(), args=(), generation=0) -> int:
        nid = self._next_id
        self._next_id += 1
        self._nodes[nid] = OriginRecord(nid, kind, tuple(parents), tuple(args), generation)
        return nid

    def add_init(self, generation=0) -> int:
        return self._add(INIT, generation=generation)

    def add_clone(self, parent: int, generation=0) -> int:
        return self._add(CLONE, (parent,), generation=generation)

    def add_join(self, left: int, left_arc, right: int, right_arc, generation=0) -> int:
        return self._add(JOIN, (left, right), (*left_arc, *right_arc), generation)

    def add_identify(self, parent: int, keep: int, remove: int, generation=0) -> int:
        return self._add(IDENTIFY, (parent,), (keep, remove), generation)

    def __getitem__(self, nid: int) -> OriginRecord:
        try:
            return self._nodes[nid]
        except KeyError:
            raise CorruptStoreError(f"no origin record with id {nid}") from None

    def __contains__(self, nid) -> bool:
        return nid in self._nodes

    def __len__(self):
        return len(self._nodes)

    def ancestors(self, roots: Iterable[int]) -> set[int]:
        seen = set()
        stack = list(roots)
        while stack:
            nid = stack.pop()
            if nid in seen:
                continue
            seen.add(nid)
            stack.extend(self[nid].parents)
        return seen

    def prune(self, live: Iterable[int]) -> int:
        """Drop every record that is not an ancestor of ``live``; return how many."""
        keep = self.ancestors(live)
        dropped = [nid for nid in self._nodes if nid not in keep]
        for nid in dropped:
            del self._nodes[nid]
        return len(dropped)


# --- scripts ------------------------------------------------------------------

class Init(NamedTuple):
    out: str
    k: int = 3


class Join(NamedTuple):
    out: str
    left: str
    u1: int
    v1: int
    right: str
    v2: int
    u2: int


class Identify(NamedTuple):
    out: str
    src: str
    keep: int
    remove: int


class Result(NamedTuple):
    handle: str


Statement = Union[Init, Join, Identify, Result]


class OpCount(NamedTuple):
    joins: int
    identifications: int

    @property
    def total(self) -> int:
        return self.joins + self.identifications


@dataclass(frozen=True)
class ConstructionScript:
    statements: tuple[Statement, ...] = field(default_factory=tuple)

    @property
    def result(self) -> str:
        return self.statements[-1].handle

    def __len__(self):
        return len(self.statements)


def op_count(script: ConstructionScript) -> OpCount:
    joins = sum(isinstance(s, Join) for s in script.statements)
    idents = sum(isinstance(s, Identify) for s in script.statements)
    return OpCount(joins, idents)


def _resolve(store: LineageStore, nid: int) -> int:
    rec = store[nid]
    while rec.kind == CLONE:
        rec = store[rec.parents[0]]
    return rec.id


def extract_script(store: LineageStore, nid: int) -> ConstructionScript:
    """Minimal replayable script for the individual whose origin is ``nid``.

    Clone records are skipped.  Structurally identical sub-constructions
    (same operation on the same handles with the same arguments) share one
    handle, so all initial D(K_3) copies collapse into ``G0``.
    """
    statements: list[Statement] = []
    handle_of: dict[int, str] = {}
    by_structure: dict[tuple, str] = {}
    stack = [(nid, False)]
    while stack:
        cur, expanded = stack.pop()
        cur = _resolve(store, cur)
        if cur in handle_of:
            continue
        rec = store[cur]
        if not expanded:
            stack.append((cur, True))
            stack.extend((p, False) for p in reversed(rec.parents))
            continue
        parents = tuple(handle_of[_resolve(store, p)] for p in rec.parents)
        key = (rec.kind, parents, rec.args)
        handle = by_structure.get(key)
        if handle is None:
            handle = f"G{len(by_structure)}"
            by_structure[key] = handle
            if rec.kind == INIT:
                statements.append(Init(handle))
            elif rec.kind == JOIN:
                statements.append(Join(handle, parents[0], *rec.args[:2], parents[1], *rec.args[2:]))
            elif rec.kind == IDENTIFY:
                statements.append(Identify(handle, parents[0], *rec.args))
            else:
                raise CorruptStoreError(f"record {cur} has unknown kind {rec.kind!r}")
        handle_of[cur] = handle
    statements.append(Result(handle_of[_resolve(store, nid)]))
    return ConstructionScript(tuple(statements))


def replay_states(script: ConstructionScript) -> dict[str, Digraph]:
    """Execute every statement; return the digraph bound to each handle."""
    env: dict[str, Digraph] = {}

    def lookup(handle, step):
        try:
            return env[handle]
        except KeyError:
            raise ReplayError(f"undefined handle {handle!r}", step) from None

    for step, st in enumerate(script.statements, start=1):
        try:
            if isinstance(st, Init):
                env[st.out] = complete_symmetric(st.k)
            elif isinstance(st, Join):
                spec = JoinSpec(lookup(st.left, step), ArcRef(st.u1, st.v1),
                                lookup(st.right, step), ArcRef(st.v2, st.u2))
                env[st.out] = hajos_join(spec)
            elif isinstance(st, Identify):
                env[st.out] = identify(lookup(st.src, step), st.keep, st.remove)
            elif isinstance(st, Result):
                lookup(st.handle, step)
            else:
                raise ReplayError(f"unknown statement {st!r}", step)
        except ReplayError:
            raise
        except HajosError as exc:
            raise ReplayError(f"{_render(st)}: {exc}", step) from exc
    return env


def replay_script(script: ConstructionScript) -> Digraph:
    if not script.statements or not isinstance(script.statements[-1], Result):
        raise ReplayError("script does not end with a result statement")
    return replay_states(script)[script.result]


# --- text form --------------------------------------------------------------------

def _render(st: Statement) -> str:
    if isinstance(st, Init):
        return f"init {st.out} K {st.k}"
    if isinstance(st, Join):
        return f"join {st.out} = {st.left} {st.u1} {st.v1} {st.right} {st.v2} {st.u2}"
    if isinstance(st, Identify):
        return f"identify {st.out} = {st.src} {st.keep} {st.remove}"
    return f"result {st.handle}"


def serialize_script(script: ConstructionScript) -> str:
    return "".join(_render(st) + "\n" for st in script.statements)


def parse_script(text: str) -> ConstructionScript:
    statements: list[Statement] = []
    defined: set[str] = set()
    result_line = None

    def need(handle, lineno):
        if handle not in defined:
            raise ParseError(f"undefined handle {handle!r}", lineno)

    def define(handle, lineno):
        if handle in defined:
            raise ParseError(f"handle {handle!r} defined twice", lineno)
        defined.add(handle)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if result_line is not None:
            raise ParseError(f"statement after result (line {result_line})", lineno)
        parts = line.split()
        op = parts[0]
        if op == "init":
            if len(parts) != 4 or parts[2] != "K":
                raise ParseError("expected 'init <handle> K <k>'", lineno)
            k = _int(parts[3], lineno)
            if k < 1:
                raise ParseError("K needs k >= 1", lineno)
            define(parts[1], lineno)
            statements.append(Init(parts[1], k))
        elif op == "join":
            if len(parts) != 9 or parts[2] != "=":
                raise ParseError("expected 'join <out> = <left> <u1> <v1> <right> <v2> <u2>'", lineno)
            need(parts[3], lineno)
            need(parts[6], lineno)
            u1, v1 = _int(parts[4], lineno), _int(parts[5], lineno)
            v2, u2 = _int(parts[7], lineno), _int(parts[8], lineno)
            define(parts[1], lineno)
            statements.append(Join(parts[1], parts[3], u1, v1, parts[6], v2, u2))
        elif op == "identify":
            if len(parts) != 6 or parts[2] != "=":
                raise ParseError("expected 'identify <out> = <in> <keep> <remove>'", lineno)
            need(parts[3], lineno)
            keep, remove = _int(parts[4], lineno), _int(parts[5], lineno)
            define(parts[1], lineno)
            statements.append(Identify(parts[1], parts[3], keep, remove))
        elif op == "result":
            if len(parts) != 2:
                raise ParseError("expected 'result <handle>'", lineno)
            need(parts[1], lineno)
            statements.append(Result(parts[1]))
            result_line = lineno
        else:
            raise ParseError(f"unknown statement {op!r}", lineno)
    if result_line is None:
        raise ParseError("missing result statement")
    return ConstructionScript(tuple(statements))


def _int(token, lineno) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"not an integer: {token!r}", lineno) from None
    if value < 0:
        raise ParseError(f"negative index {value}", lineno)
    return value


# --- a 16-operation construction of D(C_5) ------------------------------------------
#
# Stage handles D0..D3 are the checkpoints after each join round.  In
# every stage after the first, the right copy's vertices v'_j land at 5 + j
# (skipping the merged one) and the four shade-matched pairs are identified
# with the unprimed vertex kept, so the result is relabelled v0..v4 again.

PAPER_SCRIPT_TEXT = """\
# two copies of D(K3); delete v2->v0 and v'0->v'1, merge v0 with v'0, add v2->v'1
init H K 3
join D0 = H 2 0 H 0 1
# (D0, v0, v2) join (D0', v'3, v'0); v'0..v'2 -> 5..7, v'4 -> 8
join J1 = D0 0 2 D0 3 0
identify J1a = J1 0 6
identify J1b = J1a 4 5
identify J1c = J1b 3 6
identify D1 = J1c 1 5
# (D1, v3, v0) join (D1', v'4, v'1); v'0..v'3 -> 5..8
join J2 = D1 3 0 D1 4 1
identify J2a = J2 1 5
identify J2b = J2a 2 5
identify J2c = J2b 3 5
identify D2 = J2c 4 5
# (D2, v4, v1) join (D2', v'4, v'1); v'0..v'3 -> 5..8
join J3 = D2 4 1 D2 4 1
identify J3a = J3 2 5
identify J3b = J3a 3 5
identify J3c = J3b 4 5
identify D3 = J3c 0 5
result D3
"""

PAPER_STAGES = ("D0", "D1", "D2", "D3")


def paper_script() -> ConstructionScript:
    return parse_script(PAPER_SCRIPT_TEXT)
