"""Text snapshots of a summary.

Layout::

    MOSSO-SNAPSHOT v1
    S
    <supernode id> <node id> <node id> ...
    P
    <a> <b>
    C+
    <u> <v>
    C-
    <u> <v>

Ids are decimal and space separated, ``#`` starts a comment, and every line
(the last one included) ends with a newline. All four section markers must
appear, in this order. Pair counts, degrees and phi are not stored: they
are recomputed on load, and the loaded encoding must be the optimal one for
its partition, so a damaged or truncated file is rejected instead of
producing a state that lies about its graph.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .errors import IntegrityError, SnapshotError
from .indexed import IndexedSet
from .summary import SummaryState, _pair, tight_pairs, verify_invariants

HEADER = "MOSSO-SNAPSHOT v1"
SECTIONS = ("S", "P", "C+", "C-")


def save_snapshot(state: SummaryState) -> str:
    out = [HEADER, "S"]
    for sid in sorted(state.members):
        out.append(" ".join(map(str, (sid, *state.members[sid].items))))
    out.append("P")
    out.extend(f"{a} {b}" for a, b in state.superedges())
    plus, minus = state.corrections()
    out.append("C+")
    out.extend(f"{u} {v}" for u, v in sorted(plus))
    out.append("C-")
    out.extend(f"{u} {v}" for u, v in sorted(minus))
    return "\n".join(out) + "\n"


def write_snapshot(state: SummaryState, path: str | Path) -> None:
    with open(path, "w") as fh:
        fh.write(save_snapshot(state))


def _ints(text: str, lineno: int) -> list[int]:
    try:
        values = [int(tok) for tok in text.split()]
    except ValueError:
        raise SnapshotError(f"non-integer id in {text!r}", lineno) from None
    if any(v < 0 for v in values):
        raise SnapshotError(f"negative id in {text!r}", lineno)
    return values


def load_snapshot(data: str | bytes | Iterable[str]) -> SummaryState:
    if isinstance(data, bytes):
        data = data.decode()
    if isinstance(data, str):
        if data and not data.endswith("\n"):
            raise SnapshotError("file ends mid-line (truncated?)", data.count("\n") + 1)
        lines = data.splitlines()
    else:
        lines = list(data)
        if lines and not lines[-1].endswith("\n"):
            raise SnapshotError("file ends mid-line (truncated?)", len(lines))

    state = SummaryState()
    section = None
    seen_header = False
    last = 0
    for lineno, raw in enumerate(lines, 1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        last = lineno
        if not seen_header:
            if text != HEADER:
                raise SnapshotError(f"expected header {HEADER!r}, got {text!r}", lineno)
            seen_header = True
            continue
        if text in SECTIONS:
            want = SECTIONS[0] if section is None else (
                SECTIONS[SECTIONS.index(section) + 1] if section != SECTIONS[-1] else None
            )
            if text != want:
                raise SnapshotError(f"section {text!r} out of order (expected {want!r})", lineno)
            section = text
            continue
        if section is None:
            raise SnapshotError(f"data before the first section: {text!r}", lineno)
        values = _ints(text, lineno)
        if section == "S":
            _load_supernode(state, values, lineno)
            continue
        if len(values) != 2:
            raise SnapshotError(f"expected two ids, got {text!r}", lineno)
        x, y = values
        if section == "P":
            if x not in state.members or y not in state.members:
                raise SnapshotError(f"superedge {(x, y)} names an unknown supernode", lineno)
            if y in state.sn_adj[x]:
                raise SnapshotError(f"duplicate superedge {(x, y)}", lineno)
            state.sn_adj[x].add(y)
            if x != y:
                state.sn_adj[y].add(x)
            state.n_superedges += 1
            continue
        if x == y or x not in state.sn_of or y not in state.sn_of:
            raise SnapshotError(f"correction {(x, y)} is a self-loop or names an unknown node", lineno)
        if section == "C+":
            if y in state.cplus[x]:
                raise SnapshotError(f"duplicate C+ entry {(x, y)}", lineno)
            state.cplus[x].add(y)
            state.cplus[y].add(x)
            state.n_cplus += 1
        else:
            if y in state.cminus[x]:
                raise SnapshotError(f"duplicate C- entry {(x, y)}", lineno)
            state.cminus[x].add(y)
            state.cminus[y].add(x)
            state.n_cminus += 1

    if not seen_header:
        raise SnapshotError("empty snapshot", 1)
    if section != SECTIONS[-1]:
        raise SnapshotError(f"missing section(s) after {section!r} (truncated?)", last + 1)
    _derive_counts(state)
    state.tight = tight_pairs(state)
    try:
        verify_invariants(state)
    except IntegrityError as exc:
        raise SnapshotError(f"inconsistent summary: {exc}", last + 1) from None
    return state


def _load_supernode(state: SummaryState, values: list[int], lineno: int) -> None:
    if len(values) < 2:
        raise SnapshotError("supernode line needs an id and at least one member", lineno)
    sid, nodes = values[0], values[1:]
    if sid in state.members:
        raise SnapshotError(f"duplicate supernode {sid}", lineno)
    members = IndexedSet()
    for u in nodes:
        if u in state.sn_of or u in members:
            raise SnapshotError(f"node {u} listed twice", lineno)
        members.add(u)
        state.sn_of[u] = sid
        state.cplus[u] = IndexedSet()
        state.cminus[u] = set()
        state.degree[u] = 0
    state.members[sid] = members
    state.sn_adj[sid] = IndexedSet()
    state.counts[sid] = {}
    state.incident[sid] = 0
    state.tight[sid] = set()
    state.live.add(sid)
    state.next_sid = max(state.next_sid, sid + 1)


def _derive_counts(state: SummaryState) -> None:
    sn_of = state.sn_of
    for u, v in state.reconstruct():
        state.degree[u] += 1
        state.degree[v] += 1
        a, b = sn_of[u], sn_of[v]
        state.incident[a] += 1
        if a != b:
            state.incident[b] += 1
        a, b = _pair(a, b)
        e = state.counts[a].get(b, 0) + 1
        state.counts[a][b] = e
        state.counts[b][a] = e
        state.n_edges += 1
    state.n_pairs = sum(1 for a, row in state.counts.items() for b in row if a <= b)


def read_snapshot(path: str | Path) -> SummaryState:
    with open(path) as fh:
        return load_snapshot(fh.read())
