"""Edge lists, stream synthesis and soundness validation.

Edge-list files hold whitespace-separated ``u v [timestamp]`` lines; stream
files hold ``+ u v`` / ``- u v`` lines. In both, ``#`` starts a comment.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import ParseError, SoundnessError

INSERT = "+"
DELETE = "-"


class StreamEvent(NamedTuple):
    kind: str
    u: int
    v: int
    timestamp: int | None = None

    @classmethod
    def insert(cls, u: int, v: int, timestamp: int | None = None) -> "StreamEvent":
        return cls(INSERT, *_canonical(u, v), timestamp)

    @classmethod
    def delete(cls, u: int, v: int, timestamp: int | None = None) -> "StreamEvent":
        return cls(DELETE, *_canonical(u, v), timestamp)

    @property
    def is_insert(self) -> bool:
        return self.kind == INSERT


def _canonical(u: int, v: int) -> tuple[int, int]:
    if u == v:
        raise ValueError(f"self-loop {{{u}, {v}}} is not a valid event")
    return (u, v) if u < v else (v, u)


@dataclass
class EdgeList:
    """Undirected simple edges over densely numbered nodes.

    ``id_map`` maps original node labels to dense ids; ``timestamps`` is
    aligned with ``edges`` when the source had a third column.
    """

    edges: list[tuple[int, int]]
    id_map: dict[str, int] = field(default_factory=dict)
    timestamps: list[int] | None = None

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.edges)

    @property
    def num_nodes(self) -> int:
        if self.id_map:
            return len(self.id_map)
        return len({x for e in self.edges for x in e})

    def save_id_map(self, path: str | Path) -> None:
        with open(path, "w") as fh:
            fh.write("# original dense\n")
            for original, dense in sorted(self.id_map.items(), key=lambda kv: kv[1]):
                fh.write(f"{original} {dense}\n")


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_edge_list(lines: Iterable[str]) -> EdgeList:
    """Parse edge-list text: directions, self-loops and duplicates are dropped."""
    id_map: dict[str, int] = {}
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    stamps: list[int] = []
    with_time: bool | None = None
    for lineno, raw in enumerate(lines, 1):
        text = _strip(raw)
        if not text:
            continue
        parts = text.split()
        if len(parts) not in (2, 3):
            raise ParseError(f"expected 'u v [timestamp]', got {raw.strip()!r}", lineno)
        if with_time is None:
            with_time = len(parts) == 3
        elif with_time != (len(parts) == 3):
            raise ParseError("timestamp column present on some lines only", lineno)
        a, b = parts[0], parts[1]
        if with_time:
            try:
                ts = int(parts[2])
            except ValueError:
                raise ParseError(f"bad timestamp {parts[2]!r}", lineno) from None
        for label in (a, b):
            if not label.lstrip("-").isdigit():
                raise ParseError(f"bad node id {label!r}", lineno)
        if a == b:
            continue
        u = id_map.setdefault(a, len(id_map))
        v = id_map.setdefault(b, len(id_map))
        key = (u, v) if u < v else (v, u)
        if key in seen:
            continue
        seen.add(key)
        edges.append(key)
        if with_time:
            stamps.append(ts)
    return EdgeList(edges, id_map, stamps if with_time else None)


def load_edge_list(path: str | Path) -> EdgeList:
    with open(path) as fh:
        return parse_edge_list(fh)


def make_insertion_stream(edges: EdgeList | Sequence[tuple[int, int]], ordering: str = "random", seed: int = 0) -> list[StreamEvent]:
    """One insertion per edge, by timestamp if available else in seeded random order."""
    if not isinstance(edges, EdgeList):
        edges = EdgeList(list(edges))
    if ordering not in ("random", "timestamp"):
        raise ValueError(f"unknown ordering {ordering!r}")
    if ordering == "timestamp" and edges.timestamps is not None:
        order = sorted(range(len(edges.edges)), key=lambda i: edges.timestamps[i])
        return [StreamEvent.insert(*edges.edges[i], edges.timestamps[i]) for i in order]
    shuffled = list(edges.edges)
    random.Random(seed).shuffle(shuffled)
    return [StreamEvent.insert(u, v) for u, v in shuffled]


def make_fully_dynamic_stream(edges: EdgeList | Sequence[tuple[int, int]], deletion_prob: float = 0.1, seed: int = 0) -> list[StreamEvent]:
    """Random insertion order; each edge is deleted with ``deletion_prob`` at a
    uniformly random position after its insertion."""
    if not 0.0 <= deletion_prob <= 1.0:
        raise ValueError("deletion_prob must lie in [0, 1]")
    if isinstance(edges, EdgeList):
        edges = edges.edges
    rng = random.Random(seed)
    order = list(edges)
    rng.shuffle(order)
    m = len(order)
    keyed: list[tuple[float, int, StreamEvent]] = []
    for i, (u, v) in enumerate(order):
        keyed.append((float(i), 0, StreamEvent.insert(u, v)))
        if rng.random() < deletion_prob:
            # strictly after position i; ties with later insertions break towards the insertion
            keyed.append((i + (1.0 - rng.random()) * (m - i), 1, StreamEvent.delete(u, v)))
    keyed.sort(key=lambda item: (item[0], item[1]))
    return [ev for _, _, ev in keyed]


def generate_copying_model(n_nodes: int, n_edges: int, copy_prob: float, seed: int = 0) -> EdgeList:
    """Grow an undirected graph with the copying model.

    Nodes arrive one at a time. Each new node draws a uniform prototype
    among earlier nodes and links to earlier nodes: every link copies a
    uniform neighbour of the prototype with probability ``copy_prob`` and
    otherwise goes to a uniform earlier node. The number of links per node
    is set so that ``n_edges`` distinct edges exist once all nodes have
    arrived: node ``t`` brings the total up to ``round(t * n_edges /
    (n_nodes - 1))``, so a shortfall (duplicates, or too few earlier nodes)
    is made up by later nodes. Duplicate links are redrawn a bounded number
    of times. The result can fall short only when the request is too dense
    to fit.
    """
    if n_nodes < 2:
        raise ValueError("the copying model needs at least two nodes")
    if not 0.0 <= copy_prob <= 1.0:
        raise ValueError("copy_prob must lie in [0, 1]")
    rng = random.Random(seed)
    rate = n_edges / (n_nodes - 1)
    adjacency: list[list[int]] = [[] for _ in range(n_nodes)]
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    rand = rng.random
    for t in range(1, n_nodes):
        quota = min(t, round(t * rate) - len(edges))
        if quota <= 0:
            continue
        prototype = int(rand() * t)
        proto_nbrs = adjacency[prototype]
        made = 0
        attempts = 8 * quota + 8
        while made < quota and attempts > 0:
            attempts -= 1
            if proto_nbrs and rand() < copy_prob:
                target = proto_nbrs[int(rand() * len(proto_nbrs))]
            else:
                target = int(rand() * t)
            key = (target, t)
            if target == t or key in seen:
                continue
            seen.add(key)
            edges.append(key)
            adjacency[t].append(target)
            adjacency[target].append(t)
            made += 1
            if len(edges) >= n_edges:
                return EdgeList(edges)
    return EdgeList(edges)


def random_graph(n_nodes: int, n_edges: int, seed: int = 0) -> EdgeList:
    """Uniform random simple graph with exactly ``n_edges`` edges."""
    cap = n_nodes * (n_nodes - 1) // 2
    if n_edges > cap:
        raise ValueError(f"at most {cap} edges fit on {n_nodes} nodes")
    rng = random.Random(seed)
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    while len(edges) < n_edges:
        u = rng.randrange(n_nodes)
        v = rng.randrange(n_nodes)
        if u == v:
            continue
        key = (u, v) if u < v else (v, u)
        if key not in seen:
            seen.add(key)
            edges.append(key)
    return EdgeList(edges)


def validate_soundness(events: Iterable[StreamEvent]) -> SoundnessError | None:
    """Return the first violation (insert of a live edge, delete of a dead one), or None."""
    live: set[tuple[int, int]] = set()
    for i, ev in enumerate(events):
        key = (ev.u, ev.v) if ev.u < ev.v else (ev.v, ev.u)
        if ev.u == ev.v:
            return SoundnessError(f"self-loop {key}", i)
        if ev.kind == INSERT:
            if key in live:
                return SoundnessError(f"insertion of live edge {key}", i)
            live.add(key)
        elif ev.kind == DELETE:
            if key not in live:
                return SoundnessError(f"deletion of dead edge {key}", i)
            live.remove(key)
        else:
            return SoundnessError(f"unknown event kind {ev.kind!r}", i)
    return None


def final_edges(events: Iterable[StreamEvent]) -> set[tuple[int, int]]:
    live: set[tuple[int, int]] = set()
    for ev in events:
        if ev.kind == INSERT:
            live.add((ev.u, ev.v))
        else:
            live.discard((ev.u, ev.v))
    return live


def format_stream(events: Iterable[StreamEvent]) -> Iterator[str]:
    for ev in events:
        yield f"{ev.kind} {ev.u} {ev.v}\n"


def write_stream(events: Iterable[StreamEvent], path: str | Path) -> None:
    with open(path, "w") as fh:
        fh.writelines(format_stream(events))


def parse_stream(lines: Iterable[str]) -> list[StreamEvent]:
    events = []
    for lineno, raw in enumerate(lines, 1):
        text = _strip(raw)
        if not text:
            continue
        parts = text.split()
        if len(parts) != 3 or parts[0] not in (INSERT, DELETE):
            raise ParseError(f"expected '+ u v' or '- u v', got {raw.strip()!r}", lineno)
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError(f"bad node id in {raw.strip()!r}", lineno) from None
        if u == v or u < 0 or v < 0:
            raise ParseError(f"invalid edge {{{u}, {v}}}", lineno)
        events.append(StreamEvent(parts[0], *_canonical(u, v)))
    return events


def read_stream(path: str | Path) -> list[StreamEvent]:
    with open(path) as fh:
        return parse_stream(fh)
