"""Summary graph plus edge corrections, kept per-pair optimally encoded.

A :class:`SummaryState` partitions the nodes seen so far into supernodes and
stores, for every supernode pair, the cheaper of two encodings of the edges
between them: every edge as a positive correction, or one superedge plus a
negative correction for every missing edge. The graph is recovered as
``(expanded superedges | C+) - C-``.

All mutation goes through :meth:`SummaryState.apply` (edge changes) and
:meth:`SummaryState.move_node` (relocating a node between supernodes).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import IntegrityError, SoundnessError
from .indexed import IndexedSet

#: Destination marker for "extract into a fresh singleton supernode".
NEW_SINGLETON = None


class EncodingDecision(NamedTuple):
    use_superedge: bool
    cost: int
    pair: tuple[int, int] | None = None


def pair_capacity(size_a: int, size_b: int, is_self_pair: bool = False) -> int:
    """Number of node pairs ``|T_AB|`` that could be edges between two supernodes."""
    if is_self_pair:
        return size_a * (size_a - 1) // 2
    return size_a * size_b


def encode_pair(size_a: int, size_b: int, edge_count: int, is_self_pair: bool = False) -> EncodingDecision:
    """Pick the cheaper encoding for ``edge_count`` edges between two supernodes.

    A superedge is used only when ``edge_count > (|T_AB| + 1) / 2``; the tie goes
    to listing the edges as positive corrections.

    >>> encode_pair(2, 3, 5)
    EncodingDecision(use_superedge=True, cost=2, pair=None)
    """
    capacity = pair_capacity(size_a, size_b, is_self_pair)
    if edge_count < 1 or edge_count > capacity:
        raise ValueError(f"edge count {edge_count} outside [1, {capacity}]")
    if 2 * edge_count > capacity + 1:
        return EncodingDecision(True, 1 + capacity - edge_count)
    return EncodingDecision(False, edge_count)


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class SummaryState:
    """Lossless summary of a simple undirected graph under edge changes.

    Attributes are public for the sampler and the summarizers, which read
    them directly on hot paths; treat them as read-only outside this module.

    sn_of      node -> supernode id
    members    supernode id -> IndexedSet of nodes
    sn_adj     supernode id -> IndexedSet of superedge neighbours (itself
               included when the supernode has a self-superedge)
    cplus      node -> IndexedSet of nodes joined by a positive correction
    cminus     node -> set of nodes joined by a negative correction
    counts     supernode id -> {supernode id: |E_AB|}, symmetric, nonzero only
    incident   supernode id -> number of edges with an endpoint inside it
    tight      supernode id A -> supernodes X whose pair with A is stored as
               edges but would switch to a superedge if A lost one member
    degree     node -> degree in the represented graph
    """

    def __init__(self) -> None:
        self.sn_of: dict[int, int] = {}
        self.members: dict[int, IndexedSet] = {}
        self.sn_adj: dict[int, IndexedSet] = {}
        self.cplus: dict[int, IndexedSet] = {}
        self.cminus: dict[int, set[int]] = {}
        self.counts: dict[int, dict[int, int]] = {}
        self.incident: dict[int, int] = {}
        self.tight: dict[int, set[int]] = {}
        self.degree: dict[int, int] = {}
        self.live = IndexedSet()
        self.n_superedges = 0
        self.n_cplus = 0
        self.n_cminus = 0
        self.n_pairs = 0
        self.n_edges = 0
        self.next_sid = 0

    # ------------------------------------------------------------------ sizes

    @property
    def phi(self) -> int:
        return self.n_superedges + self.n_cplus + self.n_cminus

    @property
    def num_nodes(self) -> int:
        return len(self.sn_of)

    @property
    def num_supernodes(self) -> int:
        return len(self.members)

    def size(self, sid: int) -> int:
        return len(self.members[sid].items)

    def stored_entries(self) -> int:
        """Logical entries held: one record per node, one per superedge,
        correction and nonzero pair count."""
        return len(self.sn_of) + self.n_superedges + self.n_cplus + self.n_cminus + self.n_pairs

    # -------------------------------------------------------------- structure

    def _new_supernode(self) -> int:
        sid = self.next_sid
        self.next_sid += 1
        self.members[sid] = IndexedSet()
        self.sn_adj[sid] = IndexedSet()
        self.counts[sid] = {}
        self.incident[sid] = 0
        self.tight[sid] = set()
        self.live.add(sid)
        return sid

    def _drop_supernode(self, sid: int) -> None:
        if self.members[sid] or self.counts[sid] or self.sn_adj[sid]:
            raise IntegrityError(f"supernode {sid} dropped while in use")
        del self.members[sid], self.sn_adj[sid], self.counts[sid], self.incident[sid], self.tight[sid]
        self.live.discard(sid)

    def add_node(self, u: int) -> int:
        """Register ``u`` as a singleton supernode if unseen; return its supernode."""
        sid = self.sn_of.get(u)
        if sid is not None:
            return sid
        if u < 0:
            raise ValueError(f"node ids must be non-negative, got {u}")
        sid = self._new_supernode()
        self.members[sid].add(u)
        self.sn_of[u] = sid
        self.cplus[u] = IndexedSet()
        self.cminus[u] = set()
        self.degree[u] = 0
        return sid

    def partition(self) -> dict[int, int]:
        return dict(self.sn_of)

    def superedges(self) -> list[tuple[int, int]]:
        return sorted((a, b) for a, adj in self.sn_adj.items() for b in adj.items if a <= b)

    def corrections(self) -> tuple[set[tuple[int, int]], set[tuple[int, int]]]:
        plus = {(u, w) for u, s in self.cplus.items() for w in s.items if u < w}
        minus = {(u, w) for u, s in self.cminus.items() for w in s if u < w}
        return plus, minus

    def encoding_of(self, a: int, b: int) -> EncodingDecision:
        """The encoding currently stored for the pair ``(a, b)``."""
        e = self.counts[a].get(b, 0)
        superedge = b in self.sn_adj[a]
        t = pair_capacity(self.size(a), self.size(b), a == b)
        if superedge:
            return EncodingDecision(True, 1 + t - e, _pair(a, b))
        return EncodingDecision(False, e, _pair(a, b))

    # --------------------------------------------------------------- encoding

    def _capacity(self, a: int, b: int) -> int:
        sa = len(self.members[a].items)
        if a == b:
            return sa * (sa - 1) // 2
        return sa * len(self.members[b].items)

    def _to_superedge(self, a: int, b: int) -> None:
        """Re-encode pair (a, b) from positive corrections to a superedge."""
        cplus, cminus = self.cplus, self.cminus
        removed = added = 0
        xs = self.members[a].items
        if a == b:
            for i, x in enumerate(xs):
                cpx, cmx = cplus[x], cminus[x]
                for j in range(i + 1, len(xs)):
                    w = xs[j]
                    if w in cpx.slot:
                        cpx.discard(w)
                        cplus[w].discard(x)
                        removed += 1
                    else:
                        cmx.add(w)
                        cminus[w].add(x)
                        added += 1
            self.sn_adj[a].add(a)
        else:
            ws = self.members[b].items
            for x in xs:
                cpx, cmx = cplus[x], cminus[x]
                for w in ws:
                    if w in cpx.slot:
                        cpx.discard(w)
                        cplus[w].discard(x)
                        removed += 1
                    else:
                        cmx.add(w)
                        cminus[w].add(x)
                        added += 1
            self.sn_adj[a].add(b)
            self.sn_adj[b].add(a)
        self.n_cplus -= removed
        self.n_cminus += added
        self.n_superedges += 1

    def _to_cplus(self, a: int, b: int) -> None:
        """Re-encode pair (a, b) from a superedge to positive corrections."""
        cplus, cminus = self.cplus, self.cminus
        removed = added = 0
        xs = self.members[a].items
        if a == b:
            for i, x in enumerate(xs):
                cpx, cmx = cplus[x], cminus[x]
                for j in range(i + 1, len(xs)):
                    w = xs[j]
                    if w in cmx:
                        cmx.discard(w)
                        cminus[w].discard(x)
                        removed += 1
                    else:
                        cpx.add(w)
                        cplus[w].add(x)
                        added += 1
            self.sn_adj[a].discard(a)
        else:
            ws = self.members[b].items
            for x in xs:
                cpx, cmx = cplus[x], cminus[x]
                for w in ws:
                    if w in cmx:
                        cmx.discard(w)
                        cminus[w].discard(x)
                        removed += 1
                    else:
                        cpx.add(w)
                        cplus[w].add(x)
                        added += 1
            self.sn_adj[a].discard(b)
            self.sn_adj[b].discard(a)
        self.n_cminus -= removed
        self.n_cplus += added
        self.n_superedges -= 1

    def _redecide(self, a: int, b: int) -> None:
        e = self.counts[a].get(b, 0)
        want = 2 * e > self._capacity(a, b) + 1
        have = b in self.sn_adj[a].slot
        if want and not have:
            self._to_superedge(a, b)
        elif have and not want:
            self._to_cplus(a, b)
        if a != b:
            self._retighten(a, b, e, want)

    def _retighten(self, a: int, b: int, e: int, superedge: bool) -> None:
        sa = len(self.members[a].items)
        sb = len(self.members[b].items)
        if not superedge and sa > 1 and 2 * e > (sa - 1) * sb + 1:
            self.tight[a].add(b)
        else:
            self.tight[a].discard(b)
        if not superedge and sb > 1 and 2 * e > (sb - 1) * sa + 1:
            self.tight[b].add(a)
        else:
            self.tight[b].discard(a)

    def _bump_count(self, a: int, b: int, delta: int) -> int:
        row = self.counts[a]
        e = row.get(b, 0) + delta
        if e < 0:
            raise IntegrityError(f"negative edge count for pair {(a, b)}")
        if e:
            row[b] = e
            if a != b:
                self.counts[b][a] = e
            if e == delta:
                self.n_pairs += 1
        else:
            del row[b]
            if a != b:
                del self.counts[b][a]
                self.tight[a].discard(b)
                self.tight[b].discard(a)
            self.n_pairs -= 1
        return e

    # ---------------------------------------------------------------- queries

    def check_adjacency(self, u: int, v: int) -> bool:
        """Constant-time test of whether ``{u, v}`` is an edge."""
        if v in self.cminus[u]:
            return False
        if v in self.cplus[u].slot:
            return True
        sv = self.sn_of[v]
        if sv not in self.sn_adj[self.sn_of[u]].slot:
            return False
        return u != v

    has_edge = check_adjacency

    def retrieve_neighborhood(self, u: int) -> set[int]:
        su = self.sn_of[u]
        result = set(self.cplus[u].items)
        members = self.members
        for x in self.sn_adj[su].items:
            result.update(members[x].items)
        result.discard(u)
        result.difference_update(self.cminus[u])
        return result

    neighbors = retrieve_neighborhood

    def reconstruct(self) -> set[tuple[int, int]]:
        """Every edge of the represented graph as ``(min, max)`` tuples."""
        edges: set[tuple[int, int]] = set()
        members, cminus = self.members, self.cminus
        for a, adj in self.sn_adj.items():
            xs = members[a].items
            for b in adj.items:
                if b < a:
                    continue
                if a == b:
                    for i, x in enumerate(xs):
                        cm = cminus[x]
                        for j in range(i + 1, len(xs)):
                            w = xs[j]
                            if w not in cm:
                                edges.add(_pair(x, w))
                else:
                    ws = members[b].items
                    for x in xs:
                        cm = cminus[x]
                        for w in ws:
                            if w not in cm:
                                edges.add(_pair(x, w))
        for u, s in self.cplus.items():
            for w in s.items:
                if u < w:
                    edges.add((u, w))
        return edges

    def neighbor_supernode_counts(self, y: int) -> dict[int, int]:
        """``{X: |N(y) & X|}`` for every supernode holding a neighbour of ``y``.

        Costs O(|N(S_y)| + |C+(y)| + |C-(y)|) without listing N(y).
        """
        sy = self.sn_of[y]
        members, sn_of = self.members, self.sn_of
        d = {x: len(members[x].items) for x in self.sn_adj[sy].items}
        if sy in d:
            d[sy] -= 1
        for w in self.cminus[y]:
            d[sn_of[w]] -= 1
        for w in self.cplus[y].items:
            x = sn_of[w]
            d[x] = d.get(x, 0) + 1
        return {x: c for x, c in d.items() if c}

    # ---------------------------------------------------------------- changes

    def apply(self, event) -> None:
        """Apply a stream event (anything with ``kind``, ``u`` and ``v``)."""
        if event.kind == "+":
            self.insert_edge(event.u, event.v)
        elif event.kind == "-":
            self.delete_edge(event.u, event.v)
        else:
            raise ValueError(f"unknown event kind {event.kind!r}")

    process_edge_change = apply

    def insert_edge(self, u: int, v: int) -> None:
        if u == v:
            raise SoundnessError(f"self-loop {{{u}, {v}}}")
        a = self.add_node(u)
        b = self.add_node(v)
        if self.check_adjacency(u, v):
            raise SoundnessError(f"insertion of existing edge {{{u}, {v}}}")
        self._change_edge(u, v, a, b, +1)

    def delete_edge(self, u: int, v: int) -> None:
        if u not in self.sn_of or v not in self.sn_of or u == v or not self.check_adjacency(u, v):
            raise SoundnessError(f"deletion of absent edge {{{u}, {v}}}")
        self._change_edge(u, v, self.sn_of[u], self.sn_of[v], -1)

    def _change_edge(self, u: int, v: int, a: int, b: int, sign: int) -> None:
        self.degree[u] += sign
        self.degree[v] += sign
        self.n_edges += sign
        self.incident[a] += sign
        if a != b:
            self.incident[b] += sign
        self._bump_count(a, b, sign)
        if b in self.sn_adj[a].slot:
            # the pair lies under a superedge: edges are implied, non-edges listed
            if sign > 0:
                self.cminus[u].discard(v)
                self.cminus[v].discard(u)
                self.n_cminus -= 1
            else:
                self.cminus[u].add(v)
                self.cminus[v].add(u)
                self.n_cminus += 1
        elif sign > 0:
            self.cplus[u].add(v)
            self.cplus[v].add(u)
            self.n_cplus += 1
        else:
            self.cplus[u].discard(v)
            self.cplus[v].discard(u)
            self.n_cplus -= 1
        self._redecide(a, b)

    # ------------------------------------------------------------------ moves

    def _check_move(self, y: int, dest: int | None) -> int:
        a = self.sn_of[y]
        if dest is not None and dest not in self.members:
            raise KeyError(f"supernode {dest} is not live")
        return a

    def delta_phi(self, y: int, dest: int | None, d: dict[int, int] | None = None) -> int:
        """Change in phi if ``y`` moved into ``dest`` (or a new singleton).

        Only pairs touching ``S_y`` or ``dest`` are re-encoded, hypothetically;
        the state is not modified. ``d`` may carry a precomputed
        :meth:`neighbor_supernode_counts` for ``y``.
        """
        a = self._check_move(y, dest)
        members = self.members
        sa = len(members[a].items)
        if dest == a or (dest is None and sa == 1):
            return 0
        if d is None:
            d = self.neighbor_supernode_counts(y)
        counts = self.counts
        row_a = counts[a]
        if dest is None:
            b = -1
            sb = 0
            row_b: dict[int, int] = {}
        else:
            b = dest
            sb = len(members[b].items)
            row_b = counts[b]
        delta = 0
        sa1 = sa - 1
        sb1 = sb + 1
        get_d = d.get
        get_a = row_a.get
        get_b = row_b.get
        # pairs with a supernode y touches: the edge count moves from A to B
        for x, dx in d.items():
            if x == a or x == b:
                continue
            sx = len(members[x].items)
            e = get_a(x, 0)
            t = sa * sx
            delta -= e if 2 * e <= t + 1 else t + 1 - e
            e -= dx
            t = sa1 * sx
            delta += e if 2 * e <= t + 1 else t + 1 - e
            e = get_b(x, 0)
            t = sb * sx
            delta -= e if 2 * e <= t + 1 else t + 1 - e
            e += dx
            t = sb1 * sx
            delta += e if 2 * e <= t + 1 else t + 1 - e
        # pairs y does not touch: only the sizes change. A pair stored as
        # edges both before and after costs the same, so only superedges and
        # pairs that tip over when A shrinks need a look.
        for group in (self.sn_adj[a].items, self.tight[a]):
            for x in group:
                if x == a or x == b or x in d:
                    continue
                e = row_a[x]
                sx = len(members[x].items)
                t = sa * sx
                delta += (t - sx + 1 - e) - (e if 2 * e <= t + 1 else t + 1 - e)
        if b >= 0:
            for x in self.sn_adj[b].items:
                if x == a or x == b or x in d:
                    continue
                e = row_b[x]
                sx = len(members[x].items)
                t = sb1 * sx
                delta += (e if 2 * e <= t + 1 else t + 1 - e) - (sb * sx + 1 - e)
        da = get_d(a, 0)
        db = get_d(b, 0)
        e_aa = row_a.get(a, 0)
        e_ab = row_a.get(b, 0)
        e_bb = row_b.get(b, 0)
        for e, t in (
            (e_aa, sa * sa1 // 2),
            (e_ab, sa * sb),
            (e_bb, sb * (sb - 1) // 2),
        ):
            delta -= e if 2 * e <= t + 1 else t + 1 - e
        for e, t in (
            (e_aa - da, sa1 * (sa1 - 1) // 2),
            (e_ab - db + da, sa1 * sb1),
            (e_bb + db, sb1 * sb // 2),
        ):
            delta += e if 2 * e <= t + 1 else t + 1 - e
        return delta

    def move_node(self, y: int, dest: int | None) -> int:
        """Move ``y`` into ``dest`` (or a new singleton) and re-encode.

        Returns the change in phi. An emptied source supernode is deleted.
        """
        a = self._check_move(y, dest)
        if dest == a or (dest is None and len(self.members[a].items) == 1):
            return 0
        before = self.phi
        sn_of, counts = self.sn_of, self.counts
        cplus, cminus = self.cplus, self.cminus
        nbrs = self.retrieve_neighborhood(y)
        deg = len(nbrs)

        # 1. spell out y's adjacency entirely as positive corrections
        cm_y = cminus[y]
        for w in cm_y:
            cminus[w].discard(y)
        self.n_cminus -= len(cm_y)
        cm_y.clear()
        cp_y = cplus[y]
        for w in nbrs:
            if w not in cp_y.slot:
                cp_y.add(w)
                cplus[w].add(y)
                self.n_cplus += 1

        # 2. detach y from its supernode
        self.members[a].discard(y)
        d_a = 0
        for w in nbrs:
            x = sn_of[w]
            if x == a:
                d_a += 1
            self._bump_count(a, x, -1)
        self.incident[a] -= deg - d_a
        for x in set(counts[a]) | set(self.sn_adj[a].items):
            self._redecide(a, x)
        if not self.members[a]:
            self._drop_supernode(a)

        # 3. attach y to the destination
        b = self._new_supernode() if dest is None else dest
        d_b = 0
        for w in nbrs:
            if sn_of[w] == b:
                d_b += 1
        self.members[b].add(y)
        sn_of[y] = b
        for w in nbrs:
            self._bump_count(b, sn_of[w], +1)
        self.incident[b] += deg - d_b
        adj_b = self.sn_adj[b]
        for x in set(counts[b]) | set(adj_b.items):
            if x in adj_b.slot:
                # superedge already covers (b, x): fold y's row into it
                for w in self.members[x].items:
                    if w == y:
                        continue
                    if w in cp_y.slot:
                        cp_y.discard(w)
                        cplus[w].discard(y)
                        self.n_cplus -= 1
                    else:
                        cm_y.add(w)
                        cminus[w].add(y)
                        self.n_cminus += 1
            self._redecide(b, x)
        return self.phi - before

    # ------------------------------------------------------------- comparison

    def structure(self) -> tuple:
        """Normalized view used for equality: partition, P, C+, C-, counts, degrees."""
        plus, minus = self.corrections()
        return (
            {sid: frozenset(m.items) for sid, m in self.members.items()},
            self.superedges(),
            plus,
            minus,
            {(a, b): e for a, row in self.counts.items() for b, e in row.items() if a <= b},
            dict(self.degree),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SummaryState):
            return NotImplemented
        return self.structure() == other.structure() and self.phi == other.phi

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return (
            f"SummaryState(nodes={self.num_nodes}, supernodes={self.num_supernodes}, "
            f"edges={self.n_edges}, phi={self.phi})"
        )


def tight_pairs(state: SummaryState) -> dict[int, set[int]]:
    """The ``tight`` index recomputed from the counts and superedges."""
    out: dict[int, set[int]] = {sid: set() for sid in state.members}
    for a, row in state.counts.items():
        sa = len(state.members[a].items)
        for b, e in row.items():
            if a == b or b in state.sn_adj[a].slot or sa < 2:
                continue
            if 2 * e > (sa - 1) * len(state.members[b].items) + 1:
                out[a].add(b)
    return out


def verify_invariants(state: SummaryState) -> None:
    """Recompute every derived quantity from scratch and compare.

    O(|V| + |E|); intended for tests and debugging. Raises IntegrityError.
    """
    seen: set[int] = set()
    for sid, ms in state.members.items():
        if not ms:
            raise IntegrityError(f"empty supernode {sid}")
        for u in ms.items:
            if state.sn_of.get(u) != sid:
                raise IntegrityError(f"node {u} listed in {sid} but mapped to {state.sn_of.get(u)}")
            seen.add(u)
    if seen != set(state.sn_of):
        raise IntegrityError("membership and node map disagree")
    if set(state.live.items) != set(state.members):
        raise IntegrityError("live supernode index out of date")

    edges = state.reconstruct()
    deg: dict[int, int] = dict.fromkeys(state.sn_of, 0)
    pair_counts: dict[tuple[int, int], int] = {}
    incident: dict[int, int] = dict.fromkeys(state.members, 0)
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
        a, b = state.sn_of[u], state.sn_of[v]
        key = _pair(a, b)
        pair_counts[key] = pair_counts.get(key, 0) + 1
        incident[a] += 1
        if a != b:
            incident[b] += 1
    if deg != state.degree:
        raise IntegrityError("degree table out of date")
    if len(edges) != state.n_edges:
        raise IntegrityError("edge counter out of date")
    stored = {(a, b): e for a, row in state.counts.items() for b, e in row.items() if a <= b}
    if stored != pair_counts:
        raise IntegrityError("pair edge counts out of date")
    for a, row in state.counts.items():
        for b, e in row.items():
            if state.counts[b].get(a) != e:
                raise IntegrityError(f"asymmetric count for {(a, b)}")
    if incident != state.incident:
        raise IntegrityError("incident-edge totals out of date")
    if len(stored) != state.n_pairs:
        raise IntegrityError("pair counter out of date")

    superedges = set(state.superedges())
    for a, adj in state.sn_adj.items():
        for b in adj.items:
            if a not in state.sn_adj[b]:
                raise IntegrityError(f"asymmetric superedge {(a, b)}")
    for (a, b), e in pair_counts.items():
        t = pair_capacity(state.size(a), state.size(b), a == b)
        if ((a, b) in superedges) != (2 * e > t + 1):
            raise IntegrityError(f"pair {(a, b)} not optimally encoded")
    for key in superedges:
        if key not in pair_counts:
            raise IntegrityError(f"superedge {key} over an empty pair")
    if tight_pairs(state) != state.tight:
        raise IntegrityError("tight-pair index out of date")

    plus, minus = state.corrections()
    if plus & minus:
        raise IntegrityError("an edge is in both C+ and C-")
    for u, v in plus:
        if _pair(state.sn_of[u], state.sn_of[v]) in superedges:
            raise IntegrityError(f"C+ entry {(u, v)} under a superedge")
    for u, v in minus:
        if _pair(state.sn_of[u], state.sn_of[v]) not in superedges:
            raise IntegrityError(f"C- entry {(u, v)} outside any superedge")
    for u, s in state.cplus.items():
        for w in s.items:
            if u not in state.cplus[w]:
                raise IntegrityError(f"asymmetric C+ entry {(u, w)}")
    for u, s in state.cminus.items():
        for w in s:
            if u not in state.cminus[w]:
                raise IntegrityError(f"asymmetric C- entry {(u, w)}")
    if (len(superedges), len(plus), len(minus)) != (state.n_superedges, state.n_cplus, state.n_cminus):
        raise IntegrityError("phi counters out of date")
    if state.phi > state.n_edges:
        raise IntegrityError(f"phi {state.phi} exceeds edge count {state.n_edges}")


def from_edges(edges: Iterable[tuple[int, int]], partition: dict[int, int] | None = None) -> SummaryState:
    """Build a state holding ``edges``; nodes are then grouped per ``partition``.

    ``partition`` maps node -> arbitrary group label; nodes missing from it
    stay singletons. Used by tests and notebooks to set up fixed instances.
    """
    state = SummaryState()
    for u, v in edges:
        state.insert_edge(u, v)
    if partition:
        for node in partition:
            state.add_node(node)
        anchor: dict[int, int] = {}
        for node in sorted(partition):
            label = partition[node]
            if label in anchor:
                state.move_node(node, state.sn_of[anchor[label]])
            else:
                anchor[label] = node
                if state.size(state.sn_of[node]) > 1:
                    state.move_node(node, NEW_SINGLETON)
    return state
