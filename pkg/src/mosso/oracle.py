"""Brute-force ground truth for verification.

Nothing here is used by the summarizers. Everything is computed by direct
counting over an explicit adjacency structure, so the checks stay
independent of the incremental bookkeeping in :mod:`mosso.summary`.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable

from .errors import SoundnessError


class ExactGraph:
    """Plain adjacency-set graph that replays stream events."""

    def __init__(self, edges: Iterable[tuple[int, int]] = ()):
        self.adjacency: dict[int, set[int]] = {}
        self.edge_count = 0
        for u, v in edges:
            self.insert(u, v)

    def add_node(self, u: int) -> None:
        self.adjacency.setdefault(u, set())

    def insert(self, u: int, v: int) -> None:
        if u == v:
            raise SoundnessError(f"self-loop {{{u}, {v}}}")
        self.add_node(u)
        self.add_node(v)
        if v in self.adjacency[u]:
            raise SoundnessError(f"insertion of existing edge {{{u}, {v}}}")
        self.adjacency[u].add(v)
        self.adjacency[v].add(u)
        self.edge_count += 1

    def delete(self, u: int, v: int) -> None:
        if v not in self.adjacency.get(u, ()):
            raise SoundnessError(f"deletion of absent edge {{{u}, {v}}}")
        self.adjacency[u].discard(v)
        self.adjacency[v].discard(u)
        self.edge_count -= 1

    def apply(self, event) -> "ExactGraph":
        if event.kind == "+":
            self.insert(event.u, event.v)
        else:
            self.delete(event.u, event.v)
        return self

    def edges(self) -> set[tuple[int, int]]:
        return {(u, v) for u, nbrs in self.adjacency.items() for v in nbrs if u < v}

    def neighbors(self, u: int) -> set[int]:
        return self.adjacency[u]

    @property
    def nodes(self) -> list[int]:
        return list(self.adjacency)


def apply(exact: ExactGraph, event) -> ExactGraph:
    return exact.apply(event)


def _group_sizes(partition: dict[int, int]) -> dict[int, int]:
    sizes: dict[int, int] = {}
    for sid in partition.values():
        sizes[sid] = sizes.get(sid, 0) + 1
    return sizes


def pair_edge_counts(exact: ExactGraph, partition: dict[int, int]) -> dict[tuple[int, int], int]:
    counts: dict[tuple[int, int], int] = {}
    for u, v in exact.edges():
        a, b = partition[u], partition[v]
        key = (a, b) if a <= b else (b, a)
        counts[key] = counts.get(key, 0) + 1
    return counts


def optimal_pair_costs(exact: ExactGraph, partition: dict[int, int]) -> dict[tuple[int, int], tuple[int, bool]]:
    """``{(A, B): (cost, superedge?)}`` for every pair with at least one edge.

    The cost is the smaller of listing the edges and listing the non-edges
    plus one superedge; ties favour listing the edges.
    """
    sizes = _group_sizes(partition)
    out = {}
    for (a, b), e in pair_edge_counts(exact, partition).items():
        if a == b:
            t = comb(sizes[a], 2)
        else:
            t = sizes[a] * sizes[b]
        as_list, as_super = e, 1 + t - e
        out[(a, b)] = (as_super, True) if as_super < as_list else (as_list, False)
    return out


def brute_force_phi(exact: ExactGraph, partition: dict[int, int]) -> int:
    """Smallest representation size achievable for a fixed node grouping."""
    missing = set(exact.adjacency) - set(partition)
    if missing:
        raise ValueError(f"partition does not cover nodes {sorted(missing)[:5]}")
    return sum(cost for cost, _ in optimal_pair_costs(exact, partition).values())


def brute_force_delta_phi(exact: ExactGraph, partition: dict[int, int], y: int, dest) -> int:
    """Change of :func:`brute_force_phi` when ``y`` joins group ``dest``.

    ``dest=None`` puts ``y`` in a group of its own.
    """
    moved = dict(partition)
    moved[y] = object() if dest is None else dest
    relabel: dict[object, int] = {}
    moved = {u: relabel.setdefault(g, len(relabel)) for u, g in moved.items()}
    return brute_force_phi(exact, moved) - brute_force_phi(exact, partition)


@dataclass
class EquivalenceReport:
    ok: bool
    event_index: int | None = None
    pair: tuple[int, int] | None = None
    expected: object = None
    actual: object = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return (
            f"event_index={self.event_index} pair={self.pair} "
            f"expected={self.expected} actual={self.actual} ({self.message})"
        )


def check_equivalence(exact: ExactGraph, state, event_index: int | None = None) -> EquivalenceReport:
    """Compare a summary against the exact graph.

    Checks the recovered edge set, then that the stored phi equals the
    brute-force optimum for the summary's own partition.
    """
    recovered = state.reconstruct()
    truth = exact.edges()
    if recovered != truth:
        missing = sorted(truth - recovered)
        extra = sorted(recovered - truth)
        if missing and (not extra or missing[0] < extra[0]):
            return EquivalenceReport(False, event_index, missing[0], True, False, "edge lost")
        return EquivalenceReport(False, event_index, extra[0], False, True, "spurious edge")
    partition = state.partition()
    for u in exact.adjacency:
        if u not in partition:
            return EquivalenceReport(False, event_index, (u, u), "present", "absent", "node missing")
    phi = brute_force_phi(exact, partition)
    if phi != state.phi:
        return EquivalenceReport(False, event_index, None, phi, state.phi, "phi differs from optimum")
    return EquivalenceReport(True, event_index)
