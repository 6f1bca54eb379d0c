"""Stream summarizers: MoSSo, MoSSo-Simple, MoSSo-Greedy and MoSSo-MCMC.

Every algorithm applies the edge change first and then runs trials for the
two endpoints in turn: a testing node ``y`` is proposed a new supernode and
the move is kept or undone depending on how phi changes. They differ in how
testing nodes and candidates are picked and in how a proposal is accepted.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, NamedTuple

from .minhash import ClusterIndex
from .sampling import get_random_neighbor
from .summary import NEW_SINGLETON, SummaryState

ALGORITHMS = ("mosso", "mosso-simple", "greedy", "mcmc")


@dataclass(frozen=True)
class RunConfig:
    algorithm: str = "mosso"
    escape_prob: float = 0.3
    sample_count: int = 120
    mcmc_beta: float = 10.0
    mcmc_epsilon: float = 1.0
    seed: int = 0
    hash_seed: int = 0

    def __post_init__(self) -> None:
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algorithm!r}; expected one of {ALGORITHMS}")
        if not 0.0 <= self.escape_prob < 1.0:
            raise ValueError("escape_prob must lie in [0, 1)")
        if self.sample_count < 1:
            raise ValueError("sample_count must be positive")
        if self.mcmc_beta < 0:
            raise ValueError("mcmc_beta must be non-negative")
        if self.mcmc_epsilon <= 0:
            raise ValueError("mcmc_epsilon must be positive")


class TrialOutcome(NamedTuple):
    testing_node: int
    proposal: int | None  # destination supernode; None = fresh singleton
    delta: int
    accepted: bool


@dataclass
class TrialContext:
    input_node: int
    testing_pool: list[int]
    testing_nodes: list[int] = field(default_factory=list)


def _try_move(state: SummaryState, y: int, dest: int | None, outcomes: list) -> None:
    """Move-if-saved: commit when phi does not grow."""
    here = state.sn_of[y]
    if dest == here or (dest is None and len(state.members[here].items) == 1):
        outcomes.append(TrialOutcome(y, dest, 0, True))
        return
    delta = state.delta_phi(y, dest)
    if delta <= 0:
        state.move_node(y, dest)
        outcomes.append(TrialOutcome(y, dest, delta, True))
    else:
        outcomes.append(TrialOutcome(y, dest, delta, False))


def _testing_nodes(state: SummaryState, pool: list[int], rng) -> list[int]:
    # high-degree nodes rarely profit from moving and are costly to move
    degree = state.degree
    random = rng.random
    return [w for w in pool if random() * degree[w] < 1.0]


def _pick_other(pool: list[int], y: int, rng) -> int | None:
    """Uniform element of ``pool`` other than ``y`` (pool has no repeats)."""
    n = len(pool)
    if n == 0 or (n == 1 and pool[0] == y):
        return None
    while True:
        z = pool[int(rng.random() * n)]
        if z != y:
            return z


def mosso_step(
    state: SummaryState,
    index: ClusterIndex,
    config: RunConfig,
    event,
    rng,
    contexts: list | None = None,
) -> list[TrialOutcome]:
    """Apply ``event`` and run MoSSo's trials for both endpoints."""
    state.apply(event)
    index.update_on_change(state, event)
    outcomes: list[TrialOutcome] = []
    e = config.escape_prob
    random = rng.random
    signature = index.signature
    sn_of = state.sn_of
    members = state.members
    for u in (event.u, event.v):
        if state.degree[u] == 0:
            continue
        pool = get_random_neighbor(state, u, config.sample_count, rng)
        testing = _testing_nodes(state, pool, rng)
        if contexts is not None:
            contexts.append(TrialContext(u, pool, testing))
        if not testing:
            continue
        clusters: dict[int | None, dict[int, None]] = {}
        for w in pool:
            clusters.setdefault(signature.get(w), {})[w] = None
        clusters.pop(None, None)
        cluster_lists = {sig: list(ws) for sig, ws in clusters.items()}
        for y in testing:
            if random() < e:
                if len(members[sn_of[y]].items) == 1:
                    outcomes.append(TrialOutcome(y, NEW_SINGLETON, 0, True))
                else:
                    _try_move(state, y, NEW_SINGLETON, outcomes)
                continue
            z = _pick_other(cluster_lists.get(signature.get(y), []), y, rng)
            if z is None:
                continue
            dest = sn_of[z]
            if dest == sn_of[y]:
                outcomes.append(TrialOutcome(y, dest, 0, True))
            else:
                _try_move(state, y, dest, outcomes)
    return outcomes


def mosso_simple_step(state: SummaryState, config: RunConfig, event, rng, contexts: list | None = None) -> list[TrialOutcome]:
    """Apply ``event`` and run MoSSo-Simple's trials (full neighbourhood retrieval)."""
    state.apply(event)
    outcomes: list[TrialOutcome] = []
    e = config.escape_prob
    c = config.sample_count
    random = rng.random
    for u in (event.u, event.v):
        if state.degree[u] == 0:
            continue
        nbrs = list(state.retrieve_neighborhood(u))
        n = len(nbrs)
        pool = [nbrs[int(random() * n)] for _ in range(c)]
        testing = _testing_nodes(state, pool, rng)
        if contexts is not None:
            contexts.append(TrialContext(u, pool, testing))
        for y in testing:
            if random() < e:
                _try_move(state, y, NEW_SINGLETON, outcomes)
                continue
            z = _pick_other(nbrs, y, rng)
            if z is None:
                continue
            _try_move(state, y, state.sn_of[z], outcomes)
    return outcomes


def greedy_best_move(state: SummaryState, y: int) -> tuple[int | None, int]:
    """Best destination for ``y`` over every live supernode and a fresh singleton.

    ``y`` stays unless some move strictly lowers phi. Among equally good
    moves the smallest supernode id wins; the fresh singleton, which would
    receive a new and therefore larger id, comes last. Returns
    ``(destination, delta)``.
    """
    here = state.sn_of[y]
    d = state.neighbor_supernode_counts(y)
    best, best_delta = here, 0
    for sid in sorted(state.members):
        if sid == here:
            continue
        delta = state.delta_phi(y, sid, d)
        if delta < best_delta:
            best, best_delta = sid, delta
    delta = state.delta_phi(y, NEW_SINGLETON, d)
    if delta < best_delta:
        best, best_delta = NEW_SINGLETON, delta
    return best, best_delta


def greedy_step(state: SummaryState, event, contexts: list | None = None) -> list[TrialOutcome]:
    """Apply ``event`` and move each endpoint to its best supernode."""
    state.apply(event)
    outcomes: list[TrialOutcome] = []
    for u in (event.u, event.v):
        if contexts is not None:
            contexts.append(TrialContext(u, [u], [u]))
        dest, delta = greedy_best_move(state, u)
        here = state.sn_of[u]
        if dest == here or (dest is NEW_SINGLETON and len(state.members[here].items) == 1):
            outcomes.append(TrialOutcome(u, dest, 0, True))
            continue
        state.move_node(u, dest)
        outcomes.append(TrialOutcome(u, dest, delta, True))
    return outcomes


# ---------------------------------------------------------------------- MCMC


def proposal_probability(state: SummaryState, target: int, given: int, epsilon: float) -> float:
    """Probability of proposing supernode ``target`` after picking a neighbour in ``given``."""
    e = state.counts[given].get(target, 0)
    return (e + epsilon) / (state.incident[given] + epsilon * len(state.members))


def proposal_distribution(state: SummaryState, given: int, epsilon: float) -> dict[int, float]:
    return {sid: proposal_probability(state, sid, given, epsilon) for sid in state.members}


def propose_supernode(state: SummaryState, given: int, epsilon: float, rng) -> int:
    """Draw a supernode with probability ``(|E_{Z,given}| + eps) / (|E_given| + eps |S|)``."""
    weight = state.incident[given]
    total = weight + epsilon * len(state.members)
    r = rng.random() * total
    if r < weight:
        for sid, e in state.counts[given].items():
            r -= e
            if r < 0:
                return sid
    return state.live.choice(rng)


def proposal_sums(state: SummaryState, y: int, dest: int, d: dict[int, int], epsilon: float) -> tuple[float, float]:
    """Forward and reverse proposal mass for moving ``y`` into ``dest``.

    Both average the proposal probability over the supernodes of ``y``'s
    neighbours, weighted by how many neighbours each holds (``d`` maps
    supernode -> neighbour count). The reverse term proposes going back to
    ``S_y`` and is evaluated on the state after the move.
    """
    a = state.sn_of[y]
    b = dest
    deg_y = sum(d.values())
    n_before = len(state.members)
    n_after = n_before - (1 if len(state.members[a].items) == 1 else 0)
    row_a = state.counts[a]
    row_b = state.counts[b]
    incident = state.incident
    d_a = d.get(a, 0)
    d_b = d.get(b, 0)
    forward = reverse = 0.0
    for x, dx in d.items():
        forward += dx * (row_b.get(x, 0) + epsilon) / (incident[x] + epsilon * n_before)
        if x == a:
            e_after = row_a.get(a, 0) - d_a
            inc_after = incident[a] - (deg_y - d_a)
        elif x == b:
            e_after = row_a.get(b, 0) - d_b + d_a
            inc_after = incident[b] + deg_y - d_b
        else:
            e_after = row_a.get(x, 0) - dx
            inc_after = incident[x]
        reverse += dx * (e_after + epsilon) / (inc_after + epsilon * n_after)
    return forward / deg_y, reverse / deg_y


def mcmc_acceptance(delta: float, forward: float, reverse: float, beta: float) -> float:
    """``min(1, exp(-beta * delta) * reverse / forward)``, overflow-safe."""
    if forward <= 0:
        return 1.0
    log_ratio = -beta * delta + math.log(reverse) - math.log(forward)
    if log_ratio >= 0:
        return 1.0
    return math.exp(log_ratio)


def mcmc_step(state: SummaryState, config: RunConfig, event, rng, contexts: list | None = None) -> list[TrialOutcome]:
    """Apply ``event`` and try to relocate every neighbour of both endpoints."""
    state.apply(event)
    outcomes: list[TrialOutcome] = []
    eps = config.mcmc_epsilon
    beta = config.mcmc_beta
    random = rng.random
    sn_of = state.sn_of
    for u in (event.u, event.v):
        if state.degree[u] == 0:
            continue
        testing = list(state.retrieve_neighborhood(u))
        if contexts is not None:
            contexts.append(TrialContext(u, testing, testing))
        for y in testing:
            nbrs = list(state.retrieve_neighborhood(y))
            x = nbrs[int(random() * len(nbrs))]
            dest = propose_supernode(state, sn_of[x], eps, rng)
            if dest == sn_of[y]:
                outcomes.append(TrialOutcome(y, dest, 0, True))
                continue
            d: dict[int, int] = {}
            for w in nbrs:
                s = sn_of[w]
                d[s] = d.get(s, 0) + 1
            delta = state.delta_phi(y, dest, d)
            forward, reverse = proposal_sums(state, y, dest, d, eps)
            if random() < mcmc_acceptance(delta, forward, reverse, beta):
                state.move_node(y, dest)
                outcomes.append(TrialOutcome(y, dest, delta, True))
            else:
                outcomes.append(TrialOutcome(y, dest, delta, False))
    return outcomes


class Summarizer:
    """One algorithm run: owns its summary, cluster index and RNG."""

    def __init__(self, config: RunConfig | None = None, state: SummaryState | None = None):
        self.config = config or RunConfig()
        self.state = state if state is not None else SummaryState()
        self.rng = random.Random(self.config.seed)
        self.index = ClusterIndex(self.config.hash_seed)
        if state is not None and self.config.algorithm == "mosso":
            self.index.rebuild(state)
        self.events_processed = 0
        self.contexts: list[TrialContext] | None = None
        steps: dict[str, Callable] = {
            "mosso": lambda ev, ctx: mosso_step(self.state, self.index, self.config, ev, self.rng, ctx),
            "mosso-simple": lambda ev, ctx: mosso_simple_step(self.state, self.config, ev, self.rng, ctx),
            "greedy": lambda ev, ctx: greedy_step(self.state, ev, ctx),
            "mcmc": lambda ev, ctx: mcmc_step(self.state, self.config, ev, self.rng, ctx),
        }
        self._step = steps[self.config.algorithm]

    def process(self, event) -> list[TrialOutcome]:
        outcomes = self._step(event, self.contexts)
        self.events_processed += 1
        return outcomes

    def run(self, events: Iterable) -> SummaryState:
        for ev in events:
            self.process(ev)
        return self.state

    @property
    def phi(self) -> int:
        return self.state.phi

    def compression_ratio(self) -> float:
        return self.state.phi / self.state.n_edges if self.state.n_edges else 0.0
