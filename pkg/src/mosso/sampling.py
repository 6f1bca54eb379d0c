"""Uniform neighbour sampling straight from a summary.

A neighbour of ``u`` is either a positive correction of ``u`` or a member of
a supernode joined to ``S_u`` by a superedge (minus the negative
corrections). The first group is sampled directly. For the second, a
Metropolis chain over the superedge neighbours of ``S_u`` visits each
supernode in proportion to its size, a uniform member of the current
supernode is drawn, and the draw is retried when it is not a neighbour.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .errors import IntegrityError, NoNeighborsError

#: Inner iterations allowed per draw, as a multiple of the expected count.
RETRY_CAP_FACTOR = 64


class SamplerChain:
    """State of the supernode chain: the currently selected supernode."""

    __slots__ = ("current", "rng")

    def __init__(self, current: int, rng):
        self.current = current
        self.rng = rng


def supernode_chain_step(chain: SamplerChain, neighbors: Sequence[int], size_of: Callable[[int], int], rng=None) -> int:
    """One Metropolis step: propose uniformly, accept with min(1, |S_p| / |S_n|)."""
    rng = rng or chain.rng
    proposal = neighbors[int(rng.random() * len(neighbors))]
    if proposal != chain.current:
        size_p = size_of(proposal)
        size_n = size_of(chain.current)
        if size_p >= size_n or rng.random() * size_n < size_p:
            chain.current = proposal
    return chain.current


def retry_cap(state, u: int) -> int:
    """Inner-iteration budget for one draw on the supernode path.

    The expected number of iterations there is at most
    ``1 + (|C-(u)| + 1) / (deg(u) - |C+(u)|)``; the extra one covers ``u``
    itself when its own supernode carries a self-superedge.
    """
    via_superedges = state.degree[u] - len(state.cplus[u].items)
    return int(RETRY_CAP_FACTOR * (1 + (len(state.cminus[u]) + 1) / max(1, via_superedges))) + 1


def get_random_neighbor(state, u: int, c: int, rng, stats: dict | None = None) -> list[int]:
    """Draw ``c`` neighbours of ``u`` (with replacement) without listing N(u).

    The supernode chain starts at a uniform superedge neighbour and is reused
    for all ``c`` draws. When ``stats`` is given, ``stats["iterations"]`` is
    increased by the inner-loop iterations spent (a positive-correction draw
    counts as one) and ``stats["draws"]`` by ``c``.
    """
    deg = state.degree[u]
    if c < 1:
        raise ValueError("c must be positive")
    if deg == 0:
        raise NoNeighborsError(f"node {u} has no neighbours")
    cp = state.cplus[u].items
    n_cp = len(cp)
    random = rng.random
    su = state.sn_of[u]
    sn_nbrs = state.sn_adj[su].items
    k = len(sn_nbrs)
    if k == 0:
        if n_cp != deg:
            raise IntegrityError(f"node {u}: degree {deg} but only {n_cp} positive corrections and no superedges")
        if stats is not None:
            stats["iterations"] = stats.get("iterations", 0) + c
            stats["draws"] = stats.get("draws", 0) + c
        return [cp[int(random() * n_cp)] for _ in range(c)]

    members = state.members
    cm = state.cminus[u]
    cap = retry_cap(state, u)
    p_cp = n_cp / deg
    current = sn_nbrs[int(random() * k)]
    cur_items = members[current].items
    cur_size = len(cur_items)
    out: list[int] = []
    iterations = 0
    for _ in range(c):
        if n_cp and random() < p_cp:
            out.append(cp[int(random() * n_cp)])
            iterations += 1
            continue
        tries = 0
        while True:
            tries += 1
            if tries > cap:
                raise IntegrityError(f"node {u}: no neighbour found in {cap} draws")
            proposal = sn_nbrs[int(random() * k)]
            if proposal != current:
                p_items = members[proposal].items
                p_size = len(p_items)
                if p_size >= cur_size or random() * cur_size < p_size:
                    current, cur_items, cur_size = proposal, p_items, p_size
            w = cur_items[int(random() * cur_size)]
            if w != u and w not in cm:
                out.append(w)
                break
        iterations += tries
    if stats is not None:
        stats["iterations"] = stats.get("iterations", 0) + iterations
        stats["draws"] = stats.get("draws", 0) + c
    return out
