"""Incremental min-hash coarse clusters.

Each node's signature is the minimum of a fixed 64-bit hash over its current
neighbours; two nodes fall in the same coarse cluster when their signatures
agree, which happens with probability equal to the Jaccard similarity of
their neighbourhoods.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    """The SplitMix64 finalizer: a bijective 64-bit avalanche mix."""
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


class ClusterIndex:
    """Per-node min-hash signatures; ``None`` marks a node with no neighbours."""

    def __init__(self, hash_seed: int = 0, hash_fn=None):
        self.hash_seed = hash_seed
        self._seed_mix = splitmix64(hash_seed & MASK64)
        self._hash_fn = hash_fn
        self.signature: dict[int, int | None] = {}

    def h(self, node: int) -> int:
        if self._hash_fn is not None:
            return self._hash_fn(node, self.hash_seed)
        return splitmix64((node ^ self._seed_mix) & MASK64)

    def update_on_change(self, state, event) -> None:
        """Refresh signatures of both endpoints; ``event`` is already applied to ``state``."""
        u, v = event.u, event.v
        sig = self.signature
        if event.kind == "+":
            hv, hu = self.h(v), self.h(u)
            cur = sig.get(u)
            if cur is None or hv < cur:
                sig[u] = hv
            cur = sig.get(v)
            if cur is None or hu < cur:
                sig[v] = hu
        else:
            if sig.get(u) == self.h(v):
                sig[u] = self.recompute(state, u)
            if sig.get(v) == self.h(u):
                sig[v] = self.recompute(state, v)

    def recompute(self, state, u: int) -> int | None:
        nbrs = state.retrieve_neighborhood(u)
        if not nbrs:
            return None
        h = self.h
        return min(h(w) for w in nbrs)

    def rebuild(self, state) -> None:
        self.signature = {u: self.recompute(state, u) for u in state.sn_of}

    def cluster_of(self, u: int) -> int | None:
        return self.signature.get(u)

    def same_cluster(self, a: int, b: int) -> bool:
        """True iff both nodes have neighbours and their signatures agree.

        An unclustered (neighbourless) node matches nothing, itself included.
        """
        sa = self.signature.get(a)
        return sa is not None and sa == self.signature.get(b)
