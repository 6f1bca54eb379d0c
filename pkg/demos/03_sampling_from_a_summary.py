"""Drawing uniform neighbours without listing the neighbourhood.

Run with ``python3 demos/03_sampling_from_a_summary.py``.
"""

import random

import numpy as np

from mosso import from_edges, get_random_neighbor

# Node 0 links to one node on its own (a positive correction) and to a
# group of 30 nodes under a superedge, 6 of which it is not actually joined to.
group = list(range(1, 31))
edges = [(0, 31)] + [(0, w) for w in group[6:]]
edges += [(w, x) for w in group for x in (40, 41)]  # make the group worth keeping
state = from_edges(edges, {w: "g" for w in group})
print("superedges:", state.superedges())
print("|C+(0)| =", len(state.cplus[0]), " |C-(0)| =", len(state.cminus[0]), " deg(0) =", state.degree[0])

stats = {}
draws = get_random_neighbor(state, 0, 200_000, random.Random(0), stats)
values, counts = np.unique(draws, return_counts=True)
freq = counts / counts.sum()
print("distinct nodes drawn:", len(values), "(true degree", state.degree[0], ")")
print("min / max frequency:", freq.min().round(4), freq.max().round(4), " uniform:", round(1 / state.degree[0], 4))
print("total variation from uniform:", round(0.5 * np.abs(freq - 1 / len(values)).sum(), 4))
print("inner iterations per draw:", round(stats["iterations"] / stats["draws"], 3))
print("never drew a non-neighbour:", set(values) == state.retrieve_neighborhood(0))
