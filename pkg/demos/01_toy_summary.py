"""A ten-edge graph stored in four entries.

Run with ``python3 demos/01_toy_summary.py``.
"""

from mosso import ExactGraph, brute_force_phi, from_edges, save_snapshot

# Nodes 0-2 are almost fully joined to nodes 3-5 (the pair (2, 5) is
# missing), and node 6 hangs off 0 and 3.
edges = [(a, b) for a in (0, 1, 2) for b in (3, 4, 5) if (a, b) != (2, 5)] + [(0, 6), (3, 6)]
print("edges:", len(edges))

# With every node on its own, each edge is one positive correction.
flat = from_edges(edges)
print("phi with singletons:", flat.phi)

# Group {0,1,2} and {3,4,5}. Eight of the nine possible edges between the
# two groups exist, so one superedge plus one negative correction is cheaper.
grouped = from_edges(edges, {0: "A", 1: "A", 2: "A", 3: "B", 4: "B", 5: "B"})
print("phi grouped:", grouped.phi)
print("superedges:", grouped.superedges())
plus, minus = grouped.corrections()
print("C+:", sorted(plus), " C-:", sorted(minus))

# The per-pair encoding is optimal for the grouping: the brute-force count agrees.
print("brute force:", brute_force_phi(ExactGraph(edges), grouped.partition()))

# Queries work on the compressed form directly.
print("neighbours of 2:", sorted(grouped.retrieve_neighborhood(2)))
print("is (2, 5) an edge?", grouped.check_adjacency(2, 5))
print("lossless:", grouped.reconstruct() == set(edges))

# Moving a node reports the exact change in phi.
print("delta for moving 6 into A:", grouped.delta_phi(6, grouped.sn_of[0]))

print()
print(save_snapshot(grouped))
