"""Summarizing a growing graph as edges arrive and leave.

Run with ``python3 demos/02_streaming_compression.py``. Takes under a
minute on one core.
"""

import time

from mosso import ExactGraph, RunConfig, Summarizer, check_equivalence, generate_copying_model, make_fully_dynamic_stream

# Copying-model graphs have many nodes with overlapping neighbourhoods,
# which is what supernodes exploit.
graph = generate_copying_model(n_nodes=3000, n_edges=15_000, copy_prob=0.8, seed=1)
stream = make_fully_dynamic_stream(graph, deletion_prob=0.1, seed=1)
print(f"{len(stream)} events over {graph.num_nodes} nodes")

for algorithm in ("mosso", "mosso-simple", "mcmc"):
    summ = Summarizer(RunConfig(algorithm=algorithm, seed=0))
    exact = ExactGraph()
    start = time.perf_counter()
    for i, event in enumerate(stream, 1):
        summ.process(event)
        exact.apply(event)
        if i % 5000 == 0:
            print(f"  {algorithm:13s} after {i:6d} events: ratio {summ.compression_ratio():.3f}")
    took = time.perf_counter() - start
    ok = check_equivalence(exact, summ.state)
    print(f"{algorithm:13s} final ratio {summ.compression_ratio():.3f}  ({took:.1f}s, lossless={bool(ok)})")

# Greedy scans every supernode for every endpoint, so keep it to a short prefix.
summ = Summarizer(RunConfig(algorithm="greedy"))
summ.run(stream[:3000])
print(f"greedy        ratio after 3000 events {summ.compression_ratio():.3f}")
