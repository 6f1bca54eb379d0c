"""Incremental lossless summarization of fully dynamic graph streams."""

from __future__ import annotations

from .errors import IntegrityError, NoNeighborsError, ParseError, SnapshotError, SoundnessError, VerificationError
from .minhash import ClusterIndex
from .oracle import ExactGraph, brute_force_delta_phi, brute_force_phi, check_equivalence
from .sampling import get_random_neighbor
from .snapshot import load_snapshot, read_snapshot, save_snapshot, write_snapshot
from .streams import (
    StreamEvent,
    generate_copying_model,
    load_edge_list,
    make_fully_dynamic_stream,
    make_insertion_stream,
    random_graph,
    read_stream,
    validate_soundness,
    write_stream,
)
from .summarizers import ALGORITHMS, RunConfig, Summarizer
from .summary import NEW_SINGLETON, EncodingDecision, SummaryState, encode_pair, from_edges, verify_invariants

__all__ = [
    "ALGORITHMS",
    "NEW_SINGLETON",
    "ClusterIndex",
    "EncodingDecision",
    "ExactGraph",
    "IntegrityError",
    "NoNeighborsError",
    "ParseError",
    "RunConfig",
    "SnapshotError",
    "SoundnessError",
    "StreamEvent",
    "SummaryState",
    "Summarizer",
    "VerificationError",
    "brute_force_delta_phi",
    "brute_force_phi",
    "check_equivalence",
    "encode_pair",
    "from_edges",
    "generate_copying_model",
    "get_random_neighbor",
    "load_edge_list",
    "load_snapshot",
    "make_fully_dynamic_stream",
    "make_insertion_stream",
    "random_graph",
    "read_snapshot",
    "read_stream",
    "save_snapshot",
    "validate_soundness",
    "verify_invariants",
    "write_snapshot",
    "write_stream",
]
