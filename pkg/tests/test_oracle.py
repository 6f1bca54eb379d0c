from __future__ import annotations

import itertools

import pytest

from conftest import random_sound_stream
from mosso.errors import SoundnessError
from mosso.oracle import ExactGraph, apply, brute_force_delta_phi, brute_force_phi, check_equivalence
from mosso.streams import DELETE, StreamEvent
from mosso.summary import SummaryState, from_edges


def test_insert_delete_round_trip():
    g = ExactGraph([(0, 1), (1, 2)])
    before = g.edges()
    apply(g, StreamEvent.insert(0, 2))
    apply(g, StreamEvent.delete(0, 2))
    assert g.edges() == before


def test_unsound_delete_is_rejected():
    with pytest.raises(SoundnessError):
        ExactGraph().apply(StreamEvent.delete(0, 1))


def test_replay_counts_edges():
    stream = random_sound_stream(15, 200, seed=1)
    g = ExactGraph()
    for ev in stream:
        g.apply(ev)
    deletions = sum(ev.kind == DELETE for ev in stream)
    assert g.edge_count == len(stream) - 2 * deletions


def test_singletons_cost_one_per_edge():
    g = ExactGraph()
    for ev in random_sound_stream(12, 150, seed=5):
        g.apply(ev)
    assert brute_force_phi(g, {u: u for u in g.nodes}) == g.edge_count


def test_grouped_clique_costs_four():
    g = ExactGraph(itertools.combinations("abcd", 2))
    assert brute_force_phi(g, {"a": 0, "b": 0, "c": 1, "d": 2}) == 4


def test_toy_grouping_costs_four(toy_edges, toy_grouping):
    assert brute_force_phi(ExactGraph(toy_edges), toy_grouping) == 4


def test_partition_must_cover_nodes():
    with pytest.raises(ValueError):
        brute_force_phi(ExactGraph([(0, 1)]), {0: 0})


def test_delta_phi_oracle_on_clique():
    g = ExactGraph(itertools.combinations(range(4), 2))
    assert brute_force_delta_phi(g, {u: u for u in range(4)}, 1, 0) == -2
    assert brute_force_delta_phi(g, {u: u for u in range(4)}, 1, None) == 0


def test_fresh_states_agree():
    assert check_equivalence(ExactGraph(), SummaryState())


def test_corrupted_positive_correction_is_reported():
    edges = [(0, 1), (1, 2), (2, 3)]
    s = from_edges(edges)
    s.cplus[0].add(3)  # spurious edge (0, 3)
    s.cplus[3].add(0)
    report = check_equivalence(ExactGraph(edges), s, event_index=17)
    assert not report
    assert report.pair == (0, 3)
    assert (report.expected, report.actual) == (False, True)
    assert "event_index=17" in str(report) and "pair=(0, 3)" in str(report)


def test_lost_edge_is_reported():
    edges = [(0, 1), (1, 2)]
    s = from_edges(edges)
    s.cplus[1].discard(2)
    s.cplus[2].discard(1)
    report = check_equivalence(ExactGraph(edges), s)
    assert report.pair == (1, 2) and report.message == "edge lost"


def test_wrong_phi_is_reported():
    edges = [(0, 1)]
    s = from_edges(edges)
    s.n_cplus += 1
    report = check_equivalence(ExactGraph(edges), s)
    assert not report and "phi" in report.message
