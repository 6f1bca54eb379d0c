from __future__ import annotations

import math
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import replay
from mosso.errors import ParseError
from mosso.streams import (
    DELETE,
    INSERT,
    EdgeList,
    StreamEvent,
    final_edges,
    generate_copying_model,
    load_edge_list,
    make_fully_dynamic_stream,
    make_insertion_stream,
    parse_edge_list,
    parse_stream,
    random_graph,
    read_stream,
    validate_soundness,
    write_stream,
)


def test_events_are_canonical():
    ev = StreamEvent.insert(5, 2)
    assert (ev.u, ev.v) == (2, 5)
    with pytest.raises(ValueError):
        StreamEvent.delete(3, 3)


# ------------------------------------------------------------- edge lists


def test_direction_self_loops_and_duplicates_are_dropped(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("1 2\n2 1\n3 3\n")
    edges = load_edge_list(path)
    assert edges.edges == [(0, 1)]
    assert edges.id_map == {"1": 0, "2": 1}


def test_empty_file(tmp_path):
    path = tmp_path / "empty.txt"
    path.write_text("")
    assert load_edge_list(path).edges == []


def test_timestamps_are_kept_and_ordered():
    edges = parse_edge_list(["# u v t", "10 20 7", "20 30 3", "30 10 5"])
    assert edges.timestamps == [7, 3, 5]
    stream = make_insertion_stream(edges, ordering="timestamp")
    assert [ev.timestamp for ev in stream] == [3, 5, 7]


def test_id_map_is_saved(tmp_path):
    edges = parse_edge_list(["100 7", "7 42"])
    edges.save_id_map(tmp_path / "ids")
    rows = [ln.split() for ln in (tmp_path / "ids").read_text().splitlines() if not ln.startswith("#")]
    assert rows == [["100", "0"], ["7", "1"], ["42", "2"]]


@pytest.mark.parametrize(
    "lines, lineno",
    [
        (["1 2", "1 2 3 4"], 2),
        (["# header", "a b"], 2),
        (["1 2 5", "2 3"], 2),
        (["1 2 x"], 1),
    ],
)
def test_bad_lines_report_their_number(lines, lineno):
    with pytest.raises(ParseError) as info:
        parse_edge_list(lines)
    assert info.value.line == lineno


# ----------------------------------------------------------------- streams


def test_insertion_stream_basics():
    edges = [(0, 1), (1, 2), (2, 3)]
    a = make_insertion_stream(edges, seed=5)
    assert len(a) == 3 and all(ev.kind == INSERT for ev in a)
    assert a == make_insertion_stream(edges, seed=5)
    assert sorted((ev.u, ev.v) for ev in a) == edges


def test_dynamic_with_zero_deletion_is_insertion_only():
    stream = make_fully_dynamic_stream(random_graph(30, 100, 1), 0.0, seed=2)
    assert len(stream) == 100 and all(ev.kind == INSERT for ev in stream)


def test_dynamic_with_certain_deletion_removes_everything():
    stream = make_fully_dynamic_stream(random_graph(30, 100, 1), 1.0, seed=2)
    kinds = Counter(ev.kind for ev in stream)
    assert kinds == {INSERT: 100, DELETE: 100}
    assert validate_soundness(stream) is None
    assert final_edges(stream) == set()


def test_deletion_count_is_binomial():
    # 10^4 edges at p = 0.1: mean 1000, sd 30
    stream = make_fully_dynamic_stream(random_graph(500, 10_000, 3), 0.1, seed=4)
    deletions = sum(ev.kind == DELETE for ev in stream)
    assert abs(deletions - 1000) <= 3 * math.sqrt(10_000 * 0.1 * 0.9)
    assert validate_soundness(stream) is None


def test_deletion_prob_out_of_range():
    with pytest.raises(ValueError):
        make_fully_dynamic_stream([(0, 1)], 1.5)


@given(st.integers(2, 40), st.integers(0, 120), st.floats(0, 1), st.integers(0, 10_000))
def test_generated_streams_are_sound_and_replay_to_survivors(n, m, p, seed):
    m = min(m, n * (n - 1) // 2)
    edges = random_graph(n, m, seed)
    stream = make_fully_dynamic_stream(edges, p, seed)
    assert validate_soundness(stream) is None
    deleted = {(ev.u, ev.v) for ev in stream if ev.kind == DELETE}
    assert replay(stream).edges() == set(edges.edges) - deleted


# ------------------------------------------------------------- copying model


def test_copying_model_output_is_simple():
    g = generate_copying_model(2000, 10_000, 0.7, seed=1)
    assert len(g) == 10_000
    assert all(u < v for u, v in g.edges)
    assert len(set(g.edges)) == len(g.edges)


def test_copying_model_needs_two_nodes():
    with pytest.raises(ValueError):
        generate_copying_model(1, 0, 0.5)


def test_copying_creates_hubs_that_uniform_attachment_lacks():
    def max_degree(edges: EdgeList) -> int:
        return max(Counter(x for e in edges.edges for x in e).values())

    flat = generate_copying_model(5000, 20_000, 0.0, seed=3)
    copied = generate_copying_model(5000, 20_000, 0.9, seed=3)
    assert max_degree(copied) > 3 * max_degree(flat)


def test_copying_model_is_seeded():
    assert generate_copying_model(300, 900, 0.5, 8).edges == generate_copying_model(300, 900, 0.5, 8).edges


# -------------------------------------------------------------- soundness


def test_soundness_examples():
    ins, dele = StreamEvent.insert, StreamEvent.delete
    err = validate_soundness([ins(0, 1), ins(1, 0)])
    assert err is not None and err.index == 1
    assert validate_soundness([ins(0, 1), dele(0, 1), ins(0, 1)]) is None
    err = validate_soundness([dele(0, 1)])
    assert err is not None and err.index == 0


def test_stream_file_round_trip(tmp_path):
    stream = make_fully_dynamic_stream(random_graph(20, 60, 0), 0.3, 1)
    path = tmp_path / "s.txt"
    write_stream(stream, path)
    assert read_stream(path) == [StreamEvent(ev.kind, ev.u, ev.v) for ev in stream]


def test_stream_parse_errors():
    with pytest.raises(ParseError) as info:
        parse_stream(["+ 1 2", "* 1 2"])
    assert info.value.line == 2
    with pytest.raises(ParseError):
        parse_stream(["+ 4 4"])
