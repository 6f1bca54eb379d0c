from __future__ import annotations

import random
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from mosso.oracle import ExactGraph
from mosso.streams import StreamEvent

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")

# A small graph whose grouping A = {0, 1, 2}, B = {3, 4, 5}, C = {6} brings
# ten edges down to four entries: superedge {A, B}, one negative correction
# (2, 5) and two positive corrections (0, 6), (3, 6).
TOY_EDGES = [(a, b) for a in (0, 1, 2) for b in (3, 4, 5) if (a, b) != (2, 5)] + [(0, 6), (3, 6)]
TOY_GROUPING = {0: "A", 1: "A", 2: "A", 3: "B", 4: "B", 5: "B", 6: "C"}


@pytest.fixture
def toy_edges():
    return list(TOY_EDGES)


@pytest.fixture
def toy_grouping():
    return dict(TOY_GROUPING)


def random_sound_stream(n_nodes: int, n_events: int, seed: int, delete_bias: float = 0.3) -> list[StreamEvent]:
    """Random sound stream over ``n_nodes`` nodes mixing insertions and deletions."""
    rng = random.Random(seed)
    live: list[tuple[int, int]] = []
    index: dict[tuple[int, int], int] = {}
    events = []
    cap = n_nodes * (n_nodes - 1) // 2
    while len(events) < n_events:
        if live and (len(live) == cap or rng.random() < delete_bias):
            i = rng.randrange(len(live))
            key = live[i]
            last = live.pop()
            if i < len(live):
                live[i] = last
                index[last] = i
            del index[key]
            events.append(StreamEvent.delete(*key))
            continue
        u, v = rng.sample(range(n_nodes), 2)
        key = (min(u, v), max(u, v))
        if key in index:
            continue
        index[key] = len(live)
        live.append(key)
        events.append(StreamEvent.insert(*key))
    return events


@st.composite
def sound_streams(draw, max_nodes: int = 12, max_events: int = 60):
    n = draw(st.integers(2, max_nodes))
    m = draw(st.integers(0, max_events))
    seed = draw(st.integers(0, 2**32 - 1))
    bias = draw(st.sampled_from([0.0, 0.2, 0.5]))
    return random_sound_stream(n, m, seed, bias)


@st.composite
def graphs_with_partition(draw, max_nodes: int = 12):
    n = draw(st.integers(2, max_nodes))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    groups = draw(st.integers(1, n))
    labels = draw(st.lists(st.integers(0, groups - 1), min_size=n, max_size=n))
    return edges, dict(enumerate(labels))


def replay(events) -> ExactGraph:
    exact = ExactGraph()
    for ev in events:
        exact.apply(ev)
    return exact


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
