from __future__ import annotations

import subprocess
import sys

import pytest

from conftest import TOY_EDGES, random_sound_stream, replay
from mosso import bench
from mosso.cli import main
from mosso.errors import VerificationError
from mosso.snapshot import read_snapshot
from mosso.streams import StreamEvent, generate_copying_model, write_stream
from mosso.summary import from_edges
from mosso.summarizers import RunConfig, Summarizer


def strip_elapsed(csv_text: str) -> list[list[str]]:
    return [row.split(",")[:4] + row.split(",")[5:] for row in csv_text.splitlines()]


def test_empty_stream_writes_header_only(tmp_path):
    out = tmp_path / "m.csv"
    result = bench.run(RunConfig(), [], metrics_out=out)
    assert out.read_text() == "events,phi,edges,ratio,elapsed_ns,peak_entries\n"
    assert result.samples == []


def test_rows_at_interval_and_at_end():
    stream = random_sound_stream(20, 250, seed=1)
    result = bench.run(RunConfig(seed=1), stream, report_interval=100)
    assert [s.events_processed for s in result.samples] == [100, 200, 250]
    for s in result.samples:
        assert s.compression_ratio <= 1.0
        assert s.compression_ratio == (s.phi / s.live_edges if s.live_edges else 0.0)
    assert result.samples[-1].elapsed_nanos == result.total_ns


def test_toy_input_ratio():
    stream = [StreamEvent.insert(u, v) for u, v in TOY_EDGES]
    for algorithm in ("mosso", "mosso-simple", "greedy", "mcmc"):
        for seed in range(5):
            res = bench.run(RunConfig(algorithm=algorithm, seed=seed), stream, report_interval=1)
            assert all(s.compression_ratio <= 1.0 for s in res.samples)
            groups = sorted(sorted(m.items) for m in res.state.members.values())
            if groups == [[0, 1, 2], [3, 4, 5], [6]]:
                assert res.final_ratio == 0.4
    # the depicted grouping itself
    state = from_edges(TOY_EDGES, {0: 0, 1: 0, 2: 0, 3: 1, 4: 1, 5: 1})
    assert bench.compression_ratio(state.phi, state.n_edges) == 0.4


def test_same_seed_same_csv_apart_from_time(tmp_path):
    stream = random_sound_stream(30, 400, seed=2)
    texts = []
    for i in range(2):
        out = tmp_path / f"m{i}.csv"
        bench.run(RunConfig(seed=4), stream, report_interval=50, metrics_out=out)
        texts.append(out.read_text())
    assert strip_elapsed(texts[0]) == strip_elapsed(texts[1])
    assert (tmp_path / "m0.csv.snapshot").read_text() == (tmp_path / "m1.csv.snapshot").read_text()


def test_verification_passes_on_sound_replay():
    stream = random_sound_stream(25, 300, seed=3)
    bench.run(RunConfig(algorithm="mcmc", seed=1), stream, report_interval=0, verify_interval=50)


def test_verification_failure_raises():
    class Broken(Summarizer):
        def process(self, event):
            out = super().process(event)
            if self.events_processed == 30:
                self.state.n_cplus += 1  # phi no longer matches the encoding
            return out

    stream = random_sound_stream(20, 60, seed=5)
    with pytest.raises(VerificationError) as info:
        bench.run(RunConfig(), stream, verify_interval=10, summarizer=Broken(RunConfig()))
    assert info.value.report.event_index == 30


def test_sweep_single_value_equals_run():
    stream = random_sound_stream(25, 300, seed=6)
    swept = bench.sweep("escape_prob", [0.3], RunConfig(seed=2), stream)
    direct = bench.run(RunConfig(seed=2), stream, report_interval=0)
    assert swept[0].final_ratio == direct.final_ratio
    with pytest.raises(ValueError):
        bench.sweep("mcmc_beta", [1.0], RunConfig(), stream)


def test_compare_matches_sequential_runs():
    stream = random_sound_stream(20, 200, seed=7)
    configs = [RunConfig(algorithm=a, seed=3) for a in ("mosso", "mosso-simple", "mcmc")]
    together = bench.compare(configs, stream)
    for config, res in zip(configs, together):
        alone = bench.run(config, stream, report_interval=0)
        assert res.state == alone.state


def test_query_against_oracle(tmp_path):
    stream = random_sound_stream(25, 300, seed=8)
    snap = tmp_path / "s.snap"
    bench.run(RunConfig(seed=1), stream, verify_interval=100, snapshot_out=snap)
    exact = replay(stream)
    for u in exact.nodes:
        assert bench.query(snap, u) == sorted(exact.neighbors(u))
    with pytest.raises(KeyError):
        bench.query(snap, 12345)


def test_query_isolated_node(tmp_path):
    stream = [StreamEvent.insert(0, 1), StreamEvent.delete(0, 1)]
    snap = tmp_path / "s.snap"
    bench.run(RunConfig(), stream, snapshot_out=snap)
    assert bench.query(snap, 0) == []


# ---------------------------------------------------------------------- CLI


@pytest.fixture
def edge_file(tmp_path):
    g = generate_copying_model(200, 800, 0.5, seed=1)
    path = tmp_path / "g.txt"
    path.write_text("".join(f"{u + 1000} {v + 1000}\n" for u, v in g.edges))
    return path


def test_cli_run_writes_metrics_snapshot_and_id_map(tmp_path, edge_file):
    out = tmp_path / "m.csv"
    code = main(
        [
            "run", "--algorithm", "mosso", "--input", str(edge_file), "--stream", "dynamic",
            "--deletion-prob", "0.2", "--escape-prob", "0.3", "--samples", "60", "--seed", "3",
            "--report-interval", "200", "--verify-interval", "100", "--metrics-out", str(out),
        ]
    )
    assert code == 0
    rows = bench.read_metrics(out)
    assert rows and all(r.compression_ratio <= 1.0 for r in rows)
    state = read_snapshot(str(out) + ".snapshot")
    assert state.phi == rows[-1].phi
    assert (tmp_path / "m.csv.idmap").exists()


def test_cli_stream_file_and_query(tmp_path, capsys):
    stream = random_sound_stream(15, 120, seed=9)
    sfile = tmp_path / "s.txt"
    write_stream(stream, sfile)
    snap = tmp_path / "out.snap"
    assert main(["run", "--algorithm", "greedy", "--input", str(sfile), "--stream", "file", "--snapshot-out", str(snap)]) == 0
    capsys.readouterr()
    node = stream[0].u
    assert main(["query", "--snapshot", str(snap), "--node", str(node)]) == 0
    printed = capsys.readouterr().out.split()
    assert sorted(map(int, printed)) == sorted(replay(stream).neighbors(node))


def test_cli_errors_exit_nonzero(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("+ 1 2\n+ 2 1\n")
    assert main(["run", "--input", str(bad), "--stream", "file"]) == 2
    assert main(["run", "--input", str(tmp_path / "missing.txt")]) == 2
    assert main(["run", "--input", str(bad), "--stream", "file", "--escape-prob", "1.5"]) == 2
    garbage = tmp_path / "g.txt"
    garbage.write_text("1 2\nfoo\n")
    assert main(["run", "--input", str(garbage)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_cli_sweep_and_compare(edge_file, capsys):
    assert main(["sweep", "--input", str(edge_file), "--param", "sample_count", "--values", "30,60"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "sample_count,ratio,elapsed_ns" and len(lines) == 3
    assert main(["compare", "--input", str(edge_file), "--algorithms", "mosso,mcmc"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert [ln.split(",")[0] for ln in lines[1:]] == ["mosso", "mcmc"]


def test_module_entry_point(edge_file):
    proc = subprocess.run(
        [sys.executable, "-m", "mosso", "run", "--input", str(edge_file), "--report-interval", "400"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert proc.stdout.splitlines()[0] == ",".join(bench.CSV_COLUMNS)


def test_timestamped_input_replays_in_time_order(tmp_path):
    path = tmp_path / "t.txt"
    path.write_text("1 2 30\n2 3 10\n3 4 20\n")
    snap = tmp_path / "s.snap"
    assert main(["run", "--input", str(path), "--snapshot-out", str(snap)]) == 0
    assert read_snapshot(snap).n_edges == 3
