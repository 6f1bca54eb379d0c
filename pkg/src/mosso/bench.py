"""Replay harness: metrics time series, oracle verification, parameter sweeps.

A run replays an in-memory event list through one summarizer and records a
:class:`MetricSample` every ``report_interval`` events plus one at the end.
Elapsed time covers the summarizer only; reading the stream, sampling
metrics and verification are all outside the clock.
"""

from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path
from typing import NamedTuple, Sequence

from .errors import VerificationError
from .oracle import ExactGraph, check_equivalence
from .snapshot import read_snapshot, write_snapshot
from .summarizers import RunConfig, Summarizer
from .summary import SummaryState

CSV_COLUMNS = ("events", "phi", "edges", "ratio", "elapsed_ns", "peak_entries")


class MetricSample(NamedTuple):
    events_processed: int
    phi: int
    live_edges: int
    compression_ratio: float
    elapsed_nanos: int
    peak_entries: int

    def row(self) -> list[str]:
        return [
            str(self.events_processed),
            str(self.phi),
            str(self.live_edges),
            f"{self.compression_ratio:.6f}",
            str(self.elapsed_nanos),
            str(self.peak_entries),
        ]


@dataclass
class RunResult:
    config: RunConfig
    samples: list[MetricSample]
    state: SummaryState
    total_ns: int

    @property
    def final_ratio(self) -> float:
        return self.samples[-1].compression_ratio if self.samples else 0.0


def compression_ratio(phi: int, edges: int) -> float:
    return phi / edges if edges else 0.0


def write_metrics(samples: Sequence[MetricSample], path_or_file) -> None:
    if isinstance(path_or_file, (str, Path)):
        with open(path_or_file, "w", newline="") as fh:
            write_metrics(samples, fh)
        return
    writer = csv.writer(path_or_file, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for s in samples:
        writer.writerow(s.row())


def metrics_csv(samples: Sequence[MetricSample]) -> str:
    buf = io.StringIO()
    write_metrics(samples, buf)
    return buf.getvalue()


def read_metrics(path: str | Path) -> list[MetricSample]:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        return [
            MetricSample(
                int(r["events"]),
                int(r["phi"]),
                int(r["edges"]),
                float(r["ratio"]),
                int(r["elapsed_ns"]),
                int(r["peak_entries"]),
            )
            for r in reader
        ]


def snapshot_path_for(metrics_out: str | Path) -> Path:
    return Path(str(metrics_out) + ".snapshot")


def run(
    config: RunConfig,
    events: Sequence,
    report_interval: int = 1000,
    verify_interval: int = 0,
    metrics_out: str | Path | None = None,
    snapshot_out: str | Path | None = None,
    summarizer: Summarizer | None = None,
) -> RunResult:
    """Replay ``events`` and collect metrics.

    With ``verify_interval > 0`` an exact copy of the graph is kept beside
    the summary and compared every ``verify_interval`` events and at the
    end; a mismatch raises :class:`VerificationError`. The final snapshot
    goes to ``snapshot_out``, or beside ``metrics_out`` when only that is
    given.
    """
    summ = summarizer or Summarizer(config)
    state = summ.state
    exact = ExactGraph() if verify_interval > 0 else None
    process = summ.process
    clock = time.perf_counter_ns
    samples: list[MetricSample] = []
    elapsed = 0
    peak = state.stored_entries()
    n = len(events)
    step = report_interval if report_interval > 0 else max(n, 1)
    if exact is not None:
        step = min(step, verify_interval)

    done = 0
    while done < n:
        stop = min(n, done + step - done % step)
        batch = events[done:stop]
        if exact is None:
            t0 = clock()
            for ev in batch:
                process(ev)
                entries = len(state.sn_of) + state.n_superedges + state.n_cplus + state.n_cminus + state.n_pairs
                if entries > peak:
                    peak = entries
            elapsed += clock() - t0
        else:
            for ev in batch:
                t0 = clock()
                process(ev)
                elapsed += clock() - t0
                exact.apply(ev)
                entries = state.stored_entries()
                if entries > peak:
                    peak = entries
        done = stop
        if exact is not None and (done % verify_interval == 0 or done == n):
            report = check_equivalence(exact, state, done)
            if not report:
                raise VerificationError(report)
        if (report_interval > 0 and done % report_interval == 0) or done == n:
            samples.append(
                MetricSample(done, state.phi, state.n_edges, compression_ratio(state.phi, state.n_edges), elapsed, peak)
            )

    if metrics_out is not None:
        write_metrics(samples, metrics_out)
        if snapshot_out is None:
            snapshot_out = snapshot_path_for(metrics_out)
    if snapshot_out is not None:
        write_snapshot(state, snapshot_out)
    return RunResult(config, samples, state, elapsed)


class SweepResult(NamedTuple):
    param: str
    value: float
    final_ratio: float
    total_ns: int
    metrics_path: str | None


SWEEP_PARAMS = {"escape_prob": "escape_prob", "sample_count": "sample_count"}


def sweep(
    param: str,
    values: Sequence,
    base: RunConfig,
    events: Sequence,
    report_interval: int = 0,
    out_dir: str | Path | None = None,
) -> list[SweepResult]:
    """One replay per value of ``param`` (``escape_prob`` or ``sample_count``)."""
    if param not in SWEEP_PARAMS:
        raise ValueError(f"cannot sweep {param!r}; choose from {sorted(SWEEP_PARAMS)}")
    results = []
    for value in values:
        config = replace(base, **{param: value})
        path = None
        if out_dir is not None:
            Path(out_dir).mkdir(parents=True, exist_ok=True)
            path = str(Path(out_dir) / f"sweep_{param}_{value}.csv")
        res = run(config, events, report_interval=report_interval, metrics_out=path)
        results.append(SweepResult(param, value, res.final_ratio, res.total_ns, path))
    return results


def compare(configs: Sequence[RunConfig], events: Sequence, report_interval: int = 0) -> list[RunResult]:
    """Run several configurations side by side, one thread each.

    Each run owns its state and RNG, so results match sequential runs; the
    timings do not, since the threads share one interpreter.
    """
    with ThreadPoolExecutor(max_workers=max(1, len(configs))) as pool:
        futures = [pool.submit(run, c, events, report_interval) for c in configs]
        return [f.result() for f in futures]


def query(snapshot_path: str | Path, node: int) -> list[int]:
    """Sorted neighbours of ``node`` in a saved summary; KeyError if unknown."""
    state = read_snapshot(snapshot_path)
    if node not in state.sn_of:
        raise KeyError(f"node {node} is not in the snapshot")
    return sorted(state.retrieve_neighborhood(node))
