"""Command-line entry point: ``mosso {run,sweep,compare,query}``.

Exit status is 0 on success, 1 when oracle verification finds a mismatch
and 2 for bad arguments or unreadable input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench
from .errors import ParseError, SnapshotError, VerificationError
from .streams import load_edge_list, make_fully_dynamic_stream, make_insertion_stream, read_stream, validate_soundness
from .summarizers import ALGORITHMS, RunConfig


class UsageError(Exception):
    pass


def _add_run_flags(p: argparse.ArgumentParser, with_algorithm: bool = True) -> None:
    if with_algorithm:
        p.add_argument("--algorithm", choices=ALGORITHMS, default="mosso")
    p.add_argument("--input", required=True, help="edge list, or a '+ u v' stream file with --stream file")
    p.add_argument("--stream", choices=("insertion", "dynamic", "file"), default="insertion")
    p.add_argument("--deletion-prob", type=float, default=0.1)
    p.add_argument("--escape-prob", type=float, default=0.3)
    p.add_argument("--samples", type=int, default=120)
    p.add_argument("--beta", type=float, default=10.0)
    p.add_argument("--epsilon", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report-interval", type=int, default=1000)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mosso", description="Incremental lossless graph summarization.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="replay one stream through one algorithm")
    _add_run_flags(p)
    p.add_argument("--verify-interval", type=int, default=0, help="compare with an exact replay every N events (0 = off)")
    p.add_argument("--snapshot-out", type=Path)
    p.add_argument("--metrics-out", type=Path)

    p = sub.add_parser("sweep", help="replay once per parameter value")
    _add_run_flags(p)
    p.add_argument("--param", choices=sorted(bench.SWEEP_PARAMS), required=True)
    p.add_argument("--values", required=True, help="comma-separated values")
    p.add_argument("--out-dir", type=Path)

    p = sub.add_parser("compare", help="run several algorithms on the same stream, one thread each")
    _add_run_flags(p, with_algorithm=False)
    p.add_argument("--algorithms", default=",".join(ALGORITHMS))
    p.add_argument("--metrics-out", type=Path, help="directory for one CSV per algorithm")

    p = sub.add_parser("query", help="print the neighbours of a node from a snapshot")
    p.add_argument("--snapshot", type=Path, required=True)
    p.add_argument("--node", type=int, required=True)
    return parser


def config_from_args(args, algorithm: str | None = None) -> RunConfig:
    try:
        return RunConfig(
            algorithm=algorithm or args.algorithm,
            escape_prob=args.escape_prob,
            sample_count=args.samples,
            mcmc_beta=args.beta,
            mcmc_epsilon=args.epsilon,
            seed=args.seed,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def events_from_args(args, id_map_out: Path | None = None) -> list:
    path = Path(args.input)
    if args.stream == "file":
        events = read_stream(path)
        problem = validate_soundness(events)
        if problem is not None:
            raise UsageError(f"{path}: unsound stream: {problem}")
        return events
    edges = load_edge_list(path)
    if id_map_out is not None and edges.id_map:
        edges.save_id_map(id_map_out)
    if args.stream == "insertion":
        ordering = "timestamp" if edges.timestamps is not None else "random"
        return make_insertion_stream(edges, ordering, args.seed)
    if not 0.0 <= args.deletion_prob <= 1.0:
        raise UsageError("--deletion-prob must lie in [0, 1]")
    return make_fully_dynamic_stream(edges, args.deletion_prob, args.seed)


def _cmd_run(args) -> int:
    config = config_from_args(args)
    beside = args.metrics_out or args.snapshot_out
    events = events_from_args(args, Path(str(beside) + ".idmap") if beside else None)
    result = bench.run(
        config,
        events,
        report_interval=args.report_interval,
        verify_interval=args.verify_interval,
        metrics_out=args.metrics_out,
        snapshot_out=args.snapshot_out,
    )
    if args.metrics_out is None:
        bench.write_metrics(result.samples, sys.stdout)
    return 0


def _cmd_sweep(args) -> int:
    base = config_from_args(args)
    cast = int if args.param == "sample_count" else float
    try:
        values = [cast(v) for v in args.values.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"bad --values {args.values!r}") from None
    events = events_from_args(args)
    try:
        results = bench.sweep(args.param, values, base, events, args.report_interval, args.out_dir)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(f"{args.param},ratio,elapsed_ns")
    for r in results:
        print(f"{r.value},{r.final_ratio:.6f},{r.total_ns}")
    return 0


def _cmd_compare(args) -> int:
    names = [a.strip() for a in args.algorithms.split(",") if a.strip()]
    configs = [config_from_args(args, name) for name in names]
    events = events_from_args(args)
    results = bench.compare(configs, events, args.report_interval)
    if args.metrics_out is not None:
        args.metrics_out.mkdir(parents=True, exist_ok=True)
    print("algorithm,phi,edges,ratio,elapsed_ns")
    for name, res in zip(names, results):
        if args.metrics_out is not None:
            bench.write_metrics(res.samples, args.metrics_out / f"{name}.csv")
        last = res.samples[-1] if res.samples else None
        phi = last.phi if last else 0
        edges = last.live_edges if last else 0
        print(f"{name},{phi},{edges},{res.final_ratio:.6f},{res.total_ns}")
    return 0


def _cmd_query(args) -> int:
    try:
        nbrs = bench.query(args.snapshot, args.node)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    print(" ".join(map(str, nbrs)))
    return 0


COMMANDS = {"run": _cmd_run, "sweep": _cmd_sweep, "compare": _cmd_compare, "query": _cmd_query}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except VerificationError as exc:
        print(f"mosso: {exc}", file=sys.stderr)
        return 1
    except (UsageError, ParseError, SnapshotError, OSError) as exc:
        print(f"mosso: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
