"""Command-line harness: solve | verify | gen | bench.

Exit codes: 0 success, 1 verification disagreement, 2 usage error,
3 unreadable or malformed input, 4 computation error (negative cycle,
unreachable target, generator exhaustion).
"""
from __future__ import annotations

import argparse
import csv
import io
import math
import sys
import time

from .algorithms import (
    SamplingParams,
    alg1_apsp_rp,
    alg2_dc_rp,
    alg3_sampling_rp,
    alg4_recursive_rp,
    derive_seed,
    oracle_rp,
)
from .detours import CandidateList
from .errors import (
    GenerationExhaustedError,
    IdOutOfRangeError,
    MalformedHeaderError,
    MismatchError,
    NegativeCycleError,
    SelfLoopError,
    UnreachableError,
    WeightOutOfRangeError,
)
from .generate import generate_graph
from .graph import Graph, shortest_st_path
from .graphio import parse_graph, write_graph
from .report import AlgorithmRun, Report, render_json, replacements_to_json

_ALGOS = ("oracle", "apsp", "dc", "sampling", "recursive")
_INPUT_ERRORS = (MalformedHeaderError, IdOutOfRangeError,
                 WeightOutOfRangeError, SelfLoopError, OSError)
_COMPUTE_ERRORS = (NegativeCycleError, UnreachableError,
                   GenerationExhaustedError)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rpbench",
        description="Replacement shortest paths: solve, cross-check, "
                    "generate and benchmark.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default_algo):
        p.add_argument("--input", required=True, help="instance file")
        p.add_argument("--algo", choices=_ALGOS + ("all",),
                       default=default_algo)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--epsilon", type=float, default=0.5)
        p.add_argument("--C", type=float, default=3.0)
        p.add_argument("--Z", type=int, default=None)
        p.add_argument("--bucket-size", type=int, default=None,
                       help="piece size for dc (default: ceil(sqrt(|P|-1)))")
        p.add_argument("--json", default=None, metavar="PATH",
                       help="also write the report to this file")

    solve = sub.add_parser("solve", help="run one algorithm, emit a report")
    common(solve, "apsp")
    solve.add_argument("--paths", action="store_true",
                       help="include witness paths (oracle only)")

    verify = sub.add_parser("verify",
                            help="cross-check algorithms against the oracle")
    common(verify, "all")
    verify.add_argument("--corrupt", action="store_true",
                        help=argparse.SUPPRESS)

    gen = sub.add_parser("gen", help="generate a random instance")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--prob", type=float, default=0.3)
    gen.add_argument("--M", type=int, default=10)
    gen.add_argument("--mode", choices=("nonnegative", "mixed"),
                     default="nonnegative")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", default=None, help="output file (default stdout)")

    bench = sub.add_parser("bench", help="sweep sizes, emit CSV rows")
    bench.add_argument("--sizes", default="64,128,256",
                       help="comma-separated node counts")
    bench.add_argument("--prob", type=float, default=0.1)
    bench.add_argument("--M", type=int, default=10)
    bench.add_argument("--mode", choices=("nonnegative", "mixed"),
                       default="nonnegative")
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--algo", choices=_ALGOS + ("all",), default="all")
    bench.add_argument("--epsilon", type=float, default=0.5)
    bench.add_argument("--C", type=float, default=3.0)
    bench.add_argument("--Z", type=int, default=None)
    bench.add_argument("--bucket-size", type=int, default=None)
    bench.add_argument("--out", default=None, help="CSV file (default stdout)")
    bench.add_argument("--plot-dir", default=None,
                       help="also render timing/candidate figures here")
    return parser


def _load(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _params(args) -> SamplingParams:
    return SamplingParams(epsilon=args.epsilon, C=args.C, rng_seed=args.seed,
                          Z=args.Z)


def _bucket_size(args, path_edges: int) -> int:
    if args.bucket_size is not None:
        return args.bucket_size
    return max(1, math.ceil(math.sqrt(max(path_edges, 1))))


def _run_algorithm(name: str, g: Graph, s: int, t: int, args,
                   with_paths: bool = False) -> AlgorithmRun:
    sink = CandidateList(g.n)
    params = _params(args)
    witness = None
    t0 = time.perf_counter()
    if name == "oracle":
        if with_paths:
            result, witness = oracle_rp(g, s, t, return_paths=True)
        else:
            result = oracle_rp(g, s, t)
        meta = {}
    elif name == "apsp":
        result = alg1_apsp_rp(g, s, t, candidate_sink=sink)
        meta = {}
    elif name == "dc":
        bs = _bucket_size(args, shortest_st_path(g, s, t).edge_count)
        result = alg2_dc_rp(g, s, t, bs, candidate_sink=sink)
        meta = {"bucket_size": bs}
    elif name == "sampling":
        result = alg3_sampling_rp(g, s, t, params, candidate_sink=sink)
        meta = {"epsilon": params.epsilon, "C": params.C,
                "seed": params.rng_seed}
    elif name == "recursive":
        result = alg4_recursive_rp(g, s, t, params, candidate_sink=sink)
        meta = {"epsilon": params.epsilon, "C": params.C,
                "seed": params.rng_seed, "Z": params.Z}
    else:
        raise ValueError(f"unknown algorithm {name!r}")
    millis = (time.perf_counter() - t0) * 1000.0
    return AlgorithmRun(name=name, replacements=result.dist,
                        candidates=len(sink), millis=millis, params=meta,
                        witness_paths=witness)


def _algo_selection(choice: str, include_oracle: bool) -> list[str]:
    if choice != "all":
        return [choice]
    return list(_ALGOS) if include_oracle else [a for a in _ALGOS
                                                if a != "oracle"]


def _make_report(g: Graph, s: int, t: int, runs: dict[str, AlgorithmRun]
                 ) -> Report:
    p = shortest_st_path(g, s, t)
    vectors = [run.replacements for run in runs.values()]
    agree = all(v == vectors[0] for v in vectors)
    return Report(n=g.n, s=s, t=t, weight_bound=g.weight_bound,
                  path_nodes=p.nodes, path_length=p.total_length,
                  algorithms=runs, agree=agree)


def run_solve(args) -> tuple[int, Report]:
    g, s, t = _load(args.input)
    names = _algo_selection(args.algo, include_oracle=True)
    if args.paths and "oracle" not in names:
        print("error: --paths requires --algo oracle", file=sys.stderr)
        return 2, None
    runs = {name: _run_algorithm(name, g, s, t, args,
                                 with_paths=args.paths and name == "oracle")
            for name in names}
    return 0, _make_report(g, s, t, runs)


def _corrupt(run: AlgorithmRun) -> AlgorithmRun:
    dist = list(run.replacements)
    for i, d in enumerate(dist):
        if d != float("inf"):
            dist[i] = d - 1
            break
    else:
        if dist:
            dist[0] = 0
    return AlgorithmRun(name=run.name, replacements=tuple(dist),
                        candidates=run.candidates, millis=run.millis,
                        params=run.params)


def run_verify(args) -> tuple[int, Report]:
    g, s, t = _load(args.input)
    names = _algo_selection(args.algo, include_oracle=False)
    runs = {"oracle": _run_algorithm("oracle", g, s, t, args)}
    for name in names:
        if name != "oracle":
            runs[name] = _run_algorithm(name, g, s, t, args)
    if getattr(args, "corrupt", False):
        for name in names:
            if name != "oracle":
                runs[name] = _corrupt(runs[name])
                break
    expected = runs["oracle"].replacements
    code = 0
    for name, run in runs.items():
        if name == "oracle" or run.replacements == expected:
            continue
        code = 1
        want = replacements_to_json(expected)
        got = replacements_to_json(run.replacements)
        print(f"MISMATCH {name} (seed {args.seed}, input {args.input}):",
              file=sys.stderr)
        for i, (e, r) in enumerate(zip(want, got)):
            if e != r:
                print(f"  edge {i}: oracle={e} {name}={r}", file=sys.stderr)
    return code, _make_report(g, s, t, runs)


def run_gen(args) -> int:
    g, s, t = generate_graph(args.n, args.prob, args.M, args.mode, args.seed)
    text = write_graph(g, s, t)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def run_bench(args) -> tuple[int, list[dict]]:
    sizes = [int(x) for x in args.sizes.split(",") if x.strip()]
    if not sizes:
        raise ValueError("empty --sizes")
    names = _algo_selection(args.algo, include_oracle=False)
    rows = []
    for n in sizes:
        seed = derive_seed(args.seed, n)
        g, s, t = generate_graph(n, args.prob, args.M, args.mode, seed)
        path_edges = shortest_st_path(g, s, t).edge_count
        for name in names:
            run = _run_algorithm(name, g, s, t, args)
            rows.append({"n": n, "algo": name, "seed": seed,
                         "path_edges": path_edges,
                         "millis": round(run.millis, 3),
                         "candidates": run.candidates})
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=["n", "algo", "seed",
                                             "path_edges", "millis",
                                             "candidates"])
    writer.writeheader()
    writer.writerows(rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    if args.plot_dir:
        from .plots import save_bench_figures
        save_bench_figures(rows, args.plot_dir)
    return 0, rows


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if args.command == "solve":
            code, report = run_solve(args)
            if report is not None:
                _emit_report(report, args)
            return code
        if args.command == "verify":
            code, report = run_verify(args)
            _emit_report(report, args)
            return code
        if args.command == "gen":
            return run_gen(args)
        if args.command == "bench":
            code, _ = run_bench(args)
            return code
        raise AssertionError(f"unhandled command {args.command}")
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except MismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except _COMPUTE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _emit_report(report: Report, args) -> None:
    text = render_json(report)
    print(text)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


if __name__ == "__main__":
    sys.exit(main())
