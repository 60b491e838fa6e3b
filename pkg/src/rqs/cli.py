"""Command-line front end.

Five subcommands, all writing delimited files:

- ``hsd-stats``: pair-distance statistics for one method and dimension
- ``bloch-cloud``: qubit state coordinates for scatter plotting
- ``table1``: the 24-cell method-by-dimension summary table
- ``ginibre-sweep``: statistics while the tall dimension grows
- ``bures-sweep``: statistics across dimensions for the unitary-smeared
  Gram construction

Exit codes: 0 on success, 2 for bad usage or configuration, 3 when a
numerical invariant fails or a rejection sampler gives up.
"""

from __future__ import annotations

import argparse
import sys

from .errors import ConfigError, NumericalFailureError, RejectionExhaustedError
from .experiments import (
    ExperimentConfig,
    StatsRow,
    run_bloch_cloud,
    run_bures_sweep,
    run_ginibre_sweep,
    run_hsd_experiment,
    run_table1,
    write_cloud_csv,
    write_cloud_json,
    write_histogram_csv,
    write_histogram_json,
    write_stats_csv,
    write_stats_json,
)
from .samplers import DEFAULT_MAX_ATTEMPTS, METHODS


def _add_common(sub, *, pairs_default=10_000):
    sub.add_argument("--seed", type=int, default=0, help="base seed (default 0)")
    sub.add_argument(
        "--pairs", type=int, default=pairs_default,
        help=f"number of state pairs (default {pairs_default})",
    )
    sub.add_argument(
        "--threads", type=int, default=1,
        help="worker processes; any value gives identical output",
    )
    sub.add_argument("--out", required=True, help="output file path")
    sub.add_argument(
        "--format", choices=("csv", "json"), default="csv",
        help="output format (default csv)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rqs", description="Random density-matrix sampling experiments."
    )
    subs = parser.add_subparsers(dest="command", required=True)

    hs = subs.add_parser("hsd-stats", help="pair-distance statistics")
    hs.add_argument("--method", required=True, choices=METHODS)
    hs.add_argument("--dim", required=True, type=int, help="state dimension d")
    hs.add_argument(
        "--dim-left", type=int, default=None,
        help="tall dimension d' of the rectangular construction (ginibre only)",
    )
    hs.add_argument("--bins", type=int, default=100, help="histogram bins")
    hs.add_argument(
        "--hist-out", default=None, help="also write the distance histogram here"
    )
    hs.add_argument(
        "--max-attempts", type=int, default=DEFAULT_MAX_ATTEMPTS,
        help="rejection budget per state (bloch only)",
    )
    _add_common(hs, pairs_default=1_000)
    hs.set_defaults(func=_cmd_hsd_stats)

    bc = subs.add_parser("bloch-cloud", help="qubit coordinate cloud")
    bc.add_argument("--method", required=True, choices=METHODS)
    bc.add_argument("--dim", type=int, default=2, help="must be 2")
    bc.add_argument(
        "--dim-left", type=int, default=None, help="d' for the ginibre method"
    )
    bc.add_argument(
        "--states", type=int, default=1_000, help="number of states to sample"
    )
    bc.add_argument("--seed", type=int, default=0)
    bc.add_argument(
        "--max-attempts", type=int, default=DEFAULT_MAX_ATTEMPTS,
        help="rejection budget per state (bloch only)",
    )
    bc.add_argument("--out", required=True)
    bc.add_argument("--format", choices=("csv", "json"), default="csv")
    bc.set_defaults(func=_cmd_bloch_cloud)

    t1 = subs.add_parser("table1", help="method-by-dimension summary table")
    _add_common(t1)
    t1.set_defaults(func=_cmd_table1)

    gs = subs.add_parser("ginibre-sweep", help="tall-dimension sweep")
    _add_common(gs)
    gs.set_defaults(func=_cmd_ginibre_sweep)

    bs = subs.add_parser("bures-sweep", help="dimension sweep")
    _add_common(bs)
    bs.set_defaults(func=_cmd_bures_sweep)

    return parser


def _cmd_hsd_stats(args) -> int:
    cfg = ExperimentConfig(
        method=args.method,
        d=args.dim,
        n_pairs=args.pairs,
        seed=args.seed,
        d_prime=args.dim_left,
        bins=args.bins,
        threads=args.threads,
        max_attempts=args.max_attempts,
    )
    rs = run_hsd_experiment(cfg)
    row = StatsRow(cfg.method, cfg.d, cfg.d_prime, rs.n, rs.mean, rs.std)
    if args.format == "csv":
        write_stats_csv(args.out, [row])
    else:
        write_stats_json(args.out, [row])
    if args.hist_out:
        if args.format == "csv":
            write_histogram_csv(args.hist_out, rs)
        else:
            write_histogram_json(args.hist_out, rs)
    print(f"{args.out}: n={rs.n} mean_hsd={rs.mean:.6f} std_hsd={rs.std:.6f}")
    return 0


def _cmd_bloch_cloud(args) -> int:
    cfg = ExperimentConfig(
        method=args.method,
        d=args.dim,
        n_pairs=args.states,
        seed=args.seed,
        d_prime=args.dim_left,
        max_attempts=args.max_attempts,
    )
    points = run_bloch_cloud(cfg)
    if args.format == "csv":
        write_cloud_csv(args.out, points)
    else:
        write_cloud_json(args.out, points)
    print(f"{args.out}: {len(points)} states")
    return 0


def _cmd_table1(args) -> int:
    rows = run_table1(args.seed, args.pairs, args.threads)
    _write_rows(args, rows)
    return 0


def _cmd_ginibre_sweep(args) -> int:
    rows = run_ginibre_sweep(args.seed, args.pairs, args.threads)
    _write_rows(args, rows)
    return 0


def _cmd_bures_sweep(args) -> int:
    rows = run_bures_sweep(args.seed, args.pairs, args.threads)
    _write_rows(args, rows)
    return 0


def _write_rows(args, rows) -> None:
    if args.format == "csv":
        write_stats_csv(args.out, rows)
    else:
        write_stats_json(args.out, rows)
    print(f"{args.out}: {len(rows)} rows")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RejectionExhaustedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NumericalFailureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
