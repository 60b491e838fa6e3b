"""Monte-Carlo experiments over the samplers, with file output helpers.

Determinism is the organizing idea.  Pair ``k`` of a run always consumes
the two streams ``(seed, 2k)`` and ``(seed, 2k + 1)``, work is split into
fixed chunks of :data:`CHUNK_PAIRS` pairs, and partial statistics are
merged in chunk order.  Worker count therefore changes wall time only:
the same seed gives byte-identical output files with 1 worker or 8.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ConfigError
from .randomness import RngStream
from .samplers import DEFAULT_MAX_ATTEMPTS, METHODS, sample_density_batch
from .stats import DEFAULT_BINS, RunStats, StatsAccumulator, bloch_vector_qubit

CHUNK_PAIRS = 2048

TABLE1_DIMS = (2, 4, 6, 8, 10, 12, 14, 16)
TABLE1_METHODS = ("opm-sym", "opm-normal", "standard")
TABLE1_MIN_PAIRS = 10_000

GINIBRE_SWEEP_DIMS = (2, 4, 8)
GINIBRE_SWEEP_FACTORS = (1, 2, 4)
BURES_SWEEP_DIMS = (2, 4, 8, 16)


@dataclass
class ExperimentConfig:
    """Validated description of one sampling run.

    ``n_pairs`` counts state pairs for distance experiments and single
    states for cloud sampling.  ``d_prime`` is the tall dimension of the
    rectangular construction and is required by (and only allowed for)
    the ``ginibre`` method.
    """

    method: str
    d: int
    n_pairs: int
    seed: int
    d_prime: int | None = None
    bins: int = DEFAULT_BINS
    threads: int = 1
    max_attempts: int = DEFAULT_MAX_ATTEMPTS

    def __post_init__(self):
        if self.method not in METHODS:
            raise ConfigError(
                f"unknown method {self.method!r}; expected one of {METHODS}"
            )
        if self.d < 1:
            raise ConfigError("d must be at least 1")
        if self.method == "bloch" and self.d < 2:
            raise ConfigError("bloch requires d >= 2")
        if self.n_pairs < 1:
            raise ConfigError("n_pairs must be positive")
        if self.seed < 0:
            raise ConfigError("seed must be non-negative")
        if self.bins < 1:
            raise ConfigError("bins must be positive")
        if self.threads < 1:
            raise ConfigError("threads must be positive")
        if self.max_attempts < 1:
            raise ConfigError("max_attempts must be positive")
        if self.method == "ginibre":
            if self.d_prime is None:
                raise ConfigError("ginibre requires d_prime (--dim-left)")
            if self.d_prime < 1:
                raise ConfigError("d_prime must be at least 1")
        elif self.d_prime is not None:
            raise ConfigError("d_prime only applies to the ginibre method")


@dataclass(frozen=True)
class StatsRow:
    """One output row of a stats table: a (method, dimension) cell."""

    method: str
    d: int
    d_prime: int | None
    n_pairs: int
    mean_hsd: float
    std_hsd: float


def _chunk_ranges(total: int, size: int):
    start = 0
    while start < total:
        count = min(size, total - start)
        yield start, count
        start += count


def _hsd_chunk(args):
    """Distance statistics for pairs [start, start+count); fully self-seeding.

    Module-level so process pools can pickle it.  Returns the raw
    accumulator state (n, mean, m2, counts).
    """
    method, d, d_prime, seed, start, count, bins, max_attempts = args
    streams = []
    for p in range(start, start + count):
        streams.append(RngStream(seed, 2 * p))
        streams.append(RngStream(seed, 2 * p + 1))
    stack = sample_density_batch(method, streams, d, d_prime, max_attempts)
    diff = stack[0::2] - stack[1::2]
    values = np.sqrt(np.sum(np.abs(diff) ** 2, axis=(1, 2)))
    acc = StatsAccumulator(bins)
    acc.add_many(values)
    return acc.n, acc.mean, acc.m2, acc.counts


def _merge_raw(acc: StatsAccumulator, raw) -> None:
    n, mean, m2, counts = raw
    part = StatsAccumulator(acc.bins, acc.lo, acc.hi)
    part.n = n
    part.mean = mean
    part.m2 = m2
    part.counts = np.asarray(counts, dtype=np.int64)
    acc.merge(part)


def run_hsd_experiment(config: ExperimentConfig) -> RunStats:
    """Mean, spread and histogram of the distance between sampled pairs."""
    tasks = [
        (
            config.method,
            config.d,
            config.d_prime,
            config.seed,
            start,
            count,
            config.bins,
            config.max_attempts,
        )
        for start, count in _chunk_ranges(config.n_pairs, CHUNK_PAIRS)
    ]
    acc = StatsAccumulator(config.bins)
    if config.threads > 1:
        with ProcessPoolExecutor(max_workers=config.threads) as pool:
            for raw in pool.map(_hsd_chunk, tasks):
                _merge_raw(acc, raw)
    else:
        for task in tasks:
            _merge_raw(acc, _hsd_chunk(task))
    return acc.snapshot()


def run_bloch_cloud(config: ExperimentConfig) -> np.ndarray:
    """Coordinates of ``n_pairs`` sampled qubit states, one per stream.

    State ``k`` comes from stream ``(seed, k)``.  Only ``d == 2`` makes
    sense here since the output is three coordinates per state.
    """
    if config.d != 2:
        raise ConfigError("cloud sampling requires d == 2")
    points = np.empty((config.n_pairs, 3))
    for start, count in _chunk_ranges(config.n_pairs, 2 * CHUNK_PAIRS):
        streams = [RngStream(config.seed, k) for k in range(start, start + count)]
        stack = sample_density_batch(
            config.method, streams, 2, config.d_prime, config.max_attempts
        )
        for j in range(count):
            points[start + j] = bloch_vector_qubit(stack[j])
    return points


def run_table1(seed: int, pairs: int, threads: int = 1) -> list[StatsRow]:
    """The 24-cell summary table: 8 dimensions x 3 sampling methods.

    Every cell reuses the same seed, so cell ``(d, method)`` is exactly
    ``run_hsd_experiment`` for that method and dimension.  ``pairs`` is
    floored at 10^4 because the table's spreads are meaningless below
    that.
    """
    if pairs < TABLE1_MIN_PAIRS:
        raise ConfigError(f"table runs need at least {TABLE1_MIN_PAIRS} pairs")
    rows = []
    for d in TABLE1_DIMS:
        for method in TABLE1_METHODS:
            cfg = ExperimentConfig(
                method=method, d=d, n_pairs=pairs, seed=seed, threads=threads
            )
            rs = run_hsd_experiment(cfg)
            rows.append(StatsRow(method, d, None, rs.n, rs.mean, rs.std))
    return rows


def run_ginibre_sweep(
    seed: int,
    pairs: int,
    threads: int = 1,
    d_values: Sequence[int] = GINIBRE_SWEEP_DIMS,
    d_prime_factors: Sequence[int] = GINIBRE_SWEEP_FACTORS,
) -> list[StatsRow]:
    """Distance statistics while the tall dimension grows past the state size."""
    rows = []
    for d in d_values:
        for factor in d_prime_factors:
            cfg = ExperimentConfig(
                method="ginibre",
                d=d,
                n_pairs=pairs,
                seed=seed,
                d_prime=factor * d,
                threads=threads,
            )
            rs = run_hsd_experiment(cfg)
            rows.append(StatsRow("ginibre", d, factor * d, rs.n, rs.mean, rs.std))
    return rows


def run_bures_sweep(
    seed: int,
    pairs: int,
    threads: int = 1,
    d_values: Sequence[int] = BURES_SWEEP_DIMS,
) -> list[StatsRow]:
    rows = []
    for d in d_values:
        cfg = ExperimentConfig(
            method="bures", d=d, n_pairs=pairs, seed=seed, threads=threads
        )
        rs = run_hsd_experiment(cfg)
        rows.append(StatsRow("bures", d, None, rs.n, rs.mean, rs.std))
    return rows


# ---------------------------------------------------------------------------
# Output files
# ---------------------------------------------------------------------------
# CSV files use a header row, UTF-8, "\n" line endings and shortest
# round-trip float formatting.  The JSON variants carry the same field
# names.

def _fmt(x: float) -> str:
    return repr(float(x))


def _write_lines(path, lines) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def write_stats_csv(path, rows: Sequence[StatsRow]) -> None:
    lines = ["method,d,d_prime,n_pairs,mean_hsd,std_hsd"]
    for r in rows:
        d_prime = "" if r.d_prime is None else str(r.d_prime)
        lines.append(
            f"{r.method},{r.d},{d_prime},{r.n_pairs},"
            f"{_fmt(r.mean_hsd)},{_fmt(r.std_hsd)}"
        )
    _write_lines(path, lines)


def write_histogram_csv(path, stats: RunStats) -> None:
    lines = ["bin_lower,bin_upper,count"]
    for i in range(len(stats.counts)):
        lines.append(
            f"{_fmt(stats.bin_edges[i])},{_fmt(stats.bin_edges[i + 1])},"
            f"{int(stats.counts[i])}"
        )
    _write_lines(path, lines)


def write_cloud_csv(path, points: np.ndarray) -> None:
    lines = ["x,y,z"]
    for x, y, z in np.asarray(points, dtype=np.float64):
        lines.append(f"{_fmt(x)},{_fmt(y)},{_fmt(z)}")
    _write_lines(path, lines)


def _dump_json(path, payload) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def write_stats_json(path, rows: Sequence[StatsRow]) -> None:
    payload = [
        {
            "method": r.method,
            "d": r.d,
            "d_prime": r.d_prime,
            "n_pairs": r.n_pairs,
            "mean_hsd": r.mean_hsd,
            "std_hsd": r.std_hsd,
        }
        for r in rows
    ]
    _dump_json(path, payload)


def write_histogram_json(path, stats: RunStats) -> None:
    payload = [
        {
            "bin_lower": float(stats.bin_edges[i]),
            "bin_upper": float(stats.bin_edges[i + 1]),
            "count": int(stats.counts[i]),
        }
        for i in range(len(stats.counts))
    ]
    _dump_json(path, payload)


def write_cloud_json(path, points: np.ndarray) -> None:
    payload = [
        {"x": float(x), "y": float(y), "z": float(z)}
        for x, y, z in np.asarray(points, dtype=np.float64)
    ]
    _dump_json(path, payload)
