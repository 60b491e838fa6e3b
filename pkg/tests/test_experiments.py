"""Experiment drivers: config validation, determinism, writers."""

import json

import numpy as np
import pytest

from rqs.errors import ConfigError
from rqs.experiments import (
    CHUNK_PAIRS,
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
    write_stats_csv,
    write_stats_json,
)
from rqs.randomness import RngStream
from rqs.samplers import sample_density_batch
from rqs.stats import accumulate_stats


def _cfg(**kw):
    base = dict(method="ginibre", d=2, n_pairs=10, seed=1, d_prime=2)
    base.update(kw)
    return ExperimentConfig(**base)


# ---------------------------------------------------------- configuration


def test_config_rejects_unknown_method():
    with pytest.raises(ConfigError):
        _cfg(method="teleport")


def test_config_rejects_bad_sizes():
    with pytest.raises(ConfigError):
        _cfg(d=0)
    with pytest.raises(ConfigError):
        _cfg(n_pairs=0)
    with pytest.raises(ConfigError):
        _cfg(seed=-1)
    with pytest.raises(ConfigError):
        _cfg(bins=0)
    with pytest.raises(ConfigError):
        _cfg(threads=0)
    with pytest.raises(ConfigError):
        _cfg(max_attempts=0)


def test_config_ties_tall_dimension_to_its_method():
    with pytest.raises(ConfigError):
        ExperimentConfig(method="ginibre", d=2, n_pairs=10, seed=1)
    with pytest.raises(ConfigError):
        ExperimentConfig(method="standard", d=2, n_pairs=10, seed=1, d_prime=4)


def test_config_bounds_for_ball_rejection():
    # d >= 2 is a config matter; exhaustion at larger d is a runtime one.
    ExperimentConfig(method="bloch", d=4, n_pairs=10, seed=1)
    with pytest.raises(ConfigError):
        ExperimentConfig(method="bloch", d=1, n_pairs=10, seed=1)


# ------------------------------------------------------------ experiments


def test_single_pair_run():
    stats = run_hsd_experiment(_cfg(n_pairs=1))
    assert stats.n == 1
    assert stats.std == 0.0
    assert 0.0 < stats.mean < np.sqrt(2.0)


def test_pair_streams_are_addressable():
    # Pair k must consume exactly streams (seed, 2k) and (seed, 2k+1),
    # which makes any prefix of a run reproducible in isolation.
    cfg = _cfg(method="standard", d=3, n_pairs=3, seed=77, d_prime=None)
    got = run_hsd_experiment(cfg)
    streams = [RngStream(seed=77, stream_index=k) for k in range(6)]
    rhos = sample_density_batch("standard", streams, 3)
    diffs = rhos[0::2] - rhos[1::2]
    vals = np.sqrt(np.sum(np.abs(diffs) ** 2, axis=(1, 2)))
    want = accumulate_stats(vals, bins=cfg.bins)
    assert got.n == want.n == 3
    assert got.mean == pytest.approx(want.mean, abs=1e-15)
    assert got.std == pytest.approx(want.std, abs=1e-15)


def test_thread_count_does_not_change_results():
    pairs = CHUNK_PAIRS + 321  # force an uneven chunk split
    cfg1 = _cfg(method="opm-sym", d=3, n_pairs=pairs, seed=5, d_prime=None, threads=1)
    cfg3 = _cfg(method="opm-sym", d=3, n_pairs=pairs, seed=5, d_prime=None, threads=3)
    a = run_hsd_experiment(cfg1)
    b = run_hsd_experiment(cfg3)
    assert a.n == b.n
    assert a.mean == b.mean
    assert a.std == b.std
    assert np.array_equal(a.counts, b.counts)


def test_cloud_run_shape_and_radius():
    cfg = _cfg(method="opm-sym", d=2, n_pairs=500, seed=6, d_prime=None)
    cloud = run_bloch_cloud(cfg)
    assert cloud.shape == (500, 3)
    radii = np.sum(cloud**2, axis=1)
    assert float(radii.max()) <= 1.0 + 1e-9


def test_cloud_requires_a_qubit():
    with pytest.raises(ConfigError):
        run_bloch_cloud(_cfg(method="opm-sym", d=3, n_pairs=10, d_prime=None))


def test_summary_table_enforces_pair_floor():
    with pytest.raises(ConfigError):
        run_table1(seed=1, pairs=100)


def test_dimension_sweeps_produce_expected_rows():
    rows = run_ginibre_sweep(seed=2, pairs=1500, d_values=(2,), d_prime_factors=(1, 2))
    assert [(r.d, r.d_prime) for r in rows] == [(2, 2), (2, 4)]
    for r in rows:
        assert r.n_pairs == 1500
        assert 0.0 < r.mean_hsd < np.sqrt(2.0)
        assert r.std_hsd >= 0.0

    rows = run_bures_sweep(seed=3, pairs=800, d_values=(2, 4))
    assert [r.d for r in rows] == [2, 4]
    assert all(r.method == "bures" and r.d_prime is None for r in rows)


def test_square_shape_matches_normal_domain_statistics():
    # The tall construction at d' = d draws the same matrices as the
    # normal-domain parametrization, so their run statistics must agree.
    pairs = 20_000
    g = run_hsd_experiment(_cfg(method="ginibre", d=2, d_prime=2, n_pairs=pairs, seed=9))
    n = run_hsd_experiment(_cfg(method="opm-normal", d=2, d_prime=None, n_pairs=pairs, seed=10))
    assert abs(g.mean - n.mean) <= 0.02
    assert abs(g.std - n.std) <= 0.02


# ----------------------------------------------------------------- output


def test_stats_csv_layout(tmp_path):
    rows = [
        StatsRow(method="standard", d=2, d_prime=None, n_pairs=7, mean_hsd=0.5, std_hsd=0.25),
        StatsRow(method="ginibre", d=2, d_prime=8, n_pairs=7, mean_hsd=1.0 / 3.0, std_hsd=0.1),
    ]
    path = tmp_path / "rows.csv"
    write_stats_csv(path, rows)
    text = path.read_text(encoding="utf-8")
    lines = text.splitlines()
    assert lines[0] == "method,d,d_prime,n_pairs,mean_hsd,std_hsd"
    assert lines[1] == "standard,2,,7,0.5,0.25"
    assert lines[2].startswith("ginibre,2,8,7,")
    assert text.endswith("\n")
    # full double precision round-trip
    assert float(lines[2].split(",")[4]) == 1.0 / 3.0


def test_histogram_csv_layout(tmp_path):
    stats = accumulate_stats([0.1, 0.2, 1.4, 5.0], bins=100)
    path = tmp_path / "hist.csv"
    write_histogram_csv(path, stats)
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "bin_lower,bin_upper,count"
    assert len(lines) == 101
    total = 0
    prev_upper = None
    for line in lines[1:]:
        lower, upper, count = line.split(",")
        if prev_upper is not None:
            assert lower == prev_upper
        prev_upper = upper
        total += int(count)
    assert total == stats.n


def test_cloud_csv_layout(tmp_path):
    pts = np.array([[0.1, -0.2, 0.3], [0.0, 0.5, -0.5]])
    path = tmp_path / "cloud.csv"
    write_cloud_csv(path, pts)
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "x,y,z"
    assert lines[1] == "0.1,-0.2,0.3"
    assert len(lines) == 3


def test_json_writers_parse_back(tmp_path):
    rows = [StatsRow(method="bures", d=4, d_prime=None, n_pairs=3, mean_hsd=0.4, std_hsd=0.2)]
    spath = tmp_path / "rows.json"
    write_stats_json(spath, rows)
    payload = json.loads(spath.read_text(encoding="utf-8"))
    assert payload == [
        {
            "method": "bures",
            "d": 4,
            "d_prime": None,
            "n_pairs": 3,
            "mean_hsd": 0.4,
            "std_hsd": 0.2,
        }
    ]
    cpath = tmp_path / "cloud.json"
    write_cloud_json(cpath, np.array([[1.0, 0.0, 0.0]]))
    assert json.loads(cpath.read_text(encoding="utf-8")) == [{"x": 1.0, "y": 0.0, "z": 0.0}]
