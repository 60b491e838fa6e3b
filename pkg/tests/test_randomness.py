"""Stream determinism and distributional checks for the randomness layer.

The chi-square critical value below (0.999 quantile, 23 degrees of
freedom) was computed once offline and frozen so the test needs no
stats dependency.
"""

import itertools
import math

import numpy as np
import pytest

from rqs.randomness import (
    RngStream,
    normal,
    random_permutation,
    random_phases,
    unbiased_rdpd,
    uniform,
)

CHI2_CRIT_999_DOF23 = 49.7282324664315


def test_identical_streams_are_bit_identical():
    a = RngStream(seed=12345, stream_index=7)
    b = RngStream(seed=12345, stream_index=7)
    assert np.array_equal(uniform(a, size=100), uniform(b, size=100))
    assert np.array_equal(normal(a, size=100), normal(b, size=100))
    assert np.array_equal(random_phases(a, 50), random_phases(b, 50))
    assert np.array_equal(random_permutation(a, 10), random_permutation(b, 10))
    assert np.array_equal(unbiased_rdpd(a, 6), unbiased_rdpd(b, 6))


def test_distinct_stream_indices_decorrelate():
    a = RngStream(seed=12345, stream_index=0)
    b = RngStream(seed=12345, stream_index=1)
    assert not np.array_equal(uniform(a, size=32), uniform(b, size=32))


def test_stream_rejects_negative_identifiers():
    with pytest.raises(ValueError):
        RngStream(seed=-1, stream_index=0)
    with pytest.raises(ValueError):
        RngStream(seed=0, stream_index=-2)


def test_uniform_respects_bounds():
    st = RngStream(seed=9, stream_index=0)
    vals = uniform(st, low=-1.0, high=1.0, size=10_000)
    assert vals.min() >= -1.0 and vals.max() < 1.0


def test_phases_cover_the_full_circle():
    st = RngStream(seed=10, stream_index=0)
    theta = random_phases(st, 100_000)
    assert theta.min() >= 0.0 and theta.max() < 2.0 * math.pi
    assert abs(theta.mean() - math.pi) <= 0.03
    assert abs(np.cos(theta).mean()) <= 0.01


def test_normal_moments():
    st = RngStream(seed=11, stream_index=0)
    x = normal(st, size=100_000)
    assert abs(x.mean()) <= 0.02
    assert abs(x.var() - 1.0) <= 0.03


def test_permutation_is_a_permutation():
    st = RngStream(seed=12, stream_index=0)
    for n in (1, 2, 5, 9):
        p = random_permutation(st, n)
        assert sorted(p.tolist()) == list(range(n))


def test_permutations_of_four_items_are_uniform():
    # Chi-square over all 24 orderings; threshold is the frozen 0.999
    # quantile so a correct generator fails one run in a thousand.
    st = RngStream(seed=13, stream_index=0)
    draws = 240_000
    index = {perm: k for k, perm in enumerate(itertools.permutations(range(4)))}
    counts = np.zeros(24, dtype=np.int64)
    for _ in range(draws):
        counts[index[tuple(random_permutation(st, 4))]] += 1
    expected = draws / 24.0
    statistic = float(np.sum((counts - expected) ** 2) / expected)
    assert statistic < CHI2_CRIT_999_DOF23


def test_rdpd_degenerate_dimension():
    st = RngStream(seed=14, stream_index=0)
    assert np.array_equal(unbiased_rdpd(st, 1), np.array([1.0]))


@pytest.mark.parametrize("d", list(range(1, 17)))
def test_rdpd_is_a_probability_vector_at_scale(d):
    # Hard invariant: exact simplex membership for every draw.  Full
    # 1e6 draws at the boundary dimensions, 1e5 at the rest to keep the
    # suite inside a sane wall-clock budget.
    st = RngStream(seed=15, stream_index=d)
    draws = 1_000_000 if d in (2, 16) else 100_000
    worst_sum = 0.0
    lowest = 1.0
    for _ in range(draws):
        q = unbiased_rdpd(st, d)
        s = abs(q.sum() - 1.0)
        if s > worst_sum:
            worst_sum = s
        m = q.min()
        if m < lowest:
            lowest = m
    assert worst_sum <= 1e-12
    assert lowest >= 0.0


def test_rdpd_component_means_are_unprivileged():
    st = RngStream(seed=16, stream_index=0)
    total = np.zeros(4)
    draws = 100_000
    for _ in range(draws):
        total += unbiased_rdpd(st, 4)
    means = total / draws
    assert np.all(np.abs(means - 0.25) <= 0.005)
    for i in range(4):
        for j in range(i + 1, 4):
            assert abs(means[i] - means[j]) <= 0.01


def test_rdpd_two_component_marginal():
    st = RngStream(seed=17, stream_index=0)
    draws = 100_000
    first = np.empty(draws)
    for k in range(draws):
        first[k] = unbiased_rdpd(st, 2)[0]
    assert abs(first.mean() - 0.5) <= 0.005
