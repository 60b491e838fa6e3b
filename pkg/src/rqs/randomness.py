"""Seeded random streams and the primitive draws built on top of them.

Reproducibility contract: a draw depends only on ``(seed, stream_index)``
and on the sequence of calls made on that stream, never on which other
streams exist or in what order they are consumed.  That is what makes
chunked and parallel experiment runs produce identical output.
"""

from __future__ import annotations

import numpy as np


class RngStream:
    """One independent pseudo-random stream out of a seeded family.

    The stream index is folded into the seed material through
    ``numpy.random.SeedSequence``, whose hashing guarantees that nearby
    ``(seed, stream_index)`` pairs yield statistically unrelated streams.
    The underlying bit generator is PCG64.
    """

    __slots__ = ("seed", "stream_index", "gen")

    def __init__(self, seed: int, stream_index: int = 0):
        seed = int(seed)
        stream_index = int(stream_index)
        if seed < 0:
            raise ValueError("seed must be non-negative")
        if stream_index < 0:
            raise ValueError("stream_index must be non-negative")
        self.seed = seed
        self.stream_index = stream_index
        ss = np.random.SeedSequence(entropy=seed, spawn_key=(stream_index,))
        self.gen = np.random.Generator(np.random.PCG64(ss))

    def __repr__(self) -> str:
        return f"RngStream(seed={self.seed}, stream_index={self.stream_index})"


def uniform(stream: RngStream, low: float = 0.0, high: float = 1.0, size=None):
    """Uniform draw(s) on ``[low, high)``."""
    return stream.gen.uniform(low, high, size)


def normal(stream: RngStream, size=None):
    """Standard normal draw(s), mean 0 and variance 1."""
    return stream.gen.normal(0.0, 1.0, size)


def random_phases(stream: RngStream, n: int) -> np.ndarray:
    """``n`` independent phases, uniform on ``[0, 2*pi)``."""
    return stream.gen.uniform(0.0, 2.0 * np.pi, n)


def random_permutation(stream: RngStream, d: int) -> np.ndarray:
    """Uniformly random permutation of ``0..d-1``."""
    return stream.gen.permutation(d)


def unbiased_rdpd(stream: RngStream, d: int) -> np.ndarray:
    """Random discrete probability distribution over ``d`` outcomes.

    Built in two stages.  The stick-breaking stage draws the first entry
    uniformly on [0, 1), the next uniformly on [0, what is left), and so
    on, with the final entry taking the remainder; that alone is heavily
    biased toward the early entries.  A uniformly random permutation then
    removes the positional bias, so every coordinate is exchangeable with
    every other.

    Entries are non-negative by construction and sum to 1 up to a few ulp.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    if d == 1:
        return np.ones(1)
    u = stream.gen.random(d - 1)
    # After j draws the unallocated mass is prod_{k<=j} (1 - u_k), so the
    # whole stick can be cut with one cumulative product.
    shrink = np.cumprod(1.0 - u)
    q = np.empty(d)
    q[0] = u[0]
    q[1 : d - 1] = u[1:] * shrink[:-1]
    q[d - 1] = shrink[-1]
    perm = stream.gen.permutation(d)
    return q[perm]
