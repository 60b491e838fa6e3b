"""Distance between states and streaming summary statistics.

The Hilbert-Schmidt distance between two density matrices is bounded by
``sqrt(2)``, attained by orthogonal pure states, so histograms default to
100 equal bins over ``[0, sqrt(2)]``.  ``StatsAccumulator`` keeps a
single-pass mean/variance (population convention) plus that histogram,
and merges associatively so chunked or parallel runs can combine partial
results in any grouping without changing the answer beyond round-off.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericalFailureError
from .linalg import hermitian_eigenvalues, hs_norm
from .samplers import gellmann_basis

HSD_MAX = float(np.sqrt(2.0))
DEFAULT_BINS = 100


def hsd(rho: np.ndarray, zeta: np.ndarray) -> float:
    """Hilbert-Schmidt distance, summed directly over matrix entries."""
    return hs_norm(rho - zeta)


def hsd_via_eigen(rho: np.ndarray, zeta: np.ndarray) -> float:
    """Hilbert-Schmidt distance through the spectrum of the difference.

    Deliberately a separate computational route from :func:`hsd` (it goes
    through the Hermitian eigensolver), so the two can cross-check each
    other.
    """
    lam = hermitian_eigenvalues(rho - zeta)
    return float(np.sqrt(np.sum(lam * lam)))


def bloch_vector_qubit(rho: np.ndarray) -> np.ndarray:
    """Coordinates ``(x, y, z)`` of a qubit state: ``Tr(rho sigma_j)``.

    Raises :class:`~rqs.errors.NumericalFailureError` if any coordinate
    carries an imaginary residue above 1e-10, which signals that the
    input was not Hermitian to begin with.
    """
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.shape != (2, 2):
        raise ValueError("bloch_vector_qubit expects a 2x2 matrix")
    sigma = gellmann_basis(2).matrices
    coords = np.einsum("kij,ji->k", sigma, rho)
    residue = float(np.max(np.abs(coords.imag)))
    if residue > 1e-10:
        raise NumericalFailureError(
            f"coordinate imaginary residue {residue:.3e}; input not Hermitian"
        )
    return coords.real.copy()


@dataclass(frozen=True)
class RunStats:
    """Frozen summary of one accumulation run."""

    n: int
    mean: float
    std: float
    bin_edges: np.ndarray
    counts: np.ndarray


class StatsAccumulator:
    """Single-pass mean, population standard deviation and histogram.

    Values land in ``bins`` equal-width bins over ``[lo, hi]``; anything
    outside the range is clamped into the nearest edge bin so the counts
    always sum to ``n``.  ``merge`` combines two accumulators exactly as
    if their data had been seen by one; the formulas are associative up
    to round-off.
    """

    def __init__(self, bins: int = DEFAULT_BINS, lo: float = 0.0, hi: float = HSD_MAX):
        if bins < 1:
            raise ValueError("bins must be positive")
        if not hi > lo:
            raise ValueError("hi must exceed lo")
        self.lo = float(lo)
        self.hi = float(hi)
        self.bins = int(bins)
        self.n = 0
        self.mean = 0.0
        self.m2 = 0.0
        self.counts = np.zeros(self.bins, dtype=np.int64)

    def add(self, x: float) -> None:
        x = float(x)
        self.n += 1
        delta = x - self.mean
        self.mean += delta / self.n
        self.m2 += delta * (x - self.mean)
        self.counts[self._bin_index(x)] += 1

    def add_many(self, values) -> None:
        values = np.asarray(values, dtype=np.float64).ravel()
        if values.size == 0:
            return
        other = StatsAccumulator(self.bins, self.lo, self.hi)
        other.n = int(values.size)
        other.mean = float(values.mean())
        other.m2 = float(np.sum((values - other.mean) ** 2))
        idx = ((values - self.lo) * (self.bins / (self.hi - self.lo))).astype(np.int64)
        np.clip(idx, 0, self.bins - 1, out=idx)
        other.counts = np.bincount(idx, minlength=self.bins).astype(np.int64)
        self.merge(other)

    def merge(self, other: "StatsAccumulator") -> "StatsAccumulator":
        if (other.bins, other.lo, other.hi) != (self.bins, self.lo, self.hi):
            raise ValueError("cannot merge accumulators with different binning")
        n = self.n + other.n
        if n == 0:
            return self
        delta = other.mean - self.mean
        self.mean = (self.n * self.mean + other.n * other.mean) / n
        self.m2 = self.m2 + other.m2 + delta * delta * self.n * other.n / n
        self.n = n
        self.counts += other.counts
        return self

    def _bin_index(self, x: float) -> int:
        raw = int((x - self.lo) * self.bins / (self.hi - self.lo))
        return min(max(raw, 0), self.bins - 1)

    def snapshot(self) -> RunStats:
        std = float(np.sqrt(self.m2 / self.n)) if self.n else 0.0
        edges = np.linspace(self.lo, self.hi, self.bins + 1)
        return RunStats(
            n=self.n,
            mean=float(self.mean),
            std=std,
            bin_edges=edges,
            counts=self.counts.copy(),
        )


def accumulate_stats(
    values, bins: int = DEFAULT_BINS, lo: float = 0.0, hi: float = HSD_MAX
) -> RunStats:
    """One-shot accumulation of an array of values into a :class:`RunStats`."""
    acc = StatsAccumulator(bins, lo, hi)
    acc.add_many(values)
    if acc.n == 0:
        raise ValueError("cannot summarize an empty value stream")
    return acc.snapshot()
