"""Samplers for random pure states and random density matrices.

Eight constructions are exposed, named by how they draw:

``random_pure_state``
    Probability simplex point plus independent phases.
``standard_density``
    Random spectrum conjugated by a uniformly random unitary.
``bloch_density``
    Rejection sampling of generalized Bloch coordinates inside their
    bounding box, keeping only positive semidefinite results.
``opm_density``
    Gram matrix of a square matrix with independently drawn entries
    (three entry domains), normalized to unit trace.
``ginibre_density``
    Gram matrix of a rectangular complex-normal matrix.
``bures_density``
    Gram matrix of ``(I + U) A`` with ``A`` complex-normal and ``U``
    a uniformly random unitary.

Every sampler consumes draws from an :class:`~rqs.randomness.RngStream`
in a fixed, documented order, so a given ``(seed, stream_index)`` always
produces the same state.  ``sample_density_batch`` reproduces the single
calls bit for bit while amortizing the unitary composition across a
whole batch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import NumericalFailureError, RejectionExhaustedError
from .linalg import adjoint, validate_prob_vector
from .randomness import RngStream, normal, random_phases, unbiased_rdpd, uniform

METHODS = (
    "pure",
    "standard",
    "bloch",
    "opm-unit",
    "opm-sym",
    "opm-normal",
    "ginibre",
    "bures",
)

_OPM_DOMAIN_FOR_METHOD = {
    "opm-unit": "unit",
    "opm-sym": "symmetric",
    "opm-normal": "normal",
}

DEFAULT_MAX_ATTEMPTS = 1_000_000


# ---------------------------------------------------------------------------
# Uniformly random unitaries
# ---------------------------------------------------------------------------

def _hurwitz_params(stream: RngStream, d: int):
    """Draw the angle set for one random unitary.

    Draw order is part of the reproducibility contract: one global phase,
    then all radial variables, then all diagonal phases, then the extra
    phases (one per composite rotation layer).
    """
    m = d * (d - 1) // 2
    alpha = random_phases(stream, 1)[0]
    xi = uniform(stream, size=m)
    psi = random_phases(stream, m)
    chi = random_phases(stream, d - 1)
    return alpha, xi, psi, chi


def _compose_unitary(alpha, xi, psi, chi, d: int) -> np.ndarray:
    """Build unitaries from drawn angles; leading axes of ``alpha`` batch.

    The matrix is assembled as a product of two-level rotations, layer
    by layer.  Layer ``k`` couples column ``k`` (0-based) to columns
    ``k-1, ..., 0`` in that order, and the rotation touching column 0
    carries the layer's extra phase.  Layers are composed from the last
    down to the first: the outermost layer alone carries the final basis
    vector to a uniformly random point on the sphere (the radial law
    ``cos(phi) = xi**(1/(2m))`` for a rotation with column gap ``m``
    makes the layer perform exact stick-breaking of a flat simplex
    point), and because that layer's ``2d - 1`` angles parametrize the
    sphere bijectively, the remaining layers sweep the stabilizer coset
    with the group's invariant measure by induction.  The global phase
    is applied at the very end.

    Only elementwise operations and column updates are used, never a
    matrix product, so composing a batch of ``B`` unitaries at once gives
    bit-identical results to composing each one alone.
    """
    alpha = np.asarray(alpha, dtype=np.float64)
    batch = alpha.shape
    xi = np.asarray(xi, dtype=np.float64).reshape(batch + (-1,))
    psi = np.asarray(psi, dtype=np.float64).reshape(batch + (-1,))
    chi = np.asarray(chi, dtype=np.float64).reshape(batch + (-1,))

    u = np.zeros(batch + (d, d), dtype=np.complex128)
    diag = np.arange(d)
    u[..., diag, diag] = 1.0

    t = 0
    for k in range(d - 1, 0, -1):
        for i in range(k, 0, -1):
            c = xi[..., t] ** (1.0 / (2.0 * (k - i + 1)))
            s = np.sqrt(1.0 - c * c)
            a = c * np.exp(1j * psi[..., t])
            if i == 1:
                b = s * np.exp(1j * chi[..., k - 1])
            else:
                b = s + 0j
            col_i = u[..., :, i - 1].copy()
            col_j = u[..., :, k]
            u[..., :, i - 1] = col_i * a[..., None] - col_j * np.conjugate(b)[..., None]
            u[..., :, k] = col_i * b[..., None] + col_j * np.conjugate(a)[..., None]
            t += 1

    return u * np.exp(1j * alpha)[..., None, None]


def hurwitz_unitary(stream: RngStream, d: int) -> np.ndarray:
    """One ``d x d`` unitary distributed by the invariant group measure."""
    if d < 1:
        raise ValueError("d must be at least 1")
    alpha, xi, psi, chi = _hurwitz_params(stream, d)
    return _compose_unitary(alpha, xi, psi, chi, d)


# ---------------------------------------------------------------------------
# Pure states and the spectral construction
# ---------------------------------------------------------------------------

def random_pure_state(stream: RngStream, d: int) -> np.ndarray:
    """Random unit vector: amplitudes from a random distribution, phases free.

    Draw order: the probability vector, then ``d`` phases.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    p = unbiased_rdpd(stream, d)
    theta = random_phases(stream, d)
    return np.sqrt(p) * np.exp(1j * theta)


def _spectral_assemble(u: np.ndarray, spectrum: np.ndarray) -> np.ndarray:
    rho = (u * spectrum) @ adjoint(u)
    return 0.5 * (rho + adjoint(rho))


def standard_density(stream: RngStream, d: int, *, spectrum=None) -> np.ndarray:
    """Density matrix with random spectrum and random eigenbasis.

    Draw order: unitary angles, then the spectrum.  ``spectrum`` may be
    supplied to pin the eigenvalues while keeping the basis random; it
    must be a probability vector.
    """
    alpha, xi, psi, chi = _hurwitz_params(stream, d)
    if spectrum is None:
        spectrum = unbiased_rdpd(stream, d)
    else:
        spectrum = np.asarray(spectrum, dtype=np.float64)
        if spectrum.shape != (d,):
            raise ValueError(f"spectrum must have shape ({d},)")
        validate_prob_vector(spectrum)
    u = _compose_unitary(alpha, xi, psi, chi, d)
    return _spectral_assemble(u, spectrum)


# ---------------------------------------------------------------------------
# Generalized Bloch coordinates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GellMannBasis:
    """Traceless Hermitian generators plus per-coordinate bounds.

    ``matrices`` holds the ``d**2 - 1`` generators, ordered symmetric
    family, then antisymmetric, then diagonal; pairs within the first two
    families are enumerated lexicographically.  They satisfy
    ``Tr(G_j G_k) = 2 delta_jk``.  ``lo``/``hi`` bound the coordinates
    ``gamma_j = Tr(rho G_j) / 2`` over all density matrices, so the box
    they span is the tightest axis-aligned box around the state body in
    the expansion ``rho = I/d + sum_j gamma_j G_j``.
    """

    d: int
    matrices: np.ndarray
    lo: np.ndarray
    hi: np.ndarray


@lru_cache(maxsize=None)
def gellmann_basis(d: int) -> GellMannBasis:
    if d < 2:
        raise ValueError("d must be at least 2")
    n = d * d - 1
    mats = np.zeros((n, d, d), dtype=np.complex128)
    lo = np.empty(n)
    hi = np.empty(n)
    t = 0
    for j in range(d):
        for k in range(j + 1, d):
            mats[t, j, k] = 1.0
            mats[t, k, j] = 1.0
            lo[t], hi[t] = -0.5, 0.5
            t += 1
    for j in range(d):
        for k in range(j + 1, d):
            mats[t, j, k] = -1.0j
            mats[t, k, j] = 1.0j
            lo[t], hi[t] = -0.5, 0.5
            t += 1
    for l in range(1, d):
        scale = math.sqrt(2.0 / (l * (l + 1)))
        for m in range(l):
            mats[t, m, m] = scale
        mats[t, l, l] = -l * scale
        # Extremes of Tr(rho G)/2: all weight on the negative diagonal
        # entry, or spread over the positive ones.
        lo[t] = -math.sqrt(l / (2.0 * (l + 1)))
        hi[t] = 1.0 / math.sqrt(2.0 * l * (l + 1))
        t += 1
    for arr in (mats, lo, hi):
        arr.flags.writeable = False
    return GellMannBasis(d=d, matrices=mats, lo=lo, hi=hi)


def bloch_density(
    stream: RngStream, d: int, max_attempts: int = DEFAULT_MAX_ATTEMPTS
):
    """Rejection-sample coordinates in the Bloch box until the matrix is valid.

    Each attempt draws all ``d**2 - 1`` coordinates uniformly inside
    their exact bounds and accepts when the reconstructed matrix has no
    negative eigenvalue.  Returns ``(rho, attempts)``.  The acceptance
    probability collapses rapidly with ``d`` (already around half a
    percent at ``d = 3``), which is the point of measuring it; callers
    that need larger dimensions should expect
    :class:`~rqs.errors.RejectionExhaustedError`.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    if max_attempts < 1:
        raise ValueError("max_attempts must be positive")
    basis = gellmann_basis(d)
    center = np.eye(d, dtype=np.complex128) / d
    span = basis.hi - basis.lo
    n = basis.matrices.shape[0]
    for attempt in range(1, max_attempts + 1):
        gamma = basis.lo + stream.gen.random(n) * span
        rho = center + np.tensordot(gamma, basis.matrices, axes=1)
        rho = 0.5 * (rho + adjoint(rho))
        if float(np.linalg.eigvalsh(rho)[0]) >= 0.0:
            return rho, attempt
    raise RejectionExhaustedError(max_attempts)


# ---------------------------------------------------------------------------
# Gram-matrix constructions
# ---------------------------------------------------------------------------

def _gram_normalize(a: np.ndarray) -> np.ndarray:
    """``a^dagger a`` scaled to unit trace (trace = squared entry norm of a)."""
    gram = adjoint(a) @ a
    gram = 0.5 * (gram + adjoint(gram))
    tr = float(np.trace(gram).real)
    if not np.isfinite(tr) or tr <= 0.0:
        raise NumericalFailureError(f"gram matrix trace {tr!r} is unusable")
    return gram / tr


_OPM_DOMAINS = ("unit", "symmetric", "normal")


def opm_density(stream: RngStream, d: int, domain: str, *, matrix=None) -> np.ndarray:
    """Unit-trace Gram matrix of a freely parametrized square matrix.

    The ``2 * d**2`` real parameters fill the real parts and then the
    imaginary parts of a ``d x d`` matrix ``A``; the state is
    ``A^dagger A`` divided by its trace.  ``domain`` selects where the
    parameters live: ``"unit"`` for [0, 1), ``"symmetric"`` for [-1, 1),
    ``"normal"`` for standard normal.  A ``matrix`` may be passed to
    bypass the draw and normalize a given ``A`` instead.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    if domain not in _OPM_DOMAINS:
        raise ValueError(f"domain must be one of {_OPM_DOMAINS}, got {domain!r}")
    if matrix is None:
        if domain == "unit":
            parts = uniform(stream, 0.0, 1.0, (2, d, d))
        elif domain == "symmetric":
            parts = uniform(stream, -1.0, 1.0, (2, d, d))
        else:
            parts = normal(stream, (2, d, d))
        matrix = parts[0] + 1j * parts[1]
    else:
        matrix = np.asarray(matrix, dtype=np.complex128)
        if matrix.shape != (d, d):
            raise ValueError(f"matrix must have shape ({d}, {d})")
    return _gram_normalize(matrix)


def ginibre_density(stream: RngStream, d_prime: int, d: int) -> np.ndarray:
    """Unit-trace Gram matrix of a ``d_prime x d`` complex-normal matrix.

    Larger ``d_prime`` concentrates the output toward the maximally mixed
    state; ``d_prime < d`` gives rank-deficient states.
    """
    if d < 1 or d_prime < 1:
        raise ValueError("dimensions must be at least 1")
    parts = normal(stream, (2, d_prime, d))
    return _gram_normalize(parts[0] + 1j * parts[1])


def _bures_assemble(u: np.ndarray, a: np.ndarray) -> np.ndarray:
    c = (np.eye(u.shape[-1]) + u) @ a
    return _gram_normalize(adjoint(c))


def bures_density(stream: RngStream, d: int) -> np.ndarray:
    """State ``(I + U) A A^dagger (I + U^dagger)``, trace-normalized.

    ``A`` is complex-normal and ``U`` a random unitary.  Draw order:
    the entries of ``A``, then the unitary angles.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    parts = normal(stream, (2, d, d))
    a = parts[0] + 1j * parts[1]
    alpha, xi, psi, chi = _hurwitz_params(stream, d)
    u = _compose_unitary(alpha, xi, psi, chi, d)
    return _bures_assemble(u, a)


# ---------------------------------------------------------------------------
# Batched driver
# ---------------------------------------------------------------------------

def sample_density_batch(
    method: str,
    streams,
    d: int,
    d_prime: int | None = None,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
) -> np.ndarray:
    """Sample one density matrix per stream; returns ``(len(streams), d, d)``.

    Output element ``k`` is bit-identical to calling the corresponding
    single-state sampler on ``streams[k]``.  For the unitary-based
    methods the angle draws are gathered per stream and the rotations are
    composed for the whole batch at once, which is where the speedup
    comes from.
    """
    streams = list(streams)
    n = len(streams)
    out = np.empty((n, d, d), dtype=np.complex128)

    if method == "standard":
        params = []
        spectra = []
        for st in streams:
            params.append(_hurwitz_params(st, d))
            spectra.append(unbiased_rdpd(st, d))
        us = _compose_batch(params, d)
        for k in range(n):
            out[k] = _spectral_assemble(us[k], spectra[k])
    elif method == "bures":
        mats = []
        params = []
        for st in streams:
            parts = normal(st, (2, d, d))
            mats.append(parts[0] + 1j * parts[1])
            params.append(_hurwitz_params(st, d))
        us = _compose_batch(params, d)
        for k in range(n):
            out[k] = _bures_assemble(us[k], mats[k])
    elif method == "pure":
        for k, st in enumerate(streams):
            psi = random_pure_state(st, d)
            out[k] = np.outer(psi, np.conjugate(psi))
    elif method == "bloch":
        for k, st in enumerate(streams):
            out[k] = bloch_density(st, d, max_attempts)[0]
    elif method in _OPM_DOMAIN_FOR_METHOD:
        domain = _OPM_DOMAIN_FOR_METHOD[method]
        for k, st in enumerate(streams):
            out[k] = opm_density(st, d, domain)
    elif method == "ginibre":
        if d_prime is None:
            raise ValueError("ginibre requires d_prime")
        for k, st in enumerate(streams):
            out[k] = ginibre_density(st, d_prime, d)
    else:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    return out


def _compose_batch(params, d: int) -> np.ndarray:
    alphas = np.array([p[0] for p in params])
    xis = np.array([p[1] for p in params])
    psis = np.array([p[2] for p in params])
    chis = np.array([p[3] for p in params])
    return _compose_unitary(alphas, xis, psis, chis, d)
