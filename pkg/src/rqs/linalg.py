"""Small complex linear-algebra layer used by every sampler.

All routines operate on ``numpy`` arrays with ``complex128`` entries and
are deliberately thin: the value of this module is the tolerance policy,
not the arithmetic.  Eigenvalues of Hermitian inputs are obtained from
LAPACK via :func:`numpy.linalg.eigvalsh` after an explicit hermiticity
check and symmetrization, so callers can rely on real, ascending output.
"""

from __future__ import annotations

import numpy as np

from .errors import NumericalFailureError

# Tolerance a matrix must meet before we hand it to the Hermitian
# eigensolver.  Looser than DENSITY_HERMITICITY_TOL on purpose: the
# eigensolver is also used on accumulated products that carry more
# round-off than a freshly built density matrix.
EIGEN_HERMITICITY_TOL = 1e-10

# Invariants every density matrix we produce must satisfy.
DENSITY_HERMITICITY_TOL = 1e-12
DENSITY_TRACE_TOL = 1e-12
DENSITY_MIN_EIG_FLOOR = -1e-10

STATE_NORM_TOL = 1e-12
PROB_SUM_TOL = 1e-12
PROB_FLOOR = -1e-12


def multiply(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product ``a @ b``."""
    return np.matmul(a, b)


def adjoint(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose, acting on the last two axes."""
    return np.conjugate(np.swapaxes(a, -1, -2))


def hs_norm(a: np.ndarray) -> float:
    """Hilbert-Schmidt (Frobenius) norm ``sqrt(sum |a_ij|^2)``."""
    return float(np.sqrt(np.sum(np.abs(a) ** 2)))


def hermiticity_defect(a: np.ndarray) -> float:
    """Largest entry of ``|a - a^dagger|``; zero for exactly Hermitian input."""
    return float(np.max(np.abs(a - adjoint(a)))) if a.size else 0.0


def hermitian_eigenvalues(a: np.ndarray) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, ascending.

    The input is checked against ``EIGEN_HERMITICITY_TOL`` and then
    symmetrized as ``(a + a^dagger)/2`` so that round-off below the
    tolerance cannot leak complex parts into the spectrum.

    Raises
    ------
    NumericalFailureError
        If the hermiticity defect exceeds the tolerance.
    """
    a = np.asarray(a, dtype=np.complex128)
    defect = hermiticity_defect(a)
    if defect > EIGEN_HERMITICITY_TOL:
        raise NumericalFailureError(
            f"matrix is not Hermitian: max |a - a^dagger| = {defect:.3e}"
        )
    return np.linalg.eigvalsh(0.5 * (a + adjoint(a)))


def min_eigenvalue(a: np.ndarray) -> float:
    """Smallest eigenvalue of a Hermitian matrix."""
    return float(hermitian_eigenvalues(a)[..., 0])


def validate_state_vector(psi: np.ndarray) -> None:
    """Raise unless ``psi`` is a unit vector."""
    norm = float(np.linalg.norm(psi))
    if abs(norm - 1.0) > STATE_NORM_TOL:
        raise NumericalFailureError(f"state vector norm {norm!r} is not 1")


def validate_prob_vector(p: np.ndarray) -> None:
    """Raise unless ``p`` is a discrete probability distribution."""
    p = np.asarray(p, dtype=np.float64)
    low = float(p.min()) if p.size else 0.0
    if low < PROB_FLOOR:
        raise NumericalFailureError(f"probability entry {low!r} is negative")
    total = float(p.sum())
    if abs(total - 1.0) > PROB_SUM_TOL:
        raise NumericalFailureError(f"probabilities sum to {total!r}, not 1")


def validate_density_matrix(rho: np.ndarray) -> None:
    """Raise unless ``rho`` is Hermitian, unit-trace and positive semidefinite.

    Hermiticity and trace are held to 1e-12; the smallest eigenvalue may
    dip to -1e-10 to allow for round-off in the factorizations that
    produce these matrices.
    """
    defect = hermiticity_defect(rho)
    if defect > DENSITY_HERMITICITY_TOL:
        raise NumericalFailureError(
            f"density matrix hermiticity defect {defect:.3e} exceeds tolerance"
        )
    trace = complex(np.trace(rho))
    if abs(trace - 1.0) > DENSITY_TRACE_TOL:
        raise NumericalFailureError(f"density matrix trace {trace!r} is not 1")
    low = float(np.linalg.eigvalsh(0.5 * (rho + adjoint(rho)))[0])
    if low < DENSITY_MIN_EIG_FLOOR:
        raise NumericalFailureError(
            f"density matrix min eigenvalue {low:.3e} below floor"
        )


def validate_density_batch(stack: np.ndarray) -> None:
    """Vectorized :func:`validate_density_matrix` over a ``(n, d, d)`` stack.

    Checks the same three invariants at the same tolerances but reports
    only the worst offender, which is all a property test needs.
    """
    stack = np.asarray(stack, dtype=np.complex128)
    if stack.ndim != 3 or stack.shape[-1] != stack.shape[-2]:
        raise ValueError(f"expected a stack of square matrices, got {stack.shape}")
    defect = float(np.max(np.abs(stack - adjoint(stack))))
    if defect > DENSITY_HERMITICITY_TOL:
        raise NumericalFailureError(
            f"worst hermiticity defect in batch is {defect:.3e}"
        )
    traces = np.einsum("nii->n", stack)
    worst_trace = float(np.max(np.abs(traces - 1.0)))
    if worst_trace > DENSITY_TRACE_TOL:
        raise NumericalFailureError(
            f"worst |trace - 1| in batch is {worst_trace:.3e}"
        )
    spectra = np.linalg.eigvalsh(0.5 * (stack + adjoint(stack)))
    low = float(spectra[:, 0].min())
    if low < DENSITY_MIN_EIG_FLOOR:
        raise NumericalFailureError(f"batch min eigenvalue {low:.3e} below floor")
