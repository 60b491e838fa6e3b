"""Random quantum state sampling and distance experiments."""

from .errors import ConfigError, NumericalFailureError, RejectionExhaustedError
from .experiments import (
    CHUNK_PAIRS,
    ExperimentConfig,
    StatsRow,
    run_bloch_cloud,
    run_bures_sweep,
    run_ginibre_sweep,
    run_hsd_experiment,
    run_table1,
    write_cloud_csv,
    write_histogram_csv,
    write_stats_csv,
)
from .linalg import (
    adjoint,
    hermitian_eigenvalues,
    hs_norm,
    min_eigenvalue,
    multiply,
    validate_density_matrix,
    validate_prob_vector,
    validate_state_vector,
)
from .randomness import (
    RngStream,
    normal,
    random_permutation,
    random_phases,
    unbiased_rdpd,
    uniform,
)
from .samplers import (
    METHODS,
    GellMannBasis,
    bloch_density,
    bures_density,
    gellmann_basis,
    ginibre_density,
    hurwitz_unitary,
    opm_density,
    random_pure_state,
    sample_density_batch,
    standard_density,
)
from .stats import (
    HSD_MAX,
    RunStats,
    StatsAccumulator,
    accumulate_stats,
    bloch_vector_qubit,
    hsd,
    hsd_via_eigen,
)

__version__ = "0.1.0"

__all__ = [
    "CHUNK_PAIRS",
    "ConfigError",
    "ExperimentConfig",
    "GellMannBasis",
    "HSD_MAX",
    "METHODS",
    "NumericalFailureError",
    "RejectionExhaustedError",
    "RngStream",
    "RunStats",
    "StatsAccumulator",
    "StatsRow",
    "accumulate_stats",
    "adjoint",
    "bloch_density",
    "bloch_vector_qubit",
    "bures_density",
    "gellmann_basis",
    "ginibre_density",
    "hermitian_eigenvalues",
    "hs_norm",
    "hsd",
    "hsd_via_eigen",
    "hurwitz_unitary",
    "min_eigenvalue",
    "multiply",
    "normal",
    "opm_density",
    "random_permutation",
    "random_phases",
    "random_pure_state",
    "run_bloch_cloud",
    "run_bures_sweep",
    "run_ginibre_sweep",
    "run_hsd_experiment",
    "run_table1",
    "sample_density_batch",
    "standard_density",
    "unbiased_rdpd",
    "uniform",
    "validate_density_matrix",
    "validate_prob_vector",
    "validate_state_vector",
    "write_cloud_csv",
    "write_histogram_csv",
    "write_stats_csv",
    "__version__",
]
