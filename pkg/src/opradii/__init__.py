"""Generalized operator radii on finite-dimensional complex matrices.

The central object is a two-parameter radius functional built from a doubled
2x2 block matrix: delta(X; rho, nu) is the numerical radius of

    [[0,           alpha X],
     [alpha mu X*, beta (X + mu X*)]]

with alpha = sqrt(8/rho - 4), beta = 2/rho - 2, mu = 1 - 2 nu, for
rho in (0, 2] and nu in [0, 1].  Specializations recover the classical
numerical radius, the rho-operator radii, and symmetrized combinations
X + mu X*.  The suite module verifies every identity and inequality these
functionals satisfy over reproducible random ensembles.
"""

from .linalg import (
    DEFAULT_TOLERANCES,
    PolarDecomposition,
    ToleranceConfig,
    abs_matrix,
    adjoint,
    as_matrix,
    block2x2,
    hermitian_eigen,
    im_part,
    polar,
    psd_power,
    re_part,
    spectral_norm,
    spectral_radius,
)
from .radii import (
    DEFAULT_ANGLE_CONFIG,
    AngleSolverConfig,
    aluthge,
    crawford_number,
    numerical_radius,
    operator_radius_rho,
    radius_and_crawford,
)
from .delta import (
    BoundBlocks,
    DeltaBlocks,
    RhoNuParams,
    build_blocks,
    build_bound_blocks,
    delta,
    make_params,
    verify_block_identities,
)
from .matio import load_matrix, matrix_from_obj, matrix_to_obj, save_matrix
from .report import CheckResult, CheckSummary, SuiteReport, Witness
from .suite import (
    FAMILIES,
    CheckExtras,
    EnsembleConfig,
    check_description,
    draw_extras,
    enumerate_checks,
    generate_matrix,
    run_check,
    run_matrix_checks,
    run_suite,
    search_counterexamples,
    stable_seed,
)

__version__ = "1.0.0"

__all__ = [
    "AngleSolverConfig",
    "BoundBlocks",
    "CheckExtras",
    "CheckResult",
    "CheckSummary",
    "DEFAULT_ANGLE_CONFIG",
    "DEFAULT_TOLERANCES",
    "DeltaBlocks",
    "EnsembleConfig",
    "FAMILIES",
    "PolarDecomposition",
    "RhoNuParams",
    "SuiteReport",
    "ToleranceConfig",
    "Witness",
    "abs_matrix",
    "adjoint",
    "aluthge",
    "as_matrix",
    "block2x2",
    "build_blocks",
    "build_bound_blocks",
    "check_description",
    "crawford_number",
    "delta",
    "draw_extras",
    "enumerate_checks",
    "generate_matrix",
    "hermitian_eigen",
    "im_part",
    "load_matrix",
    "make_params",
    "matrix_from_obj",
    "matrix_to_obj",
    "numerical_radius",
    "operator_radius_rho",
    "polar",
    "psd_power",
    "radius_and_crawford",
    "re_part",
    "run_check",
    "run_matrix_checks",
    "run_suite",
    "save_matrix",
    "search_counterexamples",
    "spectral_norm",
    "spectral_radius",
    "stable_seed",
    "verify_block_identities",
    "__version__",
]
