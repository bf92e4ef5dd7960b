"""Randomized verification suite for the radius functional.

Every inequality and identity the package claims is encoded here as a named
check over reproducible random ensembles.  A check evaluation records lhs,
rhs, slack and a witness; a witness holds exactly the coordinates needed to
regenerate the inputs (the matrix from (family, dim, seed), every auxiliary
from a generator seeded by a stable hash of the same seed), so any reported
near-violation can be replayed in isolation.

Grid economics: the default configuration has 7 families x 5 dims x 50
samples and 9 x 7 x 5 x 5 x 4 parameter combinations.  Evaluating the full
product would cost millions of eigensolves, so each sample is assigned one
(rho, nu, lambda, s, t) tuple by deterministic cycling, with per-cell offsets
chosen so that all 63 (rho, nu) pairs occur across the ensemble.  Every check
id is evaluated for every sample (family-scoped closed forms excepted), and
the assignment depends only on the configuration, never on timing.
"""

from __future__ import annotations

import hashlib
import heapq
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from functools import cached_property

import numpy as np

from .delta import build_blocks, build_bound_blocks, delta, make_params, verify_block_identities
from .linalg import (
    DEFAULT_TOLERANCES,
    ToleranceConfig,
    abs_matrix,
    adjoint,
    as_matrix,
    block2x2,
    psd_power,
    spectral_norm,
)
from .radii import (
    DEFAULT_ANGLE_CONFIG,
    AngleSolverConfig,
    aluthge,
    numerical_radius,
    operator_radius_rho,
    radius_and_crawford,
)
from .report import CheckResult, CheckSummary, SuiteReport, Witness

__all__ = [
    "FAMILIES",
    "RHO_GRID_DEFAULT",
    "NU_GRID_DEFAULT",
    "LAMBDA_SET_DEFAULT",
    "S_SET_DEFAULT",
    "T_SET",
    "SMALL_RHOS",
    "EnsembleConfig",
    "CheckExtras",
    "stable_seed",
    "generate_matrix",
    "draw_extras",
    "enumerate_checks",
    "check_description",
    "run_check",
    "run_suite",
    "search_counterexamples",
    "run_matrix_checks",
    "worker_count",
]

# ----------------------------------------------------------------------------
# seeding and matrix ensembles
# ----------------------------------------------------------------------------

FAMILIES = ("ginibre", "hermitian", "normal", "unitary", "nilpotent2", "rank_deficient", "psd")


def stable_seed(*parts) -> int:
    """Order-sensitive 64-bit hash of the given parts, stable across runs."""
    text = ":".join(str(p) for p in parts)
    return int.from_bytes(hashlib.sha256(text.encode()).digest()[:8], "big")


def _rng(*parts) -> np.random.Generator:
    return np.random.default_rng(stable_seed(*parts))


def _ginibre(rng: np.random.Generator, n: int) -> np.ndarray:
    return (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2.0)


def _haar_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    q, r = np.linalg.qr(_ginibre(rng, n))
    d = np.diagonal(r).copy()
    d[np.abs(d) == 0.0] = 1.0
    return q * (d / np.abs(d))


def _psd(rng: np.random.Generator, n: int) -> np.ndarray:
    g = _ginibre(rng, n)
    p = adjoint(g) @ g
    return 0.5 * (p + adjoint(p))


def _unit_vector(rng: np.random.Generator, n: int) -> np.ndarray:
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    norm = np.linalg.norm(v)
    if norm < 1e-300:
        v = np.zeros(n, dtype=np.complex128)
        v[0] = 1.0
        return v
    return v / norm


def generate_matrix(family: str, dim: int, seed: int) -> np.ndarray:
    """Draw one matrix from a named random family, deterministically in seed.

    Families: ginibre, hermitian (Hermitian part of Ginibre), normal (Haar
    conjugated complex diagonal), unitary (Haar), nilpotent2 (rank one with
    orthogonal range and cokernel, so the square vanishes), rank_deficient
    (Ginibre with the smallest singular value zeroed), psd (Gram matrix of a
    Ginibre draw).
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family: {family!r} (choose from {', '.join(FAMILIES)})")
    if dim < 2:
        raise ValueError(f"dim must be at least 2, got {dim}")
    rng = np.random.default_rng(seed)
    if family == "ginibre":
        return _ginibre(rng, dim)
    if family == "hermitian":
        g = _ginibre(rng, dim)
        return 0.5 * (g + adjoint(g))
    if family == "normal":
        u = _haar_unitary(rng, dim)
        z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        return (u * z) @ adjoint(u)
    if family == "unitary":
        return _haar_unitary(rng, dim)
    if family == "nilpotent2":
        u = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        uu = np.vdot(u, u).real
        if uu < 1e-300:
            u = np.zeros(dim, dtype=np.complex128)
            u[0] = 1.0
            uu = 1.0
        v = v - (np.vdot(u, v) / uu) * u  # <v, u> = 0, hence (u v*)^2 = 0
        if np.linalg.norm(v) < 1e-300:
            v = np.zeros(dim, dtype=np.complex128)
            v[1] = 1.0
        return np.outer(u, np.conj(v))
    if family == "rank_deficient":
        g = _ginibre(rng, dim)
        u, s, vh = np.linalg.svd(g)
        s[-1] = 0.0
        return (u * s) @ vh
    # psd
    return _psd(rng, dim)


# ----------------------------------------------------------------------------
# configuration
# ----------------------------------------------------------------------------

RHO_GRID_DEFAULT = (0.1, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0)
NU_GRID_DEFAULT = (0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0)
LAMBDA_SET_DEFAULT = (1.0 + 0.0j, 2.0 + 0.0j, -1.0 + 0.0j, 1.0 + 1.0j, 5.0 + 0.0j)
S_SET_DEFAULT = (0.0, 0.25, 0.5, 0.75, 1.0)
T_SET = (-2.5, -1.0, 0.5, 3.0)  # scalars for the absolute-homogeneity check
SMALL_RHOS = (0.1, 0.01, 0.001)  # rho values probing the rho -> 0 limit identity


@dataclass(frozen=True)
class EnsembleConfig:
    """What run_suite iterates over.  All fields validated on construction."""

    families: tuple[str, ...] = FAMILIES
    dims: tuple[int, ...] = (2, 3, 4, 5, 6)
    samples_per_cell: int = 50
    master_seed: int = 0
    rho_grid: tuple[float, ...] = RHO_GRID_DEFAULT
    nu_grid: tuple[float, ...] = NU_GRID_DEFAULT
    lambda_set: tuple[complex, ...] = LAMBDA_SET_DEFAULT
    s_set: tuple[float, ...] = S_SET_DEFAULT

    def __post_init__(self) -> None:
        if not self.families:
            raise ValueError("families must be non-empty")
        for f in self.families:
            if f not in FAMILIES:
                raise ValueError(f"unknown family: {f!r} (choose from {', '.join(FAMILIES)})")
        if len(set(self.families)) != len(self.families):
            raise ValueError("families contains duplicates")
        if not self.dims or any(d < 2 for d in self.dims):
            raise ValueError("dims must be non-empty with every dim >= 2")
        if self.samples_per_cell < 0:
            raise ValueError("samples_per_cell must be nonnegative")
        if self.master_seed < 0:
            raise ValueError("master_seed must be nonnegative")
        if not self.rho_grid or any(not (0.0 < r <= 2.0) for r in self.rho_grid):
            raise ValueError("rho out of range (0, 2] in rho_grid")
        if not self.nu_grid or any(not (0.0 <= v <= 1.0) for v in self.nu_grid):
            raise ValueError("nu out of range [0, 1] in nu_grid")
        if not self.lambda_set or any(abs(l) == 0.0 for l in self.lambda_set):
            raise ValueError("lambda_set must be non-empty with every member nonzero")
        if not self.s_set or any(not (0.0 <= s <= 1.0) for s in self.s_set):
            raise ValueError("s out of range [0, 1] in s_set")


# ----------------------------------------------------------------------------
# auxiliary inputs per evaluation
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckExtras:
    """Auxiliary inputs a check may need beyond (X, rho, nu).

    Matrix and vector fields default to None; checks that need them reject
    their absence.  Scalars always carry values.
    """

    second: np.ndarray | None = None  # same-family matrix for subadditivity
    congruence: np.ndarray | None = None  # general matrix for the congruence bound
    unitary: np.ndarray | None = None
    positive: np.ndarray | None = None  # psd Z for the interpolation bound
    positive_probe: np.ndarray | None = None  # psd factor / quadratic-form probe
    vec_u: np.ndarray | None = None
    vec_v: np.ndarray | None = None
    vec_e: np.ndarray | None = None  # unit vector
    vec_z: np.ndarray | None = None  # unit vector
    lam: complex = 2.0 + 0.0j
    s: float = 0.5
    t: float = -1.0
    rho_small: float = 0.01


def draw_extras(
    family: str,
    dim: int,
    seed: int,
    *,
    lam: complex = 2.0 + 0.0j,
    s: float = 0.5,
    t: float = -1.0,
    rho_small: float = 0.01,
) -> CheckExtras:
    """All auxiliary inputs for one evaluation, reproducible from the seed.

    The second matrix comes from the same family as the sample (so structured
    families are tested against their own kind); everything else is drawn in a
    fixed order from a generator derived from the sample seed.
    """
    rng = _rng(seed, "extras")
    second_family = family if family in FAMILIES else "ginibre"
    return CheckExtras(
        second=generate_matrix(second_family, dim, stable_seed(seed, "second")),
        congruence=_ginibre(rng, dim),
        unitary=_haar_unitary(rng, dim),
        positive=_psd(rng, dim),
        positive_probe=_psd(rng, dim),
        vec_u=rng.standard_normal(dim) + 1j * rng.standard_normal(dim),
        vec_v=rng.standard_normal(dim) + 1j * rng.standard_normal(dim),
        vec_e=_unit_vector(rng, dim),
        vec_z=_unit_vector(rng, dim),
        lam=complex(lam),
        s=float(s),
        t=float(t),
        rho_small=float(rho_small),
    )


# ----------------------------------------------------------------------------
# evaluation context: shared quantities computed at most once per sample
# ----------------------------------------------------------------------------


class CheckContext:
    """Lazy cache of everything the checks share for one (X, rho, nu, extras).

    run_check builds one context per call; run_suite builds one per sample so
    that the doubled-matrix radius, the rho-radii, the Aluthge transforms and
    the block norms are each computed once however many checks consume them.
    """

    def __init__(
        self,
        X: np.ndarray,
        rho: float,
        nu: float,
        extras: CheckExtras,
        witness: Witness,
        angle_cfg: AngleSolverConfig,
        tol_cfg: ToleranceConfig,
    ) -> None:
        self.X = as_matrix(X, name="X")
        self.params = make_params(rho, nu)
        self.extras = extras
        self.witness = witness
        self.angle_cfg = angle_cfg
        self.tol_cfg = tol_cfg

    # -- generic helpers ----------------------------------------------------

    def delta_of(self, M: np.ndarray) -> float:
        return delta(M, self.params.rho, self.params.nu, self.angle_cfg)

    def tol_main(self) -> float:
        """rel_ineq * (1 + ||X||) * (1 + alpha + |beta|)^2, the standard slack floor."""
        coeff = 1.0 + self.params.alpha + abs(self.params.beta)
        return self.tol_cfg.rel_ineq * (1.0 + self.norm_x) * coeff * coeff

    def result(self, check_id: str, lhs: float, rhs: float, tolerance: float, witness: Witness | None = None) -> CheckResult:
        slack = rhs - lhs
        return CheckResult(
            check_id=check_id,
            lhs=lhs,
            rhs=rhs,
            slack=slack,
            tolerance=tolerance,
            passed=slack >= -tolerance,
            witness=witness or self.witness,
        )

    def equality(self, check_id: str, left: float, right: float, tolerance: float, witness: Witness | None = None) -> CheckResult:
        diff = abs(left - right)
        return CheckResult(
            check_id=check_id,
            lhs=diff,
            rhs=0.0,
            slack=-diff,
            tolerance=tolerance,
            passed=diff <= tolerance,
            witness=witness or self.witness,
        )

    # -- cached quantities --------------------------------------------------

    @cached_property
    def norm_x(self) -> float:
        return spectral_norm(self.X)

    @cached_property
    def blocks(self):
        return build_blocks(self.X, self.params)

    @cached_property
    def bound_blocks(self):
        return build_bound_blocks(self.X, self.params)

    @cached_property
    def delta_val(self) -> float:
        return self.delta_of(self.X)

    @cached_property
    def sym_comb(self) -> np.ndarray:
        """X + mu X*, the rho = 2 reduction of the doubled matrix."""
        return self.X + self.params.mu * adjoint(self.X)

    @cached_property
    def w_plain(self) -> float:
        return numerical_radius(self.X, self.angle_cfg)

    @cached_property
    def w_sym_comb(self) -> float:
        return numerical_radius(self.sym_comb, self.angle_cfg)

    @cached_property
    def w_xsq(self) -> float:
        return numerical_radius(self.X @ self.X, self.angle_cfg)

    @cached_property
    def aluthge_x(self) -> np.ndarray:
        return aluthge(self.X, self.tol_cfg)

    @cached_property
    def w_aluthge_x(self) -> float:
        return numerical_radius(self.aluthge_x, self.angle_cfg)

    @cached_property
    def w_aluthge_upper(self) -> float:
        return numerical_radius(aluthge(self.blocks.upper, self.tol_cfg), self.angle_cfg)

    @cached_property
    def upper_norm(self) -> float:
        return spectral_norm(self.blocks.upper)

    @cached_property
    def wrho(self) -> float:
        return operator_radius_rho(self.X, self.params.rho, self.angle_cfg)

    @cached_property
    def wrho_sq(self) -> float:
        return operator_radius_rho(self.X @ self.X, self.params.rho, self.angle_cfg)

    @cached_property
    def upper_gram_norm(self) -> float:
        return spectral_norm(self.bound_blocks.upper_gram_sum())

    @cached_property
    def full_gram_norm(self) -> float:
        return spectral_norm(self.bound_blocks.full_gram_sum())

    @cached_property
    def full_square_wc(self) -> tuple[float, float]:
        return radius_and_crawford(self.bound_blocks.full_square(), self.angle_cfg)

    @cached_property
    def sym_sq_wc(self) -> tuple[float, float]:
        return radius_and_crawford(self.sym_comb @ self.sym_comb, self.angle_cfg)

    @cached_property
    def gram_sum_norm(self) -> float:
        """|| |X|^2 + |X*|^2 ||."""
        Xc = adjoint(self.X)
        return spectral_norm(Xc @ self.X + self.X @ Xc)

    @cached_property
    def sym_gram_sum_norm(self) -> float:
        S = self.sym_comb
        Sc = adjoint(S)
        return spectral_norm(Sc @ S + S @ Sc)

    @cached_property
    def abs_x(self) -> np.ndarray:
        return abs_matrix(self.X)

    @cached_property
    def abs_x_adj(self) -> np.ndarray:
        return abs_matrix(adjoint(self.X))


def _need(extras: CheckExtras, check_id: str, *fields: str) -> None:
    for f in fields:
        if getattr(extras, f) is None:
            raise ValueError(f"check {check_id} requires extras field {f!r}")


# ----------------------------------------------------------------------------
# the checks
# ----------------------------------------------------------------------------


def _chk_subadditive(ctx: CheckContext) -> list[CheckResult]:
    _need(ctx.extras, "T2.5.i", "second")
    Y = ctx.extras.second
    lhs = ctx.delta_of(ctx.X + Y)
    rhs = ctx.delta_val + ctx.delta_of(Y)
    tol = ctx.tol_cfg.rel_ineq * (1.0 + ctx.norm_x + spectral_norm(Y)) * (1.0 + ctx.params.alpha + abs(ctx.params.beta)) ** 2
    return [ctx.result("T2.5.i", lhs, rhs, tol)]


def _chk_homogeneous(ctx: CheckContext) -> list[CheckResult]:
    t = ctx.extras.t
    return [ctx.equality("T2.5.ii", ctx.delta_of(t * ctx.X), abs(t) * ctx.delta_val, ctx.tol_main())]


def _chk_positive_definite(ctx: CheckContext) -> list[CheckResult]:
    # Degenerate corners skipped: at rho = 2 with nu in {0, 1} the functional
    # is 2||Re X|| resp. 2||Im X|| and vanishes on skew-Hermitian resp.
    # Hermitian nonzero matrices, so strict positivity genuinely fails there.
    p = ctx.params
    if p.rho == 2.0 and (p.nu == 0.0 or p.nu == 1.0):
        return []
    if ctx.norm_x == 0.0:
        return []
    floor = ctx.tol_main()
    return [
        CheckResult(
            check_id="T2.5.iii",
            lhs=floor,
            rhs=ctx.delta_val,
            slack=ctx.delta_val - floor,
            tolerance=0.0,
            passed=ctx.delta_val >= floor,
            witness=ctx.witness,
        )
    ]


def _chk_unitary_similarity(ctx: CheckContext) -> list[CheckResult]:
    _need(ctx.extras, "T2.5.iv", "unitary")
    U = ctx.extras.unitary
    return [ctx.equality("T2.5.iv", ctx.delta_of(adjoint(U) @ ctx.X @ U), ctx.delta_val, ctx.tol_main())]


def _chk_congruence(ctx: CheckContext) -> list[CheckResult]:
    _need(ctx.extras, "T2.5.v", "congruence")
    Y = ctx.extras.congruence
    ny = spectral_norm(Y)
    lhs = ctx.delta_of(adjoint(Y) @ ctx.X @ Y)
    rhs = ny * ny * ctx.delta_val
    tol = ctx.tol_cfg.rel_ineq * (1.0 + ctx.norm_x) * (1.0 + ny) ** 2 * (1.0 + ctx.params.alpha + abs(ctx.params.beta)) ** 2
    return [ctx.result("T2.5.v", lhs, rhs, tol)]


def _chk_interpolation(ctx: CheckContext) -> list[CheckResult]:
    _need(ctx.extras, "T2.5.vi", "positive")
    Z = ctx.extras.positive
    s = ctx.extras.s
    Zs = psd_power(Z, s, ctx.tol_cfg)
    lhs = ctx.delta_of(Zs @ ctx.X @ Zs)
    inner = ctx.delta_of(Z @ ctx.X @ Z)
    rhs = inner**s * ctx.delta_val ** (1.0 - s)
    nz = spectral_norm(Z)
    tol = ctx.tol_cfg.rel_ineq * (1.0 + ctx.norm_x) * (1.0 + nz) ** 2 * (1.0 + ctx.params.alpha + abs(ctx.params.beta)) ** 2
    return [ctx.result("T2.5.vi", lhs, rhs, tol)]


def _chk_symmetry(ctx: CheckContext) -> list[CheckResult]:
    rho = ctx.params.rho
    if rho == 2.0:
        return []  # the mirror parameter would be 0, outside the domain
    mirror = make_params(2.0 - rho, ctx.params.nu)
    other = delta(ctx.X, mirror.rho, mirror.nu, ctx.angle_cfg)
    left = (2.0 - rho) * other
    right = rho * ctx.delta_val
    coeff = 1.0 + max(
        ctx.params.alpha + abs(ctx.params.beta),
        mirror.alpha + abs(mirror.beta),
    )
    tol = ctx.tol_cfg.rel_ineq * (1.0 + ctx.norm_x) * coeff * coeff
    return [ctx.equality("T2.5.vii-sym", left, right, tol)]


def _chk_small_rho_limit(ctx: CheckContext) -> list[CheckResult]:
    rs = ctx.extras.rho_small
    if not (0.0 < rs < 2.0):
        raise ValueError(f"rho_small out of range (0, 2): got {rs}")
    d_small = delta(ctx.X, rs, ctx.params.nu, ctx.angle_cfg)
    lhs = abs(rs * d_small - 2.0 * ctx.w_sym_comb)
    near = build_blocks(ctx.X, make_params(2.0 - rs, ctx.params.nu)).full
    limit = build_blocks(ctx.X, make_params(2.0, ctx.params.nu)).full
    envelope = 2.0 * spectral_norm(near - limit)
    witness = replace(ctx.witness, rho=rs)
    return [ctx.result("T2.5.vii-limit", lhs, envelope, ctx.tol_main(), witness)]


def _chk_aluthge_bound(ctx: CheckContext) -> list[CheckResult]:
    mu = ctx.params.mu
    rhs = 0.5 * (1.0 + abs(mu)) * (ctx.upper_norm + ctx.w_aluthge_upper)
    return [ctx.result("T2.6", ctx.delta_val, rhs, ctx.tol_main())]


def _chk_aluthge_sym_comb(ctx: CheckContext) -> list[CheckResult]:
    mu = ctx.params.mu
    rhs = 0.5 * (1.0 + abs(mu)) * (ctx.norm_x + ctx.w_aluthge_x)
    return [ctx.result("C2.7.a", ctx.w_sym_comb, rhs, ctx.tol_main())]


def _chk_aluthge_classical(ctx: CheckContext) -> list[CheckResult]:
    rhs = 0.5 * (ctx.norm_x + ctx.w_aluthge_x)
    return [ctx.result("C2.7.b", ctx.w_plain, rhs, ctx.tol_main())]


def _chk_square_norm_bound(ctx: CheckContext) -> list[CheckResult]:
    p = ctx.params
    zero = np.zeros_like(ctx.X)
    Xsq = ctx.X @ ctx.X
    inner = block2x2(zero, p.alpha * Xsq, zero, p.beta * Xsq)
    rhs = 0.5 * (1.0 + abs(p.mu)) * (ctx.upper_norm + math.sqrt(abs(p.beta)) * math.sqrt(spectral_norm(inner)))
    return [ctx.result("C2.9", ctx.delta_val, rhs, ctx.tol_main())]


def _chk_lambda_bound(ctx: CheckContext) -> list[CheckResult]:
    lam = ctx.extras.lam
    if lam == 0:
        raise ValueError("lambda must be nonzero")
    p = ctx.params
    mu = abs(p.mu)
    coeff = (2.0 * mu * max(1.0, abs(lam - 1.0)) + abs(lam)) / (2.0 * abs(lam))
    rhs = (
        p.mu * p.mu * ctx.wrho * ctx.wrho
        + 2.0 * abs(p.mu * p.beta / lam) * ctx.wrho_sq
        + coeff * ctx.upper_gram_norm
    )
    tol = ctx.tol_main() * (1.0 + ctx.norm_x)  # quadratic in X, widen the scale
    return [ctx.result("T2.10", ctx.delta_val**2, rhs, tol)]


def _chk_lambda_two(ctx: CheckContext) -> list[CheckResult]:
    p = ctx.params
    mu = abs(p.mu)
    rhs = (
        p.mu * p.mu * ctx.wrho * ctx.wrho
        + mu * abs(p.beta) * ctx.wrho_sq
        + 0.5 * (mu + 1.0) * ctx.upper_gram_norm
    )
    tol = ctx.tol_main() * (1.0 + ctx.norm_x)
    return [ctx.result("C2.11", ctx.delta_val**2, rhs, tol)]


def _chk_sym_comb_square(ctx: CheckContext) -> list[CheckResult]:
    mu = abs(ctx.params.mu)
    rhs = (
        mu * mu * ctx.w_plain * ctx.w_plain
        + mu * ctx.w_xsq
        + 0.5 * (mu + 1.0) * ctx.gram_sum_norm
    )
    tol = ctx.tol_main() * (1.0 + ctx.norm_x)
    return [ctx.result("C2.12.a", ctx.w_sym_comb**2, rhs, tol)]


def _chk_radius_gram(ctx: CheckContext) -> list[CheckResult]:
    tol = ctx.tol_main() * (1.0 + ctx.norm_x)
    return [ctx.result("C2.12.b", ctx.w_plain**2, 0.5 * ctx.gram_sum_norm, tol)]


def _chk_lambda_limit(ctx: CheckContext) -> list[CheckResult]:
    p = ctx.params
    rhs = p.mu * p.mu * ctx.wrho * ctx.wrho + 0.5 * (2.0 * abs(p.mu) + 1.0) * ctx.upper_gram_norm
    tol = ctx.tol_main() * (1.0 + ctx.norm_x)
    return [ctx.result("C2.13", ctx.delta_val**2, rhs, tol)]


def _chk_two_sided_lower(ctx: CheckContext) -> list[CheckResult]:
    _, c_sq = ctx.full_square_wc
    lhs = 0.25 * ctx.full_gram_norm + 0.5 * c_sq
    tol = ctx.tol_main() * (1.0 + ctx.norm_x)
    return [ctx.result("T2.14.lower", lhs, ctx.delta_val**2, tol)]


def _chk_two_sided_upper(ctx: CheckContext) -> list[CheckResult]:
    w_sq, _ = ctx.full_square_wc
    rhs = 0.25 * ctx.full_gram_norm + 0.5 * w_sq
    tol = ctx.tol_main() * (1.0 + ctx.norm_x)
    return [ctx.result("T2.14.upper", ctx.delta_val**2, rhs, tol)]


def _chk_sym_two_sided_lower(ctx: CheckContext) -> list[CheckResult]:
    _, c_sq = ctx.sym_sq_wc
    lhs = 0.25 * ctx.sym_gram_sum_norm + 0.5 * c_sq
    tol = ctx.tol_main() * (1.0 + ctx.norm_x)
    return [ctx.result("C2.15.lower", lhs, ctx.w_sym_comb**2, tol)]


def _chk_sym_two_sided_upper(ctx: CheckContext) -> list[CheckResult]:
    w_sq, _ = ctx.sym_sq_wc
    rhs = 0.25 * ctx.sym_gram_sum_norm + 0.5 * w_sq
    tol = ctx.tol_main() * (1.0 + ctx.norm_x)
    return [ctx.result("C2.15.upper", ctx.w_sym_comb**2, rhs, tol)]


def _chk_heinz(ctx: CheckContext) -> list[CheckResult]:
    _need(ctx.extras, "L.heinz", "positive", "positive_probe")
    B = ctx.extras.positive
    C = ctx.extras.positive_probe
    s = ctx.extras.s
    lhs = spectral_norm(psd_power(B, s, ctx.tol_cfg) @ ctx.X @ psd_power(C, s, ctx.tol_cfg))
    rhs = spectral_norm(B @ ctx.X @ C) ** s * ctx.norm_x ** (1.0 - s)
    tol = ctx.tol_cfg.rel_ineq * (1.0 + ctx.norm_x) * (1.0 + spectral_norm(B)) * (1.0 + spectral_norm(C))
    return [ctx.result("L.heinz", lhs, rhs, tol)]


def _chk_buzano(ctx: CheckContext) -> list[CheckResult]:
    _need(ctx.extras, "L.buzano", "vec_u", "vec_v", "vec_e")
    lam = ctx.extras.lam
    if lam == 0:
        raise ValueError("lambda must be nonzero")
    u, v, e = ctx.extras.vec_u, ctx.extras.vec_v, ctx.extras.vec_e
    lhs = abs(np.vdot(e, u) * np.vdot(v, e))
    nu_norm = float(np.linalg.norm(u))
    nv_norm = float(np.linalg.norm(v))
    rhs = (max(1.0, abs(lam - 1.0)) * nu_norm * nv_norm + abs(np.vdot(v, u))) / abs(lam)
    tol = ctx.tol_cfg.rel_ineq * (1.0 + nu_norm * nv_norm)
    return [ctx.result("L.buzano", lhs, rhs, tol)]


def _chk_mixed_schwarz(ctx: CheckContext) -> list[CheckResult]:
    _need(ctx.extras, "L.mixed-schwarz", "vec_z")
    z = ctx.extras.vec_z
    lhs = abs(np.vdot(z, ctx.X @ z)) ** 2
    rhs = float(np.vdot(z, ctx.abs_x @ z).real) * float(np.vdot(z, ctx.abs_x_adj @ z).real)
    tol = ctx.tol_cfg.rel_ineq * (1.0 + ctx.norm_x) ** 2
    return [ctx.result("L.mixed-schwarz", lhs, rhs, tol)]


def _chk_positive_square(ctx: CheckContext) -> list[CheckResult]:
    _need(ctx.extras, "L.positive-square", "positive_probe", "vec_z")
    P = ctx.extras.positive_probe
    z = ctx.extras.vec_z
    lhs = float(np.vdot(z, P @ z).real) ** 2
    rhs = float(np.vdot(z, (P @ P) @ z).real)
    tol = ctx.tol_cfg.rel_ineq * (1.0 + spectral_norm(P)) ** 2
    return [ctx.result("L.positive-square", lhs, rhs, tol)]


def _chk_sandwich(ctx: CheckContext) -> list[CheckResult]:
    # Lower bound ||X||/rho <= w_rho holds on all of (0, 2].  The upper bound
    # w_rho <= ||X|| holds only for rho >= 1: normal matrices reach
    # (2/rho - 1)||X|| > ||X|| below 1, so that side is evaluated on [1, 2].
    rho = ctx.params.rho
    tol = ctx.tol_main()
    out = [ctx.result("O.sandwich", ctx.norm_x / rho, ctx.wrho, tol)]
    if rho >= 1.0:
        out.append(ctx.result("O.sandwich", ctx.wrho, ctx.norm_x, tol))
    return out


def _chk_nilpotent_form(ctx: CheckContext) -> list[CheckResult]:
    if ctx.witness.family in FAMILIES and ctx.witness.family != "nilpotent2":
        return []
    return [ctx.equality("O.nilpotent", ctx.wrho, ctx.norm_x / ctx.params.rho, ctx.tol_main())]


def _chk_normal_form(ctx: CheckContext) -> list[CheckResult]:
    if ctx.witness.family in FAMILIES and ctx.witness.family != "normal":
        return []
    want = max(2.0 / ctx.params.rho - 1.0, 1.0) * ctx.norm_x
    return [ctx.equality("O.normal", ctx.wrho, want, ctx.tol_main())]


def _chk_block_identities(ctx: CheckContext) -> list[CheckResult]:
    return verify_block_identities(ctx.X, ctx.params, ctx.witness)


_REGISTRY: tuple[tuple[str, object, str], ...] = (
    ("T2.5.i", _chk_subadditive, "subadditivity of the radius functional"),
    ("T2.5.ii", _chk_homogeneous, "absolute homogeneity under real scalars"),
    ("T2.5.iii", _chk_positive_definite, "strict positivity away from degenerate corners"),
    ("T2.5.iv", _chk_unitary_similarity, "invariance under unitary similarity"),
    ("T2.5.v", _chk_congruence, "congruence bound delta(Y* X Y) <= ||Y||^2 delta(X)"),
    ("T2.5.vi", _chk_interpolation, "log-interpolation along fractional psd congruences"),
    ("T2.5.vii-sym", _chk_symmetry, "(2-rho) delta_(2-rho) = rho delta_rho"),
    ("T2.5.vii-limit", _chk_small_rho_limit, "rho delta_rho approaches 2 w(X + mu X*) as rho -> 0"),
    ("T2.6", _chk_aluthge_bound, "Aluthge bound for the doubled matrix"),
    ("C2.7.a", _chk_aluthge_sym_comb, "Aluthge bound for w(X + mu X*)"),
    ("C2.7.b", _chk_aluthge_classical, "classical Aluthge refinement of w(X)"),
    ("C2.9", _chk_square_norm_bound, "square-norm refinement of the norm bound"),
    ("T2.10", _chk_lambda_bound, "quadratic lambda-parameterized upper bound"),
    ("C2.11", _chk_lambda_two, "lambda = 2 specialization of the quadratic bound"),
    ("C2.12.a", _chk_sym_comb_square, "quadratic bound for w(X + mu X*)"),
    ("C2.12.b", _chk_radius_gram, "w(X)^2 <= ||X*X + XX*|| / 2"),
    ("C2.13", _chk_lambda_limit, "lambda -> infinity limit of the quadratic bound"),
    ("T2.14.lower", _chk_two_sided_lower, "two-sided square bound, lower half"),
    ("T2.14.upper", _chk_two_sided_upper, "two-sided square bound, upper half"),
    ("C2.15.lower", _chk_sym_two_sided_lower, "two-sided square bound at rho = 2, lower half"),
    ("C2.15.upper", _chk_sym_two_sided_upper, "two-sided square bound at rho = 2, upper half"),
    ("L.heinz", _chk_heinz, "Heinz interpolation for psd factors"),
    ("L.buzano", _chk_buzano, "generalized Buzano inner-product bound"),
    ("L.mixed-schwarz", _chk_mixed_schwarz, "mixed Schwarz bound via |X| and |X*|"),
    ("L.positive-square", _chk_positive_square, "Jensen bound for psd quadratic forms"),
    ("O.sandwich", _chk_sandwich, "||X||/rho <= w_rho(X), and w_rho(X) <= ||X|| for rho >= 1"),
    ("O.nilpotent", _chk_nilpotent_form, "w_rho = ||X||/rho on square-zero matrices"),
    ("O.normal", _chk_normal_form, "w_rho = max(2/rho - 1, 1) ||X|| on normal matrices"),
    ("O.block-identities", _chk_block_identities, "closed-form blocks match direct products"),
)

_CHECK_FUNCS = {cid: fn for cid, fn, _ in _REGISTRY}
_CHECK_DESCRIPTIONS = {cid: desc for cid, _, desc in _REGISTRY}


def enumerate_checks() -> tuple[str, ...]:
    """All check ids in canonical report order."""
    return tuple(cid for cid, _, _ in _REGISTRY)


def check_description(check_id: str) -> str:
    if check_id not in _CHECK_DESCRIPTIONS:
        raise ValueError(f"unknown check id: {check_id!r}")
    return _CHECK_DESCRIPTIONS[check_id]


def run_check(
    check_id: str,
    X: np.ndarray,
    rho: float,
    nu: float,
    extras: CheckExtras | None = None,
    angle_cfg: AngleSolverConfig | None = None,
    tol_cfg: ToleranceConfig | None = None,
    witness: Witness | None = None,
) -> list[CheckResult]:
    """Evaluate one check on explicit inputs.

    Returns one result for most checks, two for the sandwich, four for the
    block identities, and an empty list where the check does not apply (the
    degenerate positivity corners, the symmetry identity at rho = 2, and the
    family-scoped closed forms on a mismatched family).
    """
    if check_id not in _CHECK_FUNCS:
        raise ValueError(f"unknown check id: {check_id!r}")
    X = as_matrix(X, name="X")
    extras = extras if extras is not None else CheckExtras()
    if witness is None:
        witness = Witness(
            family="direct",
            dim=X.shape[0],
            seed=0,
            rho=float(rho),
            nu=float(nu),
            lam=extras.lam,
            s=extras.s,
            t=extras.t,
        )
    ctx = CheckContext(
        X,
        rho,
        nu,
        extras,
        witness,
        angle_cfg or DEFAULT_ANGLE_CONFIG,
        tol_cfg or DEFAULT_TOLERANCES,
    )
    return _CHECK_FUNCS[check_id](ctx)


# ----------------------------------------------------------------------------
# suite runner
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class _SampleSpec:
    family: str
    dim: int
    index: int
    seed: int
    rho: float
    nu: float
    lam: complex
    s: float
    t: float
    rho_small: float


def _sample_specs(config: EnsembleConfig) -> list[_SampleSpec]:
    specs = []
    cells = [(f, d) for f in config.families for d in config.dims]
    for cell_index, (family, dim) in enumerate(cells):
        for i in range(config.samples_per_cell):
            j = i + cell_index
            specs.append(
                _SampleSpec(
                    family=family,
                    dim=dim,
                    index=i,
                    seed=stable_seed(config.master_seed, family, dim, i),
                    rho=config.rho_grid[j % len(config.rho_grid)],
                    nu=config.nu_grid[j % len(config.nu_grid)],
                    lam=config.lambda_set[j % len(config.lambda_set)],
                    s=config.s_set[j % len(config.s_set)],
                    t=T_SET[j % len(T_SET)],
                    rho_small=SMALL_RHOS[j % len(SMALL_RHOS)],
                )
            )
    return specs


def _evaluate_spec(
    spec: _SampleSpec,
    check_ids: tuple[str, ...],
    angle_cfg: AngleSolverConfig,
    tol_cfg: ToleranceConfig,
) -> list[CheckResult]:
    X = generate_matrix(spec.family, spec.dim, spec.seed)
    extras = draw_extras(
        spec.family,
        spec.dim,
        spec.seed,
        lam=spec.lam,
        s=spec.s,
        t=spec.t,
        rho_small=spec.rho_small,
    )
    witness = Witness(
        family=spec.family,
        dim=spec.dim,
        seed=spec.seed,
        rho=spec.rho,
        nu=spec.nu,
        lam=spec.lam,
        s=spec.s,
        t=spec.t,
    )
    ctx = CheckContext(X, spec.rho, spec.nu, extras, witness, angle_cfg, tol_cfg)
    out: list[CheckResult] = []
    for cid in check_ids:
        out.extend(_CHECK_FUNCS[cid](ctx))
    return out


def worker_count() -> int:
    """Parallelism for run_suite: RADII_THREADS if set, else min(4, cpus)."""
    raw = os.environ.get("RADII_THREADS", "").strip()
    if raw:
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"RADII_THREADS must be a positive integer, got {raw!r}") from None
        if value < 1:
            raise ValueError(f"RADII_THREADS must be a positive integer, got {raw!r}")
        return value
    return max(1, min(4, os.cpu_count() or 1))


class _Aggregator:
    """Streams CheckResults into per-check summaries with bounded memory."""

    _TRACK = 100  # worst evaluations kept per check

    def __init__(self, check_ids: tuple[str, ...]) -> None:
        self.order = check_ids
        self.count = {cid: 0 for cid in check_ids}
        self.min_slack: dict[str, float | None] = {cid: None for cid in check_ids}
        self.tol_at_min: dict[str, float | None] = {cid: None for cid in check_ids}
        self.all_passed = {cid: True for cid in check_ids}
        # heaps of (-slack, ordinal, tolerance, passed, witness); top = best of kept
        self.worst: dict[str, list] = {cid: [] for cid in check_ids}
        self.ordinal = 0

    def add(self, r: CheckResult) -> None:
        cid = r.check_id
        self.count[cid] += 1
        prev = self.min_slack[cid]
        if prev is None or r.slack < prev:
            self.min_slack[cid] = r.slack
            self.tol_at_min[cid] = r.tolerance
        if not r.passed:
            self.all_passed[cid] = False
        entry = (-r.slack, self.ordinal, r.tolerance, r.passed, r.witness)
        self.ordinal += 1
        heap = self.worst[cid]
        if len(heap) < self._TRACK:
            heapq.heappush(heap, entry)
        elif entry > heap[0]:
            heapq.heapreplace(heap, entry)

    def summaries(self, worst_k: int | None) -> tuple[CheckSummary, ...]:
        out = []
        for cid in self.order:
            ranked = sorted(self.worst[cid], key=lambda e: (-e[0], e[1]))
            if worst_k is None:
                picked = [e for e in ranked if not e[3]]
            else:
                picked = ranked[:worst_k]
            out.append(
                CheckSummary(
                    check_id=cid,
                    count=self.count[cid],
                    min_slack=self.min_slack[cid],
                    tolerance=self.tol_at_min[cid],
                    passed=self.all_passed[cid],
                    worst=tuple((e[4], -e[0]) for e in picked),
                )
            )
        return tuple(out)


def _normalize_checks(checks) -> tuple[str, ...]:
    if checks is None:
        return enumerate_checks()
    wanted = tuple(checks)
    for cid in wanted:
        if cid not in _CHECK_FUNCS:
            raise ValueError(f"unknown check id: {cid!r}")
    # keep canonical order, drop duplicates
    return tuple(cid for cid in enumerate_checks() if cid in set(wanted))


def _run(
    config: EnsembleConfig,
    checks,
    angle_cfg: AngleSolverConfig,
    tol_cfg: ToleranceConfig,
    worst_k: int | None,
) -> SuiteReport:
    check_ids = _normalize_checks(checks)
    specs = _sample_specs(config)
    agg = _Aggregator(check_ids)
    start = time.perf_counter()
    workers = worker_count()
    if workers > 1 and len(specs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            batches = pool.map(
                lambda sp: _evaluate_spec(sp, check_ids, angle_cfg, tol_cfg),
                specs,
                chunksize=4,
            )
            for batch in batches:  # executor.map preserves submission order
                for r in batch:
                    agg.add(r)
    else:
        for sp in specs:
            for r in _evaluate_spec(sp, check_ids, angle_cfg, tol_cfg):
                agg.add(r)
    elapsed = time.perf_counter() - start
    summaries = agg.summaries(worst_k)
    return SuiteReport(
        summaries=summaries,
        overall_pass=all(s.passed for s in summaries),
        elapsed_seconds=elapsed,
    )


def run_suite(
    config: EnsembleConfig | None = None,
    checks=None,
    angle_cfg: AngleSolverConfig | None = None,
    tol_cfg: ToleranceConfig | None = None,
) -> SuiteReport:
    """Evaluate the selected checks over the configured ensemble.

    The report lists every selected check with its evaluation count, minimum
    slack, and the witnesses of failing evaluations (worst hundred per check).
    Wall-clock time is available as ``report.elapsed_seconds`` but never
    serialized, so identical configurations produce identical report files.
    """
    return _run(
        config or EnsembleConfig(),
        checks,
        angle_cfg or DEFAULT_ANGLE_CONFIG,
        tol_cfg or DEFAULT_TOLERANCES,
        worst_k=None,
    )


def search_counterexamples(
    config: EnsembleConfig | None = None,
    checks=None,
    k: int = 10,
    angle_cfg: AngleSolverConfig | None = None,
    tol_cfg: ToleranceConfig | None = None,
) -> SuiteReport:
    """Like run_suite but reports the k tightest evaluations per check,
    passing or not, sorted by ascending slack."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return _run(
        config or EnsembleConfig(),
        checks,
        angle_cfg or DEFAULT_ANGLE_CONFIG,
        tol_cfg or DEFAULT_TOLERANCES,
        worst_k=k,
    )


def run_matrix_checks(
    X: np.ndarray,
    checks=None,
    rho_values=(0.5, 1.0, 1.5, 2.0),
    nu_values=(0.0, 0.25, 0.5, 0.75, 1.0),
    master_seed: int = 0,
    angle_cfg: AngleSolverConfig | None = None,
    tol_cfg: ToleranceConfig | None = None,
    worst_k: int | None = None,
) -> SuiteReport:
    """Evaluate checks on one explicit matrix over a (rho, nu) grid.

    Auxiliary inputs cycle deterministically with the grid position; the
    witness family is "file" since the matrix does not come from a named
    ensemble.  Family-scoped closed forms (O.nilpotent, O.normal) run only
    when explicitly selected, since only the caller knows the structure.
    """
    X = as_matrix(X, name="X")
    angle_cfg = angle_cfg or DEFAULT_ANGLE_CONFIG
    tol_cfg = tol_cfg or DEFAULT_TOLERANCES
    explicit = checks is not None
    check_ids = _normalize_checks(checks)
    if not explicit:
        check_ids = tuple(cid for cid in check_ids if cid not in ("O.nilpotent", "O.normal"))
    for rho in rho_values:
        make_params(rho, 0.5)  # validate before any work
    for nu in nu_values:
        make_params(1.0, nu)
    agg = _Aggregator(check_ids)
    start = time.perf_counter()
    combo = 0
    for rho in rho_values:
        for nu in nu_values:
            seed = stable_seed(master_seed, "file", combo)
            lam = LAMBDA_SET_DEFAULT[combo % len(LAMBDA_SET_DEFAULT)]
            s = S_SET_DEFAULT[combo % len(S_SET_DEFAULT)]
            t = T_SET[combo % len(T_SET)]
            rho_small = SMALL_RHOS[combo % len(SMALL_RHOS)]
            extras = draw_extras("file", X.shape[0], seed, lam=lam, s=s, t=t, rho_small=rho_small)
            witness = Witness(
                family="file",
                dim=X.shape[0],
                seed=seed,
                rho=float(rho),
                nu=float(nu),
                lam=lam,
                s=s,
                t=t,
            )
            ctx = CheckContext(X, rho, nu, extras, witness, angle_cfg, tol_cfg)
            for cid in check_ids:
                for r in _CHECK_FUNCS[cid](ctx):
                    agg.add(r)
            combo += 1
    elapsed = time.perf_counter() - start
    summaries = agg.summaries(worst_k)
    return SuiteReport(
        summaries=summaries,
        overall_pass=all(s.passed for s in summaries),
        elapsed_seconds=elapsed,
    )
