"""The two-parameter radius functional and its block machinery.

For rho in (0, 2] and nu in [0, 1] set

    alpha = sqrt(8/rho - 4),  beta = 2/rho - 2,  mu = 1 - 2 nu.

The functional is the numerical radius of a doubled operator:

    delta_(rho,nu)(X) = w([[0, alpha X], [alpha mu X*, beta (X + mu X*)]]).

alpha vanishes exactly at rho = 2, where the doubled matrix degenerates to
[[0, 0], [0, -(X + mu X*)]] (beta = -1 there) and the functional collapses to
w(X + mu X*).  beta changes sign at rho = 1: it is positive for rho < 1 and
negative for rho > 1, with alpha^2 = 4 beta + 4 holding throughout.

At nu = 1/2 the lower-left and lower-right blocks vanish and the functional
reduces to the classical operator radius: delta_(rho,1/2) = w_rho.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import adjoint, as_matrix, block2x2, spectral_norm
from .radii import AngleSolverConfig, numerical_radius
from .report import CheckResult, Witness

__all__ = [
    "RhoNuParams",
    "make_params",
    "DeltaBlocks",
    "build_blocks",
    "delta",
    "BoundBlocks",
    "build_bound_blocks",
    "verify_block_identities",
    "BLOCK_IDENTITY_REL",
]

# Relative factor for the block-identity residual bound; the full threshold is
# BLOCK_IDENTITY_REL * (1 + ||X||^2) * (1 + alpha + |beta|)^2.
BLOCK_IDENTITY_REL = 1e-10


@dataclass(frozen=True)
class RhoNuParams:
    """Validated (rho, nu) pair with the derived coefficients.

    Invariants: alpha >= 0 with alpha = 0 iff rho = 2; alpha^2 = 4 beta + 4;
    beta decreases from +infinity at rho -> 0 through 0 at rho = 1 to -1 at
    rho = 2; mu = 1 - 2 nu lies in [-1, 1].
    """

    rho: float
    nu: float
    alpha: float
    beta: float
    mu: float


def make_params(rho: float, nu: float) -> RhoNuParams:
    """Validate (rho, nu) and derive (alpha, beta, mu)."""
    rho = float(rho)
    nu = float(nu)
    if not (0.0 < rho <= 2.0):
        raise ValueError(f"rho out of range (0, 2]: got {rho}")
    if not (0.0 <= nu <= 1.0):
        raise ValueError(f"nu out of range [0, 1]: got {nu}")
    alpha = math.sqrt(max(8.0 / rho - 4.0, 0.0))
    beta = 2.0 / rho - 2.0
    mu = 1.0 - 2.0 * nu
    return RhoNuParams(rho=rho, nu=nu, alpha=alpha, beta=beta, mu=mu)


@dataclass(frozen=True)
class DeltaBlocks:
    """The doubled matrices behind the functional.

    full      [[0, alpha X], [alpha mu X*, beta (X + mu X*)]]; the functional
              is its numerical radius
    upper     [[0, alpha X], [0, beta X]]; at nu = 1/2 it coincides with
              ``full`` and carries the w_rho route
    """

    full: np.ndarray
    upper: np.ndarray


def build_blocks(X: np.ndarray, params: RhoNuParams) -> DeltaBlocks:
    X = as_matrix(X, name="X")
    zero = np.zeros_like(X)
    Xc = adjoint(X)
    a, b, mu = params.alpha, params.beta, params.mu
    full = block2x2(zero, a * X, (a * mu) * Xc, b * (X + mu * Xc))
    upper = block2x2(zero, a * X, zero, b * X)
    return DeltaBlocks(full=full, upper=upper)


def delta(X: np.ndarray, rho: float, nu: float, cfg: AngleSolverConfig | None = None) -> float:
    """Evaluate the two-parameter radius of X.

    At rho == 2 the doubled matrix is unitarily trivial and the value is
    computed directly as w(X + mu X*), which agrees with the general route.
    """
    params = make_params(rho, nu)
    X = as_matrix(X, name="X")
    if params.rho == 2.0:
        return numerical_radius(X + params.mu * adjoint(X), cfg)
    return numerical_radius(build_blocks(X, params).full, cfg)


@dataclass(frozen=True)
class BoundBlocks:
    """Closed-form n x n blocks of the squared doubled matrices.

    With S short for X + mu X*, the identities verified downstream are

        upper^2            = beta * [[0, alpha X^2], [0, beta X^2]]
        |upper|^2+|upper*|^2 = [[a, b], [b, c]]
        full^2             = [[q, r], [t, s]]
        |full|^2+|full*|^2 = [[m, n], [n*, p]]

    where  a = alpha^2 XX*,  b = alpha beta XX*,
           c = (alpha^2+beta^2) X*X + beta^2 XX*,
           q = alpha^2 mu XX*,  r = alpha beta (X^2 + mu XX*),
           t = alpha beta mu (XX* + mu X*^2),
           s = alpha^2 mu X*X + beta^2 S^2,
           m = alpha^2 (1+mu^2) XX*,
           n = alpha beta (2 mu X^2 + (1+mu^2) XX*),
           p = alpha^2 (1+mu^2) X*X + beta^2 (S*S + SS*).
    """

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    q: np.ndarray
    r: np.ndarray
    s: np.ndarray
    t: np.ndarray
    m: np.ndarray
    n: np.ndarray
    p: np.ndarray

    def upper_gram_sum(self) -> np.ndarray:
        """[[a, b], [b, c]], the Gram sum of the nu = 1/2 doubled matrix."""
        return block2x2(self.a, self.b, self.b, self.c)

    def full_square(self) -> np.ndarray:
        """[[q, r], [t, s]], the square of the doubled matrix."""
        return block2x2(self.q, self.r, self.t, self.s)

    def full_gram_sum(self) -> np.ndarray:
        """[[m, n], [n*, p]], the Gram sum of the doubled matrix."""
        return block2x2(self.m, self.n, adjoint(self.n), self.p)


def build_bound_blocks(X: np.ndarray, params: RhoNuParams) -> BoundBlocks:
    """All nine closed-form blocks used by the quadratic bounds."""
    X = as_matrix(X, name="X")
    Xc = adjoint(X)
    al, be, mu = params.alpha, params.beta, params.mu
    gram_left = X @ Xc  # XX*
    gram_right = Xc @ X  # X*X
    Xsq = X @ X
    S = X + mu * Xc
    a = (al * al) * gram_left
    b = (al * be) * gram_left
    c = (al * al + be * be) * gram_right + (be * be) * gram_left
    q = (al * al * mu) * gram_left
    r = (al * be) * (Xsq + mu * gram_left)
    t = (al * be * mu) * (gram_left + mu * (Xc @ Xc))
    s = (al * al * mu) * gram_right + (be * be) * (S @ S)
    m = (al * al * (1.0 + mu * mu)) * gram_left
    n = (al * be) * (2.0 * mu * Xsq + (1.0 + mu * mu) * gram_left)
    p = (al * al * (1.0 + mu * mu)) * gram_right + (be * be) * (adjoint(S) @ S + S @ adjoint(S))
    return BoundBlocks(a=a, b=b, c=c, q=q, r=r, s=s, t=t, m=m, n=n, p=p)


def verify_block_identities(
    X: np.ndarray,
    params: RhoNuParams,
    witness: Witness | None = None,
) -> list[CheckResult]:
    """Residuals of the four block identities against direct matrix algebra.

    Each residual is the spectral norm of (assembled blocks minus the directly
    multiplied product); the pass threshold scales with ||X||^2 and the
    coefficient sizes.
    """
    X = as_matrix(X, name="X")
    blocks = build_blocks(X, params)
    bundle = build_bound_blocks(X, params)
    zero = np.zeros_like(X)
    G, H = blocks.upper, blocks.full
    Gc, Hc = adjoint(G), adjoint(H)
    upper_sq_claim = params.beta * block2x2(zero, params.alpha * (X @ X), zero, params.beta * (X @ X))
    pairs = [
        (G @ G, upper_sq_claim),
        (Gc @ G + G @ Gc, bundle.upper_gram_sum()),
        (H @ H, bundle.full_square()),
        (Hc @ H + H @ Hc, bundle.full_gram_sum()),
    ]
    norm_x = spectral_norm(X)
    coeff = 1.0 + params.alpha + abs(params.beta)
    threshold = BLOCK_IDENTITY_REL * (1.0 + norm_x * norm_x) * coeff * coeff
    if witness is None:
        witness = Witness(family="direct", dim=X.shape[0], seed=0, rho=params.rho, nu=params.nu)
    results = []
    for direct, assembled in pairs:
        resid = spectral_norm(direct - assembled)
        results.append(
            CheckResult(
                check_id="O.block-identities",
                lhs=resid,
                rhs=0.0,
                slack=-resid,
                tolerance=threshold,
                passed=resid <= threshold,
                witness=witness,
            )
        )
    return results
