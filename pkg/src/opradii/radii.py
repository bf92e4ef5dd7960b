"""Numerical radius, Crawford number, rho-radii, and the Aluthge transform.

The numerical radius of X is the largest modulus in the field of values
``{<Xz, z> : ||z|| = 1}``.  Writing X = A + iB with Hermitian A, B, the
support function of the field of values in direction theta is

    f(theta) = lambda_max(cos(theta) A - sin(theta) B),

and w(X) = sup_theta f(theta).  The same rotating pencil yields the Crawford
number via g(theta) = lambda_min(cos(theta) A - sin(theta) B): by convexity of
the field of values, the distance from 0 to it is max(0, sup_theta g(theta)).

The solver evaluates the pencil on a uniform angle grid and polishes every
grid-local maximum with golden-section steps.  Two structural facts keep this
cheap and reliable:

* M(theta + pi) = -M(theta), so one Hermitian eigensolve per grid point on
  half the circle provides both f and g on the full circle.
* f is a pointwise maximum of eigenvalue branches whose slopes are bounded by
  ||A|| + ||B|| and whose peaks have curvature bounded by the radius itself,
  so every maximizer is wide enough to be bracketed by a 1024-point grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import (
    DEFAULT_TOLERANCES,
    ToleranceConfig,
    as_matrix,
    block2x2,
    polar,
    psd_power,
)

__all__ = [
    "AngleSolverConfig",
    "DEFAULT_ANGLE_CONFIG",
    "numerical_radius",
    "crawford_number",
    "radius_and_crawford",
    "operator_radius_rho",
    "aluthge",
]

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0  # golden-section shrink ratio
_MAX_BRACKETS = 16  # refinement brackets kept per objective, highest values first


@dataclass(frozen=True)
class AngleSolverConfig:
    """Controls the rotating-pencil maximization.

    coarse_points   uniform angle samples on [0, 2*pi)
    refine_iters    golden-section iterations per surviving bracket
    target_rel_err  early-stop threshold: iteration ends once the Lipschitz
                    bound on the remaining bracket width guarantees this
                    relative accuracy
    """

    coarse_points: int = 1024
    refine_iters: int = 60
    target_rel_err: float = 1e-10

    def __post_init__(self) -> None:
        if self.coarse_points < 8:
            raise ValueError(f"coarse_points must be at least 8, got {self.coarse_points}")
        if self.refine_iters < 1:
            raise ValueError(f"refine_iters must be at least 1, got {self.refine_iters}")
        if not (0.0 < self.target_rel_err < 1.0):
            raise ValueError(f"target_rel_err must lie in (0, 1), got {self.target_rel_err}")


DEFAULT_ANGLE_CONFIG = AngleSolverConfig()


def _rotating_parts(X: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # Both exactly Hermitian in floating point; see linalg.re_part / im_part.
    A = 0.5 * (X + X.conj().T)
    B = (X - X.conj().T) * (-0.5j)
    return A, B


def _pencil_values(A: np.ndarray, B: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    """Eigenvalues (ascending) of cos(t) A - sin(t) B for a batch of angles."""
    c = np.cos(thetas)[:, None, None]
    s = np.sin(thetas)[:, None, None]
    return np.linalg.eigvalsh(c * A - s * B)


def _grid_scan(A: np.ndarray, B: np.ndarray, m: int) -> tuple[np.ndarray, np.ndarray]:
    """f and g on the full m-point circle grid.

    For even m only half the circle is solved: the pencil is odd under a
    half-turn, so the top of the spectrum at theta is minus the bottom at
    theta + pi.
    """
    if m % 2 == 0:
        half = m // 2
        ev = _pencil_values(A, B, 2.0 * np.pi * np.arange(half) / m)
        fmax = np.concatenate([ev[:, -1], -ev[:, 0]])
        fmin = np.concatenate([ev[:, 0], -ev[:, -1]])
    else:
        ev = _pencil_values(A, B, 2.0 * np.pi * np.arange(m) / m)
        fmax = ev[:, -1]
        fmin = ev[:, 0]
    return fmax, fmin


def _bracket_centers(vals: np.ndarray) -> np.ndarray:
    """Indices of circular grid-local maxima, best first, capped.

    A plateau with no strict rise on either side (constant f, e.g. a disc
    shaped field of values) yields no strict local maximum; the argmax bracket
    is used as the fallback and is always included.
    """
    left = np.roll(vals, 1)
    right = np.roll(vals, -1)
    mask = (vals >= left) & (vals >= right) & ((vals > left) | (vals > right))
    idx = np.flatnonzero(mask)
    top = int(np.argmax(vals))
    if top not in idx:
        idx = np.append(idx, top)
    order = np.lexsort((idx, -vals[idx]))
    return idx[order][:_MAX_BRACKETS]


def _refine(
    A: np.ndarray,
    B: np.ndarray,
    cfg: AngleSolverConfig,
    lo: np.ndarray,
    hi: np.ndarray,
    kinds: np.ndarray,
    best: dict[int, float],
    lipschitz: float,
) -> None:
    """Golden-section maximization, vectorized across brackets.

    ``kinds`` selects the objective per bracket: 0 maximizes the top of the
    pencil spectrum, 1 maximizes the bottom.  ``best`` maps kind to the best
    value seen so far and is updated in place.
    """
    if lo.size == 0:
        return
    take_top = kinds == 0

    def evaluate(thetas: np.ndarray) -> np.ndarray:
        ev = _pencil_values(A, B, thetas)
        return np.where(take_top, ev[:, -1], ev[:, 0])

    a = lo.astype(np.float64)
    b = hi.astype(np.float64)
    x1 = b - _INVPHI * (b - a)
    x2 = a + _INVPHI * (b - a)
    f1 = evaluate(x1)
    f2 = evaluate(x2)

    def absorb(values: np.ndarray) -> None:
        for kind in (0, 1):
            sel = kinds == kind
            if np.any(sel):
                best[kind] = max(best.get(kind, -np.inf), float(np.max(values[sel])))

    absorb(f1)
    absorb(f2)
    scale_floor = lipschitz / (4.0 * math.sqrt(max(A.shape[0], 1)))
    for _ in range(cfg.refine_iters):
        width = float(np.max(b - a))
        scale = max(min(abs(v) for v in best.values()), scale_floor, 1e-300)
        if 0.5 * lipschitz * width <= cfg.target_rel_err * scale:
            break
        go_right = f1 < f2
        a = np.where(go_right, x1, a)
        b = np.where(go_right, b, x2)
        span = _INVPHI * (b - a)
        x1_new = np.where(go_right, x2, b - span)
        x2_new = np.where(go_right, a + span, x1)
        theta_eval = np.where(go_right, x2_new, x1_new)
        f_eval = evaluate(theta_eval)
        # Lanes moving right keep old f2 as the new f1 and take the fresh
        # value as f2; lanes moving left mirror this.
        f1, f2 = np.where(go_right, f2, f_eval), np.where(go_right, f_eval, f1)
        x1, x2 = x1_new, x2_new
        absorb(f_eval)


def _extrema(X: np.ndarray, cfg: AngleSolverConfig, want_top: bool, want_bottom: bool) -> dict[int, float]:
    X = as_matrix(X, name="X")
    n = X.shape[0]
    if n == 0:
        return {0: 0.0, 1: 0.0}
    A, B = _rotating_parts(X)
    m = cfg.coarse_points
    h = 2.0 * np.pi / m
    fmax, fmin = _grid_scan(A, B, m)
    lipschitz = float(np.linalg.norm(A) + np.linalg.norm(B))

    best: dict[int, float] = {}
    lo_parts, hi_parts, kind_parts = [], [], []
    if want_top:
        centers = _bracket_centers(fmax)
        best[0] = float(np.max(fmax))
        lo_parts.append(centers * h - h)
        hi_parts.append(centers * h + h)
        kind_parts.append(np.zeros(centers.size, dtype=np.intp))
    if want_bottom:
        centers = _bracket_centers(fmin)
        best[1] = float(np.max(fmin))
        lo_parts.append(centers * h - h)
        hi_parts.append(centers * h + h)
        kind_parts.append(np.ones(centers.size, dtype=np.intp))
    if lipschitz > 0.0:
        _refine(
            A,
            B,
            cfg,
            np.concatenate(lo_parts),
            np.concatenate(hi_parts),
            np.concatenate(kind_parts),
            best,
            lipschitz,
        )
    return best


def numerical_radius(X: np.ndarray, cfg: AngleSolverConfig | None = None) -> float:
    """Numerical radius w(X) = sup over unit z of |<Xz, z>|."""
    cfg = cfg or DEFAULT_ANGLE_CONFIG
    return _extrema(X, cfg, want_top=True, want_bottom=False)[0]


def crawford_number(X: np.ndarray, cfg: AngleSolverConfig | None = None) -> float:
    """Distance from 0 to the field of values (0 when 0 lies inside it)."""
    cfg = cfg or DEFAULT_ANGLE_CONFIG
    return max(0.0, _extrema(X, cfg, want_top=False, want_bottom=True)[1])


def radius_and_crawford(X: np.ndarray, cfg: AngleSolverConfig | None = None) -> tuple[float, float]:
    """Both extremes of the field of values from a single grid scan."""
    cfg = cfg or DEFAULT_ANGLE_CONFIG
    best = _extrema(X, cfg, want_top=True, want_bottom=True)
    return best[0], max(0.0, best[1])


def operator_radius_rho(X: np.ndarray, rho: float, cfg: AngleSolverConfig | None = None) -> float:
    """Operator radius w_rho(X) for rho in (0, 2].

    Computed as (2/rho) times the numerical radius of the doubled matrix
    [[0, sqrt(rho(2-rho)) X], [0, (1-rho) X]]; w_1 is the spectral norm and
    w_2 the numerical radius.  Always ||X||/rho <= w_rho(X), with equality on
    square-zero matrices; for rho >= 1 also w_rho(X) <= ||X||, while below 1
    the sharp ceiling is (2/rho - 1)||X||, attained by normal matrices.
    """
    if not (0.0 < rho <= 2.0):
        raise ValueError(f"rho out of range (0, 2]: got {rho}")
    X = as_matrix(X, name="X")
    zero = np.zeros_like(X)
    doubled = block2x2(zero, math.sqrt(rho * (2.0 - rho)) * X, zero, (1.0 - rho) * X)
    return (2.0 / rho) * numerical_radius(doubled, cfg)


def aluthge(X: np.ndarray, tol: ToleranceConfig | None = None) -> np.ndarray:
    """Aluthge transform |X|^(1/2) V |X|^(1/2) where X = V |X|.

    Spectrum-preserving; maps any square-zero matrix to 0.
    """
    tol = tol or DEFAULT_TOLERANCES
    pd = polar(X, tol)
    half = psd_power(pd.modulus, 0.5, tol)
    return half @ pd.isometry @ half
