"""Dense complex linear algebra kernels.

Everything in this package works on square complex matrices stored as
``numpy.ndarray`` with dtype ``complex128``.  Inner products are linear in the
first argument, conjugate-linear in the second: ``<u, v> = sum_i u_i conj(v_i)``,
which is ``np.vdot(v, u)`` in numpy's argument order.

The kernels here are thin, validating wrappers around LAPACK (via numpy) plus
the handful of matrix functions the radius computations need: Hermitian parts,
polar decomposition, fractional powers of positive semidefinite matrices, and
2x2 block assembly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "ToleranceConfig",
    "DEFAULT_TOLERANCES",
    "as_matrix",
    "adjoint",
    "re_part",
    "im_part",
    "HermitianEigenResult",
    "hermitian_eigen",
    "SvdResult",
    "svd",
    "spectral_norm",
    "spectral_radius",
    "abs_matrix",
    "PolarDecomposition",
    "polar",
    "psd_power",
    "block2x2",
]


@dataclass(frozen=True)
class ToleranceConfig:
    """Comparison tolerances shared across the package.

    rel_eq      relative tolerance for equality assertions
    rel_ineq    relative slack threshold for inequality checks
    rank_cutoff relative singular value cutoff below which a direction is
                treated as belonging to the kernel
    """

    rel_eq: float = 1e-9
    rel_ineq: float = 1e-8
    rank_cutoff: float = 1e-12

    def __post_init__(self) -> None:
        if not (self.rel_eq > 0 and self.rel_ineq > 0 and self.rank_cutoff > 0):
            raise ValueError("tolerances must be positive")


DEFAULT_TOLERANCES = ToleranceConfig()


def as_matrix(obj, *, square: bool = True, name: str = "matrix") -> np.ndarray:
    """Coerce to a finite complex128 matrix, validating shape.

    Raises ValueError for non-2d input, non-square input when ``square`` is
    set, and non-finite entries.
    """
    M = np.asarray(obj, dtype=np.complex128)
    if M.ndim != 2:
        raise ValueError(f"{name} must be 2-dimensional, got shape {M.shape}")
    if square and M.shape[0] != M.shape[1]:
        raise ValueError(f"{name} must be square, got shape {M.shape}")
    if M.size and not np.all(np.isfinite(M)):
        raise ValueError(f"{name} contains non-finite entries")
    return M


def adjoint(X: np.ndarray) -> np.ndarray:
    """Conjugate transpose X*."""
    return np.conj(np.swapaxes(np.asarray(X, dtype=np.complex128), -1, -2))


def re_part(X: np.ndarray) -> np.ndarray:
    """Hermitian part (X + X*)/2.  Exactly Hermitian in floating point."""
    X = as_matrix(X, name="X")
    return 0.5 * (X + X.conj().T)


def im_part(X: np.ndarray) -> np.ndarray:
    """Skew part mapped to Hermitian form, (X - X*)/(2i).

    X = re_part(X) + 1j*im_part(X) holds exactly; the returned matrix is
    Hermitian because multiplying a skew-Hermitian matrix by -i/1 preserves
    the conjugate symmetry entrywise.
    """
    X = as_matrix(X, name="X")
    return (X - X.conj().T) * (-0.5j)


@dataclass(frozen=True)
class HermitianEigenResult:
    """Ascending eigenvalues and the matching orthonormal eigenvectors."""

    eigenvalues: np.ndarray  # real, shape (n,), ascending
    eigenvectors: np.ndarray  # complex, shape (n, n), column i pairs with eigenvalue i


def hermitian_eigen(M: np.ndarray) -> HermitianEigenResult:
    """Eigendecomposition of a Hermitian matrix.

    The input is symmetrized internally, so tiny non-Hermitian roundoff from
    upstream arithmetic is harmless.  Non-square input is rejected.
    """
    M = as_matrix(M, name="M")
    H = 0.5 * (M + M.conj().T)
    vals, vecs = np.linalg.eigh(H)
    return HermitianEigenResult(eigenvalues=vals, eigenvectors=vecs)


@dataclass(frozen=True)
class SvdResult:
    """Thin SVD with X = left @ diag(singular_values) @ right.

    ``right`` is already the conjugate-transposed factor (numpy's ``vh``);
    singular values are nonnegative and descending.
    """

    left: np.ndarray
    singular_values: np.ndarray
    right: np.ndarray


def svd(X: np.ndarray) -> SvdResult:
    """Thin singular value decomposition of a (possibly rectangular) matrix."""
    X = as_matrix(X, square=False, name="X")
    u, s, vh = np.linalg.svd(X, full_matrices=False)
    return SvdResult(left=u, singular_values=s, right=vh)


def spectral_norm(X: np.ndarray) -> float:
    """Largest singular value."""
    X = as_matrix(X, square=False, name="X")
    if X.size == 0:
        return 0.0
    return float(np.linalg.svd(X, compute_uv=False)[0])


def spectral_radius(X: np.ndarray) -> float:
    """Largest eigenvalue modulus."""
    X = as_matrix(X, name="X")
    if X.size == 0:
        return 0.0
    return float(np.max(np.abs(np.linalg.eigvals(X))))


def abs_matrix(X: np.ndarray) -> np.ndarray:
    """Operator absolute value |X| = (X* X)^(1/2), computed from the SVD.

    For the right-shift-like matrix [[0, 1], [0, 0]] this gives diag(0, 1),
    while |X*| = abs_matrix(adjoint(X)) gives diag(1, 0).
    """
    X = as_matrix(X, name="X")
    f = svd(X)
    W = f.right.conj().T
    P = (W * f.singular_values) @ f.right
    return 0.5 * (P + P.conj().T)


@dataclass(frozen=True)
class PolarDecomposition:
    """Factors of X = isometry @ modulus.

    ``modulus`` is |X| (positive semidefinite); ``isometry`` is a partial
    isometry supported on the range of |X|, so ``isometry`` has unit singular
    values exactly on that range and vanishes on the kernel of X.
    """

    isometry: np.ndarray
    modulus: np.ndarray


def polar(X: np.ndarray, tol: ToleranceConfig | None = None) -> PolarDecomposition:
    """Polar decomposition X = V |X| with V a partial isometry.

    Directions with singular value below ``rank_cutoff`` times the largest are
    assigned to the kernel, which makes the factorization stable for rank
    deficient input; the Aluthge transform downstream does not depend on how
    the kernel is completed.
    """
    X = as_matrix(X, name="X")
    tol = tol or DEFAULT_TOLERANCES
    f = svd(X)
    s = f.singular_values
    if s.size == 0 or s[0] == 0.0:
        zero = np.zeros_like(X)
        return PolarDecomposition(isometry=zero, modulus=zero.copy())
    keep = s > tol.rank_cutoff * s[0]
    V = f.left[:, keep] @ f.right[keep, :]
    W = f.right.conj().T
    # Sub-cutoff singular values are kernel noise; zeroing them here keeps the
    # modulus consistent with the isometry's support (sqrt would otherwise
    # amplify 1e-16 noise to 1e-8 in downstream fractional powers).
    P = (W * np.where(keep, s, 0.0)) @ f.right
    return PolarDecomposition(isometry=V, modulus=0.5 * (P + P.conj().T))


def psd_power(P: np.ndarray, s: float, tol: ToleranceConfig | None = None) -> np.ndarray:
    """Fractional power P^s of a positive semidefinite matrix, s in [0, 1].

    Eigenvalues below ``rank_cutoff`` times the largest are treated as kernel
    directions: roundoff leaves +-1e-16 noise on numerically singular input,
    and a fractional power amplifies it (1e-16 becomes 1e-8 at s = 1/2), so
    truncation is what keeps powers of rank deficient matrices clean.  For
    complex Gaussian ensembles the chance of a genuine eigenvalue under the
    cutoff is negligible.  Anything more negative than the tolerance band is
    rejected.  ``s = 0`` returns the orthogonal projection onto the numerical
    range, the strong limit of P^s as s decreases to 0.
    """
    if not (0.0 <= s <= 1.0):
        raise ValueError(f"exponent must lie in [0, 1], got {s}")
    P = as_matrix(P, name="P")
    tol = tol or DEFAULT_TOLERANCES
    eig = hermitian_eigen(P)
    vals = eig.eigenvalues
    scale = float(np.max(np.abs(vals))) if vals.size else 0.0
    if scale > 0.0 and float(vals[0]) < -10.0 * tol.rel_eq * scale:
        raise ValueError(
            "matrix is not positive semidefinite within tolerance "
            f"(min eigenvalue {vals[0]:.3e}, scale {scale:.3e})"
        )
    keep = vals > tol.rank_cutoff * scale if scale > 0.0 else np.zeros(vals.shape, dtype=bool)
    if s == 0.0:
        powered = keep.astype(np.float64)
    else:
        powered = np.where(keep, np.clip(vals, 0.0, None), 0.0) ** s
    V = eig.eigenvectors
    out = (V * powered) @ V.conj().T
    return 0.5 * (out + out.conj().T)


def block2x2(
    upper_left: np.ndarray,
    upper_right: np.ndarray,
    lower_left: np.ndarray,
    lower_right: np.ndarray,
) -> np.ndarray:
    """Assemble [[S, X], [Y, T]] from four n x n blocks into a 2n x 2n matrix."""
    blocks = [
        as_matrix(upper_left, name="upper_left"),
        as_matrix(upper_right, name="upper_right"),
        as_matrix(lower_left, name="lower_left"),
        as_matrix(lower_right, name="lower_right"),
    ]
    n = blocks[0].shape[0]
    for b, label in zip(blocks, ("upper_left", "upper_right", "lower_left", "lower_right")):
        if b.shape != (n, n):
            raise ValueError(f"{label} has shape {b.shape}, expected {(n, n)}")
    return np.block([[blocks[0], blocks[1]], [blocks[2], blocks[3]]])
