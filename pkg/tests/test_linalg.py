import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from opradii import (
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
from opradii.linalg import svd

from conftest import complex_gaussian


def _square(draw_shape=4, seed=0):
    rng = np.random.default_rng(seed)
    return complex_gaussian(rng, (draw_shape, draw_shape))


class TestAsMatrix:
    def test_accepts_lists(self):
        M = as_matrix([[1, 2], [3, 4]])
        assert M.dtype == np.complex128
        assert M.shape == (2, 2)

    def test_rejects_non_square(self):
        with pytest.raises(ValueError, match="square"):
            as_matrix(np.ones((2, 3)))

    def test_rectangular_allowed_when_asked(self):
        M = as_matrix(np.ones((2, 3)), square=False)
        assert M.shape == (2, 3)

    def test_rejects_wrong_ndim(self):
        with pytest.raises(ValueError):
            as_matrix(np.ones(4))
        with pytest.raises(ValueError):
            as_matrix(np.ones((2, 2, 2)))

    def test_rejects_nan_and_inf(self):
        bad = np.array([[1.0, np.nan], [0.0, 1.0]])
        with pytest.raises(ValueError, match="finite"):
            as_matrix(bad)
        bad = np.array([[1.0, 0.0], [np.inf, 1.0]])
        with pytest.raises(ValueError, match="finite"):
            as_matrix(bad)

    def test_non_contiguous_input(self):
        # transposed views are not C-contiguous; validation must still work
        X = _square(5, 1)
        M = as_matrix(X.T)
        assert np.array_equal(M, X.T)


class TestParts:
    def test_cartesian_decomposition(self):
        X = _square(4, 2)
        A, B = re_part(X), im_part(X)
        assert np.array_equal(A, adjoint(A))
        assert np.array_equal(B, adjoint(B))
        np.testing.assert_allclose(A + 1j * B, X, atol=1e-14)

    def test_adjoint_involution(self):
        X = _square(3, 3)
        assert np.array_equal(adjoint(adjoint(X)), X)


class TestEigenAndSvd:
    def test_hermitian_eigen_reconstructs(self):
        X = _square(5, 4)
        H = 0.5 * (X + adjoint(X))
        eig = hermitian_eigen(H)
        V, lam = eig.eigenvectors, eig.eigenvalues
        assert np.all(np.diff(lam) >= 0)
        np.testing.assert_allclose((V * lam) @ V.conj().T, H, atol=1e-12)

    def test_svd_reconstructs(self):
        X = _square(4, 5)
        f = svd(X)
        assert np.all(np.diff(f.singular_values) <= 0)
        np.testing.assert_allclose((f.left * f.singular_values) @ f.right, X, atol=1e-12)

    def test_spectral_norm_matches_numpy(self):
        X = _square(6, 6)
        assert spectral_norm(X) == pytest.approx(np.linalg.norm(X, 2), rel=1e-12)

    def test_spectral_radius_known(self):
        X = np.diag([1.0, -3.0, 2.0j])
        assert spectral_radius(X) == pytest.approx(3.0, abs=1e-12)
        assert spectral_radius(np.array([[0, 1], [0, 0]])) == 0.0


class TestAbsAndPolar:
    def test_abs_matrix_shift(self, shift2):
        np.testing.assert_allclose(abs_matrix(shift2), np.diag([0.0, 1.0]), atol=1e-14)
        np.testing.assert_allclose(abs_matrix(adjoint(shift2)), np.diag([1.0, 0.0]), atol=1e-14)

    def test_abs_matrix_square_identity(self):
        X = _square(4, 7)
        P = abs_matrix(X)
        np.testing.assert_allclose(P @ P, adjoint(X) @ X, atol=1e-11)

    def test_polar_reconstructs(self):
        X = _square(5, 8)
        d = polar(X)
        np.testing.assert_allclose(d.isometry @ d.modulus, X, atol=1e-12)
        np.testing.assert_allclose(d.modulus, abs_matrix(X), atol=1e-11)

    def test_polar_partial_isometry_on_rank_deficient(self):
        # zero a singular direction and confirm V*V is the range projection
        X = _square(4, 9)
        u, s, vh = np.linalg.svd(X)
        s[-1] = 0.0
        X = (u * s) @ vh
        d = polar(X)
        proj = adjoint(d.isometry) @ d.isometry
        np.testing.assert_allclose(proj @ proj, proj, atol=1e-12)
        assert np.trace(proj).real == pytest.approx(3.0, abs=1e-10)
        np.testing.assert_allclose(d.isometry @ d.modulus, X, atol=1e-12)

    def test_polar_zero_matrix(self):
        d = polar(np.zeros((3, 3)))
        assert np.all(d.isometry == 0) and np.all(d.modulus == 0)


class TestPsdPower:
    def test_endpoints(self):
        rng = np.random.default_rng(11)
        A = complex_gaussian(rng, (4, 4))
        Z = adjoint(A) @ A
        np.testing.assert_allclose(psd_power(Z, 1.0), Z, atol=1e-11)
        np.testing.assert_allclose(psd_power(Z, 0.0), np.eye(4), atol=1e-11)

    def test_projection_limit_rank_deficient(self):
        v = np.array([1.0, 1j]) / np.sqrt(2)
        Z = np.outer(v, v.conj())  # rank-1 projection
        np.testing.assert_allclose(psd_power(Z, 0.0), Z, atol=1e-12)

    def test_square_root_composes(self):
        rng = np.random.default_rng(12)
        A = complex_gaussian(rng, (5, 5))
        Z = adjoint(A) @ A
        R = psd_power(Z, 0.5)
        np.testing.assert_allclose(R @ R, Z, atol=1e-10 * spectral_norm(Z))

    def test_power_additivity(self):
        rng = np.random.default_rng(13)
        A = complex_gaussian(rng, (4, 4))
        Z = adjoint(A) @ A
        lhs = psd_power(Z, 0.25) @ psd_power(Z, 0.75)
        np.testing.assert_allclose(lhs, Z, atol=1e-10 * spectral_norm(Z))

    def test_noise_eigenvalues_truncated(self):
        # numerically rank-1 input: the sqrt must not resurrect 1e-16 noise
        u = np.array([1.0, 2.0, -1.0j]) / np.sqrt(6)
        P = 3.0 * np.outer(u, u.conj())
        R = psd_power(0.5 * (P + adjoint(P)), 0.5)
        resid = R @ R - P
        assert spectral_norm(resid) < 1e-13

    def test_rejects_indefinite(self):
        with pytest.raises(ValueError, match="positive semidefinite"):
            psd_power(np.diag([1.0, -0.5]), 0.5)

    def test_rejects_bad_exponent(self):
        with pytest.raises(ValueError, match="exponent"):
            psd_power(np.eye(2), 1.5)
        with pytest.raises(ValueError, match="exponent"):
            psd_power(np.eye(2), -0.1)


class TestBlock2x2:
    def test_assembly(self):
        A = np.eye(2)
        Z = np.zeros((2, 2))
        M = block2x2(Z, A, 2 * A, Z)
        assert M.shape == (4, 4)
        assert M[0, 2] == 1.0 and M[2, 0] == 2.0 and M[0, 0] == 0.0

    def test_shape_mismatch(self):
        with pytest.raises(ValueError, match="lower_right"):
            block2x2(np.eye(2), np.eye(2), np.eye(2), np.eye(3))


class TestToleranceConfig:
    def test_validation(self):
        with pytest.raises(ValueError):
            ToleranceConfig(rel_eq=0.0)
        with pytest.raises(ValueError):
            ToleranceConfig(rel_ineq=-1e-9)
        cfg = ToleranceConfig(rel_eq=1e-10, rel_ineq=1e-9)
        assert cfg.rel_eq == 1e-10


_small_complex = st.complex_numbers(
    allow_nan=False, allow_infinity=False, max_magnitude=10.0
)


@st.composite
def square_matrices(draw, max_dim=4):
    n = draw(st.integers(min_value=1, max_value=max_dim))
    entries = draw(
        st.lists(_small_complex, min_size=n * n, max_size=n * n)
    )
    return np.array(entries, dtype=np.complex128).reshape(n, n)


@settings(max_examples=30, deadline=None)
@given(square_matrices())
def test_spectral_norm_triangle(X):
    Y = X[::-1, ::-1].copy()
    assert spectral_norm(X + Y) <= spectral_norm(X) + spectral_norm(Y) + 1e-9


@settings(max_examples=30, deadline=None)
@given(square_matrices())
def test_abs_matrix_is_psd_with_same_norm(X):
    P = abs_matrix(X)
    lam = np.linalg.eigvalsh(P)
    assert lam[0] >= -1e-10 * max(1.0, lam[-1])
    assert spectral_norm(P) == pytest.approx(spectral_norm(X), rel=1e-9, abs=1e-12)
