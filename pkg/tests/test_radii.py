"""Numerical radius, Crawford number, operator radii, Aluthge transform.

Oracles here are independent of the angle-scan solver: brute-force sampling
of quadratic forms over unit vectors, closed forms for shifts and normal
matrices, and structural facts (hermitian and unitary special cases).
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from opradii import (
    AngleSolverConfig,
    adjoint,
    aluthge,
    crawford_number,
    numerical_radius,
    operator_radius_rho,
    radius_and_crawford,
    re_part,
    spectral_norm,
    spectral_radius,
)

from conftest import complex_gaussian


def _brute_quadratic_forms(X, n_vectors=20000, seed=0):
    rng = np.random.default_rng(seed)
    n = X.shape[0]
    Z = complex_gaussian(rng, (n_vectors, n))
    Z /= np.linalg.norm(Z, axis=1, keepdims=True)
    vals = np.einsum("bi,bi->b", Z.conj(), Z @ X.T)
    return np.abs(vals)


class TestNumericalRadius:
    def test_shift(self, shift2):
        assert numerical_radius(shift2) == pytest.approx(0.5, abs=1e-10)

    def test_hermitian_equals_norm(self, rng):
        X = complex_gaussian(rng, (5, 5))
        H = 0.5 * (X + adjoint(X))
        assert numerical_radius(H) == pytest.approx(spectral_norm(H), rel=1e-10)

    def test_normal_equals_spectral_radius(self, rng):
        d = complex_gaussian(rng, 4)
        q, _ = np.linalg.qr(complex_gaussian(rng, (4, 4)))
        X = (q * d) @ adjoint(q)
        assert numerical_radius(X) == pytest.approx(np.max(np.abs(d)), rel=1e-9)

    def test_brute_force_is_lower_bound(self, rng):
        for n in (2, 3, 5):
            X = complex_gaussian(rng, (n, n))
            w = numerical_radius(X)
            brute = np.max(_brute_quadratic_forms(X, seed=n))
            assert brute <= w + 1e-9
            # dense sampling gets close in low dimension
            assert brute >= w * (1.0 - 2e-2)

    def test_classical_sandwich(self, rng):
        X = complex_gaussian(rng, (4, 4))
        w = numerical_radius(X)
        nx = spectral_norm(X)
        assert nx / 2 - 1e-10 <= w <= nx + 1e-10
        assert w >= spectral_radius(X) - 1e-9

    def test_rotation_invariance(self, rng):
        X = complex_gaussian(rng, (3, 3))
        w = numerical_radius(X)
        for theta in (0.3, 1.0, 2.5):
            assert numerical_radius(np.exp(1j * theta) * X) == pytest.approx(w, rel=1e-10)

    def test_support_function_dominated(self, rng):
        # || Re(e^{i theta} X) || <= w(X) for every angle, equality at the peak
        X = complex_gaussian(rng, (4, 4))
        w = numerical_radius(X)
        for theta in np.linspace(0, 2 * np.pi, 37):
            val = spectral_norm(re_part(np.exp(1j * theta) * X))
            assert val <= w + 1e-9

    def test_zero_matrix(self):
        assert numerical_radius(np.zeros((3, 3))) == 0.0


class TestCrawford:
    def test_shift_is_zero(self, shift2):
        assert crawford_number(shift2) == 0.0

    def test_positive_diagonal(self):
        assert crawford_number(np.diag([1.0, 2.0, 3.0])) == pytest.approx(1.0, abs=1e-10)

    def test_two_point_hull(self):
        # numerical range of diag(1, i) is the segment; distance sqrt(2)/2
        X = np.diag([1.0, 1.0j])
        assert crawford_number(X) == pytest.approx(math.sqrt(2) / 2, abs=1e-9)

    def test_origin_inside_range(self):
        assert crawford_number(np.diag([1.0, -1.0])) == 0.0

    def test_brute_force_upper_bound(self, rng):
        for n in (2, 3, 4):
            X = complex_gaussian(rng, (n, n))
            c = crawford_number(X)
            assert c <= np.min(_brute_quadratic_forms(X, seed=10 + n)) + 1e-6

    def test_combined_scan_matches_separate(self, rng):
        X = complex_gaussian(rng, (4, 4))
        w, c = radius_and_crawford(X)
        assert w == numerical_radius(X)
        assert c == crawford_number(X)


class TestOperatorRadius:
    def test_shift_closed_form(self, shift2):
        for rho in (0.1, 0.25, 0.7, 1.0, 1.5, 2.0):
            assert operator_radius_rho(shift2, rho) == pytest.approx(1.0 / rho, rel=1e-9)

    def test_normal_closed_form(self):
        X = np.diag([1.0, -1.0, 1.0j])
        for rho in (0.25, 0.5, 0.75):
            assert operator_radius_rho(X, rho) == pytest.approx(2.0 / rho - 1.0, rel=1e-9)
        for rho in (1.0, 1.5, 2.0):
            assert operator_radius_rho(X, rho) == pytest.approx(1.0, rel=1e-9)

    def test_endpoints_are_norm_and_radius(self, rng):
        X = complex_gaussian(rng, (4, 4))
        assert operator_radius_rho(X, 1.0) == pytest.approx(spectral_norm(X), rel=1e-9)
        assert operator_radius_rho(X, 2.0) == pytest.approx(numerical_radius(X), rel=1e-9)

    def test_lower_bound_everywhere_upper_above_one(self, rng):
        X = complex_gaussian(rng, (3, 3))
        nx = spectral_norm(X)
        for rho in (0.1, 0.5, 1.0, 1.3, 2.0):
            wr = operator_radius_rho(X, rho)
            assert wr >= nx / rho - 1e-8 * (1 + nx)
            if rho >= 1.0:
                assert wr <= nx + 1e-8 * (1 + nx)

    def test_rho_validation(self):
        with pytest.raises(ValueError, match=r"rho out of range \(0, 2\]"):
            operator_radius_rho(np.eye(2), 0.0)
        with pytest.raises(ValueError, match=r"rho out of range \(0, 2\]"):
            operator_radius_rho(np.eye(2), 2.5)


class TestAluthge:
    def test_preserves_spectrum(self, rng):
        X = complex_gaussian(rng, (5, 5))
        ev = np.sort_complex(np.linalg.eigvals(X))
        ev_t = np.sort_complex(np.linalg.eigvals(aluthge(X)))
        np.testing.assert_allclose(ev, ev_t, atol=1e-10)

    def test_contracts_radius_and_norm(self, rng):
        X = complex_gaussian(rng, (4, 4))
        Xt = aluthge(X)
        assert numerical_radius(Xt) <= numerical_radius(X) + 1e-10
        assert spectral_norm(Xt) <= spectral_norm(X) + 1e-10

    def test_rank_one_nilpotent_vanishes(self, shift2):
        assert spectral_norm(aluthge(shift2)) < 1e-14
        u = np.array([1.0, 2.0j, -1.0])
        v = np.array([2.0, 1.0j, 4.0])
        v = v - (np.vdot(u, v) / np.vdot(u, u)) * u
        N = np.outer(u, v.conj())
        assert spectral_norm(aluthge(N)) < 1e-12 * spectral_norm(N)

    def test_fixes_normal_matrices(self, rng):
        d = complex_gaussian(rng, 4)
        q, _ = np.linalg.qr(complex_gaussian(rng, (4, 4)))
        X = (q * d) @ adjoint(q)
        np.testing.assert_allclose(aluthge(X), X, atol=1e-10 * spectral_norm(X))


class TestAngleConfig:
    def test_validation(self):
        with pytest.raises(ValueError):
            AngleSolverConfig(coarse_points=4)
        with pytest.raises(ValueError):
            AngleSolverConfig(refine_iters=0)
        with pytest.raises(ValueError):
            AngleSolverConfig(target_rel_err=0.0)

    def test_coarser_grid_still_accurate(self, rng):
        # refinement recovers what the coarse grid misses
        X = complex_gaussian(rng, (4, 4))
        w_default = numerical_radius(X)
        w_coarse = numerical_radius(X, AngleSolverConfig(coarse_points=64))
        assert w_coarse == pytest.approx(w_default, rel=1e-8)


_entry = st.complex_numbers(allow_nan=False, allow_infinity=False, max_magnitude=5.0)


@st.composite
def matrices(draw, max_dim=3):
    n = draw(st.integers(min_value=1, max_value=max_dim))
    vals = draw(st.lists(_entry, min_size=n * n, max_size=n * n))
    return np.array(vals, dtype=np.complex128).reshape(n, n)


@settings(max_examples=20, deadline=None)
@given(matrices())
def test_radius_between_half_norm_and_norm(X):
    w = numerical_radius(X)
    nx = spectral_norm(X)
    assert nx / 2 - 1e-8 * (1 + nx) <= w <= nx + 1e-8 * (1 + nx)


@settings(max_examples=20, deadline=None)
@given(matrices(), st.floats(min_value=-3.0, max_value=3.0, allow_nan=False))
def test_radius_absolutely_homogeneous(X, t):
    assert numerical_radius(t * X) == pytest.approx(
        abs(t) * numerical_radius(X), rel=1e-9, abs=1e-9
    )


@settings(max_examples=15, deadline=None)
@given(matrices())
def test_radius_subadditive(X):
    Y = adjoint(X)
    assert numerical_radius(X + Y) <= numerical_radius(X) + numerical_radius(Y) + 1e-8 * (
        1 + spectral_norm(X)
    )
