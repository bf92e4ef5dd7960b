import numpy as np
import pytest


def complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20260821)


@pytest.fixture
def shift2() -> np.ndarray:
    """The 2x2 right shift [[0, 1], [0, 0]]: every closed form is known."""
    return np.array([[0.0, 1.0], [0.0, 0.0]], dtype=np.complex128)
