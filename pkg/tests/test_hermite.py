import math

import numpy as np
import pytest
from scipy.integrate import simpson

from pairdep import (
    BasisSpec,
    DataValidationError,
    DegenerateDataError,
    feature_matrix,
    hermite,
    standardize,
)

# Probabilists' polynomials expanded by hand from the Rodrigues formula,
# highest degree first.
EXPLICIT_COEFFS = {
    0: [1],
    1: [1, 0],
    2: [1, 0, -1],
    3: [1, 0, -3, 0],
    4: [1, 0, -6, 0, 3],
    5: [1, 0, -10, 0, 15, 0],
    6: [1, 0, -15, 0, 45, 0, -15],
    7: [1, 0, -21, 0, 105, 0, -105, 0],
    8: [1, 0, -28, 0, 210, 0, -420, 0, 105],
}


def test_hermite_base_cases():
    assert hermite(0, 3.7) == 1.0
    assert hermite(0, -100.0) == 1.0
    assert hermite(1, 2.5) == 2.5


def test_hermite_hand_values():
    assert hermite(2, 2.0) == pytest.approx(3.0)   # x^2 - 1 at 2
    assert hermite(3, 1.0) == pytest.approx(-2.0)  # x^3 - 3x at 1


@pytest.mark.parametrize("n", range(9))
def test_hermite_recurrence_matches_explicit_coefficients(n):
    grid = np.linspace(-3.0, 3.0, 20)
    expected = np.polyval(EXPLICIT_COEFFS[n], grid)
    assert hermite(n, grid) == pytest.approx(expected, rel=1e-8, abs=1e-8)


def _rodrigues_fd(n: int, x: float, h: float = 0.05) -> float:
    """(-1)^n e^{x^2/2} d^n/dx^n e^{-x^2/2} by Richardson-extrapolated
    central differences."""

    def phi(t):
        return math.exp(-t * t / 2.0)

    def deriv(step):
        total = 0.0
        for k in range(n + 1):
            total += (-1) ** k * math.comb(n, k) * phi(x + (n / 2.0 - k) * step)
        return total / step**n

    if n == 0:
        d = phi(x)
    else:
        d = (4.0 * deriv(h / 2.0) - deriv(h)) / 3.0
    return (-1) ** n * math.exp(x * x / 2.0) * d


@pytest.mark.parametrize("n", range(5))
def test_hermite_matches_rodrigues_finite_differences(n):
    for x in np.linspace(-2.0, 2.0, 9):
        assert hermite(n, float(x)) == pytest.approx(_rodrigues_fd(n, float(x)), abs=1e-5)


def test_standardize_two_points():
    assert standardize([0.0, 2.0]) == pytest.approx([-1.0, 1.0])


def test_standardize_idempotent(rng):
    v = standardize(rng.normal(3, 2, 50))
    assert standardize(v) == pytest.approx(v, abs=1e-12)


def test_standardize_rejects_constant():
    with pytest.raises(DegenerateDataError):
        standardize([5.0, 5.0, 5.0])


def test_standardize_uses_divisor_n(rng):
    v = standardize(rng.normal(0, 1, 17))
    assert v.mean() == pytest.approx(0.0, abs=1e-12)
    assert (v @ v) / 17 == pytest.approx(1.0, abs=1e-12)


def test_feature_matrix_at_zero():
    raw = BasisSpec(1, start_index=1, normalize=False, standardize_input=False)
    assert feature_matrix([0.0], raw) == pytest.approx(np.array([[0.0]]))
    with_h0 = BasisSpec(1, start_index=0, normalize=False, standardize_input=False)
    assert feature_matrix([0.0], with_h0) == pytest.approx(np.array([[1.0]]))


def test_feature_matrix_shape_and_standardization(rng):
    v = rng.normal(10, 4, 30)
    cols = feature_matrix(v, BasisSpec(4))
    assert cols.shape == (30, 4)
    # first column is (2 pi)^(-1/4) * exp(-z^2/4) * z on standardized values
    z = standardize(v)
    expected = (2 * np.pi) ** -0.25 * np.exp(-z * z / 4) * z
    assert cols[:, 0] == pytest.approx(expected)


def test_weighted_basis_is_orthonormal_under_lebesgue_quadrature():
    grid = np.linspace(-12.0, 12.0, 4801)
    spec = BasisSpec(6, start_index=1, normalize=True, standardize_input=False)
    cols = feature_matrix(grid, spec)
    gram = np.empty((6, 6))
    for i in range(6):
        for j in range(6):
            gram[i, j] = simpson(cols[:, i] * cols[:, j], x=grid)
    assert gram == pytest.approx(np.eye(6), abs=1e-6)


def test_basis_spec_validation():
    with pytest.raises(DataValidationError):
        BasisSpec(0)
    with pytest.raises(DataValidationError):
        BasisSpec(2, start_index=-1)
