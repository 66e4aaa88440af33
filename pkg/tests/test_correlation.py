import numpy as np
import pytest

from pairdep import DataValidationError, DegenerateDataError, pearson, spearman


def test_pearson_identity():
    assert pearson([1, 2, 3], [1, 2, 3]) == pytest.approx(1.0)


def test_pearson_reversal():
    assert pearson([1, 2, 3], [3, 2, 1]) == pytest.approx(-1.0)


def test_pearson_hand_value():
    # deviations (-1,0,1) vs (-1,1,0): cross sum 1, each squared sum 2
    assert pearson([1, 2, 3], [1, 3, 2]) == pytest.approx(0.5, abs=1e-15)


def test_pearson_rejects_constant_input():
    with pytest.raises(DegenerateDataError):
        pearson([1.0, 1.0, 1.0], [1, 2, 3])
    with pytest.raises(DegenerateDataError):
        pearson([1, 2, 3], [5.0, 5.0, 5.0])


def test_pearson_rejects_bad_shapes():
    with pytest.raises(DataValidationError):
        pearson([1, 2], [1, 2, 3])
    with pytest.raises(DataValidationError):
        pearson([1.0], [2.0])
    with pytest.raises(DataValidationError):
        pearson([1.0, np.nan, 2.0], [1, 2, 3])


def test_spearman_monotone_relations():
    assert spearman([1, 2, 3, 4], [1, 4, 9, 16]) == pytest.approx(1.0)
    assert spearman([1, 2, 3], [6, 5, 4]) == pytest.approx(-1.0)


def test_spearman_midranks_hand_value():
    # midranks (1.5, 1.5, 3) vs (1, 2, 3) give 1.5 / sqrt(1.5 * 2)
    assert spearman([1, 1, 2], [1, 2, 3]) == pytest.approx(np.sqrt(3) / 2, abs=1e-12)


def test_spearman_all_tied_is_degenerate():
    with pytest.raises(DegenerateDataError):
        spearman([2.0, 2.0, 2.0], [1, 2, 3])


@pytest.mark.parametrize("fn", [pearson, spearman])
def test_symmetry_and_affine_invariance(fn, rng):
    for _ in range(20):
        x = rng.normal(0, 1, 25)
        y = rng.normal(0, 1, 25)
        base = fn(x, y)
        assert fn(y, x) == pytest.approx(base, abs=1e-12)
        a = rng.uniform(0.5, 3.0)
        b = rng.uniform(-5, 5)
        assert fn(a * x + b, y) == pytest.approx(base, abs=1e-12)


def test_pearson_flips_sign_under_negative_scale(rng):
    x = rng.normal(0, 1, 30)
    y = rng.normal(0, 1, 30)
    assert pearson(-2.0 * x + 1.0, y) == pytest.approx(-pearson(x, y), abs=1e-12)


def test_spearman_invariant_under_monotone_transform(rng):
    x = rng.uniform(0.1, 4.0, 40)
    y = rng.normal(0, 1, 40)
    base = spearman(x, y)
    assert spearman(np.log(x), y) == pytest.approx(base, abs=1e-12)
    assert spearman(x**3, y) == pytest.approx(base, abs=1e-12)
