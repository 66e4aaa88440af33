import numpy as np
import pytest

from pairdep import (
    DataValidationError,
    PairedSample,
    dcor,
    dcov2,
    dcov2_naive,
    double_center,
    pairwise_distances,
)


def test_pairwise_two_points_1d():
    assert pairwise_distances([[0.0], [1.0]]) == pytest.approx(np.array([[0, 1], [1, 0]]))


def test_pairwise_345_triangle():
    d = pairwise_distances([[0.0, 0.0], [3.0, 4.0]])
    assert d[0, 1] == pytest.approx(5.0)
    assert d[1, 0] == pytest.approx(5.0)
    assert d[0, 0] == 0.0


def test_pairwise_identical_rows():
    d = pairwise_distances([[2.0, 2.0], [2.0, 2.0], [2.0, 2.0]])
    assert np.all(d == 0.0)


def test_double_center_hand_example():
    out = double_center([[0.0, 1.0], [1.0, 0.0]])
    assert out == pytest.approx(np.array([[-0.5, 0.5], [0.5, -0.5]]))


def test_double_center_kills_constants():
    assert double_center(np.zeros((3, 3))) == pytest.approx(np.zeros((3, 3)))
    assert double_center(4.2 * np.ones((4, 4))) == pytest.approx(np.zeros((4, 4)), abs=1e-12)


def test_double_center_row_col_sums_vanish(rng):
    m = rng.normal(0, 1, (12, 12))
    m = m + m.T
    out = double_center(m)
    scale = 1e-9 * 12 * max(np.abs(m).mean(), 1.0)
    assert np.abs(out.sum(axis=0)).max() < scale
    assert np.abs(out.sum(axis=1)).max() < scale
    assert out == pytest.approx(out.T)


def test_dcov2_two_point_hand_value():
    s = PairedSample([0.0, 1.0], [0.0, 1.0])
    assert dcov2(s) == pytest.approx(0.25, abs=1e-15)
    assert dcov2_naive(s) == pytest.approx(0.25, abs=1e-15)


def test_dcov2_constant_y(rng):
    s = PairedSample(rng.normal(0, 1, 10), np.full(10, 3.0))
    assert dcov2(s) == 0.0
    assert dcov2_naive(s) == 0.0


def test_dcov2_matches_naive(rng):
    for _ in range(30):
        n = int(rng.integers(4, 51))
        p = int(rng.integers(1, 4))
        q = int(rng.integers(1, 4))
        s = PairedSample(rng.normal(0, 1, (n, p)), rng.normal(0, 2, (n, q)))
        a, b = dcov2(s), dcov2_naive(s)
        assert a == pytest.approx(b, rel=1e-10, abs=1e-14)


def test_dcov2_naive_size_guard(rng):
    s = PairedSample(rng.normal(0, 1, 201), rng.normal(0, 1, 201))
    with pytest.raises(DataValidationError, match="n <= 200"):
        dcov2_naive(s)


def test_dcor_linear_relations(rng):
    x = rng.normal(0, 1, 40)
    assert dcor(PairedSample(x, x)) == pytest.approx(1.0, abs=1e-9)
    assert dcor(PairedSample(x, 3.0 * x - 7.0)) == pytest.approx(1.0, abs=1e-9)


def test_dcor_constant_blocks():
    s = PairedSample(np.ones(5), np.full(5, 2.0))
    assert dcor(s) == 0.0


def test_dcor_bounds_and_symmetry(rng):
    for _ in range(15):
        n = int(rng.integers(5, 40))
        s = PairedSample(rng.normal(0, 1, n), rng.standard_t(3, n))
        v = dcor(s)
        assert 0.0 <= v <= 1.0
        assert dcor(s.swap()) == v


def test_dcor_scale_free_univariate(rng):
    for _ in range(20):
        s = PairedSample(rng.normal(0, 1, 30), rng.normal(0, 1, 30))
        base = dcor(s)
        a = float(rng.choice([-1, 1]) * rng.uniform(0.2, 4.0))
        c = float(rng.choice([-1, 1]) * rng.uniform(0.2, 4.0))
        moved = PairedSample(a * s.x + rng.uniform(-2, 2), c * s.y + rng.uniform(-2, 2))
        assert dcor(moved) == pytest.approx(base, abs=1e-9)


def test_dcor_rotation_invariance_multivariate(rng):
    from scipy.stats import ortho_group

    s = PairedSample(rng.normal(0, 1, (35, 3)), rng.normal(0, 1, (35, 2)))
    base = dcor(s)
    rx = ortho_group.rvs(3, random_state=1)
    ry = ortho_group.rvs(2, random_state=2)
    moved = PairedSample(2.5 * s.x @ rx.T + 1.0, 0.4 * s.y @ ry.T - 3.0)
    assert dcor(moved) == pytest.approx(base, abs=1e-9)
