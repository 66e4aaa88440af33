"""Approximate maximal correlation on truncated weighted-Hermite spans.

The estimate is the first canonical correlation between K basis features of x
and L basis features of y; as the spans grow it approaches the maximal
correlation over all square-integrable transforms. A dense angle-grid search
over the coefficient vectors serves as the independent oracle for small K, L.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from sklearn.base import BaseEstimator

from .cca import covariance_triple, first_canonical_correlation
from .exceptions import DataValidationError
from .hermite import BasisSpec, feature_matrix
from .sample import PairedSample
from .validation import check_positive_int

GRID_STEP = 1e-3


@dataclass(frozen=True)
class KLResult:
    """Basis-span correlation estimate with its coefficient vectors."""

    rho: float
    alpha: np.ndarray
    beta: np.ndarray
    k: int
    l: int
    effective_rank_x: int
    effective_rank_y: int


def _basis_pair(k: int, l: int, start_index: int, normalize: bool, standardize_input: bool):
    return (
        BasisSpec(k, start_index=start_index, normalize=normalize,
                  standardize_input=standardize_input),
        BasisSpec(l, start_index=start_index, normalize=normalize,
                  standardize_input=standardize_input),
    )


def kl_correlation(
    s: PairedSample,
    k: int,
    l: int,
    *,
    start_index: int = 1,
    normalize: bool = True,
    standardize_input: bool = True,
    ridge: float = 0.0,
    rank_tol: float = 1e-10,
) -> KLResult:
    """First canonical correlation of the K- and L-column basis expansions.

    Requires univariate x and y. Rank truncation (rank_tol relative to the
    largest eigenvalue) absorbs basis collinearity; ridge is available for
    ill-conditioned expansions but defaults to 0.
    """
    check_positive_int(k, "k")
    check_positive_int(l, "l")
    spec_x, spec_y = _basis_pair(k, l, start_index, normalize, standardize_input)
    fx = feature_matrix(s.x1d("kl_correlation"), spec_x)
    gy = feature_matrix(s.y1d("kl_correlation"), spec_y)
    cov = covariance_triple(fx, gy)
    cca = first_canonical_correlation(cov, ridge=ridge, rank_tol=rank_tol)
    return KLResult(
        rho=cca.rho,
        alpha=cca.alpha,
        beta=cca.beta,
        k=k,
        l=l,
        effective_rank_x=cca.effective_rank_x,
        effective_rank_y=cca.effective_rank_y,
    )


def _angles_to_vectors(theta: np.ndarray, dim: int) -> np.ndarray:
    if dim == 1:
        return np.ones((1, 1))
    return np.column_stack([np.cos(theta), np.sin(theta)])


def _abs_corr_table(
    a_vecs: np.ndarray, b_vecs: np.ndarray,
    sxx: np.ndarray, syy: np.ndarray, sxy: np.ndarray,
) -> np.ndarray:
    var_a = np.einsum("ij,jk,ik->i", a_vecs, sxx, a_vecs)
    var_b = np.einsum("ij,jk,ik->i", b_vecs, syy, b_vecs)
    num = a_vecs @ sxy @ b_vecs.T
    denom = np.sqrt(np.outer(var_a, var_b))
    with np.errstate(divide="ignore", invalid="ignore"):
        table = np.abs(num) / denom
    table[~np.isfinite(table)] = -1.0
    return table


def max_correlation_grid(fx: np.ndarray, gy: np.ndarray, step: float = GRID_STEP) -> float:
    """Brute-force maximum of |corr(F a, G b)| over unit coefficient vectors.

    Supports feature blocks of at most two columns: coefficients are swept on
    an angle grid of the given step with three rounds of local refinement.
    Centered second moments are recomputed here directly, so the search shares
    nothing with the whitened-SVD path it is used to check.
    """
    fx = np.asarray(fx, dtype=np.float64)
    gy = np.asarray(gy, dtype=np.float64)
    if fx.ndim != 2 or gy.ndim != 2 or fx.shape[1] > 2 or gy.shape[1] > 2:
        raise DataValidationError("max_correlation_grid supports at most 2 columns per block")
    n = fx.shape[0]
    fc = fx - fx.mean(axis=0)
    gc = gy - gy.mean(axis=0)
    sxx = fc.T @ fc / n
    syy = gc.T @ gc / n
    sxy = fc.T @ gc / n

    def sweep(theta_a: np.ndarray, theta_b: np.ndarray) -> tuple[float, float, float]:
        a_vecs = _angles_to_vectors(theta_a, fx.shape[1])
        b_vecs = _angles_to_vectors(theta_b, gy.shape[1])
        table = _abs_corr_table(a_vecs, b_vecs, sxx, syy, sxy)
        i, j = np.unravel_index(np.argmax(table), table.shape)
        best_a = theta_a[i] if fx.shape[1] == 2 else 0.0
        best_b = theta_b[j] if gy.shape[1] == 2 else 0.0
        return float(table[i, j]), float(best_a), float(best_b)

    coarse = np.arange(0.0, np.pi, step)
    best, ta, tb = sweep(coarse, coarse)
    width = step
    for _ in range(3):
        local = np.linspace(-width, width, 81)
        best, ta, tb = sweep(ta + local, tb + local)
        width /= 40.0
    return min(best, 1.0)


def kl_bruteforce(
    s: PairedSample,
    k: int,
    l: int,
    *,
    start_index: int = 1,
    normalize: bool = True,
    standardize_input: bool = True,
    step: float = GRID_STEP,
) -> float:
    """Grid-search oracle for kl_correlation, limited to K, L <= 2 and n <= 200."""
    if k > 2 or l > 2:
        raise DataValidationError("kl_bruteforce is limited to k, l <= 2")
    if s.n > 200:
        raise DataValidationError(f"kl_bruteforce is limited to n <= 200, got {s.n}")
    spec_x, spec_y = _basis_pair(k, l, start_index, normalize, standardize_input)
    fx = feature_matrix(s.x1d("kl_bruteforce"), spec_x)
    gy = feature_matrix(s.y1d("kl_bruteforce"), spec_y)
    return max_correlation_grid(fx, gy, step=step)


class KLCorrelation(BaseEstimator):
    """Basis-span maximal correlation with a scikit-learn style interface.

    Parameters mirror kl_correlation: k and l set the span sizes, start_index
    the first polynomial used, and ridge / rank_tol control conditioning.
    After fit, ``correlation_``, ``alpha_`` and ``beta_`` hold the estimate;
    ``transform`` projects new (x, y) values onto the fitted directions using
    the standardization learned from the training data.
    """

    def __init__(
        self,
        k: int = 5,
        l: int = 5,
        start_index: int = 1,
        normalize: bool = True,
        standardize_input: bool = True,
        ridge: float = 0.0,
        rank_tol: float = 1e-10,
    ):
        self.k = k
        self.l = l
        self.start_index = start_index
        self.normalize = normalize
        self.standardize_input = standardize_input
        self.ridge = ridge
        self.rank_tol = rank_tol

    def _specs(self):
        return _basis_pair(self.k, self.l, self.start_index, self.normalize, False)

    def fit(self, X, y):
        sample = PairedSample(X, y)
        result = kl_correlation(
            sample,
            self.k,
            self.l,
            start_index=self.start_index,
            normalize=self.normalize,
            standardize_input=self.standardize_input,
            ridge=self.ridge,
            rank_tol=self.rank_tol,
        )
        if self.standardize_input:
            self.x_center_, self.x_scale_ = _moments(sample.x1d())
            self.y_center_, self.y_scale_ = _moments(sample.y1d())
        else:
            self.x_center_, self.x_scale_ = 0.0, 1.0
            self.y_center_, self.y_scale_ = 0.0, 1.0
        self.result_ = result
        self.correlation_ = result.rho
        self.alpha_ = result.alpha
        self.beta_ = result.beta
        return self

    def transform(self, X, y=None):
        """Canonical scores of new values under the fitted coefficients."""
        if not hasattr(self, "result_"):
            raise DataValidationError("KLCorrelation.transform called before fit")
        spec_x, spec_y = self._specs()
        xz = (np.asarray(X, dtype=np.float64).reshape(-1) - self.x_center_) / self.x_scale_
        x_scores = feature_matrix(xz, spec_x) @ self.alpha_
        if y is None:
            return x_scores
        yz = (np.asarray(y, dtype=np.float64).reshape(-1) - self.y_center_) / self.y_scale_
        y_scores = feature_matrix(yz, spec_y) @ self.beta_
        return x_scores, y_scores


def _moments(v: np.ndarray) -> tuple[float, float]:
    centered = v - v.mean()
    return float(v.mean()), float(np.sqrt(centered @ centered / v.size))
