"""First canonical correlation of two feature blocks via whitened SVD.

The same kernel serves plain canonical correlation on raw columns and the
basis-expanded maximal-correlation estimator, which only differ in how the
feature matrices are built.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh, svd

from .exceptions import DataValidationError, DegenerateDataError
from .validation import as_column_block, check_equal_length, check_nonneg

# An empirical second-moment matrix whose largest eigenvalue falls at or below
# this floor is treated as numerically zero (e.g. an exactly-centered constant
# column). Values this small are below the square of double rounding noise for
# any reasonably scaled feature column.
_ZERO_EIG_FLOOR = 1e-30


@dataclass(frozen=True)
class CovTriple:
    """Empirical centered second moments of two feature blocks (divisor n)."""

    cxx: np.ndarray
    cyy: np.ndarray
    cxy: np.ndarray

    def __post_init__(self) -> None:
        cxx, cyy, cxy = (np.asarray(m, dtype=np.float64) for m in (self.cxx, self.cyy, self.cxy))
        k, l = cxx.shape[0], cyy.shape[0]
        if cxx.shape != (k, k) or cyy.shape != (l, l) or cxy.shape != (k, l):
            raise DataValidationError("covariance triple has inconsistent shapes")
        for name, m in (("cxx", cxx), ("cyy", cyy)):
            scale = max(float(np.trace(m)), 1.0)
            if not np.allclose(m, m.T, atol=1e-10 * scale, rtol=0.0):
                raise DataValidationError(f"{name} is not symmetric")
        object.__setattr__(self, "cxx", cxx)
        object.__setattr__(self, "cyy", cyy)
        object.__setattr__(self, "cxy", cxy)

    @property
    def k(self) -> int:
        return self.cxx.shape[0]

    @property
    def l(self) -> int:
        return self.cyy.shape[0]


@dataclass(frozen=True)
class CcaResult:
    """First canonical correlation with its coefficient vectors.

    alpha and beta are normalized so each canonical variate has unit variance
    on the retained subspace; the pair's joint sign is fixed by making the
    first non-negligible coordinate of alpha nonnegative.
    """

    rho: float
    alpha: np.ndarray
    beta: np.ndarray
    effective_rank_x: int
    effective_rank_y: int


def covariance_triple(fx, gy) -> CovTriple:
    """Centered cross-products of two feature matrices, divided by n.

    The divisor is n, matching the expectation plug-in form; every correlation
    ratio downstream is invariant to that choice.
    """
    f = as_column_block(fx, "fx")
    g = as_column_block(gy, "gy")
    check_equal_length(f, g)
    if f.shape[0] < 2:
        raise DataValidationError("covariance_triple needs at least 2 rows")
    n = f.shape[0]
    fc = f - f.mean(axis=0)
    gc = g - g.mean(axis=0)
    return CovTriple(cxx=fc.T @ fc / n, cyy=gc.T @ gc / n, cxy=fc.T @ gc / n)


def _whitener(c: np.ndarray, ridge: float, rank_tol: float) -> tuple[np.ndarray, int]:
    """Inverse square root of c + ridge*I restricted to its retained eigenspace.

    Returns (W, rank) with W of shape (dim, rank); the degenerate case is
    signalled by rank 0.
    """
    m = c if ridge == 0.0 else c + ridge * np.eye(c.shape[0])
    w, v = eigh(m)
    lam_max = float(w[-1])
    if lam_max <= _ZERO_EIG_FLOOR:
        return np.empty((c.shape[0], 0)), 0
    keep = w >= rank_tol * lam_max
    keep &= w > 0.0
    wk = w[keep]
    vk = v[:, keep]
    return vk / np.sqrt(wk), int(wk.size)


def first_canonical_correlation(
    c: CovTriple, ridge: float = 0.0, rank_tol: float = 1e-10
) -> CcaResult:
    """Maximize corr of linear combinations of the two feature blocks.

    Whitens each block by the eigendecomposition of its (optionally ridged)
    covariance, discards eigenvalues below rank_tol times the largest, and
    takes the leading singular value of the whitened cross-covariance. rho is
    clamped to [0, 1].

    Raises DegenerateDataError when both covariance blocks are numerically
    zero. If exactly one block is zero there is no nonconstant direction on
    that side and the result is rho = 0 with zero coefficient vectors.
    """
    ridge = check_nonneg(ridge, "ridge")
    rank_tol = float(rank_tol)
    if not 0.0 <= rank_tol < 1.0:
        raise DataValidationError(f"rank_tol must lie in [0, 1), got {rank_tol}")

    wx, rank_x = _whitener(c.cxx, ridge, rank_tol)
    wy, rank_y = _whitener(c.cyy, ridge, rank_tol)
    if rank_x == 0 and rank_y == 0:
        raise DegenerateDataError("degenerate features: both covariance blocks are zero")
    if rank_x == 0 or rank_y == 0:
        return CcaResult(
            rho=0.0,
            alpha=np.zeros(c.k),
            beta=np.zeros(c.l),
            effective_rank_x=rank_x,
            effective_rank_y=rank_y,
        )

    m = wx.T @ c.cxy @ wy
    u, s, vt = svd(m, full_matrices=False)
    rho = float(min(max(s[0], 0.0), 1.0))
    alpha = wx @ u[:, 0]
    beta = wy @ vt[0]

    # (alpha, beta) are only jointly sign-identified; pin the pair's sign.
    mags = np.abs(alpha)
    nz = np.nonzero(mags > 1e-12 * mags.max())[0] if mags.max() > 0.0 else []
    if len(nz) and alpha[nz[0]] < 0.0:
        alpha = -alpha
        beta = -beta
    return CcaResult(
        rho=rho, alpha=alpha, beta=beta, effective_rank_x=rank_x, effective_rank_y=rank_y
    )
