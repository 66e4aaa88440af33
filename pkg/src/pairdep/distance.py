"""Distance covariance and correlation for paired blocks in R^p x R^q.

The statistic is computed in its pairwise-distance form: double-center each
block's Euclidean distance matrix and average the entrywise product. A naive
expanded-sum version is kept as an internal consistency oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import pdist, squareform

from .exceptions import DataValidationError, InternalConsistencyError
from .sample import PairedSample
from .validation import as_column_block

# V_n^2 is a mean of products of centered quantities and can come out a hair
# negative through cancellation; anything below this is a real bug.
_NEGATIVE_TOL = 1e-12

# Distance matrices are materialized, so memory is O(n^2).
MAX_MATERIALIZED_N = 20_000


@dataclass(frozen=True)
class CenteredDistances:
    """Doubly-centered Euclidean distance matrices of the two blocks."""

    a: np.ndarray
    b: np.ndarray


def pairwise_distances(points) -> np.ndarray:
    """Symmetric matrix of Euclidean distances between rows."""
    pts = as_column_block(points, "points")
    if pts.shape[0] < 2:
        raise DataValidationError("pairwise_distances needs at least 2 rows")
    if pts.shape[0] > MAX_MATERIALIZED_N:
        raise DataValidationError(
            f"n={pts.shape[0]} exceeds the materialized-distance bound {MAX_MATERIALIZED_N}"
        )
    return squareform(pdist(pts))


def double_center(m) -> np.ndarray:
    """Subtract row means and column means, add back the grand mean."""
    mat = np.asarray(m, dtype=np.float64)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise DataValidationError("double_center expects a square matrix")
    if not np.allclose(mat, mat.T):
        raise DataValidationError("double_center expects a symmetric matrix")
    row = mat.mean(axis=1, keepdims=True)
    col = mat.mean(axis=0, keepdims=True)
    return mat - row - col + mat.mean()


def centered_distances(s: PairedSample) -> CenteredDistances:
    return CenteredDistances(
        a=double_center(pairwise_distances(s.x)),
        b=double_center(pairwise_distances(s.y)),
    )


def _product_mean(a: np.ndarray, b: np.ndarray) -> float:
    v = float((a * b).mean())
    if v < -_NEGATIVE_TOL:
        raise InternalConsistencyError(f"negative squared distance covariance {v}")
    return max(v, 0.0)


def dcov2(s: PairedSample) -> float:
    """Squared distance covariance V_n^2 in the pairwise-distance form."""
    cd = centered_distances(s)
    return _product_mean(cd.a, cd.b)


def dcov2_naive(s: PairedSample) -> float:
    """Expanded-sum oracle for dcov2: S1 + S2 - 2*S3 on raw distances.

    Written as plain loops over the uncentered distance matrices so it shares
    no code path with dcov2; guarded to small n because of the cost.
    """
    if s.n > 200:
        raise DataValidationError(f"dcov2_naive is limited to n <= 200, got {s.n}")
    a = pairwise_distances(s.x)
    b = pairwise_distances(s.y)
    n = s.n
    s1 = 0.0
    total_a = 0.0
    total_b = 0.0
    s3 = 0.0
    for j in range(n):
        row_a = 0.0
        row_b = 0.0
        for k in range(n):
            ajk = float(a[j, k])
            bjk = float(b[j, k])
            s1 += ajk * bjk
            row_a += ajk
            row_b += bjk
        total_a += row_a
        total_b += row_b
        s3 += row_a * row_b
    s1 /= n * n
    s2 = (total_a / (n * n)) * (total_b / (n * n))
    s3 /= n * n * n
    v = s1 + s2 - 2.0 * s3
    if v < -_NEGATIVE_TOL:
        raise InternalConsistencyError(f"negative squared distance covariance {v}")
    return max(v, 0.0)


def dcor(s: PairedSample) -> float:
    """Distance correlation in [0, 1]; 0 by convention for degenerate blocks."""
    cd = centered_distances(s)
    vxy = _product_mean(cd.a, cd.b)
    vxx = _product_mean(cd.a, cd.a)
    vyy = _product_mean(cd.b, cd.b)
    if vxx <= 0.0 or vyy <= 0.0:
        return 0.0
    r = float(np.sqrt(vxy) / (vxx * vyy) ** 0.25)
    return min(r, 1.0)
