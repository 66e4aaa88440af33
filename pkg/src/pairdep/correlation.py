"""Classical paired correlations: Pearson product-moment and Spearman rank."""

from __future__ import annotations

import numpy as np
from scipy.stats import rankdata

from .exceptions import DegenerateDataError
from .validation import as_float_vector, check_equal_length, check_not_constant


def pearson(x, y) -> float:
    """Product-moment correlation of two equal-length vectors.

    Raises DegenerateDataError when either input is constant instead of
    returning 0 or NaN.
    """
    xv = as_float_vector(x, "x")
    yv = as_float_vector(y, "y")
    check_equal_length(xv, yv)
    check_not_constant(xv, "x")
    check_not_constant(yv, "y")
    dx = xv - xv.mean()
    dy = yv - yv.mean()
    denom = np.sqrt((dx @ dx) * (dy @ dy))
    if denom == 0.0:
        # non-constant input, so only reachable through underflow
        raise DegenerateDataError("variance underflowed to zero")
    r = float((dx @ dy) / denom)
    return max(-1.0, min(1.0, r))


def spearman(x, y) -> float:
    """Rank correlation: Pearson applied to midranks (average ranks on ties)."""
    xv = as_float_vector(x, "x")
    yv = as_float_vector(y, "y")
    check_equal_length(xv, yv)
    check_not_constant(xv, "x")
    check_not_constant(yv, "y")
    return pearson(rankdata(xv, method="average"), rankdata(yv, method="average"))
