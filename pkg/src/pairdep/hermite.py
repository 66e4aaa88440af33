"""Probabilists' Hermite polynomials and the weighted feature maps built on them.

Feature column k is c_k * exp(-z^2/4) * He_k(z) with He_k the probabilists'
polynomial; with normalization on, c_k = (2*pi)^(-1/4) / sqrt(k!) makes the
columns orthonormal in L2 of Lebesgue measure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DataValidationError
from .validation import as_float_vector, check_not_constant, check_positive_int


def hermite(n: int, x):
    """He_n(x) by the three-term recurrence He_{k+1} = x*He_k - k*He_{k-1}.

    Accepts a scalar or an array; returns the matching shape.
    """
    if n < 0:
        raise DataValidationError(f"hermite index must be >= 0, got {n}")
    xa = np.asarray(x, dtype=np.float64)
    h_prev = np.ones_like(xa)
    if n == 0:
        return h_prev if xa.ndim else float(h_prev)
    h = xa.copy()
    for k in range(1, n):
        h, h_prev = xa * h - k * h_prev, h
    return h if xa.ndim else float(h)


def standardize(v) -> np.ndarray:
    """Shift and scale to mean 0 and variance 1 (divisor n)."""
    arr = as_float_vector(v, "input")
    check_not_constant(arr, "input")
    centered = arr - arr.mean()
    sd = math.sqrt(float(centered @ centered) / arr.size)
    return centered / sd


@dataclass(frozen=True)
class BasisSpec:
    """Which weighted Hermite columns to evaluate and how.

    count columns are used, with polynomial indices start_index ..
    start_index + count - 1. The default start_index of 1 excludes the
    constant He_0, which carries no correlation. standardize_input rescales
    the data to unit scale before evaluation so the exp(-z^2/4) weight does
    not crush the features.
    """

    count: int
    start_index: int = 1
    normalize: bool = True
    standardize_input: bool = True

    def __post_init__(self) -> None:
        check_positive_int(self.count, "count")
        if self.start_index < 0:
            raise DataValidationError(f"start_index must be >= 0, got {self.start_index}")

    @property
    def indices(self) -> range:
        return range(self.start_index, self.start_index + self.count)


def _column_scale(k: int) -> float:
    return (2.0 * math.pi) ** -0.25 / math.sqrt(math.factorial(k))


def feature_matrix(v, spec: BasisSpec) -> np.ndarray:
    """Evaluate the weighted Hermite columns at each value of v.

    Returns an (n, count) matrix; column j holds the basis function of index
    spec.start_index + j.
    """
    arr = as_float_vector(v, "input", min_len=1)
    z = standardize(arr) if spec.standardize_input else arr
    weight = np.exp(-z * z / 4.0)
    cols = np.empty((z.size, spec.count))
    for j, k in enumerate(spec.indices):
        scale = _column_scale(k) if spec.normalize else 1.0
        cols[:, j] = scale * weight * hermite(k, z)
    return cols
