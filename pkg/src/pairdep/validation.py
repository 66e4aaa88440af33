"""Input validation helpers used by the estimators and the functional API."""

from __future__ import annotations

import numpy as np

from .exceptions import DataValidationError, DegenerateDataError


def as_float_vector(v, name: str = "input", min_len: int = 2) -> np.ndarray:
    """Coerce to a finite 1-D float64 array of length >= min_len."""
    arr = np.asarray(v, dtype=np.float64)
    if arr.ndim == 2 and arr.shape[1] == 1:
        arr = arr.reshape(-1)
    if arr.ndim != 1:
        raise DataValidationError(f"{name} must be one-dimensional, got shape {np.shape(v)}")
    if arr.size < min_len:
        raise DataValidationError(f"{name} needs at least {min_len} values, got {arr.size}")
    if not np.all(np.isfinite(arr)):
        raise DataValidationError(f"{name} contains non-finite values")
    return arr


def as_column_block(v, name: str = "input") -> np.ndarray:
    """Coerce to a finite 2-D float64 array with observations as rows."""
    arr = np.asarray(v, dtype=np.float64)
    if arr.ndim == 1:
        arr = arr[:, None]
    if arr.ndim != 2:
        raise DataValidationError(f"{name} must be 1-D or 2-D, got {arr.ndim} dimensions")
    if not np.all(np.isfinite(arr)):
        raise DataValidationError(f"{name} contains non-finite values")
    return arr


def check_equal_length(x: np.ndarray, y: np.ndarray) -> None:
    if x.shape[0] != y.shape[0]:
        raise DataValidationError(
            f"paired inputs must have equal length, got {x.shape[0]} and {y.shape[0]}"
        )


def check_not_constant(v: np.ndarray, name: str = "input") -> None:
    """Reject exactly constant vectors, which have no usable variance."""
    if v.size and bool(np.all(v == v.flat[0])):
        raise DegenerateDataError(f"{name} is constant; variance is zero")


def check_in_open_unit(value: float, name: str) -> float:
    value = float(value)
    if not 0.0 < value < 1.0:
        raise DataValidationError(f"{name} must lie in (0, 1), got {value}")
    return value


def check_positive_int(value: int, name: str, minimum: int = 1) -> int:
    value = int(value)
    if value < minimum:
        raise DataValidationError(f"{name} must be >= {minimum}, got {value}")
    return value


def check_nonneg(value: float, name: str) -> float:
    value = float(value)
    if not np.isfinite(value) or value < 0.0:
        raise DataValidationError(f"{name} must be a finite nonnegative number, got {value}")
    return value
