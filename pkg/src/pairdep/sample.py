"""Paired-sample container shared by every estimator."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exceptions import DataValidationError
from .validation import as_column_block, check_equal_length


@dataclass(frozen=True)
class PairedSample:
    """n paired observations: x is (n, p), y is (n, q).

    Both blocks are stored as read-only float64 arrays, so a sample can be
    shared freely across threads. Most estimators require p = q = 1; the
    distance and canonical correlations accept any p, q.
    """

    x: np.ndarray
    y: np.ndarray
    n: int = field(init=False)

    def __post_init__(self) -> None:
        x = as_column_block(self.x, "x")
        y = as_column_block(self.y, "y")
        check_equal_length(x, y)
        if x.shape[0] < 2:
            raise DataValidationError(f"a paired sample needs n >= 2 rows, got {x.shape[0]}")
        x.flags.writeable = False
        y.flags.writeable = False
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "n", x.shape[0])

    @property
    def p(self) -> int:
        return self.x.shape[1]

    @property
    def q(self) -> int:
        return self.y.shape[1]

    def x1d(self, context: str = "this estimator") -> np.ndarray:
        if self.p != 1:
            raise DataValidationError(f"{context} requires univariate x, got p={self.p}")
        return self.x[:, 0]

    def y1d(self, context: str = "this estimator") -> np.ndarray:
        if self.q != 1:
            raise DataValidationError(f"{context} requires univariate y, got q={self.q}")
        return self.y[:, 0]

    def swap(self) -> "PairedSample":
        """Exchange the roles of x and y."""
        return PairedSample(self.y, self.x)

    def permute_y(self, order: np.ndarray) -> "PairedSample":
        """Re-pair the rows: x kept fixed, y rows taken in the given order."""
        order = np.asarray(order)
        if order.shape != (self.n,):
            raise DataValidationError(f"permutation must have shape ({self.n},)")
        return PairedSample(self.x, self.y[order])
