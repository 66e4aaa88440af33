"""Reproducible synthetic samples: the Gaussian-bump nonlinear model,
correlated bivariate Gaussians, and independence nulls.

All generators are pure functions of their seed. Uniform variates come from
PCG64; normal variates are produced by inverse-CDF transform of 53-bit
uniforms offset to the open interval, u = (k + 0.5) / 2^53, so the streams
are fully determined by the documented method.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.special import ndtri

from .exceptions import DataValidationError
from .sample import PairedSample

_TWO_53 = float(2**53)


def _uniform01(rng: np.random.Generator, n: int) -> np.ndarray:
    """Uniform draws strictly inside (0, 1)."""
    return (rng.integers(0, 2**53, size=n).astype(np.float64) + 0.5) / _TWO_53


def _standard_normal(rng: np.random.Generator, n: int) -> np.ndarray:
    return ndtri(_uniform01(rng, n))


@dataclass(frozen=True)
class Law:
    """A univariate sampling law: uniform(a, b) or normal(mu, sigma)."""

    kind: str
    a: float
    b: float

    def __post_init__(self) -> None:
        if self.kind not in ("uniform", "normal"):
            raise DataValidationError(f"unknown law kind {self.kind!r}")
        if self.kind == "uniform" and not self.b > self.a:
            raise DataValidationError(f"uniform law needs b > a, got ({self.a}, {self.b})")
        if self.kind == "normal" and not self.b > 0.0:
            raise DataValidationError(f"normal law needs sigma > 0, got {self.b}")

    @staticmethod
    def uniform(a: float = 0.0, b: float = 1.0) -> "Law":
        return Law("uniform", float(a), float(b))

    @staticmethod
    def normal(mu: float = 0.0, sigma: float = 1.0) -> "Law":
        return Law("normal", float(mu), float(sigma))

    @staticmethod
    def parse(text: str) -> "Law":
        """Parse 'uniform:0,1' or 'normal:0,1' (also accepts 'uniform' alone)."""
        kind, _, rest = text.strip().partition(":")
        kind = kind.strip().lower()
        if kind not in ("uniform", "normal"):
            raise DataValidationError(f"unknown law {text!r}; use uniform:a,b or normal:mu,sigma")
        if not rest:
            return Law.uniform() if kind == "uniform" else Law.normal()
        parts = rest.split(",")
        if len(parts) != 2:
            raise DataValidationError(f"law {text!r} needs exactly two parameters")
        try:
            a, b = (float(p) for p in parts)
        except ValueError as exc:
            raise DataValidationError(f"non-numeric parameter in law {text!r}") from exc
        return Law(kind, a, b)

    def spec(self) -> str:
        return f"{self.kind}:{self.a:g},{self.b:g}"

    def draw(self, rng: np.random.Generator, n: int) -> np.ndarray:
        if self.kind == "uniform":
            return self.a + (self.b - self.a) * _uniform01(rng, n)
        return self.a + self.b * _standard_normal(rng, n)


@dataclass(frozen=True)
class ModelConfig:
    """Parameters of the Gaussian-bump model
    y = (beta1/beta2) * exp(-(x - beta3)^2 / (2 beta2^2)) + noise.

    The defaults put a pronounced nonmonotone bump inside the x-range; they
    are configuration, not estimates of anything.
    """

    beta1: float = 1.5
    beta2: float = 0.5
    beta3: float = 0.5
    noise_sd: float | None = None
    x_law: Law = field(default_factory=Law.uniform)
    n: int = 500
    seed: int = 0

    def __post_init__(self) -> None:
        if self.beta2 == 0.0:
            raise DataValidationError("beta2 must be nonzero")
        if self.noise_sd is None:
            object.__setattr__(self, "noise_sd", 0.02 * (self.beta1 / self.beta2))
        if self.noise_sd < 0.0:
            raise DataValidationError(f"noise_sd must be >= 0, got {self.noise_sd}")
        if self.n < 2:
            raise DataValidationError(f"n must be >= 2, got {self.n}")

    def mean_response(self, x: np.ndarray) -> np.ndarray:
        """Noise-free bump value at each x."""
        z = (np.asarray(x, dtype=np.float64) - self.beta3) / self.beta2
        return (self.beta1 / self.beta2) * np.exp(-0.5 * z * z)


def gen_bump(config: ModelConfig) -> PairedSample:
    """Draw x from the configured law and y from the bump model plus noise."""
    rng = np.random.default_rng(config.seed)
    x = config.x_law.draw(rng, config.n)
    y = config.mean_response(x)
    if config.noise_sd > 0.0:
        y = y + config.noise_sd * _standard_normal(rng, config.n)
    return PairedSample(x, y)


def gen_gaussian(n: int, rho: float, seed: int) -> PairedSample:
    """Bivariate normal pairs with unit marginals and correlation rho."""
    if not -1.0 < rho < 1.0:
        raise DataValidationError(f"rho must lie in (-1, 1), got {rho}")
    if n < 2:
        raise DataValidationError(f"n must be >= 2, got {n}")
    rng = np.random.default_rng(seed)
    x = _standard_normal(rng, n)
    z = _standard_normal(rng, n)
    y = rho * x + np.sqrt(1.0 - rho * rho) * z
    return PairedSample(x, y)


def gen_independent(n: int, x_law: Law, y_law: Law, seed: int) -> PairedSample:
    """Independent draws for x and y from disjoint child streams of the seed."""
    if n < 2:
        raise DataValidationError(f"n must be >= 2, got {n}")
    seq_x, seq_y = np.random.SeedSequence(seed).spawn(2)
    x = x_law.draw(np.random.default_rng(seq_x), n)
    y = y_law.draw(np.random.default_rng(seq_y), n)
    return PairedSample(x, y)
