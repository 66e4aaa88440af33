import numpy as np
import pytest

from pairdep import PairedSample


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)


@pytest.fixture
def random_sample(rng):
    x = rng.normal(0.0, 1.0, 60)
    y = 0.4 * x + rng.normal(0.0, 1.0, 60)
    return PairedSample(x, y)


def write_lines(path, lines):
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return str(path)
