import numpy as np
import pytest


@pytest.fixture
def make_rng():
    """Factory for independent, reproducible generators."""

    def _make(seed: int) -> np.random.Generator:
        return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))

    return _make
