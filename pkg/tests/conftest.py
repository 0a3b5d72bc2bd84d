import numpy as np
import pytest

from endoscopy_kit import spectrum


@pytest.fixture(scope="session")
def small_store():
    # 3 degree-2 and 2 degree-4 pool parameters, primes up to 2000
    return spectrum.generate_spectrum({2: 3, 4: 2}, 2000, seed=11)


@pytest.fixture
def rng():
    return np.random.default_rng(99)
