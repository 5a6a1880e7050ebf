import numpy as np
import pytest

from dogblock import GridSpec, build_kernel_pair, build_stencil


@pytest.fixture
def example_kernel():
    """The running 1D example: sigma_p=0.8, sigma_q=1.6, T={-3..3}."""
    return build_kernel_pair(build_stencil(1, 3, "hypercube"), 0.8, 1.6)


@pytest.fixture
def example_grid():
    return GridSpec(D=1, n=4)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
