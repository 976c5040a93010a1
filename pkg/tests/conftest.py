import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from spinflip import (BSCCO, COPPER, NIOBIUM, VACUUM, Layer, LayerStack)

settings.register_profile(
    "numeric",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("numeric")


@pytest.fixture
def niobium_stack():
    """Canonical niobium film on copper, 4.2 K."""
    return LayerStack((Layer(VACUUM), Layer(NIOBIUM, 1e-6), Layer(COPPER)), 4.2)


@pytest.fixture
def bscco_stack():
    """Canonical BSCCO film on copper, 4.2 K."""
    return LayerStack((Layer(VACUUM), Layer(BSCCO, 2.5e-6), Layer(COPPER)), 4.2)


@pytest.fixture
def copper_stack():
    """Bare copper substrate, 4.2 K."""
    return LayerStack((Layer(VACUUM), Layer(COPPER)), 4.2)


@pytest.fixture
def rng():
    return np.random.default_rng(20260808)
