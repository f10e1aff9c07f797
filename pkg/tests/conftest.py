import math
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from unruh_lab.scenarios import ACCELERATED, INERTIAL, Scenario
from unruh_lab.switching import BandLimitedSwitching, GaussianSwitching


@pytest.fixture(scope="session")
def gaussian_sw():
    return GaussianSwitching()


@pytest.fixture(scope="session")
def bandlimited_sw():
    return BandLimitedSwitching(1.0)


@pytest.fixture(scope="session")
def thermal_massless_d3():
    return Scenario(INERTIAL, 3, 0.0, 0.0, 1.0)


@pytest.fixture(scope="session")
def accelerated_massive_d1():
    return Scenario(ACCELERATED, 1, 1.0, 0.0, 2 * math.pi)
