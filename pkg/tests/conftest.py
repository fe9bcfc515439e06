import math

import pytest

from patchlab.core import Excitation, Substrate, make_operating_point
from patchlab.design import synthesize

FR4 = Substrate(eps_r=4.4, h=1.6e-3)


@pytest.fixture(scope="session")
def fr4():
    return FR4


@pytest.fixture(scope="session")
def paper_design():
    """Closed-form design at 10 GHz on 1.6 mm FR-4."""
    return synthesize(10e9, FR4)


@pytest.fixture(scope="session")
def paper_op():
    return make_operating_point(10e9)


@pytest.fixture(scope="session")
def excitation():
    return Excitation.for_substrate(1.0, FR4)


def deg(x):
    return math.radians(x)
