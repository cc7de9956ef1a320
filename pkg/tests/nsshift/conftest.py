import pytest

from nsshift import helpers
from nsshift.construction import build_levels, measure_from_levels

RANDOM_SEED = 100


@pytest.fixture
def fair():
    return helpers.fair()


@pytest.fixture
def step():
    return helpers.step()


@pytest.fixture
def perturbed():
    return helpers.perturbed()


@pytest.fixture
def alternating():
    return helpers.alternating()


@pytest.fixture
def two_point():
    return helpers.two_point()


@pytest.fixture(scope="session")
def levels2():
    return build_levels(2)


@pytest.fixture(scope="session")
def levels3():
    return build_levels(3)


@pytest.fixture(scope="session")
def constructed2(levels2):
    return measure_from_levels(levels2)


@pytest.fixture(scope="session")
def constructed3(levels3):
    return measure_from_levels(levels3)


@pytest.fixture
def seed():
    return RANDOM_SEED
