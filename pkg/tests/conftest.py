import pytest

from bihomcheck.discovery import catalogue_entry
from bihomcheck.exactlin import LinearMap


@pytest.fixture(scope="session")
def n2():
    return catalogue_entry("n2").structure


@pytest.fixture(scope="session")
def na2():
    return catalogue_entry("na2").structure


@pytest.fixture(scope="session")
def dx2():
    return catalogue_entry("dx2").structure


@pytest.fixture(scope="session")
def m2():
    return catalogue_entry("m2").structure


@pytest.fixture(scope="session")
def dx2_infbialg():
    return catalogue_entry("dx2-infbialg").structure


@pytest.fixture(scope="session")
def m2_qt():
    return catalogue_entry("m2-qt").structure


@pytest.fixture(scope="session")
def id2():
    return LinearMap.identity(2)


@pytest.fixture(scope="session")
def id4():
    return LinearMap.identity(4)


@pytest.fixture(scope="session")
def sgn():
    return catalogue_entry("sgn").structure


@pytest.fixture(scope="session")
def neg_x():
    return catalogue_entry("neg_x").structure


@pytest.fixture(scope="session")
def conj_d():
    return catalogue_entry("conj_d").structure
