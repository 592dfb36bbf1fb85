import pytest

from homlong import fixtures as fx
from homlong.braidcat import BraidingContext


@pytest.fixture(scope="session")
def kz2():
    return fx.kz2()


@pytest.fixture(scope="session")
def kz4():
    return fx.kz4()


@pytest.fixture(scope="session")
def kz4t():
    return fx.kz4_twisted()


@pytest.fixture(scope="session")
def sweedler():
    return fx.sweedler_hopf()


@pytest.fixture(scope="session")
def sweedler_t():
    return fx.sweedler_twisted()


@pytest.fixture(scope="session")
def ctx(kz2):
    return BraidingContext(kz2, fx.kz2_rmatrix(), kz2, fx.kz2_form())


@pytest.fixture(scope="session")
def dimodules(kz2):
    return fx.standard_dimodules(kz2, kz2)


@pytest.fixture(scope="session")
def scaled(kz2):
    return fx.scaled_dimodules(kz2, kz2)
