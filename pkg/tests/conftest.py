import pytest

from dialg import census, enumerate_valid_dialgebras


@pytest.fixture(scope="session")
def census_gf2():
    return census(2)


@pytest.fixture(scope="session")
def census_gf3():
    return census(3)


@pytest.fixture(scope="session")
def valid_gf2():
    return list(enumerate_valid_dialgebras(2))


@pytest.fixture(scope="session")
def valid_gf3():
    return list(enumerate_valid_dialgebras(3))
