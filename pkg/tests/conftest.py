import pytest

from trit_codes.field import get_field


@pytest.fixture(scope="session")
def ctx3():
    return get_field(3)


@pytest.fixture(scope="session")
def ctx4():
    return get_field(4)


@pytest.fixture(scope="session")
def ctx5():
    return get_field(5)


@pytest.fixture(scope="session")
def ctx6():
    return get_field(6)
