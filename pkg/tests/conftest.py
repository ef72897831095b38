import pytest

from ud4table.ffield import field_make


@pytest.fixture(scope="session")
def ctx2():
    return field_make(2, 1)


@pytest.fixture(scope="session")
def ctx3():
    return field_make(3, 1)


@pytest.fixture(scope="session")
def ctx4():
    return field_make(2, 2)


@pytest.fixture(scope="session")
def ctx5():
    return field_make(5, 1)


@pytest.fixture(scope="session")
def ctx9():
    return field_make(3, 2)
