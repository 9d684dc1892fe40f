import pytest

from arquiver.data import get_fixture_path
from arquiver.qalg import load_algebra
from arquiver.reps import read_representations
from arquiver.tquiver import read_tquiver


@pytest.fixture(scope="session")
def a2():
    return load_algebra(get_fixture_path("a2.quiver"))


@pytest.fixture(scope="session")
def k2():
    return load_algebra(get_fixture_path("k2.quiver"))


@pytest.fixture(scope="session")
def b8():
    return load_algebra(get_fixture_path("b8.quiver"))


@pytest.fixture(scope="session")
def d5t():
    return load_algebra(get_fixture_path("d5t.quiver"))


@pytest.fixture(scope="session")
def a23():
    return load_algebra(get_fixture_path("a23.quiver"))


@pytest.fixture(scope="session")
def d5t_modules(d5t):
    return read_representations(get_fixture_path("d5t_mouth.rep"), algebra=d5t)


@pytest.fixture(scope="session")
def b8_modules(b8):
    return read_representations(get_fixture_path("b8_component.rep"), algebra=b8)


@pytest.fixture(scope="session")
def b8_component():
    return read_tquiver(get_fixture_path("b8_component.tq"))
