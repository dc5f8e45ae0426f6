import importlib.resources

import pytest

from origamikz.origami import Origami


def load_fixture(name):
    path = importlib.resources.files("origamikz") / "fixtures" / (
        name + ".origami")
    return Origami.from_text(path.read_text())


@pytest.fixture(scope="session")
def torus():
    return load_fixture("torus")


@pytest.fixture(scope="session")
def genus3():
    return load_fixture("genus3")


@pytest.fixture(scope="session")
def genus4():
    return load_fixture("genus4")
