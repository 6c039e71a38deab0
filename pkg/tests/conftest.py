import pytest

from prefdfa import Alphabet, build_prefix_tree
from prefdfa.fixtures import garden_pdfa, parity_pdfa, parity_sample


@pytest.fixture(scope="session")
def ab() -> Alphabet:
    return Alphabet(["a", "b"])


@pytest.fixture(scope="session")
def parity():
    return parity_pdfa()


@pytest.fixture(scope="session")
def demo_sample():
    return parity_sample()


@pytest.fixture(scope="session")
def demo_tree(demo_sample):
    return build_prefix_tree(demo_sample)


@pytest.fixture(scope="session")
def garden():
    return garden_pdfa()


def w(text: str):
    """Shorthand word constructor: 'aba' -> ('a','b','a'), '' -> ()."""
    return tuple(text)
