import pytest

from ainfsimp.campaign import default_corpus


@pytest.fixture(scope="session")
def corpus():
    return default_corpus()
