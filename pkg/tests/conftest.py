import pytest

from covi import CoviIndex, FullAcIndex, WordSet

RUNNING = ["ATAT", "ATTA", "TAAT", "TTAA", "TTAT"]


@pytest.fixture(scope="session")
def running_words():
    return WordSet(RUNNING)


@pytest.fixture(scope="session")
def running_covi(running_words):
    return CoviIndex.from_words(running_words)


@pytest.fixture(scope="session")
def running_fullac(running_words):
    return FullAcIndex.from_words(running_words)


@pytest.fixture(scope="session", params=["covi", "fullac"])
def running_index(request, running_covi, running_fullac):
    return running_covi if request.param == "covi" else running_fullac
