import pytest

from bismash.matched_pair import build_hn, build_jn


@pytest.fixture(scope="session")
def h5():
    return build_hn(5)


@pytest.fixture(scope="session")
def j5():
    return build_jn(5)


@pytest.fixture(scope="session")
def j6():
    return build_jn(6)


@pytest.fixture(scope="session")
def j7():
    return build_jn(7)
