import pytest

from ggpart import debug


@pytest.fixture(scope="session", autouse=True)
def _debug_checks():
    debug.set_debug(True)
    yield
    debug.set_debug(False)
