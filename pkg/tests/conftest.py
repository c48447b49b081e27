import pytest

from tests import TEST_SETTINGS, presentation_path

from main import GraphProductToolkit
from utils.presentation_io import parse_config

FIXTURES = ('p3', 'p4', 'c5', 'fp', 'dinf', 'z_z3z2')


def build_toolkit(name: str, **overrides) -> GraphProductToolkit:
    settings = dict(TEST_SETTINGS, **overrides)
    return GraphProductToolkit(parse_config(presentation_path(name)), settings)


@pytest.fixture(scope='session')
def toolkits():
    """One toolkit per fixture presentation; the ball caches are shared across tests."""
    return {name: build_toolkit(name) for name in FIXTURES}


@pytest.fixture(scope='session')
def p3(toolkits):
    return toolkits['p3']


@pytest.fixture(scope='session')
def p4(toolkits):
    return toolkits['p4']


@pytest.fixture(scope='session')
def c5(toolkits):
    return toolkits['c5']


@pytest.fixture(scope='session')
def fp(toolkits):
    return toolkits['fp']


@pytest.fixture(scope='session')
def dinf(toolkits):
    return toolkits['dinf']


@pytest.fixture(scope='session')
def z_z3z2(toolkits):
    return toolkits['z_z3z2']


@pytest.fixture
def make_toolkit():
    """Factory for fresh toolkits, as the invariant suite builds one per check."""
    return build_toolkit
