import pytest

from src.kontsevich.evaluate import IntersectionEvaluator
from src.kontsevich.gw import GromovWittenSolver
from src.kontsevich.memo import MemoStore


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow tests")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long running golden checks (enable with --runslow)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session")
def evaluator():
    """One evaluator for the whole run so shared sub-products are computed once."""
    return IntersectionEvaluator()


@pytest.fixture
def fresh_evaluator():
    store = MemoStore()
    return IntersectionEvaluator(store, GromovWittenSolver(store))
