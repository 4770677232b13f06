import random

import pytest


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=0, help="Seed for the random sampling oracles")
    parser.addoption("--runslow", action="store_true", default=False, help="Run the full acceptance sweeps")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full acceptance sweeps, enabled by --runslow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def rng(request):
    return random.Random(request.config.getoption("--seed"))
