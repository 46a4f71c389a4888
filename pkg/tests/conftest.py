import pytest

from tradegap import build_scenarios, default_scenario_config, seed_registry


@pytest.fixture(scope="session")
def registry():
    return seed_registry()


@pytest.fixture(scope="session")
def config():
    return default_scenario_config()


@pytest.fixture(scope="session")
def c123(config):
    """The three dollar-ratio scenarios at the calibrated baseline."""
    return build_scenarios(config.inputs, config.lambda_baseline)
