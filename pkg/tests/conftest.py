"""Pytest configuration."""
import pytest
import structlog
from click.testing import CliRunner

from domain.case_analysis import full_catalog
from domain.catalog import reference_catalog
from realization.operators import SEEDS, platonic_seed


@pytest.fixture(autouse=True)
def reset_logging():
    """The CLI binds structlog to the runner's stderr; unbind it after each test."""
    yield
    structlog.reset_defaults()


@pytest.fixture(scope="session")
def classifications():
    return full_catalog()


@pytest.fixture(scope="session")
def reference():
    return reference_catalog()


@pytest.fixture(scope="session")
def seeds():
    return {name: platonic_seed(name) for name in SEEDS}


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)
