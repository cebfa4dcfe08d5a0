import pytest


@pytest.fixture(scope="session")
def target_cache(tmp_path_factory):
    """Shared certified-target cache so each search runs once per session."""
    return tmp_path_factory.mktemp("target-cache")
