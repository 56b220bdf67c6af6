import pytest

from isolation import enumerate_connected


@pytest.fixture(scope="session")
def census():
    """Connected census by order, 1..8 (backed by the library's level cache)."""
    return {n: list(enumerate_connected(n)) for n in range(1, 9)}
