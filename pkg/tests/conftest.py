from functools import lru_cache

import pytest

from nashblowup.oracle import cross_check


@lru_cache(maxsize=None)
def _cross(n):
    return cross_check(n)


@pytest.fixture(scope="session")
def oracle_report():
    """Cached exhaustive cross-check; n = 3 costs several seconds."""
    return _cross
