import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from quiddity import enumeration


@pytest.fixture(scope="session")
def three_periodic_pool():
    """All 3-periodic dissections for n = 1..9, keyed by n."""
    return {
        n: list(enumeration.enumerate_dissections(n, enumeration.periodic_filter(3)))
        for n in range(1, 10)
    }
