import pytest

from partlab import p_oracle


@pytest.fixture(scope="session")
def oracle_counts():
    """p(0..40) by brute enumeration, shared across the session."""
    return [p_oracle(n) for n in range(41)]
