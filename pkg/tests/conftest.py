import pytest

import colorpart as cp

N_DEEP = 8192


@pytest.fixture(scope="session")
def classical_spec():
    return cp.validate([1], [1])


@pytest.fixture(scope="session")
def remark_spec():
    return cp.validate([1, 3], [2, 2])


@pytest.fixture(scope="session")
def ptable_2000():
    return cp.partition_table(2000)


@pytest.fixture(scope="session")
def classical_series_deep(classical_spec):
    """Classical series to n=8192; shared because the O(N^2) build costs seconds."""
    return cp.g_series_divisor(classical_spec, N_DEEP)


@pytest.fixture(scope="session")
def remark_series_deep(remark_spec):
    return cp.g_series_divisor(remark_spec, N_DEEP)
