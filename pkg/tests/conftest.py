import pytest

from bkd.etaseries import delta_table


@pytest.fixture(scope="session")
def table1():
    """delta_1 table large enough for every 5000-range scan (incl. d=5)."""
    return delta_table(1, 5012)


@pytest.fixture(scope="session")
def table2():
    return delta_table(2, 5012)
