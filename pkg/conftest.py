import pytest

from octahedral.catalog import binary_octahedral, named_table, subgroup_h, subgroup_k


@pytest.fixture(scope="session")
def g():
    return binary_octahedral()


@pytest.fixture(scope="session")
def h(g):
    return subgroup_h(g)


@pytest.fixture(scope="session")
def k(g):
    return subgroup_k(g)


@pytest.fixture(scope="session")
def table_g():
    return named_table("G")


@pytest.fixture(scope="session")
def table_h():
    return named_table("H")
