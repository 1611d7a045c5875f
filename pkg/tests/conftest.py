import pytest

from sgranks.brandt import build_brandt
from sgranks.endo import enumerate_endomorphisms_structural

from _tablegen import random_semigroup_pool, special_tables


@pytest.fixture(scope="session")
def b_tables():
    """B_1..B_3 Cayley tables keyed by n."""
    return {n: build_brandt(n) for n in (1, 2, 3)}


@pytest.fixture(scope="session")
def monoids():
    """End(B_1)..End(B_4) keyed by n."""
    return {n: enumerate_endomorphisms_structural(n) for n in (1, 2, 3, 4)}


@pytest.fixture(scope="session")
def random_tables():
    return random_semigroup_pool()


@pytest.fixture(scope="session")
def degenerate_tables():
    return special_tables()
