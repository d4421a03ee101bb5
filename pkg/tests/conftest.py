import pytest

from hamforge.corpus import enumerate_triangulations


@pytest.fixture(scope="session")
def triangulations_by_n():
    """Session cache of the exhaustive corpus, keyed by n on demand."""
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = list(enumerate_triangulations(n))
        return cache[n]

    return get
