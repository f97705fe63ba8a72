import pytest

from serrecheck import new_semigroup

# Pointed semigroup in Z^3 whose ring is regular in codimension 2 but not
# normal: the cone point (1,1,1) is missing from the semigroup.
NONNORMAL_GENS = (
    (1, 0, 0),
    (1, 3, 0),
    (1, 0, 3),
    (1, 1, 0),
    (1, 2, 0),
    (1, 0, 1),
    (1, 0, 2),
    (1, 2, 1),
    (1, 1, 2),
)


def orthant_gens(n):
    return tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))


@pytest.fixture(scope="session")
def nonnormal_sgp():
    return new_semigroup(NONNORMAL_GENS)


@pytest.fixture(scope="session")
def orthant2_sgp():
    return new_semigroup(orthant_gens(2))
