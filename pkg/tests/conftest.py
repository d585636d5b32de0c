import pytest

from youngwalls.cartan import AffineType, fundamental_weight
from youngwalls.perfect import perfect_crystal

L0, L1, L2 = (fundamental_weight(i) for i in range(3))
D4, G2 = AffineType.D4_3, AffineType.G2_1
CASES = [(D4, L0), (G2, L0), (G2, L2)]


@pytest.fixture(scope="session")
def b1():
    return perfect_crystal(D4).graph


@pytest.fixture(scope="session")
def b1p():
    return perfect_crystal(G2).graph
