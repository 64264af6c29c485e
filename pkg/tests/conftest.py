import random

import pytest

from indcount.graph import build_graph


@pytest.fixture
def rng():
    return random.Random(12345)


def K(n):
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
