import random

import pytest

from irrlab.digraph import Digraph


def random_digraph(rng: random.Random, n: int) -> Digraph:
    """Uniform pair-state digraph: each unordered pair none / -> / <- / both."""
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            state = rng.randrange(4)
            if state == 1:
                arcs.append((u, v))
            elif state == 2:
                arcs.append((v, u))
            elif state == 3:
                arcs.append((u, v))
                arcs.append((v, u))
    return Digraph(n, arcs)


@pytest.fixture(scope="session")
def random_corpus() -> list[Digraph]:
    """Deterministic corpus of random digraphs with 2..8 vertices."""
    rng = random.Random(20240611)
    return [random_digraph(rng, rng.randint(2, 8)) for _ in range(2000)]
