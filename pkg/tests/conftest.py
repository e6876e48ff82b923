import random
from itertools import combinations

import pytest
from hypothesis import strategies as st

from weakiasi.graph import Graph, random_graph


def petersen() -> Graph:
    outer = [(f"o{i}", f"o{(i + 1) % 5}") for i in range(5)]
    spokes = [(f"o{i}", f"i{i}") for i in range(5)]
    inner = [(f"i{i}", f"i{(i + 2) % 5}") for i in range(5)]
    return Graph([f"o{i}" for i in range(5)] + [f"i{i}" for i in range(5)], outer + spokes + inner)


@st.composite
def graphs(draw, min_vertices=1, max_vertices=8):
    n = draw(st.integers(min_value=min_vertices, max_value=max_vertices))
    vs = [f"v{i}" for i in range(1, n + 1)]
    pairs = list(combinations(vs, 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(vs, [e for e, k in zip(pairs, keep) if k])


@st.composite
def intsets(draw, max_element=63, max_size=8):
    from weakiasi.sumset import IntSet

    return IntSet(draw(st.sets(st.integers(0, max_element), min_size=1, max_size=max_size)))


@pytest.fixture(scope="session")
def random_corpus():
    """500 seeded random graphs with 1..14 vertices and varied density."""
    rng = random.Random(20241016)
    return [random_graph(rng.randint(1, 14), rng.random(), rng) for _ in range(500)]
