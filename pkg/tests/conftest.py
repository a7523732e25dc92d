from typing import Dict, List

import pytest

from app.graph import Graph
from app.harness.enumerate import generate_levels
from tests.oracles import petersen_graph


@pytest.fixture
def c5() -> Graph:
    return Graph.cycle(5)


@pytest.fixture
def p3() -> Graph:
    return Graph.path(3)


@pytest.fixture
def claw() -> Graph:
    return Graph.from_edge_list(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def petersen() -> Graph:
    return petersen_graph()


@pytest.fixture(scope="session")
def corpus() -> Dict[int, List[Graph]]:
    """Every graph on 1..7 vertices, one per isomorphism class."""
    return {level[0].n: level for level in generate_levels(7)}


@pytest.fixture(scope="session")
def corpus_flat(corpus) -> List[Graph]:
    return [g for n in sorted(corpus) for g in corpus[n]]
