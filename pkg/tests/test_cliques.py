from itertools import combinations

import networkx as nx
import pytest

from app.exceptions import ContractViolation
from app.graph import (
    Graph,
    clique_number,
    contains_clique,
    enumerate_cliques,
    find_claw,
    independence_number,
    is_claw_free,
    maximum_clique,
    members,
)
from app.harness.enumerate import generate_levels
from tests.oracles import to_networkx


def test_k4_triangles_in_lexicographic_order():
    triangles = [members(c) for c in enumerate_cliques(Graph.complete(4), 3)]
    assert triangles == [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]


def test_clique_order_must_be_positive():
    with pytest.raises(ContractViolation):
        list(enumerate_cliques(Graph.complete(3), 0))


def test_oversized_cliques_are_absent(c5):
    assert list(enumerate_cliques(c5, 6)) == []
    assert not contains_clique(c5, 3)


def test_numbers_on_named_graphs(c5, petersen, claw):
    assert clique_number(c5) == 2
    assert independence_number(c5) == 2
    assert clique_number(petersen) == 2
    assert independence_number(petersen) == 4
    assert independence_number(claw) == 3
    assert clique_number(Graph.empty(0)) == 0


def test_maximum_clique_is_a_clique(corpus_flat):
    for g in corpus_flat:
        best = maximum_clique(g)
        assert g.is_clique(best)
        assert best.bit_count() == max(len(c) for c in nx.find_cliques(to_networkx(g)))


def test_clique_enumeration_matches_brute_force(corpus):
    for g in corpus[6]:
        for l in range(1, 5):
            expected = [
                list(c) for c in combinations(range(g.n), l) if all(g.has_edge(u, v) for u, v in combinations(c, 2))
            ]
            assert [members(c) for c in enumerate_cliques(g, l)] == expected


def test_claw_detection(claw, c5, petersen):
    assert find_claw(claw) == (0, 1, 2, 3)
    assert is_claw_free(c5)
    assert is_claw_free(Graph.complete(6))
    assert not is_claw_free(petersen)


def test_claw_witness_is_induced(corpus):
    for g in corpus[6]:
        found = find_claw(g)
        if found is None:
            continue
        center, a, b, c = found
        assert all(g.has_edge(center, leaf) for leaf in (a, b, c))
        assert not any(g.has_edge(u, v) for u, v in combinations((a, b, c), 2))


def has_induced_claw(g: Graph) -> bool:
    for quad in combinations(range(g.n), 4):
        for center in quad:
            leaves = [v for v in quad if v != center]
            if all(g.has_edge(center, v) for v in leaves) and not any(
                g.has_edge(u, v) for u, v in combinations(leaves, 2)
            ):
                return True
    return False


def test_claw_search_matches_exhaustive_scan(corpus_flat):
    for g in corpus_flat:
        assert (find_claw(g) is not None) == has_induced_claw(g)


@pytest.mark.slow
def test_claw_search_matches_exhaustive_scan_on_eight_vertices():
    for g in list(generate_levels(8))[-1]:
        assert (find_claw(g) is not None) == has_induced_claw(g)
