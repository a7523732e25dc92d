import pytest

from app.chroma import chromatic_number
from app.criticality import (
    extract_critical_subgraph,
    find_clique_split,
    has_clique_drop_property,
    is_double_critical,
    is_kl_critical,
    is_vertex_critical,
)
from app.exceptions import ContractViolation, PreconditionViolation
from app.graph import Graph, contains_clique, from_graph6, set_of


def k5_plus_isolated() -> Graph:
    return Graph.complete(5).disjoint_union(Graph.empty(1))


def test_vertex_criticality(c5):
    assert is_vertex_critical(Graph.complete(6)).holds
    assert is_vertex_critical(c5).holds
    result = is_vertex_critical(c5.disjoint_union(Graph.empty(1)))
    assert not result.holds
    assert result.witness == [5]


def test_vertex_criticality_needs_a_vertex():
    with pytest.raises(ContractViolation):
        is_vertex_critical(Graph.empty(0))


def test_complete_graph_is_critical():
    report = is_kl_critical(Graph.complete(8), 3)
    assert report.verdict
    assert report.kl_witness == [0, 1, 2]
    assert report.vertex_witness is None
    assert report.clique_drop_witness is None


@pytest.mark.parametrize("k", range(2, 10))
def test_complete_graphs_are_critical_for_every_order(k):
    for l in range(2, k + 1):
        assert is_kl_critical(Graph.complete(k), l).verdict


def test_c5_fails_the_clique_drop(c5):
    report = is_kl_critical(c5, 2)
    assert not report.verdict
    assert report.vertex_critical
    assert report.clique_drop is False
    assert report.clique_drop_witness == [0, 1]
    assert report.clique_drop_residual_chi == 2


def test_triangle_free_graph_has_no_triangle(c5):
    report = is_kl_critical(c5, 3)
    assert not report.verdict
    assert not report.has_kl
    assert report.kl_witness is None


def test_short_circuit_skips_later_clauses(c5):
    report = is_kl_critical(c5, 3, short_circuit=True)
    assert report.vertex_critical is None
    assert report.clique_drop is None
    report = is_kl_critical(c5.disjoint_union(Graph.empty(1)), 2, short_circuit=True)
    assert report.vertex_critical is False
    assert report.clique_drop is None


def test_clique_order_below_two_is_rejected(c5):
    with pytest.raises(ContractViolation):
        is_kl_critical(c5, 1)


def test_clique_drop_property():
    assert has_clique_drop_property(k5_plus_isolated(), 2).holds
    assert has_clique_drop_property(Graph.complete(7), 3).holds
    result = has_clique_drop_property(Graph.complete(5).disjoint_union(Graph.complete(2)), 2)
    assert not result.holds
    assert result.witness == [5, 6]


def test_clique_drop_needs_a_clique(c5):
    with pytest.raises(PreconditionViolation):
        has_clique_drop_property(c5, 3)


def test_double_critical(c5):
    assert is_double_critical(Graph.complete(5))
    assert not is_double_critical(c5)


def test_clique_split(c5):
    assert find_clique_split(Graph.complete(6), 2) is None
    clique, residual = find_clique_split(c5, 2)
    assert clique == [0, 1]
    assert residual == 2


def test_extraction_drops_isolated_vertex():
    result = extract_critical_subgraph(k5_plus_isolated(), 2)
    assert from_graph6(result.graph6) == Graph.complete(5)
    assert result.kept_vertices == [0, 1, 2, 3, 4]
    assert result.chi == 5
    assert result.report.verdict
    assert result.finding is None


def test_extraction_keeps_critical_graph():
    result = extract_critical_subgraph(Graph.complete(6), 3)
    assert from_graph6(result.graph6) == Graph.complete(6)


def test_extraction_with_triangle_order():
    g = Graph.complete(5).disjoint_union(Graph.path(3))
    result = extract_critical_subgraph(g, 3)
    assert from_graph6(result.graph6) == Graph.complete(5)


def test_extraction_precondition():
    # K4 plus a vertex joined to 2 and 3: deleting the edge {0, 1} leaves the triangle {2, 3, 4}
    g = Graph.complete(4).add_vertex(set_of([2, 3]))
    drop = has_clique_drop_property(g, 2)
    assert not drop.holds
    assert drop.witness == [0, 1]
    with pytest.raises(PreconditionViolation):
        extract_critical_subgraph(g, 2)


def test_extraction_over_corpus(corpus_flat):
    for g in corpus_flat:
        if not contains_clique(g, 2) or not has_clique_drop_property(g, 2).holds:
            continue
        result = extract_critical_subgraph(g, 2)
        assert result.finding is None
        assert result.report.verdict
        assert result.chi == chromatic_number(g).chi


def test_critical_graphs_have_large_minimum_degree(corpus):
    for g in corpus[6]:
        report = is_kl_critical(g, 2)
        if report.verdict:
            assert g.min_degree() >= report.chi - 1
            assert g.is_complete()
