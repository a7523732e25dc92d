import pytest

from app.exceptions import ContractViolation, InvariantViolation
from app.graph import Graph, members, set_of
from app.graph.core import full_set, iter_bits, lowest


def test_bit_helpers():
    assert members(0b10110) == [1, 2, 4]
    assert set_of([0, 3]) == 0b1001
    assert list(iter_bits(0)) == []
    assert full_set(4) == 0b1111
    assert lowest(0b1000) == 3


def test_complete_graph_counts():
    g = Graph.complete(6)
    assert g.edge_count() == 15
    assert g.is_complete()
    assert g.degrees() == [5] * 6


def test_from_edge_list_rejects_loops_and_range():
    with pytest.raises(InvariantViolation):
        Graph.from_edge_list(3, [(1, 1)])
    with pytest.raises(InvariantViolation):
        Graph.from_edge_list(3, [(0, 3)])
    with pytest.raises(InvariantViolation):
        Graph(65, [0] * 65)


def test_asymmetric_rows_are_rejected():
    with pytest.raises(InvariantViolation):
        Graph(2, [0b10, 0])


def test_common_neighborhood_of_edge_in_k5():
    g = Graph.complete(5)
    assert g.common_neighborhood(set_of([0, 1])) == set_of([2, 3, 4])
    assert g.common_degree(set_of([0, 1])) == 3
    assert g.closed_neighborhood(set_of([0, 1])) == g.vertices


def test_common_neighborhood_of_empty_set_is_an_error():
    with pytest.raises(ContractViolation):
        Graph.complete(3).common_neighborhood(0)


def test_common_neighborhood_in_c5(c5):
    # 0 and 2 share only vertex 1
    assert c5.common_neighborhood(set_of([0, 2])) == set_of([1])
    assert c5.common_neighborhood(set_of([0, 1])) == 0


def test_induced_subgraph_keeps_index_map(c5):
    sub = c5.induced_subgraph(set_of([0, 2, 3]))
    assert sub.graph.n == 3
    assert sub.index_map == {0: 0, 2: 1, 3: 2}
    assert sub.original == [0, 2, 3]
    assert sub.graph.edges() == [(1, 2)]


def test_delete_vertices(c5):
    path = c5.delete_vertices(set_of([4])).graph
    assert path == Graph.path(4)


def test_connectivity():
    assert Graph.empty(0).is_connected()
    assert Graph.path(5).is_connected()
    assert not Graph.empty(2).is_connected()
    assert not Graph.complete(3).disjoint_union(Graph.complete(2)).is_connected()


def test_complement_of_c5_is_c5(c5):
    comp = c5.complement()
    assert comp.edge_count() == 5
    assert all(d == 2 for d in comp.degrees())


def test_relabel_and_add_vertex(p3):
    swapped = p3.relabel([1, 0, 2])
    assert swapped.edges() == [(0, 1), (0, 2)]
    star = p3.add_vertex(set_of([1]))
    assert star.degree(1) == 3
    assert star.n == 4


def test_equality_and_hash():
    a = Graph.from_edge_list(3, [(0, 1)])
    b = Graph.from_edge_list(3, [(1, 0)])
    assert a == b
    assert len({a, b}) == 1
    assert a != Graph.empty(3)


def test_clique_predicate(c5):
    assert c5.is_clique(set_of([0, 1]))
    assert not c5.is_clique(set_of([0, 2]))
    assert c5.is_clique(0)


def test_single_vertex_common_neighborhood_is_its_row(corpus_flat):
    for g in corpus_flat:
        for v in range(g.n):
            assert g.common_neighborhood(1 << v) == g.neighbors(v)


def test_derived_graphs_stay_symmetric_and_loopless(corpus_flat):
    for g in corpus_flat:
        derived = [g.complement(), g.relabel(list(reversed(range(g.n))))]
        for v in range(g.n):
            derived.append(g.delete_vertices(1 << v).graph)
        # every other vertex
        derived.append(g.induced_subgraph(sum(1 << v for v in range(0, g.n, 2))).graph)
        for h in derived:
            h.check_invariants()
