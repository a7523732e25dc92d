import random
from itertools import combinations, permutations

import networkx as nx
import pytest

from app.chroma import chromatic_number, dsatur, verify_coloring
from app.exceptions import ContractViolation
from app.graph import Graph, set_of
from app.kempe import apply_chain, audit_prescribed_path, build_chain, find_prescribed_path
from app.schema import Coloring, ColorPermutation
from tests.oracles import to_networkx


def swap(k: int, a: int, b: int) -> ColorPermutation:
    return ColorPermutation.from_cycle(k, [a, b])


def test_two_colour_chain_on_path(p3):
    phi = Coloring(colors=(1, 2, 1), k=2)
    pi = swap(2, 1, 2)
    chain = build_chain(p3, phi, pi, 0)
    assert chain.layers == [[1], [0, 2]]
    assert chain.members == [0, 1, 2]
    assert chain.member_set == set_of([0, 1, 2])
    assert apply_chain(p3, phi, pi, chain).colors == (2, 1, 2)


def test_identity_permutation_fixes_root(petersen):
    phi = chromatic_number(petersen).witness_coloring
    pi = ColorPermutation.identity(phi.k)
    for x in range(petersen.n):
        chain = build_chain(petersen, phi, pi, x)
        assert chain.members == [x]
        assert chain.layers == []
        assert apply_chain(petersen, phi, pi, chain) == phi


def test_four_cycle_spans_complete_graph():
    k4 = Graph.complete(4)
    phi = Coloring(colors=(1, 2, 3, 4), k=4)
    pi = ColorPermutation.from_cycle(4, [1, 2, 3, 4])
    chain = build_chain(k4, phi, pi, 0)
    assert chain.members == [0, 1, 2, 3]
    assert chain.layers == [[1], [2], [3]]
    assert apply_chain(k4, phi, pi, chain).colors == (2, 3, 4, 1)


def test_random_chains_stay_proper():
    rng = random.Random(1234)
    for _ in range(1000):
        n = rng.randint(1, 12)
        p = rng.random()
        g = Graph.from_edge_list(
            n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        )
        colors = dsatur(g)
        k = max(colors) + rng.randint(0, 2)
        phi = Coloring(colors=tuple(colors), k=k)
        cycle = rng.sample(range(1, k + 1), rng.randint(1, k))
        pi = ColorPermutation.from_cycle(k, cycle)
        x = rng.randrange(n)
        chain = build_chain(g, phi, pi, x)
        allowed = set(pi.cycle_of(phi.color_of(x)))
        assert all(phi.color_of(v) in allowed for v in chain.members)
        assert verify_coloring(g, apply_chain(g, phi, pi, chain))


def test_transposition_matches_kempe_component(corpus):
    for g in corpus[6]:
        phi = chromatic_number(g).witness_coloring
        G = to_networkx(g)
        for a, b in combinations(range(1, phi.k + 1), 2):
            pi = swap(phi.k, a, b)
            two = G.subgraph(v for v in range(g.n) if phi.color_of(v) in (a, b))
            for x in two.nodes:
                chain = build_chain(g, phi, pi, x)
                assert chain.members == sorted(nx.node_connected_component(two, x))


def test_chain_rejects_bad_inputs(p3):
    pi = swap(2, 1, 2)
    with pytest.raises(ContractViolation):
        build_chain(p3, Coloring(colors=(1, 1, 2), k=2), pi, 0)
    with pytest.raises(ContractViolation):
        build_chain(p3, Coloring(colors=(1, 0, 1), k=2), pi, 0)
    with pytest.raises(ContractViolation):
        build_chain(p3, Coloring(colors=(1, 2, 1), k=2), pi, 3)
    with pytest.raises(ContractViolation):
        build_chain(p3, Coloring(colors=(1, 2, 3), k=3), pi, 0)


def test_stale_chain_is_rejected(p3):
    chain = build_chain(p3, Coloring(colors=(1, 2, 1), k=2), swap(2, 1, 2), 0)
    with pytest.raises(ContractViolation):
        apply_chain(p3, Coloring(colors=(1, 2, 3), k=3), swap(3, 1, 2), chain)


def complete_instance(k: int, l: int):
    """K_k with clique {0..l-1}; the other vertices get distinct colours 1..k-l."""
    g = Graph.complete(k)
    colors = (0,) * l + tuple(range(1, k - l + 1))
    return g, set_of(range(l)), Coloring(colors=colors, k=k - l)


def test_path_through_complete_graph():
    g, clique, phi = complete_instance(6, 2)
    assert find_prescribed_path(g, clique, phi, (1, 3), 0, 1) == [0, 2, 4, 1]
    assert find_prescribed_path(g, clique, phi, (), 0, 1) == [0, 1]


@pytest.mark.parametrize("k", range(4, 9))
@pytest.mark.parametrize("l", [2, 3])
def test_paths_exist_in_complete_graphs(k, l):
    g, clique, phi = complete_instance(k, l)
    palette = range(1, phi.k + 1)
    for t in range(0, 4):
        for seq in permutations(palette, t):
            for x, y in permutations(range(l), 2):
                path = find_prescribed_path(g, clique, phi, seq, x, y)
                assert path is not None
                assert [phi.color_of(v) for v in path[1:-1]] == list(seq)
                assert audit_prescribed_path(g, clique, phi, seq, x, y) is None


def test_path_absent_in_cycle(c5):
    phi = Coloring(colors=(0, 0, 1, 2, 1), k=2)
    clique = set_of([0, 1])
    for c in (1, 2):
        assert find_prescribed_path(c5, clique, phi, (c,), 0, 1) is None
    # C5 is not K_2-critical, so the absence is no finding
    assert audit_prescribed_path(c5, clique, phi, (1,), 0, 1) is None


def test_path_preconditions(c5):
    phi = Coloring(colors=(0, 0, 1, 2, 1), k=2)
    clique = set_of([0, 1])
    bad = [
        (clique, phi, (1,), 0, 0),
        (clique, phi, (1,), 0, 2),
        (set_of([0, 2]), Coloring(colors=(0, 1, 0, 2, 1), k=2), (1,), 0, 2),
        (clique, phi, (1, 1), 0, 1),
        (clique, phi, (3,), 0, 1),
        (clique, Coloring(colors=(0, 0, 1, 1, 2), k=2), (1,), 0, 1),
        (clique, Coloring(colors=(1, 0, 1, 2, 1), k=2), (1,), 0, 1),
    ]
    for args in bad:
        with pytest.raises(ContractViolation):
            find_prescribed_path(c5, *args)
