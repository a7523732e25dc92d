from typing import Iterator, Optional, Tuple

from app.exceptions import ContractViolation
from app.graph.core import Graph, VertexSet, iter_bits


def enumerate_cliques(g: Graph, l: int) -> Iterator[VertexSet]:
    """Yield every l-clique exactly once, in lexicographic order of member lists."""
    if l < 1:
        raise ContractViolation(f"clique size must be at least 1, got {l}")
    if l > g.n:
        return
    yield from _extend(g.adj, 0, g.vertices, l)


def _extend(adj, clique: VertexSet, candidates: VertexSet, need: int) -> Iterator[VertexSet]:
    if need == 0:
        yield clique
        return
    while candidates.bit_count() >= need:
        low = candidates & -candidates
        v = low.bit_length() - 1
        candidates ^= low
        yield from _extend(adj, clique | low, candidates & adj[v], need - 1)


def contains_clique(g: Graph, l: int) -> bool:
    return next(enumerate_cliques(g, l), None) is not None


def maximum_clique(g: Graph) -> VertexSet:
    """A maximum clique; ties resolve to the first one met in ascending branch order."""
    best = [0, 0]
    _branch(g.adj, 0, 0, g.vertices, best)
    return best[0]


def _branch(adj, clique: VertexSet, size: int, candidates: VertexSet, best: list) -> None:
    if not candidates:
        if size > best[1]:
            best[0], best[1] = clique, size
        return
    while candidates:
        if size + candidates.bit_count() <= best[1]:
            return
        low = candidates & -candidates
        v = low.bit_length() - 1
        candidates ^= low
        _branch(adj, clique | low, size + 1, candidates & adj[v], best)


def clique_number(g: Graph) -> int:
    """ω(G)."""
    return maximum_clique(g).bit_count()


def maximum_independent_set(g: Graph) -> VertexSet:
    return maximum_clique(g.complement())


def independence_number(g: Graph) -> int:
    """α(G), as the clique number of the complement."""
    return maximum_independent_set(g).bit_count()


def find_claw(g: Graph) -> Optional[Tuple[int, int, int, int]]:
    """An induced K_{1,3} as (center, leaf, leaf, leaf), or None when claw-free."""
    adj = g.adj
    for center in range(g.n):
        nbrs = adj[center]
        for a in iter_bits(nbrs):
            after_a = nbrs & ~adj[a] & ~((2 << a) - 1)
            for b in iter_bits(after_a):
                rest = after_a & ~adj[b] & ~((2 << b) - 1)
                if rest:
                    c = (rest & -rest).bit_length() - 1
                    return center, a, b, c
    return None


def is_claw_free(g: Graph) -> bool:
    return find_claw(g) is None
