"""Isomorph-free generation of small graphs by canonical augmentation.

Each graph on n - 1 vertices is extended by a new vertex joined to every
possible neighbour subset. A child is kept only when the new vertex lies in
the orbit of the child's canonical deletion vertex, which is the vertex with
the largest (degree, neighbour degrees) invariant and, among those, the
largest rooted certificate. Accepted siblings are deduplicated by that
certificate.
"""

from typing import Iterator, List, Sequence, Tuple

from app.exceptions import UnsupportedRange
from app.graph.canon import Certificate, rooted_certificate
from app.graph.core import Graph, iter_bits
from app.logger import logger


MIN_ORDER = 1
MAX_ORDER = 10


def _invariant(adj: Sequence[int], v: int) -> Tuple[int, Tuple[int, ...]]:
    row = adj[v]
    return row.bit_count(), tuple(sorted(adj[u].bit_count() for u in iter_bits(row)))


def _canonical_root(child: Graph) -> Tuple[bool, Certificate]:
    """Whether the last vertex is a canonical deletion, and its rooted certificate."""
    adj = child.adj
    new = child.n - 1
    invariants = [_invariant(adj, v) for v in range(child.n)]
    top = max(invariants)
    cert = rooted_certificate(child, new)
    if invariants[new] != top:
        return False, cert
    for v in range(new):
        if invariants[v] == top and rooted_certificate(child, v) > cert:
            return False, cert
    return True, cert


def augment(parent: Graph) -> List[Graph]:
    """Children of ``parent`` accepted by canonical augmentation, one per class."""
    seen = set()
    children = []
    for neighbors in range(1 << parent.n):
        child = parent.add_vertex(neighbors)
        accepted, cert = _canonical_root(child)
        if not accepted or cert in seen:
            continue
        seen.add(cert)
        children.append(child)
    return children


def _check_order(n: int) -> None:
    if not MIN_ORDER <= n <= MAX_ORDER:
        raise UnsupportedRange(
            f"internal enumeration covers {MIN_ORDER} <= n <= {MAX_ORDER}, got n={n}; "
            f"pipe graph6 lines from an external generator and use graph6-stream mode"
        )


def generate_levels(n_max: int) -> Iterator[List[Graph]]:
    """Yield the isomorph-free graph lists for n = 1, 2, ..., n_max."""
    _check_order(n_max)
    return _levels(n_max)


def _levels(n_max: int) -> Iterator[List[Graph]]:
    level = [Graph.empty(1)]
    yield level
    for n in range(2, n_max + 1):
        level = [child for parent in level for child in augment(parent)]
        logger.info(f"generated {len(level)} graphs on {n} vertices")
        yield level


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of graphs on n vertices."""
    _check_order(n)
    return _final_level(n)


def _final_level(n: int) -> Iterator[Graph]:
    for level in _levels(n):
        if level[0].n == n:
            yield from level
