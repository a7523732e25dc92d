"""Canonical labelling by degree refinement and exhaustive individualisation.

The search tree individualises one vertex of the first non-singleton cell at a
time and refines to an equitable ordered partition. Every discrete leaf gives a
relabelled adjacency certificate; the largest certificate is canonical. Two
children of a node are interchangeable when their vertices are twins (equal
neighbourhoods apart from each other), since swapping twins is an automorphism
fixing the node, so only one of each twin class is expanded.
"""

from typing import List, Optional, Sequence, Tuple

from app.graph.core import Graph, VertexSet, bit, iter_bits


Certificate = Tuple[int, ...]


def refine(adj: Sequence[int], cells: List[VertexSet]) -> List[VertexSet]:
    """Coarsest equitable refinement of an ordered partition.

    Cells split by neighbour counts into each splitter cell and the pieces are
    ordered by count, so the result only depends on the graph up to isomorphism.
    """
    cells = list(cells)
    stable = False
    while not stable:
        stable = True
        for splitter in cells:
            refined = []
            for cell in cells:
                if not cell & (cell - 1):
                    refined.append(cell)
                    continue
                groups = {}
                for v in iter_bits(cell):
                    key = (adj[v] & splitter).bit_count()
                    groups[key] = groups.get(key, 0) | (1 << v)
                if len(groups) > 1:
                    stable = False
                    refined.extend(groups[key] for key in sorted(groups))
                else:
                    refined.append(cell)
            if not stable:
                cells = refined
                break
    return cells


def _are_twins(adj: Sequence[int], u: int, v: int) -> bool:
    return adj[u] & ~(1 << v) == adj[v] & ~(1 << u)


def _certificate(adj: Sequence[int], order: Sequence[int]) -> Certificate:
    position = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        row = 0
        for u in iter_bits(adj[v]):
            row |= 1 << position[u]
        rows.append(row)
    return tuple(rows)


def canonical_labeling(
    g: Graph, partition: Optional[List[VertexSet]] = None
) -> Tuple[Certificate, List[int]]:
    """Return the canonical certificate and the vertex order that realises it.

    ``partition`` is an ordered colouring of the vertices; isomorphisms must
    respect it. The default is the unit partition.
    """
    cells = [c for c in (partition if partition is not None else [g.vertices]) if c]
    best: list = [None, []]
    _search(g.adj, cells, best)
    return (best[0] if best[0] is not None else ()), best[1]


def _search(adj: Sequence[int], cells: List[VertexSet], best: list) -> None:
    cells = refine(adj, cells)
    target_index = next((i for i, c in enumerate(cells) if c & (c - 1)), None)
    if target_index is None:
        order = [c.bit_length() - 1 for c in cells]
        cert = _certificate(adj, order)
        if best[0] is None or cert > best[0]:
            best[0], best[1] = cert, order
        return

    target = cells[target_index]
    explored: List[int] = []
    for v in iter_bits(target):
        if any(_are_twins(adj, u, v) for u in explored):
            continue
        explored.append(v)
        child = cells[:target_index] + [bit(v), target & ~bit(v)] + cells[target_index + 1 :]
        _search(adj, child, best)


def canonical_certificate(g: Graph) -> Certificate:
    return canonical_labeling(g)[0]


def canonical_form(g: Graph) -> Graph:
    """The canonical representative of g's isomorphism class."""
    _, order = canonical_labeling(g)
    return g.relabel(order)


def rooted_certificate(g: Graph, root: int) -> Certificate:
    """Certificate of the pair (g, root); equal iff an isomorphism maps root to root."""
    return canonical_labeling(g, [bit(root), g.vertices & ~bit(root)])[0]


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and canonical_certificate(g) == canonical_certificate(h)
