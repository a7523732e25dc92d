"""Exact colouring by DSATUR bounds and branch-and-bound.

The upper bound comes from greedy DSATUR, the lower bound from a maximum
clique. Each palette size between them is decided by a complete backtracking
search that pre-colours the maximum clique, branches on the most saturated
vertex and lets a vertex open at most one fresh colour. Ties always go to the
lowest vertex index, so identical graphs give identical certificates.
"""

from typing import List, Optional, Sequence

from app.exceptions import ContractViolation
from app.graph.cliques import maximum_clique
from app.graph.core import Graph, VertexSet, iter_bits, members
from app.schema import ChiCertificate, Coloring


def dsatur(g: Graph) -> List[int]:
    """Greedy DSATUR colouring with colours starting at 1."""
    adj = g.adj
    colors = [0] * g.n
    seen = [0] * g.n
    uncolored = g.vertices
    while uncolored:
        best = -1
        best_key = None
        for v in iter_bits(uncolored):
            key = (seen[v].bit_count(), (adj[v] & uncolored).bit_count())
            if best_key is None or key > best_key:
                best, best_key = v, key
        c = 1
        while seen[best] >> c & 1:
            c += 1
        colors[best] = c
        for u in iter_bits(adj[best]):
            seen[u] |= 1 << c
        uncolored &= ~(1 << best)
    return colors


def _exact(adj: Sequence[int], n: int, k: int, clique: VertexSet) -> Optional[List[int]]:
    colors = [0] * n
    classes = [0] * k
    used = 0
    for v in iter_bits(clique):
        classes[used] |= 1 << v
        colors[v] = used + 1
        used += 1
    uncolored = ((1 << n) - 1) & ~clique
    if _extend(adj, k, colors, classes, used, uncolored):
        return colors
    return None


def _extend(adj, k: int, colors: List[int], classes: List[int], used: int, uncolored: int) -> bool:
    if not uncolored:
        return True
    best = -1
    best_key = None
    best_forbidden = 0
    for v in iter_bits(uncolored):
        row = adj[v]
        forbidden = 0
        for c in range(used):
            if classes[c] & row:
                forbidden |= 1 << c
        saturation = forbidden.bit_count()
        if saturation >= k:
            return False
        key = (saturation, (row & uncolored).bit_count())
        if best_key is None or key > best_key:
            best, best_key, best_forbidden = v, key, forbidden

    vbit = 1 << best
    rest = uncolored & ~vbit
    for c in range(min(used + 1, k)):
        if best_forbidden >> c & 1:
            continue
        classes[c] |= vbit
        colors[best] = c + 1
        if _extend(adj, k, colors, classes, max(used, c + 1), rest):
            return True
        classes[c] &= ~vbit
    colors[best] = 0
    return False


def is_k_colorable(g: Graph, k: int) -> Optional[Coloring]:
    """A proper k-colouring, or None when exhaustive search proves none exists."""
    if k < 0:
        raise ContractViolation(f"palette size must be non-negative, got {k}")
    if g.n == 0:
        return Coloring(colors=(), k=k)
    if k == 0:
        return None
    clique = maximum_clique(g)
    if clique.bit_count() > k:
        return None
    colors = _exact(g.adj, g.n, k, clique)
    if colors is None:
        return None
    return Coloring(colors=tuple(colors), k=k)


def chromatic_number(g: Graph) -> ChiCertificate:
    if g.n == 0:
        return ChiCertificate(chi=0, witness_coloring=Coloring(colors=(), k=0))
    clique = maximum_clique(g)
    lower = clique.bit_count()
    upper_colors = dsatur(g)
    upper = max(upper_colors)
    for k in range(lower, upper):
        colors = _exact(g.adj, g.n, k, clique)
        if colors is not None:
            return ChiCertificate(
                chi=k,
                witness_coloring=Coloring(colors=tuple(colors), k=k),
                lower_bound_clique=members(clique),
            )
    return ChiCertificate(
        chi=upper,
        witness_coloring=Coloring(colors=tuple(upper_colors), k=upper),
        lower_bound_clique=members(clique),
    )


def chi(g: Graph) -> int:
    return chromatic_number(g).chi
