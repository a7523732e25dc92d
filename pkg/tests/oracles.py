from itertools import product
from typing import List, Optional

import networkx as nx

from app.graph import Graph


def to_networkx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def from_networkx(G: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(G.nodes()))}
    return Graph.from_edge_list(len(index), [(index[u], index[v]) for u, v in G.edges()])


def naive_colorable(g: Graph, k: int) -> Optional[List[int]]:
    """Plain backtracking in vertex order; independent of the solver."""
    colors = [0] * g.n

    def place(v: int) -> bool:
        if v == g.n:
            return True
        for c in range(1, k + 1):
            if all(colors[u] != c for u in range(v) if g.has_edge(u, v)):
                colors[v] = c
                if place(v + 1):
                    return True
        colors[v] = 0
        return False

    return colors if place(0) else None


def naive_chi(g: Graph) -> int:
    k = 0
    while naive_colorable(g, k) is None:
        k += 1
    return k


def brute_force_colorings(g: Graph, k: int) -> int:
    """Proper colourings with colours 1..k, not up to permutation."""
    count = 0
    for colors in product(range(1, k + 1), repeat=g.n):
        if all(colors[u] != colors[v] for u, v in g.edges()):
            count += 1
    return count


def petersen_graph() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((i + 5, (i + 2) % 5 + 5))
    return Graph.from_edge_list(10, edges)


def c5_with_dominating_triangle() -> Graph:
    """C5 on 0..4 plus a triangle 5, 6, 7 joined to every cycle vertex."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5, 6), (5, 7), (6, 7)]
    edges += [(t, v) for t in (5, 6, 7) for v in range(5)]
    return Graph.from_edge_list(8, edges)


