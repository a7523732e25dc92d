from app.exceptions import ContractViolation
from app.graph.core import Graph
from app.schema import Coloring


def is_proper(g: Graph, c: Coloring) -> bool:
    """True when no edge between two coloured vertices is monochromatic."""
    if c.n != g.n:
        raise ContractViolation(f"colouring covers {c.n} vertices, graph has {g.n}")
    colors = c.colors
    for u, v in g.edges():
        if colors[u] and colors[u] == colors[v]:
            return False
    return True


def verify_coloring(g: Graph, c: Coloring) -> bool:
    """True iff the total colouring c has no monochromatic edge."""
    if not c.is_total:
        raise ContractViolation("verify_coloring needs a total colouring")
    return is_proper(g, c)
