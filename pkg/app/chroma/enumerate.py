from typing import Iterator, List, Optional

from app.config import config
from app.exceptions import BudgetExceeded, ContractViolation
from app.graph.core import Graph
from app.schema import Coloring


def canonical_leaf_estimate(n: int, k: int) -> int:
    """Number of set partitions of n vertices into at most k blocks.

    This is the leaf count of the canonical walk before properness pruning.
    """
    # row[j] = S(i, j) while i runs up to n
    row = [1] + [0] * k
    for _ in range(n):
        row = [0] + [j * row[j] + row[j - 1] for j in range(1, k + 1)]
    return sum(row)


def enumerate_colorings(g: Graph, k: int, budget: Optional[int] = None) -> Iterator[Coloring]:
    """All proper k-colourings up to colour permutation.

    The first vertex of each colour class fixes the class label: vertex v may
    only use colours 1..(largest colour so far + 1). Raises BudgetExceeded
    before walking when the estimate exceeds the budget.
    """
    if k < 0:
        raise ContractViolation(f"palette size must be non-negative, got {k}")
    budget = config.coloring.enumeration_budget if budget is None else budget
    estimate = canonical_leaf_estimate(g.n, k)
    if estimate > budget:
        raise BudgetExceeded(
            f"{estimate} canonical colourings to walk for n={g.n}, k={k}; budget is {budget}"
        )
    return _walk(g, k, [0] * g.n, 0, 0)


def _walk(g: Graph, k: int, colors: List[int], v: int, top: int) -> Iterator[Coloring]:
    if v == g.n:
        yield Coloring(colors=tuple(colors), k=k)
        return
    lower = g.adj[v] & ((1 << v) - 1)
    blocked = 0
    u_mask = lower
    while u_mask:
        low = u_mask & -u_mask
        blocked |= 1 << colors[low.bit_length() - 1]
        u_mask ^= low
    for c in range(1, min(top + 1, k) + 1):
        if blocked >> c & 1:
            continue
        colors[v] = c
        yield from _walk(g, k, colors, v + 1, max(top, c))
    colors[v] = 0


def count_colorings(g: Graph, k: int, budget: Optional[int] = None) -> int:
    return sum(1 for _ in enumerate_colorings(g, k, budget))


def is_uniquely_colorable(g: Graph, k: int, budget: Optional[int] = None) -> bool:
    """True iff exactly one k-colouring exists up to renaming colours."""
    stream = enumerate_colorings(g, k, budget)
    first = next(stream, None)
    return first is not None and next(stream, None) is None
