"""Immutable simple graphs over vertices 0..n-1 stored as integer bit rows.

A vertex set is a plain ``int`` whose bit ``v`` is set when ``v`` belongs to the
set. Python integers are arbitrary width, so lifting ``MAX_VERTICES`` is the
only change needed to support multi-word rows.
"""

from typing import Dict, Iterable, Iterator, List, NamedTuple, Sequence, Tuple

from app.exceptions import ContractViolation, InvariantViolation


MAX_VERTICES = 64

VertexSet = int


def bit(v: int) -> VertexSet:
    return 1 << v


def full_set(n: int) -> VertexSet:
    return (1 << n) - 1


def iter_bits(mask: VertexSet) -> Iterator[int]:
    """Yield the members of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: VertexSet) -> List[int]:
    return list(iter_bits(mask))


def set_of(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def lowest(mask: VertexSet) -> int:
    return (mask & -mask).bit_length() - 1


class InducedSubgraph(NamedTuple):
    """A renumbered subgraph plus the old-to-new vertex index map."""

    graph: "Graph"
    index_map: Dict[int, int]

    @property
    def original(self) -> List[int]:
        """Original index of every new vertex, in new-index order."""
        return sorted(self.index_map, key=self.index_map.__getitem__)


class Graph:
    """Simple undirected graph; ``adj[v]`` is the bit row of neighbours of ``v``."""

    __slots__ = ("_n", "_adj")

    def __init__(self, n: int, adj: Sequence[int]):
        rows = tuple(int(row) for row in adj)
        if not 0 <= n <= MAX_VERTICES:
            raise InvariantViolation(f"vertex count {n} outside 0..{MAX_VERTICES}")
        if len(rows) != n:
            raise InvariantViolation(f"expected {n} adjacency rows, got {len(rows)}")
        self._n = n
        self._adj = rows
        self.check_invariants()

    @classmethod
    def _trusted(cls, n: int, adj: Tuple[int, ...]) -> "Graph":
        # rows derived from an already valid graph by relabelling or restriction
        g = object.__new__(cls)
        g._n = n
        g._adj = adj
        return g

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        if not 0 <= n <= MAX_VERTICES:
            raise InvariantViolation(f"vertex count {n} outside 0..{MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvariantViolation(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise InvariantViolation(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        everything = full_set(n)
        return cls(n, [everything & ~(1 << v) for v in range(n)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ContractViolation("a cycle needs at least 3 vertices")
        return cls.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edge_list(n, [(i, i + 1) for i in range(n - 1)])

    def check_invariants(self) -> None:
        """Raise InvariantViolation unless the rows are symmetric and irreflexive."""
        n, adj = self._n, self._adj
        for v, row in enumerate(adj):
            if row < 0 or row >> n:
                raise InvariantViolation(f"row {v} has bits outside 0..{n - 1}")
            if row >> v & 1:
                raise InvariantViolation(f"vertex {v} is adjacent to itself")
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise InvariantViolation(f"edge {v}->{u} has no reverse {u}->{v}")

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> Tuple[int, ...]:
        return self._adj

    @property
    def vertices(self) -> VertexSet:
        return full_set(self._n)

    def neighbors(self, v: int) -> VertexSet:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> List[int]:
        return [row.bit_count() for row in self._adj]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> List[Tuple[int, int]]:
        """All edges (u, v) with u < v, in lexicographic order."""
        return [
            (u, v)
            for u, row in enumerate(self._adj)
            for v in iter_bits(row >> (u + 1) << (u + 1))
        ]

    def common_neighborhood(self, s: VertexSet) -> VertexSet:
        """N(S): the vertices adjacent to every member of S."""
        if not s:
            raise ContractViolation("common neighbourhood of the empty set is undefined")
        result = self.vertices
        for v in iter_bits(s):
            result &= self._adj[v]
        return result

    def common_degree(self, s: VertexSet) -> int:
        """d(S) = |N(S)|."""
        return self.common_neighborhood(s).bit_count()

    def closed_neighborhood(self, s: VertexSet) -> VertexSet:
        """N[S] = N(S) together with S itself."""
        return self.common_neighborhood(s) | s

    def is_clique(self, s: VertexSet) -> bool:
        return all(
            (self._adj[v] | (1 << v)) & s == s for v in iter_bits(s)
        )

    def is_complete(self) -> bool:
        return self.edge_count() == self._n * (self._n - 1) // 2

    def is_connected(self) -> bool:
        if self._n == 0:
            return True
        seen = frontier = 1
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= self._adj[v]
            frontier = reach & ~seen
            seen |= frontier
        return seen == self.vertices

    def complement(self) -> "Graph":
        everything = self.vertices
        return Graph._trusted(
            self._n,
            tuple(everything & ~row & ~(1 << v) for v, row in enumerate(self._adj)),
        )

    def induced_subgraph(self, keep: VertexSet) -> InducedSubgraph:
        """G[keep], renumbered to 0..m-1 in ascending original order."""
        keep &= self.vertices
        kept = members(keep)
        index_map = {old: new for new, old in enumerate(kept)}
        rows = []
        for old in kept:
            row = 0
            for u in iter_bits(self._adj[old] & keep):
                row |= 1 << index_map[u]
            rows.append(row)
        return InducedSubgraph(Graph._trusted(len(kept), tuple(rows)), index_map)

    def delete_vertices(self, drop: VertexSet) -> InducedSubgraph:
        return self.induced_subgraph(self.vertices & ~drop)

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Graph whose vertex i is the original vertex ``order[i]``."""
        position = [0] * self._n
        for new, old in enumerate(order):
            position[old] = new
        rows = []
        for old in order:
            row = 0
            for u in iter_bits(self._adj[old]):
                row |= 1 << position[u]
            rows.append(row)
        return Graph._trusted(self._n, tuple(rows))

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self._n
        rows = self._adj + tuple(row << shift for row in other._adj)
        return Graph(self._n + other._n, rows)

    def add_vertex(self, neighbors: VertexSet) -> "Graph":
        """Graph with a new vertex ``n`` joined to ``neighbors``."""
        new = self._n
        rows = tuple(
            row | (1 << new) if neighbors >> v & 1 else row
            for v, row in enumerate(self._adj)
        )
        return Graph._trusted(new + 1, rows + (neighbors,))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        from app.graph.codec import to_graph6

        return f"Graph({to_graph6(self)!r})"
