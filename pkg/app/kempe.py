"""Generalised Kempe chains and prescribed-colour paths.

A chain grows from a root x in layers: N_1 holds the neighbours of x coloured
pi(phi(x)), and N_{i+1} the neighbours of N_i coloured pi^{i+1}(phi(x)).
Growth stops at the first layer that contributes no new member. Recolouring
the chain members by pi keeps the colouring proper.
"""

from typing import List, Optional, Sequence

from app.chroma.coloring import is_proper
from app.chroma.solver import chi
from app.criticality import is_kl_critical
from app.exceptions import ContractViolation, InvariantViolation
from app.graph.codec import to_graph6
from app.graph.core import Graph, VertexSet, bit, iter_bits, members
from app.logger import logger
from app.schema import Coloring, ColorPermutation, Finding, FindingKind, KempeChain


PATH_SOURCE = "prescribed-colour-path"


def _class_masks(phi: Coloring) -> List[VertexSet]:
    """``masks[c]`` is the set of vertices coloured c; index 0 collects unassigned ones."""
    masks = [0] * (phi.k + 1)
    for v, c in enumerate(phi.colors):
        masks[c] |= 1 << v
    return masks


def _require_total_proper(g: Graph, phi: Coloring) -> None:
    if phi.n != g.n:
        raise ContractViolation(f"colouring covers {phi.n} vertices, graph has {g.n}")
    if not phi.is_total:
        raise ContractViolation("chain construction needs a total colouring")
    if not is_proper(g, phi):
        raise ContractViolation("colouring is not proper")


def build_chain(g: Graph, phi: Coloring, pi: ColorPermutation, x: int) -> KempeChain:
    _require_total_proper(g, phi)
    if not 0 <= x < g.n:
        raise ContractViolation(f"root {x} outside 0..{g.n - 1}")
    if pi.k < phi.k:
        raise ContractViolation(f"permutation acts on {pi.k} colours, colouring uses {phi.k}")

    masks = _class_masks(phi)
    adj = g.adj
    chain = bit(x)
    layer = bit(x)
    color = phi.color_of(x)
    layers: List[List[int]] = []
    while True:
        color = pi(color)
        reach = 0
        for v in iter_bits(layer):
            reach |= adj[v]
        layer = reach & (masks[color] if color <= phi.k else 0)
        if not layer & ~chain:
            break
        layers.append(members(layer))
        chain |= layer
    return KempeChain(root=x, layers=layers, members=members(chain))


def apply_chain(g: Graph, phi: Coloring, pi: ColorPermutation, chain: KempeChain) -> Coloring:
    """Recolour every chain member y with pi(phi(y))."""
    fresh = build_chain(g, phi, pi, chain.root)
    if fresh.members != chain.members or fresh.layers != chain.layers:
        raise ContractViolation(f"chain rooted at {chain.root} was not built from this colouring")
    colors = list(phi.colors)
    for y in iter_bits(chain.member_set):
        colors[y] = pi(colors[y])
    result = Coloring(colors=tuple(colors), k=max(phi.k, pi.k))
    if not is_proper(g, result):
        raise InvariantViolation(
            f"recolouring chain {chain.members} of {to_graph6(g)} left a monochromatic edge"
        )
    return result


def _check_path_inputs(
    g: Graph, clique: VertexSet, phi: Coloring, seq: Sequence[int], x: int, y: int
) -> None:
    if x == y:
        raise ContractViolation("path endpoints must differ")
    if clique & ~g.vertices:
        raise ContractViolation("clique has vertices outside the graph")
    if not (clique >> x & 1 and clique >> y & 1):
        raise ContractViolation(f"endpoints {x}, {y} must lie in the clique {members(clique)}")
    if not g.is_clique(clique):
        raise ContractViolation(f"{members(clique)} is not a clique")
    if len(set(seq)) != len(seq):
        raise ContractViolation(f"colour sequence {tuple(seq)} repeats a colour")
    if any(not 1 <= c <= phi.k for c in seq):
        raise ContractViolation(f"colour sequence {tuple(seq)} leaves the palette 1..{phi.k}")
    if phi.n != g.n:
        raise ContractViolation(f"colouring covers {phi.n} vertices, graph has {g.n}")
    if phi.domain != g.vertices & ~clique:
        raise ContractViolation("colouring must cover exactly the vertices outside the clique")
    if not is_proper(g, phi):
        raise ContractViolation("colouring is not proper")


def find_prescribed_path(
    g: Graph, clique: VertexSet, phi: Coloring, seq: Sequence[int], x: int, y: int
) -> Optional[List[int]]:
    """Lexicographically least path x, v_1, ..., v_t, y with phi(v_i) = seq[i].

    The inner vertices avoid the clique. None after exhaustive search.
    """
    _check_path_inputs(g, clique, phi, seq, x, y)
    masks = _class_masks(phi)
    adj = g.adj
    steps = [masks[c] for c in seq]
    path = [x]

    def walk(depth: int) -> bool:
        last = path[-1]
        if depth == len(steps):
            return bool(adj[last] >> y & 1)
        for v in iter_bits(adj[last] & steps[depth]):
            path.append(v)
            if walk(depth + 1):
                return True
            path.pop()
        return False

    if walk(0):
        path.append(y)
        return path
    return None


def audit_prescribed_path(
    g: Graph, clique: VertexSet, phi: Coloring, seq: Sequence[int], x: int, y: int
) -> Optional[Finding]:
    """A finding when no path exists although the path lemma guarantees one.

    The guarantee needs g K_l-critical for l = |clique|, a palette of chi - l
    colours and a non-empty sequence.
    """
    if find_prescribed_path(g, clique, phi, seq, x, y) is not None or not seq:
        return None
    l = clique.bit_count()
    if l < 2 or phi.k != chi(g) - l or not is_kl_critical(g, l, short_circuit=True).verdict:
        return None
    finding = Finding(
        kind=FindingKind.LEMMA_FALSIFIED,
        source=PATH_SOURCE,
        graph6=to_graph6(g),
        detail={"clique": members(clique), "colors": list(phi.colors), "seq": list(seq), "x": x, "y": y},
    )
    logger.bind(finding=finding.model_dump()).error(
        f"no prescribed path {x} -> {y} with colours {list(seq)} in K_{l}-critical {finding.graph6}"
    )
    return finding
