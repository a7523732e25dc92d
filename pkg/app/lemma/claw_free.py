"""Lemmas for claw-free critical graphs."""

from typing import Any, Dict, Optional

from app.chroma.solver import chi
from app.graph.cliques import independence_number, is_claw_free
from app.graph.core import Graph, VertexSet, members, set_of
from app.lemma.base import COMPLETE, NOT_KL_CRITICAL, BaseLemma, LemmaContext
from app.schema import LemmaId, LemmaVerdict


C5_CHI = 8


def is_c5(g: Graph) -> bool:
    """Five vertices, all of degree 2, connected."""
    return g.n == 5 and all(d == 2 for d in g.degrees()) and g.is_connected()


def c5_neighborhood_violation(g: Graph, triangle: VertexSet) -> Optional[Dict[str, Any]]:
    """What is wrong with N(T) for the triangle T, or None when N(T) induces a C5
    with independence number at most 2."""
    common = g.common_neighborhood(triangle)
    witness = {"triangle": members(triangle), "common": members(common)}
    if common.bit_count() != 5:
        return {**witness, "part": "size"}
    around = g.induced_subgraph(common).graph
    if not is_c5(around):
        return {**witness, "part": "not-c5"}
    if independence_number(around) > 2:
        return {**witness, "part": "independence"}
    return None


class C5NeighborhoodLemma(BaseLemma):
    """In a non-complete claw-free triangle-critical graph with chi = 8, the
    common neighbourhood of every triangle induces a C5."""

    lemma_id: LemmaId = LemmaId.C5NBR
    description: str = "triangle neighbourhoods are 5-cycles"
    fixed_l: Optional[int] = 3

    def gate(self, ctx: LemmaContext) -> Optional[str]:
        if ctx.chi != C5_CHI:
            return f"chi is {ctx.chi}, not {C5_CHI}"
        if ctx.complete:
            return COMPLETE
        if not ctx.claw_free:
            return "contains a claw"
        if not ctx.kl_critical:
            return "not triangle-critical"
        return None

    def check(self, ctx: LemmaContext) -> LemmaVerdict:
        for triangle in ctx.cliques:
            violation = c5_neighborhood_violation(ctx.g, triangle)
            if violation is not None:
                return self.failure(violation)
        return self.success()

    def confirm(self, g: Graph, l: int, witness: Dict[str, Any]) -> bool:
        triangle = witness["triangle"]
        if len(triangle) != 3 or not g.is_clique(set_of(triangle)):
            return False
        common = set.intersection(*(set(members(g.neighbors(v))) for v in triangle))
        if len(common) != 5:
            return True
        around = g.induced_subgraph(set_of(common)).graph
        edges = around.edges()
        degrees_ok = len(edges) == 5 and all(around.degree(v) == 2 for v in range(5))
        return not (degrees_ok and around.is_connected())


class ClawFreeDegreeLemma(BaseLemma):
    """In a claw-free K_l-critical graph, a vertex x missing some K_l copy has
    degree at most 2(chi - l - 1)."""

    lemma_id: LemmaId = LemmaId.CLAWDEG
    description: str = "degree cap for claw-free critical graphs"

    def gate(self, ctx: LemmaContext) -> Optional[str]:
        if not ctx.kl_critical:
            return NOT_KL_CRITICAL
        if not ctx.claw_free:
            return "contains a claw"
        return None

    def check(self, ctx: LemmaContext) -> LemmaVerdict:
        g, k, l = ctx.g, ctx.chi, ctx.l
        for x in range(g.n):
            missed = ctx.avoiding(x)
            if missed is not None and g.degree(x) > 2 * (k - l - 1):
                return self.failure(
                    {"vertex": x, "clique": members(missed), "degree": g.degree(x), "chi": k}
                )
        return self.success()

    def confirm(self, g: Graph, l: int, witness: Dict[str, Any]) -> bool:
        x, clique = witness["vertex"], witness["clique"]
        if len(clique) != l or not g.is_clique(set_of(clique)):
            return False
        closed = set(members(g.neighbors(x))) | {x}
        if set(clique) <= closed or not is_claw_free(g):
            return False
        return len(members(g.neighbors(x))) > 2 * (chi(g) - l - 1)
