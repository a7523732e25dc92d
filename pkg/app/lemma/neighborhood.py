"""Lemmas about vertices x that miss some K_l copy L, i.e. L is not inside N[x]."""

from typing import Any, Dict, Optional

from app.chroma.solver import chi, is_k_colorable
from app.graph.core import Graph, iter_bits, members, set_of
from app.lemma.base import COMPLETE, NOT_KL_CRITICAL, BaseLemma, LemmaContext
from app.schema import LemmaId, LemmaVerdict


def _misses(g: Graph, clique, x: int) -> bool:
    closed = set(members(g.neighbors(x))) | {x}
    return not set(clique) <= closed


def _valid_clique(g: Graph, clique, l: int) -> bool:
    return len(clique) == l and g.is_clique(set_of(clique))


class MissingNeighborLemma(BaseLemma):
    """If L is not inside N[x] then N(L) is not inside N(x)."""

    lemma_id: LemmaId = LemmaId.MISSNEIGH
    description: str = "a missed clique has a common neighbour outside N(x)"

    def gate(self, ctx: LemmaContext) -> Optional[str]:
        return None if ctx.kl_critical else NOT_KL_CRITICAL

    def check(self, ctx: LemmaContext) -> LemmaVerdict:
        g = ctx.g
        for x in range(g.n):
            closed = g.adj[x] | (1 << x)
            for clique in ctx.cliques:
                if not clique & ~closed:
                    continue
                if not g.common_neighborhood(clique) & ~g.adj[x]:
                    return self.failure({"vertex": x, "clique": members(clique)})
        return self.success()

    def confirm(self, g: Graph, l: int, witness: Dict[str, Any]) -> bool:
        x, clique = witness["vertex"], witness["clique"]
        if not _valid_clique(g, clique, l) or not _misses(g, clique, x):
            return False
        common = set.intersection(*(set(members(g.neighbors(v))) for v in clique))
        return common <= set(members(g.neighbors(x)))


class NeighborhoodChromaticLemma(BaseLemma):
    """If some K_l copy is not inside N[x] then chi(G[N(x)]) <= chi - l - 1."""

    lemma_id: LemmaId = LemmaId.CHROM
    description: str = "neighbourhoods of vertices missing a clique are easy to colour"

    def gate(self, ctx: LemmaContext) -> Optional[str]:
        return None if ctx.kl_critical else NOT_KL_CRITICAL

    def check(self, ctx: LemmaContext) -> LemmaVerdict:
        g, k, l = ctx.g, ctx.chi, ctx.l
        for x in range(g.n):
            missed = ctx.avoiding(x)
            if missed is None:
                continue
            around = chi(g.induced_subgraph(g.adj[x]).graph)
            if around > k - l - 1:
                return self.failure(
                    {
                        "vertex": x,
                        "clique": members(missed),
                        "neighborhood_chi": around,
                        "chi": k,
                    }
                )
        return self.success()

    def confirm(self, g: Graph, l: int, witness: Dict[str, Any]) -> bool:
        x, clique = witness["vertex"], witness["clique"]
        if not _valid_clique(g, clique, l) or not _misses(g, clique, x):
            return False
        around = g.induced_subgraph(g.neighbors(x)).graph
        return is_k_colorable(around, max(chi(g) - l - 1, 0)) is None


class OutsideNeighborLemma(BaseLemma):
    """For any x and any v on a K_l copy with a vertex outside N[x], v has at
    least l neighbours outside N[x]."""

    lemma_id: LemmaId = LemmaId.OUTSIDE
    description: str = "clique vertices have many neighbours outside N[x]"

    def gate(self, ctx: LemmaContext) -> Optional[str]:
        if not ctx.kl_critical:
            return NOT_KL_CRITICAL
        if ctx.complete:
            return COMPLETE
        return None

    def check(self, ctx: LemmaContext) -> LemmaVerdict:
        g, l = ctx.g, ctx.l
        for x in range(g.n):
            closed = g.adj[x] | (1 << x)
            for clique in ctx.cliques:
                if not clique & ~closed:
                    continue
                for v in iter_bits(clique):
                    outside = (g.adj[v] & ~closed).bit_count()
                    if outside < l:
                        return self.failure(
                            {
                                "vertex": x,
                                "clique": members(clique),
                                "on_clique": v,
                                "outside": outside,
                            }
                        )
        return self.success()

    def confirm(self, g: Graph, l: int, witness: Dict[str, Any]) -> bool:
        x, clique, v = witness["vertex"], witness["clique"], witness["on_clique"]
        if v not in clique or not _valid_clique(g, clique, l) or not _misses(g, clique, x):
            return False
        closed = set(members(g.neighbors(x))) | {x}
        return len(set(members(g.neighbors(v))) - closed) < l
