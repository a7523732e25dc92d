"""Degree lower bounds for critical graphs."""

from itertools import combinations
from typing import Any, Dict, List, Optional, Tuple

from app.chroma.coloring import is_proper
from app.chroma.enumerate import canonical_leaf_estimate, enumerate_colorings
from app.chroma.solver import chi, is_k_colorable
from app.config import config
from app.graph.core import Graph, iter_bits, members, set_of
from app.lemma.base import COMPLETE, NOT_KL_CRITICAL, BaseLemma, LemmaContext
from app.logger import logger
from app.schema import Coloring, LemmaId, LemmaVerdict


MODE_VERTEX_ONLY = "vertex-only"
MODE_ALL_COLORINGS = "all-colorings"
MODE_SINGLE_COLORING = "single-coloring"


def _common(g: Graph, vertices: List[int]) -> set:
    """N(S) from raw neighbour lists."""
    sets = [set(members(g.neighbors(v))) for v in vertices]
    return set.intersection(*sets) if sets else set()


class DegreeLemma(BaseLemma):
    """Every vertex has degree at least chi - 1; every K_l copy L has at least
    chi - l common neighbours, and each colour class of a (chi - l)-colouring
    of G - L meets N(L)."""

    lemma_id: LemmaId = LemmaId.DEG
    description: str = "minimum degree and common neighbourhood bounds"

    def gate(self, ctx: LemmaContext) -> Optional[str]:
        if not ctx.vertex_critical:
            return "not vertex-critical"
        return None

    def _colorings(self, ctx: LemmaContext, rest: Graph) -> Tuple[List[Coloring], str]:
        k = ctx.chi - ctx.l
        budget = config.lemmas.coloring_budget
        if canonical_leaf_estimate(rest.n, k) <= budget:
            return list(enumerate_colorings(rest, k, budget)), MODE_ALL_COLORINGS
        logger.warning(
            f"{rest.n}-vertex remainder exceeds the colouring budget {budget}; checking one colouring"
        )
        single = is_k_colorable(rest, k)
        return ([single] if single is not None else []), MODE_SINGLE_COLORING

    def check(self, ctx: LemmaContext) -> LemmaVerdict:
        g, k, l = ctx.g, ctx.chi, ctx.l
        for v in range(g.n):
            if g.degree(v) < k - 1:
                return self.failure(
                    {"part": "min-degree", "vertex": v, "degree": g.degree(v), "chi": k},
                    mode=MODE_VERTEX_ONLY,
                )
        if not ctx.kl_critical:
            return self.success(mode=MODE_VERTEX_ONLY)

        mode = MODE_ALL_COLORINGS
        for clique in ctx.cliques:
            common = g.common_neighborhood(clique)
            if common.bit_count() < k - l:
                return self.failure(
                    {
                        "part": "clique-degree",
                        "clique": members(clique),
                        "common_degree": common.bit_count(),
                        "chi": k,
                    }
                )
            rest = g.delete_vertices(clique)
            colorings, used = self._colorings(ctx, rest.graph)
            if used == MODE_SINGLE_COLORING:
                mode = used
            for coloring in colorings:
                lifted = coloring.lift(rest.original, g.n)
                for c in range(1, k - l + 1):
                    if not lifted.color_class(c) & common:
                        return self.failure(
                            {
                                "part": "color-class",
                                "clique": members(clique),
                                "colors": list(lifted.colors),
                                "color": c,
                            },
                            mode=used,
                        )
        return self.success(mode=mode)

    def confirm(self, g: Graph, l: int, witness: Dict[str, Any]) -> bool:
        k = chi(g)
        part = witness.get("part")
        if part == "min-degree":
            v = witness["vertex"]
            return len(members(g.neighbors(v))) < k - 1
        clique = witness.get("clique", [])
        if len(clique) != l or not g.is_clique(set_of(clique)):
            return False
        common = _common(g, clique)
        if part == "clique-degree":
            return len(common) < k - l
        if part == "color-class":
            colors = witness["colors"]
            coloring = Coloring(colors=tuple(colors), k=k - l)
            outside = [v for v in range(g.n) if v not in clique]
            if any(colors[v] for v in clique) or not all(colors[v] for v in outside):
                return False
            if not is_proper(g, coloring):
                return False
            return not any(colors[v] == witness["color"] for v in common)
        return False


class VertexDegreeLemma(BaseLemma):
    """In a non-complete K_l-critical graph every vertex on a K_l has degree at
    least chi + 2l - 3, and every K_i inside a K_l has at least
    chi - l + 3(l - i) common neighbours."""

    lemma_id: LemmaId = LemmaId.VDEG
    description: str = "degree bounds on clique vertices of non-complete critical graphs"

    def gate(self, ctx: LemmaContext) -> Optional[str]:
        if not ctx.kl_critical:
            return NOT_KL_CRITICAL
        if ctx.complete:
            return COMPLETE
        return None

    def check(self, ctx: LemmaContext) -> LemmaVerdict:
        g, k, l = ctx.g, ctx.chi, ctx.l
        on_clique = 0
        for clique in ctx.cliques:
            on_clique |= clique
        for v in iter_bits(on_clique):
            if g.degree(v) < k + 2 * l - 3:
                return self.failure(
                    {"part": "vertex-degree", "vertex": v, "degree": g.degree(v), "chi": k}
                )

        seen = set()
        for i in range(1, l + 1):
            bound = k - l + 3 * (l - i)
            for clique in ctx.cliques:
                for sub in combinations(members(clique), i):
                    mask = set_of(sub)
                    if mask in seen:
                        continue
                    seen.add(mask)
                    degree = g.common_degree(mask)
                    if degree < bound:
                        return self.failure(
                            {
                                "part": "sub-clique",
                                "subclique": list(sub),
                                "i": i,
                                "common_degree": degree,
                                "chi": k,
                            }
                        )
        return self.success()

    def confirm(self, g: Graph, l: int, witness: Dict[str, Any]) -> bool:
        k = chi(g)
        if witness.get("part") == "vertex-degree":
            return len(members(g.neighbors(witness["vertex"]))) < k + 2 * l - 3
        sub = witness.get("subclique", [])
        i = len(sub)
        if not 1 <= i <= l or not g.is_clique(set_of(sub)):
            return False
        return len(_common(g, sub)) < k - l + 3 * (l - i)
