"""Lemmas that force a critical graph to be complete, or find what avoids it."""

from itertools import combinations
from typing import Any, Dict, Optional

from app.chroma.solver import chi
from app.graph.cliques import enumerate_cliques
from app.graph.core import Graph, members, set_of
from app.lemma.base import COMPLETE, NOT_KL_CRITICAL, BaseLemma, LemmaContext
from app.schema import LemmaId, LemmaVerdict


def _is_complete(g: Graph) -> bool:
    return all(g.has_edge(u, v) for u, v in combinations(range(g.n), 2))


class ForceLemma(BaseLemma):
    """A K_l-critical graph containing K_{chi-l+1}, or with chi <= 2l, is complete."""

    lemma_id: LemmaId = LemmaId.FORCE
    description: str = "large cliques or small chromatic number force completeness"

    def gate(self, ctx: LemmaContext) -> Optional[str]:
        return None if ctx.kl_critical else NOT_KL_CRITICAL

    def check(self, ctx: LemmaContext) -> LemmaVerdict:
        g, k, l = ctx.g, ctx.chi, ctx.l
        if ctx.complete:
            return self.success()
        big = next(enumerate_cliques(g, k - l + 1), None)
        if big is not None:
            return self.failure({"part": "large-clique", "clique": members(big), "chi": k})
        if k <= 2 * l:
            return self.failure({"part": "small-chi", "chi": k, "l": l})
        return self.success()

    def confirm(self, g: Graph, l: int, witness: Dict[str, Any]) -> bool:
        if _is_complete(g):
            return False
        k = chi(g)
        if witness.get("part") == "large-clique":
            clique = witness["clique"]
            return len(clique) == k - l + 1 and g.is_clique(set_of(clique))
        return k <= 2 * l


class AvoidLemma(BaseLemma):
    """A non-complete K_l-critical graph has a K_{l+1} copy S such that every
    x in S misses some K_l copy, i.e. some K_l is not inside N[x]."""

    lemma_id: LemmaId = LemmaId.AVOID
    description: str = "a K_(l+1) whose every vertex misses some K_l"

    def gate(self, ctx: LemmaContext) -> Optional[str]:
        if not ctx.kl_critical:
            return NOT_KL_CRITICAL
        if ctx.complete:
            return COMPLETE
        return None

    def check(self, ctx: LemmaContext) -> LemmaVerdict:
        checked = 0
        for s in enumerate_cliques(ctx.g, ctx.l + 1):
            checked += 1
            if all(ctx.avoiding(x) is not None for x in members(s)):
                return self.success()
        return self.failure({"cliques_checked": checked})

    def confirm(self, g: Graph, l: int, witness: Dict[str, Any]) -> bool:
        vertices = range(g.n)
        cliques = [c for c in combinations(vertices, l) if g.is_clique(set_of(c))]

        def misses(x: int) -> bool:
            closed = set(members(g.neighbors(x))) | {x}
            return any(not set(c) <= closed for c in cliques)

        for s in combinations(vertices, l + 1):
            if g.is_clique(set_of(s)) and all(misses(x) for x in s):
                return False
        return True
