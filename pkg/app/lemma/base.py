from abc import ABC, abstractmethod
from functools import cached_property
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict

from app.chroma.solver import chromatic_number
from app.criticality import is_kl_critical
from app.graph.cliques import enumerate_cliques, is_claw_free
from app.graph.codec import to_graph6
from app.graph.core import Graph, VertexSet
from app.logger import logger
from app.schema import CriticalityReport, LemmaId, LemmaVerdict


class LemmaContext:
    """Facts about one graph shared by every lemma checked on it."""

    def __init__(self, g: Graph, l: int):
        self.g = g
        self.l = l

    @cached_property
    def graph6(self) -> str:
        return to_graph6(self.g)

    @cached_property
    def chi(self) -> int:
        return chromatic_number(self.g).chi

    @cached_property
    def report(self) -> CriticalityReport:
        return is_kl_critical(self.g, self.l)

    @property
    def vertex_critical(self) -> bool:
        return bool(self.report.vertex_critical)

    @property
    def kl_critical(self) -> bool:
        return self.report.verdict

    @cached_property
    def complete(self) -> bool:
        return self.g.is_complete()

    @cached_property
    def claw_free(self) -> bool:
        return is_claw_free(self.g)

    @cached_property
    def cliques(self) -> List[VertexSet]:
        """Every K_l copy in lexicographic order."""
        return list(enumerate_cliques(self.g, self.l))

    def avoiding(self, x: int) -> Optional[VertexSet]:
        """First K_l copy L with L not inside N[x], if any."""
        closed = self.g.adj[x] | (1 << x)
        for clique in self.cliques:
            if clique & ~closed:
                return clique
        return None


class BaseLemma(ABC, BaseModel):
    """An executable lemma: an applicability gate, a check and a witness re-check."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    lemma_id: LemmaId
    description: str
    fixed_l: Optional[int] = None

    def __call__(
        self, g: Graph, l: int, context: Optional[LemmaContext] = None, quiet: bool = False
    ) -> LemmaVerdict:
        """Check the lemma on g, reusing ``context`` when it matches."""
        l = self.fixed_l or l
        if context is None or context.g is not g or context.l != l:
            context = LemmaContext(g, l)

        reason = self.gate(context)
        if reason:
            log = logger.debug if quiet else logger.warning
            log(f"{self.lemma_id.value} vacuous on {context.graph6}: {reason}")
            return LemmaVerdict.vacuous_verdict(self.lemma_id, reason)

        verdict = self.check(context)
        if not verdict.passed:
            verdict.confirmed = self.confirm(g, l, verdict.witness or {})
            logger.bind(finding=verdict.model_dump()).error(
                f"{self.lemma_id.value} fails on {context.graph6} (l={l}): {verdict.witness}"
            )
        return verdict

    @abstractmethod
    def gate(self, ctx: LemmaContext) -> Optional[str]:
        """Why the lemma does not apply, or None when its hypotheses hold."""

    @abstractmethod
    def check(self, ctx: LemmaContext) -> LemmaVerdict:
        """Evaluate the conclusion; the first violation becomes the witness."""

    @abstractmethod
    def confirm(self, g: Graph, l: int, witness: Dict[str, Any]) -> bool:
        """True iff the witness violates the conclusion when re-checked from raw data."""

    def success(self, mode: Optional[str] = None) -> LemmaVerdict:
        return LemmaVerdict.success(self.lemma_id, mode=mode)

    def failure(self, witness: Dict[str, Any], mode: Optional[str] = None) -> LemmaVerdict:
        return LemmaVerdict.failure(self.lemma_id, witness, mode=mode)


NOT_KL_CRITICAL = "not K_l-critical"
COMPLETE = "complete graph"
