"""Collection classes for running several lemmas on the same graph."""
from typing import Iterable, List, Optional

from app.exceptions import ContractViolation
from app.graph.core import Graph
from app.lemma.base import BaseLemma, LemmaContext
from app.logger import logger
from app.schema import LemmaId, LemmaVerdict


class LemmaCollection:
    """A collection of lemma predicates sharing one context per graph."""

    def __init__(self, *lemmas: BaseLemma):
        self.lemmas = lemmas
        self.lemma_map = {lemma.lemma_id: lemma for lemma in lemmas}

    def __iter__(self):
        return iter(self.lemmas)

    def __len__(self) -> int:
        return len(self.lemmas)

    @property
    def ids(self) -> List[LemmaId]:
        return [lemma.lemma_id for lemma in self.lemmas]

    def get_lemma(self, lemma_id: LemmaId) -> Optional[BaseLemma]:
        return self.lemma_map.get(lemma_id)

    def add_lemma(self, lemma: BaseLemma):
        """Add a single lemma; a duplicate id is skipped with a warning."""
        if lemma.lemma_id in self.lemma_map:
            logger.warning(f"Lemma {lemma.lemma_id.value} already in collection, skipping")
            return self
        self.lemmas += (lemma,)
        self.lemma_map[lemma.lemma_id] = lemma
        return self

    def add_lemmas(self, *lemmas: BaseLemma):
        for lemma in lemmas:
            self.add_lemma(lemma)
        return self

    def select(self, ids: Iterable[str]) -> "LemmaCollection":
        """Sub-collection in the order given; unknown ids raise ContractViolation."""
        chosen = []
        for raw in ids:
            try:
                lemma_id = LemmaId(raw)
            except ValueError:
                raise ContractViolation(f"unknown lemma id {raw!r}") from None
            if lemma_id not in self.lemma_map:
                raise ContractViolation(f"lemma {raw} is not in this collection")
            chosen.append(self.lemma_map[lemma_id])
        return LemmaCollection(*chosen)

    def run(self, g: Graph, l: int) -> List[LemmaVerdict]:
        """Verdicts of every lemma on g, in collection order."""
        contexts = {}
        verdicts = []
        for lemma in self.lemmas:
            lemma_l = lemma.fixed_l or l
            if lemma_l not in contexts:
                contexts[lemma_l] = LemmaContext(g, lemma_l)
            verdicts.append(lemma(g, lemma_l, contexts[lemma_l], quiet=True))
        return verdicts
