import sys
import time
from functools import partial
from typing import Dict, Iterable, Iterator, List, Optional, Sequence

from pydantic import BaseModel, Field

from app.graph.cliques import is_claw_free
from app.graph.codec import from_graph6, to_graph6
from app.harness.enumerate import generate_levels
from app.harness.pool import chunkify, run_batches
from app.lemma import all_lemmas
from app.logger import logger
from app.schema import (
    InputMode,
    LemmaFailure,
    LemmaId,
    LemmaSweepReport,
    LemmaSweepRow,
    LemmaTally,
    SearchConfig,
)


class SweepBatch(BaseModel):
    graphs_scanned: int = 0
    tallies: Dict[str, LemmaTally] = Field(default_factory=dict)
    failures: List[LemmaFailure] = Field(default_factory=list)
    rows: List[LemmaSweepRow] = Field(default_factory=list)

    def merge(self, other: "SweepBatch") -> "SweepBatch":
        tallies = dict(self.tallies)
        for key, tally in other.tallies.items():
            tallies[key] = tallies[key].merge(tally) if key in tallies else tally
        return SweepBatch(
            graphs_scanned=self.graphs_scanned + other.graphs_scanned,
            tallies=tallies,
            failures=self.failures + other.failures,
            rows=self.rows + other.rows,
        )


def sweep_batch(
    batch: List[str], l: int, lemma_ids: Sequence[str], claw_free_only: bool, keep_rows: bool
) -> SweepBatch:
    lemmas = all_lemmas().select(lemma_ids)
    result = SweepBatch(tallies={lemma_id: LemmaTally() for lemma_id in lemma_ids})
    for graph6 in batch:
        g = from_graph6(graph6)
        if claw_free_only and not is_claw_free(g):
            continue
        result.graphs_scanned += 1
        verdicts = lemmas.run(g, l)
        for verdict in verdicts:
            result.tallies[verdict.lemma_id.value].record(verdict)
            if verdict.applicable and not verdict.passed:
                result.failures.append(LemmaFailure(graph6=graph6, verdict=verdict))
        if keep_rows:
            result.rows.append(LemmaSweepRow(graph6=graph6, verdicts=verdicts))
    return result


def _corpus(cfg: SearchConfig, lines: Optional[Iterable[str]]) -> Iterator[str]:
    if lines is not None or cfg.input_mode == InputMode.STREAM:
        for line in sys.stdin if lines is None else lines:
            line = line.strip()
            if line:
                yield line
        return
    for level in generate_levels(cfg.n_max):
        for g in level:
            yield to_graph6(g)


def run_lemma_sweep(
    cfg: SearchConfig,
    lemmas: Sequence[str],
    lines: Optional[Iterable[str]] = None,
    keep_rows: bool = False,
) -> LemmaSweepReport:
    """Apply each lemma to each graph of the corpus and tally the verdicts.

    The corpus is ``lines`` when given, stdin in graph6-stream mode, and every
    graph on 1..n_max vertices otherwise. An empty lemma list scans nothing.
    """
    start = time.perf_counter()
    ids = [lemma_id.value for lemma_id in all_lemmas().select(lemmas).ids]
    if not ids:
        return LemmaSweepReport(config=cfg, wall_time=time.perf_counter() - start)

    worker = partial(
        sweep_batch,
        l=cfg.l,
        lemma_ids=ids,
        claw_free_only=cfg.require_claw_free,
        keep_rows=keep_rows,
    )
    total = SweepBatch(tallies={lemma_id: LemmaTally() for lemma_id in ids})
    batches = chunkify(_corpus(cfg, lines), cfg.batch_size)
    for result in run_batches(
        worker, batches, workers=cfg.worker_count, progress=cfg.progress, desc="Sweeping"
    ):
        total = total.merge(result)

    failures = sorted(total.failures, key=lambda f: (f.graph6, f.verdict.lemma_id.value))
    report = LemmaSweepReport(
        config=cfg,
        lemmas=[LemmaId(lemma_id) for lemma_id in ids],
        graphs_scanned=total.graphs_scanned,
        tallies=total.tallies,
        failures=failures,
        rows=total.rows,
        wall_time=time.perf_counter() - start,
    )
    logger.info(
        f"swept {report.graphs_scanned} graphs with {len(ids)} lemmas, {len(failures)} failures"
    )
    return report
