"""Counterexample search over small graphs.

Every graph in the order window l+1..n_max passes through the claw filter,
the complete-graph shortcut, the prune rules, the chromatic window and
finally the short-circuit K_l-criticality check. A critical graph that is
not complete is re-verified with the full check before it is reported.
"""

import sys
import time
import zlib
from collections import Counter
from functools import partial
from typing import Dict, Iterable, Iterator, List, Optional

from pydantic import BaseModel, Field

from app.chroma.solver import chi
from app.config import PRUNE_COMPLETE, PRUNE_CONNECTIVITY, PRUNE_MIN_DEGREE
from app.criticality import is_kl_critical, is_vertex_critical
from app.exceptions import InvariantViolation
from app.graph.cliques import clique_number, is_claw_free
from app.graph.codec import from_graph6, to_graph6
from app.graph.core import Graph
from app.harness.enumerate import generate_levels
from app.harness.pool import chunkify, run_batches
from app.logger import logger
from app.schema import (
    AuditStats,
    Counterexample,
    Finding,
    FindingKind,
    InputMode,
    SearchConfig,
    SearchReport,
)


SKIP_ORDER = "order"
SKIP_CLAW = "claw"
SKIP_CHI_WINDOW = "chi-window"


class BatchResult(BaseModel):
    """Partial search statistics; merging is associative and commutative."""

    scanned_by_order: Dict[int, int] = Field(default_factory=dict)
    pruned_by_rule: Dict[str, int] = Field(default_factory=dict)
    skipped: Dict[str, int] = Field(default_factory=dict)
    complete_criticals: int = 0
    complete_orders: List[int] = Field(default_factory=list)
    criticals_found: int = 0
    candidates: List[str] = Field(default_factory=list)
    audit: AuditStats = Field(default_factory=AuditStats)

    def merge(self, other: "BatchResult") -> "BatchResult":
        return BatchResult(
            scanned_by_order=dict(Counter(self.scanned_by_order) + Counter(other.scanned_by_order)),
            pruned_by_rule=dict(Counter(self.pruned_by_rule) + Counter(other.pruned_by_rule)),
            skipped=dict(Counter(self.skipped) + Counter(other.skipped)),
            complete_criticals=self.complete_criticals + other.complete_criticals,
            complete_orders=sorted(set(self.complete_orders) | set(other.complete_orders)),
            criticals_found=self.criticals_found + other.criticals_found,
            candidates=sorted(self.candidates + other.candidates),
            audit=self.audit.merge(other.audit),
        )


def _sampled(graph6: str, modulus: int) -> bool:
    return zlib.crc32(graph6.encode("ascii")) % modulus == 0


def _bump(counter: Dict, key) -> None:
    counter[key] = counter.get(key, 0) + 1


def failed_prune_rule(g: Graph, rules: Iterable[str], omega: int) -> Optional[str]:
    """The first rule showing g cannot be K_l-critical, if any.

    Each rule is a necessary condition: critical graphs are connected and,
    being vertex-critical, have minimum degree at least chi - 1 >= omega - 1.
    """
    for rule in rules:
        if rule == PRUNE_CONNECTIVITY and not g.is_connected():
            return rule
        if rule == PRUNE_MIN_DEGREE and g.min_degree() < omega - 1:
            return rule
    return None


def _in_window(value: int, cfg: SearchConfig) -> bool:
    if cfg.chi_min is not None and value < cfg.chi_min:
        return False
    if cfg.chi_max is not None and value > cfg.chi_max:
        return False
    return True


def evaluate(graph6: str, cfg: SearchConfig, result: BatchResult) -> None:
    """Run one graph through the search pipeline, recording into ``result``."""
    g = from_graph6(graph6)
    n = g.n
    if not cfg.l + 1 <= n <= cfg.n_max:
        _bump(result.skipped, SKIP_ORDER)
        return
    _bump(result.scanned_by_order, n)

    if cfg.require_claw_free and not is_claw_free(g):
        _bump(result.skipped, SKIP_CLAW)
        return

    omega = clique_number(g)
    complete = omega == n
    if complete and PRUNE_COMPLETE in cfg.prune_rules:
        if not _in_window(n, cfg):
            _bump(result.skipped, SKIP_CHI_WINDOW)
            return
        result.complete_criticals += 1
        result.criticals_found += 1
        if n not in result.complete_orders:
            result.complete_orders.append(n)
        if _sampled(graph6, cfg.complete_audit_modulus):
            result.audit.complete_sampled += 1
            if not is_kl_critical(g, cfg.l).verdict:
                result.audit.complete_violations.append(graph6)
        return

    rule = failed_prune_rule(g, cfg.prune_rules, omega)
    if rule is not None:
        logger.debug(f"{graph6} pruned by {rule}")
        _bump(result.pruned_by_rule, rule)
        if _sampled(graph6, cfg.prune_audit_modulus):
            result.audit.pruned_sampled += 1
            # every admissible rule only rejects graphs that are not vertex-critical
            if is_vertex_critical(g).holds:
                result.audit.pruned_violations.append(graph6)
        return

    if not _in_window(chi(g), cfg):
        _bump(result.skipped, SKIP_CHI_WINDOW)
        return

    report = is_kl_critical(g, cfg.l, short_circuit=True)
    if not report.verdict:
        return
    result.criticals_found += 1
    if complete:
        result.complete_criticals += 1
        if n not in result.complete_orders:
            result.complete_orders.append(n)
    else:
        result.candidates.append(graph6)


def evaluate_batch(batch: List[str], cfg: SearchConfig) -> BatchResult:
    result = BatchResult()
    for graph6 in batch:
        evaluate(graph6, cfg, result)
    result.complete_orders.sort()
    return result


def contradicted_results(l: int, chi_value: int, claw_free: bool) -> List[str]:
    """Proven statements a non-complete K_l-critical graph with these parameters refutes."""
    names = []
    if chi_value <= 2 * l:
        names.append("corollary")
    if chi_value <= 2 * l + 1:
        names.append("main1")
    if claw_free and chi_value <= 5 * l - 4:
        names.append("main2")
    if claw_free and l == 3 and chi_value == 12:
        names.append("main3")
    if claw_free and l == 3 and chi_value == 8:
        names.append("c5-neighbourhood")
    return names


def verify_counterexample(graph6: str, l: int) -> Counterexample:
    """Full re-check of a candidate; raises InvariantViolation if it does not hold up."""
    g = from_graph6(graph6)
    report = is_kl_critical(g, l)
    if not report.verdict or report.is_complete:
        raise InvariantViolation(f"candidate {graph6} failed re-verification: {report}")
    found = Counterexample(
        graph6=graph6,
        report=report,
        contradicts=contradicted_results(l, report.chi, is_claw_free(g)),
    )
    finding = Finding(
        kind=FindingKind.COUNTEREXAMPLE,
        source="complete-criticality",
        graph6=graph6,
        detail={"chi": report.chi, "l": l, "contradicts": found.contradicts},
    )
    logger.bind(finding=finding.model_dump()).error(
        f"non-complete K_{l}-critical graph {graph6} with chi={report.chi}"
    )
    return found


def internal_source(cfg: SearchConfig) -> Iterator[str]:
    for level in generate_levels(cfg.n_max):
        if not level or level[0].n <= cfg.l:
            continue
        for g in level:
            yield to_graph6(g)


def stream_source(lines: Iterable[str]) -> Iterator[str]:
    for line in lines:
        line = line.strip()
        if line:
            yield line


def search_counterexamples(
    cfg: SearchConfig, lines: Optional[Iterable[str]] = None
) -> SearchReport:
    """Scan every graph of the configured source for non-complete criticals.

    ``lines`` feeds graph6-stream mode and defaults to stdin.
    """
    start = time.perf_counter()
    if cfg.input_mode == InputMode.STREAM:
        source = stream_source(sys.stdin if lines is None else lines)
    else:
        source = internal_source(cfg)
    logger.info(
        f"searching l={cfg.l} up to n={cfg.n_max} ({cfg.input_mode.value}) with {cfg.worker_count} workers"
    )

    total = BatchResult()
    cancelled = False
    batches = chunkify(source, cfg.batch_size)
    worker = partial(evaluate_batch, cfg=cfg)
    results = run_batches(
        worker, batches, workers=cfg.worker_count, progress=cfg.progress, desc="Searching"
    )
    for partial_result in results:
        total = total.merge(partial_result)
        if cfg.stop_on_counterexample and total.candidates:
            logger.warning("counterexample candidate found, cancelling remaining batches")
            cancelled = True
            results.close()
            break

    counterexamples = [verify_counterexample(g6, cfg.l) for g6 in total.candidates]
    counterexamples.sort(key=lambda c: (len(c.graph6), c.graph6))

    report = SearchReport(
        config=cfg,
        graphs_scanned=sum(total.scanned_by_order.values()),
        scanned_by_order=dict(sorted(total.scanned_by_order.items())),
        pruned_by_rule=dict(sorted(total.pruned_by_rule.items())),
        skipped=dict(sorted(total.skipped.items())),
        complete_criticals=total.complete_criticals,
        complete_orders=total.complete_orders,
        criticals_found=total.criticals_found,
        all_critical_complete=not counterexamples,
        counterexamples=counterexamples,
        audit=total.audit,
        cancelled=cancelled,
        wall_time=time.perf_counter() - start,
    )
    if report.audit.pruned_violations or report.audit.complete_violations:
        logger.error(f"audit violations: {report.audit}")
    logger.info(
        f"scanned {report.graphs_scanned} graphs, {report.criticals_found} critical, "
        f"{len(counterexamples)} counterexamples in {report.wall_time:.1f}s"
    )
    return report
