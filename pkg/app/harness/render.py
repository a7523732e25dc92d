"""JSON and aligned-text rendering of reports."""

from typing import Any, Iterable, List, Optional, Tuple

from pydantic import BaseModel
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from app.schema import (
    AnalysisReport,
    CriticalityReport,
    ExtractionReport,
    KempePathReport,
    LemmaSweepReport,
    LemmaVerdict,
    OutputFormat,
    SearchReport,
)


def dump_json(model: BaseModel) -> str:
    return model.model_dump_json(by_alias=True, indent=2)


def _fmt(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return escape(" ".join(str(v) for v in value)) or "-"
    return escape(str(value))


def _pairs(title: str, rows: Iterable[Tuple[str, Any]]) -> Table:
    table = Table(title=title, show_header=False)
    table.add_column("field", style="bold")
    table.add_column("value")
    for key, value in rows:
        table.add_row(key, _fmt(value))
    return table


def criticality_table(report: CriticalityReport) -> Table:
    return _pairs(
        f"K_{report.l}-criticality",
        [
            ("chi", report.chi),
            ("complete", report.is_complete),
            (f"has K_{report.l}", report.has_kl),
            ("clique", report.kl_witness),
            ("vertex-critical", report.vertex_critical),
            ("failing vertex", report.vertex_witness),
            ("clique drop", report.clique_drop),
            ("failing clique", report.clique_drop_witness),
            ("residual chi", report.clique_drop_residual_chi),
            ("verdict", report.verdict),
        ],
    )


def analysis_tables(report: AnalysisReport) -> List[Table]:
    summary = _pairs(
        escape(report.graph6),
        [
            ("n", report.n),
            ("edges", report.edges),
            ("chi", report.chi),
            ("omega", report.omega),
            ("alpha", report.alpha),
            ("claw-free", report.claw_free),
            ("claw", report.claw),
            ("clique split", report.clique_split),
        ],
    )
    return [summary, criticality_table(report.criticality)]


def extraction_tables(report: ExtractionReport) -> List[Table]:
    result = report.result
    rows = [
        ("source", report.source),
        ("extracted", result.graph6),
        ("kept vertices", result.kept_vertices),
        ("chi", result.chi),
        ("finding", result.finding.source if result.finding else None),
    ]
    return [_pairs("Extraction", rows), criticality_table(result.report)]


def kempe_tables(report: KempePathReport) -> List[Table]:
    rows = [
        ("graph", report.graph6),
        ("clique", report.clique),
        ("colouring", report.coloring),
        ("sequence", report.seq),
        ("endpoints", [report.x, report.y]),
        ("path", report.path if report.path is not None else "absent"),
        ("finding", report.finding.source if report.finding else None),
    ]
    return [_pairs("Prescribed path", rows)]


def search_tables(report: SearchReport) -> List[Table]:
    cfg = report.config
    summary = _pairs(
        f"Search l={cfg.l} n_max={cfg.n_max}",
        [
            ("graphs scanned", report.graphs_scanned),
            ("criticals found", report.criticals_found),
            ("complete criticals", report.complete_criticals),
            ("complete orders", report.complete_orders),
            ("all critical complete", report.all_critical_complete),
            ("pruned audited", report.audit.pruned_sampled),
            ("completes audited", report.audit.complete_sampled),
            ("audit violations", report.audit.pruned_violations + report.audit.complete_violations),
            ("cancelled", report.cancelled),
            ("wall time", f"{report.wall_time:.2f}s"),
        ],
    )
    counts = Table(title="Counts")
    counts.add_column("kind")
    counts.add_column("key")
    counts.add_column("count", justify="right")
    for n, count in report.scanned_by_order.items():
        counts.add_row("scanned", f"n={n}", str(count))
    for rule, count in report.pruned_by_rule.items():
        counts.add_row("pruned", rule, str(count))
    for reason, count in report.skipped.items():
        counts.add_row("skipped", reason, str(count))
    tables = [summary, counts]
    if report.counterexamples:
        found = Table(title="Counterexamples")
        found.add_column("graph6")
        found.add_column("chi", justify="right")
        found.add_column("contradicts")
        for item in report.counterexamples:
            found.add_row(escape(item.graph6), str(item.report.chi), _fmt(item.contradicts))
        tables.append(found)
    return tables


def _verdict_cell(verdict: LemmaVerdict) -> str:
    if verdict.vacuous:
        return "vacuous"
    return "pass" if verdict.passed else "FAIL"


def sweep_tables(report: LemmaSweepReport) -> List[Table]:
    tallies = Table(title=f"Lemmas over {report.graphs_scanned} graphs")
    for column in ("lemma", "applicable", "passed", "failed", "vacuous", "unconfirmed"):
        tallies.add_column(column, justify="left" if column == "lemma" else "right")
    for lemma_id, tally in report.tallies.items():
        tallies.add_row(
            lemma_id,
            str(tally.applicable),
            str(tally.passed),
            str(tally.failed),
            str(tally.vacuous),
            str(tally.unconfirmed),
        )
    tables = [tallies]
    if report.rows:
        verdicts = Table(title="Verdicts")
        for column in ("graph6", "lemma", "verdict"):
            verdicts.add_column(column, no_wrap=True)
        verdicts.add_column("detail")
        for row in report.rows:
            for verdict in row.verdicts:
                verdicts.add_row(
                    escape(row.graph6),
                    verdict.lemma_id.value,
                    _verdict_cell(verdict),
                    _fmt(verdict.reason or verdict.mode),
                )
        tables.append(verdicts)
    if report.failures:
        failed = Table(title="Failures")
        failed.add_column("graph6")
        failed.add_column("lemma")
        failed.add_column("witness")
        failed.add_column("confirmed")
        for failure in report.failures:
            verdict = failure.verdict
            failed.add_row(
                escape(failure.graph6),
                verdict.lemma_id.value,
                escape(str(verdict.witness)),
                _fmt(verdict.confirmed),
            )
        tables.append(failed)
    return tables


_TABLES = {
    AnalysisReport: analysis_tables,
    ExtractionReport: extraction_tables,
    KempePathReport: kempe_tables,
    SearchReport: search_tables,
    LemmaSweepReport: sweep_tables,
}


def emit(model: BaseModel, fmt: OutputFormat, console: Optional[Console] = None) -> None:
    """Write a report to stdout as JSON or as aligned tables."""
    console = console or Console()
    if fmt == OutputFormat.JSON:
        console.print(dump_json(model), markup=False, highlight=False, soft_wrap=True)
        return
    for table in _TABLES[type(model)](model):
        console.print(table)
