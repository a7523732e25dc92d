"""K_l-criticality checks and extraction of a critical subgraph.

A graph is K_l-critical when it contains a K_l, deleting any vertex lowers the
chromatic number by one, and deleting the vertices of any K_l copy lowers it
by l. Every clause is decided with the exact solver as oracle.
"""

from typing import Optional, Tuple

from app.chroma.solver import chi, chromatic_number, is_k_colorable
from app.exceptions import ContractViolation, PreconditionViolation
from app.graph.cliques import contains_clique, enumerate_cliques
from app.graph.codec import to_graph6
from app.graph.core import Graph, bit, iter_bits, members
from app.logger import logger
from app.schema import ClauseResult, CriticalityReport, ExtractionResult, Finding, FindingKind


EXTRACTION_SOURCE = "critical-subgraph-extraction"


def _drops_by(g: Graph, drop: int, chi_value: int, amount: int) -> bool:
    """True iff deleting ``drop`` leaves a graph colourable with chi - amount colours."""
    remaining = g.delete_vertices(drop).graph
    return is_k_colorable(remaining, chi_value - amount) is not None


def _vertex_clause(g: Graph, chi_value: int) -> ClauseResult:
    for v in range(g.n):
        if not _drops_by(g, bit(v), chi_value, 1):
            logger.debug(f"vertex {v} keeps chi={chi_value}")
            return ClauseResult(holds=False, witness=[v])
    return ClauseResult(holds=True)


def _clique_clause(g: Graph, l: int, chi_value: int) -> Tuple[ClauseResult, Optional[int]]:
    for clique in enumerate_cliques(g, l):
        if not _drops_by(g, clique, chi_value, l):
            residual = chi(g.delete_vertices(clique).graph)
            logger.debug(f"K_{l} {members(clique)} leaves chi={residual}, expected {chi_value - l}")
            return ClauseResult(holds=False, witness=members(clique)), residual
    return ClauseResult(holds=True), None


def is_vertex_critical(g: Graph) -> ClauseResult:
    """Whether every vertex deletion lowers chi; the witness is the least failing vertex."""
    if g.n < 1:
        raise ContractViolation("vertex criticality needs at least one vertex")
    return _vertex_clause(g, chi(g))


def has_clique_drop_property(g: Graph, l: int) -> ClauseResult:
    """Whether deleting any K_l copy lowers chi by exactly l.

    The witness is the lexicographically first clique that fails.
    """
    if not contains_clique(g, l):
        raise PreconditionViolation(f"graph {to_graph6(g)} has no K_{l}")
    result, _ = _clique_clause(g, l, chi(g))
    return result


def is_kl_critical(g: Graph, l: int, short_circuit: bool = False) -> CriticalityReport:
    """Evaluate all three clauses of K_l-criticality.

    With ``short_circuit`` the clauses run in order and evaluation stops at the
    first false one; the skipped clauses stay None in the report.
    """
    if l < 2:
        raise ContractViolation(f"clique order must be at least 2, got {l}")
    chi_value = chromatic_number(g).chi
    first = next(enumerate_cliques(g, l), None)
    report = CriticalityReport(
        graph6=to_graph6(g),
        l=l,
        chi=chi_value,
        is_complete=g.is_complete(),
        has_kl=first is not None,
        kl_witness=members(first) if first is not None else None,
        verdict=False,
    )
    if short_circuit and not report.has_kl:
        return report

    if g.n:
        vertex = _vertex_clause(g, chi_value)
        report.vertex_critical = vertex.holds
        report.vertex_witness = vertex.witness[0] if vertex.witness else None
        if short_circuit and not vertex.holds:
            return report

    # no K_l copy makes the third clause hold vacuously
    drop, residual = _clique_clause(g, l, chi_value)
    report.clique_drop = drop.holds
    report.clique_drop_witness = drop.witness
    report.clique_drop_residual_chi = residual

    report.verdict = bool(report.has_kl and report.vertex_critical and report.clique_drop)
    return report


def is_double_critical(g: Graph) -> bool:
    return is_kl_critical(g, 2, short_circuit=True).verdict


def find_clique_split(g: Graph, s: int) -> Optional[Tuple[list, int]]:
    """First K_s copy S with chi(G - S) > chi(G) - s, together with chi(G - S).

    Such an S splits G into vertex-disjoint parts of chromatic number s and at
    least chi(G) - s + 1. None means no K_s copy splits G.
    """
    chi_value = chi(g)
    for clique in enumerate_cliques(g, s):
        if not _drops_by(g, clique, chi_value, s):
            return members(clique), chi(g.delete_vertices(clique).graph)
    return None


def extract_critical_subgraph(g: Graph, l: int) -> ExtractionResult:
    """Shrink g to a K_l-critical induced subgraph with the same chromatic number.

    Repeatedly deletes the least-index vertex whose removal keeps chi and
    restarts the scan, until no vertex can go. A result that fails
    is_kl_critical is returned with a lemma-falsified finding attached.
    """
    if l < 2:
        raise ContractViolation(f"clique order must be at least 2, got {l}")
    drop = has_clique_drop_property(g, l)
    if not drop.holds:
        raise PreconditionViolation(
            f"K_{l} copy {drop.witness} does not lower chi by {l} in {to_graph6(g)}"
        )

    chi_value = chi(g)
    keep = g.vertices
    removed = True
    while removed:
        removed = False
        for v in iter_bits(keep):
            candidate = keep & ~bit(v)
            sub = g.induced_subgraph(candidate).graph
            if is_k_colorable(sub, chi_value - 1) is None:
                keep = candidate
                removed = True
                break

    extracted = g.induced_subgraph(keep).graph
    report = is_kl_critical(extracted, l)
    result = ExtractionResult(
        graph6=to_graph6(extracted),
        kept_vertices=members(keep),
        chi=chi_value,
        report=report,
    )
    if not report.verdict:
        result.finding = Finding(
            kind=FindingKind.LEMMA_FALSIFIED,
            source=EXTRACTION_SOURCE,
            graph6=to_graph6(g),
            detail={"extracted": result.graph6, "report": report.model_dump()},
        )
        logger.bind(finding=result.finding.model_dump()).error(
            f"extracted subgraph {result.graph6} of {to_graph6(g)} is not K_{l}-critical"
        )
    else:
        logger.debug(f"extracted {result.graph6} from {to_graph6(g)} keeping {result.kept_vertices}")
    return result
