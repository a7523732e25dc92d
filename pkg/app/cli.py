"""Command-line surface: argument parsing and subcommand handlers.

Exit codes: 0 when a run completes without findings, 1 on usage, parse or
contract errors, 2 when a counterexample or a lemma finding is reported.
"""

import argparse
import os
import sys
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv
from pydantic import ValidationError

from app.chroma.solver import chromatic_number, is_k_colorable
from app.config import WORKERS_ENV_VAR, config, parse_workers
from app.criticality import extract_critical_subgraph, is_kl_critical
from app.exceptions import ContractViolation, CritlabError, PreconditionViolation
from app.graph.cliques import clique_number, enumerate_cliques, find_claw, independence_number
from app.graph.codec import from_graph6, write_graph6_lines
from app.graph.core import Graph, members, set_of
from app.harness.enumerate import enumerate_graphs
from app.harness.render import emit
from app.harness.search import search_counterexamples
from app.harness.sweep import run_lemma_sweep
from app.kempe import audit_prescribed_path, find_prescribed_path
from app.logger import define_log_level, logger
from app.schema import (
    LEMMA_ID_VALUES,
    AnalysisReport,
    Coloring,
    ExtractionReport,
    InputMode,
    KempePathReport,
    OutputFormat,
    SearchConfig,
)


EXIT_OK = 0
EXIT_ERROR = 1
EXIT_FINDING = 2


class CritlabArgumentParser(argparse.ArgumentParser):
    """Argument parser that reports usage errors with exit code 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> List[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _str_list(text: str) -> List[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def read_graph_argument(value: str) -> List[str]:
    """A graph6 string, or the graph6 lines of the file at that path."""
    path = Path(value)
    if path.is_file():
        with path.open() as f:
            return [line.strip() for line in f if line.strip()]
    return [value]


def resolve_workers(flag: Optional[int]) -> int:
    """Worker count: the environment wins over the flag, the flag over the config."""
    env = os.environ.get(WORKERS_ENV_VAR)
    if env:
        return parse_workers(env)
    return flag if flag is not None else config.search.workers


def analyze_graph(g: Graph, graph6: str, l: int) -> AnalysisReport:
    criticality = is_kl_critical(g, l)
    claw = find_claw(g)
    return AnalysisReport(
        graph6=graph6,
        n=g.n,
        edges=g.edge_count(),
        chi=chromatic_number(g).chi,
        omega=clique_number(g),
        alpha=independence_number(g),
        claw_free=claw is None,
        claw=list(claw) if claw is not None else None,
        criticality=criticality,
        clique_split=criticality.clique_drop_witness,
    )


def cmd_analyze(args) -> int:
    code = EXIT_OK
    for graph6 in read_graph_argument(args.graph):
        report = analyze_graph(from_graph6(graph6), graph6, args.l)
        emit(report, args.format)
        if report.criticality.verdict and not report.criticality.is_complete:
            code = EXIT_FINDING
    return code


def cmd_extract(args) -> int:
    result = extract_critical_subgraph(from_graph6(args.graph), args.l)
    emit(ExtractionReport(source=args.graph, result=result), args.format)
    return EXIT_FINDING if result.finding else EXIT_OK


def _clique_mask(g: Graph, clique: List[int]) -> int:
    bad = [v for v in clique if not 0 <= v < g.n]
    if bad:
        raise ContractViolation(f"clique vertices {bad} outside 0..{g.n - 1}")
    return set_of(clique)


def _given_coloring(g: Graph, colors: List[int]) -> Coloring:
    if len(colors) != g.n:
        raise ContractViolation(f"--coloring needs {g.n} entries, got {len(colors)}")
    try:
        return Coloring(colors=tuple(colors), k=max(colors + [0]))
    except ValidationError as e:
        raise ContractViolation(f"invalid --coloring {colors}: {e}") from e


def _path_setup(g: Graph, l: int, x: int, y: int, clique: Optional[List[int]]):
    if clique is not None:
        mask = _clique_mask(g, clique)
    else:
        mask = next(
            (c for c in enumerate_cliques(g, l) if c >> x & 1 and c >> y & 1),
            None,
        )
        if mask is None:
            raise PreconditionViolation(f"no K_{l} copy contains both {x} and {y}")
    rest = g.delete_vertices(mask)
    palette = chromatic_number(g).chi - mask.bit_count()
    coloring = is_k_colorable(rest.graph, palette) if palette >= 0 else None
    if coloring is None:
        coloring = chromatic_number(rest.graph).witness_coloring
    return mask, coloring.lift(rest.original, g.n)


def cmd_kempe_path(args) -> int:
    g = from_graph6(args.graph)
    if not (0 <= args.x < g.n and 0 <= args.y < g.n):
        raise ContractViolation(f"endpoints must lie in 0..{g.n - 1}")
    if args.coloring is not None:
        if args.clique is None:
            raise ContractViolation("--coloring needs --clique")
        mask = _clique_mask(g, args.clique)
        phi = _given_coloring(g, args.coloring)
    else:
        mask, phi = _path_setup(g, args.l, args.x, args.y, args.clique)
    path = find_prescribed_path(g, mask, phi, args.seq, args.x, args.y)
    finding = audit_prescribed_path(g, mask, phi, args.seq, args.x, args.y) if path is None else None
    report = KempePathReport(
        graph6=args.graph,
        clique=members(mask),
        coloring=list(phi.colors),
        seq=args.seq,
        x=args.x,
        y=args.y,
        path=path,
        finding=finding,
    )
    emit(report, args.format)
    return EXIT_FINDING if finding else EXIT_OK


def _lemma_ids(text: str) -> List[str]:
    if text.strip() == "all":
        return list(LEMMA_ID_VALUES)
    return _str_list(text)


def cmd_check_lemmas(args) -> int:
    lines = read_graph_argument(args.graphs)
    n_max = max([args.l] + [from_graph6(line).n for line in lines])
    cfg = SearchConfig.create(
        l=args.l,
        n_max=n_max,
        input_mode=InputMode.STREAM,
        worker_count=resolve_workers(args.workers),
        batch_size=config.search.batch_size,
    )
    report = run_lemma_sweep(cfg, _lemma_ids(args.lemmas), lines=lines, keep_rows=True)
    emit(report, args.format)
    return EXIT_FINDING if report.failures else EXIT_OK


def cmd_search(args) -> int:
    cfg = SearchConfig.from_settings(
        config.search,
        l=args.l,
        n_max=args.n_max,
        require_claw_free=args.claw_free,
        chi_min=args.chi_min,
        chi_max=args.chi_max,
        prune_rules=args.prune,
        worker_count=resolve_workers(args.workers),
        input_mode=InputMode.STREAM if args.stream else InputMode.INTERNAL,
        batch_size=args.batch_size,
        stop_on_counterexample=args.stop_on_counterexample or None,
        progress=args.progress or None,
    )
    report = search_counterexamples(cfg)
    emit(report, args.format)
    return EXIT_FINDING if report.counterexamples else EXIT_OK


def cmd_enumerate(args) -> int:
    count = write_graph6_lines(enumerate_graphs(args.n), sys.stdout)
    logger.info(f"wrote {count} graphs on {args.n} vertices")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = CritlabArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=[fmt.value for fmt in OutputFormat],
        default=OutputFormat.JSON.value,
        help="Report format: json or aligned text",
    )
    common.add_argument("--log-level", default=None, help="Level of the stderr log sink")

    parser = CritlabArgumentParser(
        prog="critlab", description="Exact chromatic tools for K_l-critical graphs"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", parents=[common], help="Analyse graphs")
    analyze.add_argument("graph", help="graph6 string or file of graph6 lines")
    analyze.add_argument("--l", type=int, default=config.search.l, help="Clique order")
    analyze.set_defaults(handler=cmd_analyze)

    extract = commands.add_parser(
        "extract-critical", parents=[common], help="Extract a K_l-critical subgraph"
    )
    extract.add_argument("graph", help="graph6 string")
    extract.add_argument("--l", type=int, required=True, help="Clique order")
    extract.set_defaults(handler=cmd_extract)

    kempe = commands.add_parser("kempe", help="Kempe chain tools")
    kempe_commands = kempe.add_subparsers(dest="kempe_command", required=True)
    path = kempe_commands.add_parser(
        "path", parents=[common], help="Find a path through prescribed colours"
    )
    path.add_argument("graph", help="graph6 string")
    path.add_argument("--l", type=int, default=config.search.l, help="Clique order")
    path.add_argument("--seq", type=_int_list, default=[], help="Colours c1,c2,...")
    path.add_argument("--x", type=int, required=True, help="First endpoint")
    path.add_argument("--y", type=int, required=True, help="Last endpoint")
    path.add_argument("--clique", type=_int_list, default=None, help="Vertices of L")
    path.add_argument(
        "--coloring", type=_int_list, default=None, help="Colour per vertex, 0 on L"
    )
    path.set_defaults(handler=cmd_kempe_path)

    lemmas = commands.add_parser("check-lemmas", parents=[common], help="Run the lemma battery")
    lemmas.add_argument("graphs", help="graph6 string or file of graph6 lines")
    lemmas.add_argument("--lemmas", default="all", help="'all' or comma-separated lemma ids")
    lemmas.add_argument("--l", type=int, default=config.search.l, help="Clique order")
    lemmas.add_argument("--workers", type=int, default=None, help="Worker processes")
    lemmas.set_defaults(handler=cmd_check_lemmas)

    search = commands.add_parser("search", parents=[common], help="Search for counterexamples")
    search.add_argument("--l", type=int, default=None, help="Clique order")
    search.add_argument("--n-max", type=int, default=None, help="Largest vertex count")
    search.add_argument("--claw-free", action="store_true", help="Only claw-free graphs")
    search.add_argument("--chi-min", type=int, default=None, help="Smallest chi scanned")
    search.add_argument("--chi-max", type=int, default=None, help="Largest chi scanned")
    search.add_argument("--prune", type=_str_list, default=None, help="Prune rules to apply")
    search.add_argument("--workers", type=int, default=None, help="Worker processes")
    search.add_argument("--batch-size", type=int, default=None, help="Graphs per batch")
    search.add_argument("--stream", action="store_true", help="Read graph6 lines from stdin")
    search.add_argument(
        "--stop-on-counterexample", action="store_true", help="Cancel after the first finding"
    )
    search.add_argument("--progress", action="store_true", help="Show a progress bar")
    search.set_defaults(handler=cmd_search)

    enumerate_ = commands.add_parser(
        "enumerate", parents=[common], help="Write all graphs on n vertices as graph6"
    )
    enumerate_.add_argument("n", type=int, help="Vertex count, 1..10")
    enumerate_.set_defaults(handler=cmd_enumerate)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    load_dotenv()
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "log_level", None):
        define_log_level(
            print_level=args.log_level.upper(),
            logfile_level=config.logging.logfile_level,
            name="critlab",
            log_to_file=config.logging.log_to_file,
        )
    try:
        return args.handler(args)
    except CritlabError as e:
        logger.error(e.message)
        return EXIT_ERROR
    except KeyboardInterrupt:
        logger.warning("Operation interrupted.")
        return EXIT_ERROR
