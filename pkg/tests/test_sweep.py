import pytest

from app.exceptions import ContractViolation
from app.graph import Graph, to_graph6
from app.harness.sweep import SweepBatch, run_lemma_sweep, sweep_batch
from app.schema import LEMMA_ID_VALUES, InputMode, LemmaId, SearchConfig


def test_empty_lemma_list_scans_nothing():
    report = run_lemma_sweep(SearchConfig(l=2, n_max=5), [])
    assert report.graphs_scanned == 0
    assert report.tallies == {}
    assert report.failures == []


def test_unknown_lemma_is_rejected():
    with pytest.raises(ContractViolation):
        run_lemma_sweep(SearchConfig(l=2, n_max=5), ["L-UNKNOWN"])


def test_single_graph_rows():
    cfg = SearchConfig(l=3, n_max=8, input_mode=InputMode.STREAM)
    report = run_lemma_sweep(
        cfg, list(LEMMA_ID_VALUES), lines=[to_graph6(Graph.complete(8))], keep_rows=True
    )
    assert report.graphs_scanned == 1
    assert len(report.rows) == 1
    assert len(report.rows[0].verdicts) == len(LemmaId)
    assert report.tallies["L-DEG"].passed == 1
    assert report.tallies["L-AVOID"].vacuous == 1
    assert report.tallies["L-C5NBR"].vacuous == 1
    assert report.failures == []


def test_claw_free_only_skips_claws(claw, c5):
    result = sweep_batch([to_graph6(claw), to_graph6(c5)], 2, ["L-DEG"], True, False)
    assert result.graphs_scanned == 1
    assert result.tallies["L-DEG"].applicable == 1
    assert result.rows == []


def test_batches_merge_tallies(c5):
    a = sweep_batch([to_graph6(c5)], 2, ["L-DEG", "L-FORCE"], False, True)
    b = sweep_batch(["Bw"], 2, ["L-DEG", "L-FORCE"], False, True)
    merged = a.merge(b)
    assert merged.graphs_scanned == 2
    assert merged.tallies["L-DEG"].applicable == 2
    assert merged.tallies["L-FORCE"].vacuous == 1
    assert merged.tallies["L-FORCE"].passed == 1
    assert [row.graph6 for row in merged.rows] == ["Dhc", "Bw"]
    assert SweepBatch().merge(a) == a.merge(SweepBatch())


def test_small_graphs_satisfy_every_lemma():
    report = run_lemma_sweep(SearchConfig(l=2, n_max=7), list(LEMMA_ID_VALUES))
    assert report.graphs_scanned == 1 + 2 + 4 + 11 + 34 + 156 + 1044
    assert report.failures == []
    assert all(tally.failed == 0 for tally in report.tallies.values())
    # every K_2-critical graph this small is complete
    assert report.tallies["L-VDEG"].applicable == 0
    assert report.tallies["L-FORCE"].applicable == 6


def test_claw_free_triangle_sweep():
    cfg = SearchConfig(l=3, n_max=6, require_claw_free=True)
    report = run_lemma_sweep(cfg, ["L-CLAWDEG", "L-DEG"])
    assert report.failures == []
    assert report.tallies["L-CLAWDEG"].applicable == 4


@pytest.mark.slow
def test_double_critical_sweep_up_to_nine():
    cfg = SearchConfig(l=2, n_max=9, worker_count=4)
    report = run_lemma_sweep(cfg, list(LEMMA_ID_VALUES))
    assert report.failures == []
    assert report.tallies["L-VDEG"].applicable == 0
