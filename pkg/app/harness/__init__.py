from app.harness.enumerate import augment, enumerate_graphs, generate_levels
from app.harness.search import contradicted_results, search_counterexamples
from app.harness.sweep import run_lemma_sweep


__all__ = [
    "augment",
    "enumerate_graphs",
    "generate_levels",
    "search_counterexamples",
    "contradicted_results",
    "run_lemma_sweep",
]
