from app.graph.core import Graph
from app.lemma.base import BaseLemma, LemmaContext
from app.lemma.claw_free import (
    C5NeighborhoodLemma,
    ClawFreeDegreeLemma,
    c5_neighborhood_violation,
    is_c5,
)
from app.lemma.collection import LemmaCollection
from app.lemma.degree import DegreeLemma, VertexDegreeLemma
from app.lemma.force import AvoidLemma, ForceLemma
from app.lemma.neighborhood import (
    MissingNeighborLemma,
    NeighborhoodChromaticLemma,
    OutsideNeighborLemma,
)
from app.schema import LemmaVerdict


def all_lemmas() -> LemmaCollection:
    return LemmaCollection(
        DegreeLemma(),
        ForceLemma(),
        AvoidLemma(),
        MissingNeighborLemma(),
        NeighborhoodChromaticLemma(),
        VertexDegreeLemma(),
        OutsideNeighborLemma(),
        C5NeighborhoodLemma(),
        ClawFreeDegreeLemma(),
    )


def check_l_deg(g: Graph, l: int) -> LemmaVerdict:
    return DegreeLemma()(g, l)


def check_l_force(g: Graph, l: int) -> LemmaVerdict:
    return ForceLemma()(g, l)


def check_l_avoid(g: Graph, l: int) -> LemmaVerdict:
    return AvoidLemma()(g, l)


def check_l_missneigh(g: Graph, l: int) -> LemmaVerdict:
    return MissingNeighborLemma()(g, l)


def check_l_chrom(g: Graph, l: int) -> LemmaVerdict:
    return NeighborhoodChromaticLemma()(g, l)


def check_l_vdeg(g: Graph, l: int) -> LemmaVerdict:
    return VertexDegreeLemma()(g, l)


def check_l_outside(g: Graph, l: int) -> LemmaVerdict:
    return OutsideNeighborLemma()(g, l)


def check_l_c5nbr(g: Graph) -> LemmaVerdict:
    return C5NeighborhoodLemma()(g, 3)


def check_l_clawdeg(g: Graph, l: int) -> LemmaVerdict:
    return ClawFreeDegreeLemma()(g, l)


__all__ = [
    "BaseLemma",
    "LemmaContext",
    "LemmaCollection",
    "DegreeLemma",
    "ForceLemma",
    "AvoidLemma",
    "MissingNeighborLemma",
    "NeighborhoodChromaticLemma",
    "VertexDegreeLemma",
    "OutsideNeighborLemma",
    "C5NeighborhoodLemma",
    "ClawFreeDegreeLemma",
    "all_lemmas",
    "c5_neighborhood_violation",
    "is_c5",
    "check_l_deg",
    "check_l_force",
    "check_l_avoid",
    "check_l_missneigh",
    "check_l_chrom",
    "check_l_vdeg",
    "check_l_outside",
    "check_l_c5nbr",
    "check_l_clawdeg",
]
