from app.graph.canon import (
    are_isomorphic,
    canonical_certificate,
    canonical_form,
    canonical_labeling,
    rooted_certificate,
)
from app.graph.cliques import (
    clique_number,
    contains_clique,
    enumerate_cliques,
    find_claw,
    independence_number,
    is_claw_free,
    maximum_clique,
    maximum_independent_set,
)
from app.graph.codec import (
    from_graph6,
    parse_edge_list,
    read_graph6_lines,
    to_edge_list,
    to_graph6,
    write_graph6_lines,
)
from app.graph.core import (
    MAX_VERTICES,
    Graph,
    InducedSubgraph,
    VertexSet,
    bit,
    iter_bits,
    members,
    set_of,
)


__all__ = [
    "Graph",
    "InducedSubgraph",
    "VertexSet",
    "MAX_VERTICES",
    "bit",
    "iter_bits",
    "members",
    "set_of",
    "from_graph6",
    "to_graph6",
    "read_graph6_lines",
    "write_graph6_lines",
    "parse_edge_list",
    "to_edge_list",
    "enumerate_cliques",
    "contains_clique",
    "maximum_clique",
    "clique_number",
    "maximum_independent_set",
    "independence_number",
    "find_claw",
    "is_claw_free",
    "canonical_labeling",
    "canonical_certificate",
    "canonical_form",
    "rooted_certificate",
    "are_isomorphic",
]
