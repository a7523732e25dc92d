import io
import random

import networkx as nx
import pytest

from app.exceptions import (
    EdgeListParseError,
    Graph6BodyError,
    Graph6HeaderError,
    Graph6ParseError,
    Graph6SizeError,
    Graph6TruncatedError,
)
from app.graph import (
    Graph,
    from_graph6,
    parse_edge_list,
    read_graph6_lines,
    to_edge_list,
    to_graph6,
    write_graph6_lines,
)
from tests.oracles import from_networkx, to_networkx


CORPUS_SIZE = 10_000


def reference_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").strip()


def random_graph(rng: random.Random, n: int) -> Graph:
    p = rng.random()
    return Graph.from_edge_list(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    )


@pytest.fixture(scope="module")
def graph6_corpus(corpus_flat):
    rng = random.Random(20240601)
    graphs = list(corpus_flat)
    while len(graphs) < CORPUS_SIZE:
        graphs.append(random_graph(rng, rng.randint(1, 64)))
    return graphs


def test_known_encodings(c5):
    assert to_graph6(Graph.empty(0)) == "?"
    assert to_graph6(Graph.complete(3)) == "Bw"
    assert to_graph6(Graph.complete(4)) == "C~"
    assert to_graph6(c5) == "Dhc"


def test_corpus_matches_reference_encoder(graph6_corpus):
    for g in graph6_corpus:
        line = reference_graph6(g)
        assert to_graph6(g) == line
        assert from_graph6(line) == g


def test_decoding_matches_reference_decoder():
    rng = random.Random(7)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 64))
        line = to_graph6(g)
        assert from_networkx(nx.from_graph6_bytes(line.encode("ascii"))) == g


def test_long_size_header():
    g = Graph.complete(63)
    line = to_graph6(g)
    assert line.startswith("~??~")
    assert from_graph6(line) == g


def test_whitespace_is_stripped():
    assert from_graph6("Bw\n") == Graph.complete(3)


@pytest.mark.parametrize(
    "line, error",
    [
        ("", Graph6HeaderError),
        (" ", Graph6HeaderError),
        ("!", Graph6HeaderError),
        ("~?", Graph6HeaderError),
        ("~~??????", Graph6SizeError),
        ("~??~", Graph6TruncatedError),
        ("A", Graph6TruncatedError),
        ("Bww", Graph6BodyError),
        ("B!", Graph6BodyError),
        ("~?@A", Graph6SizeError),
    ],
)
def test_parse_errors_are_distinct(line, error):
    with pytest.raises(error):
        from_graph6(line)


def test_parse_errors_share_a_base():
    with pytest.raises(Graph6ParseError):
        from_graph6("C")


def test_line_helpers(c5):
    out = io.StringIO()
    assert write_graph6_lines([c5, Graph.complete(3)], out) == 2
    assert out.getvalue() == "Dhc\nBw\n"
    assert list(read_graph6_lines(["Dhc", "", "Bw"])) == [c5, Graph.complete(3)]


def test_edge_list_round_trip(petersen):
    text = to_edge_list(petersen)
    assert text.splitlines()[0] == "10 15"
    assert parse_edge_list(text) == petersen


@pytest.mark.parametrize(
    "text",
    ["", "3 2\n0 1\n", "3 1\n0 3\n", "3 1\n1 1\n", "three 0\n", "2 1\n0\n"],
)
def test_edge_list_errors(text):
    with pytest.raises(EdgeListParseError):
        parse_edge_list(text)
