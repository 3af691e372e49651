"""Tests for graph6 and edge-list ingestion."""

import networkx as nx
import numpy as np
import pytest

from walksig.core.errors import GraphFormatError
from walksig.models.graph import Graph
from walksig.services import fixtures
from walksig.services.graph_io import (
    detect_format,
    encode_edge_list,
    encode_graph6,
    load_family,
    load_family_file,
    parse_edge_list,
    parse_graph6,
    write_family,
)


def test_parse_graph6_small_records():
    empty = parse_graph6("B?")
    assert empty.n == 3 and empty.m == 0

    k2 = parse_graph6("A_")
    assert k2.n == 2 and k2.edges() == [(0, 1)]

    k4 = parse_graph6(b"C~")
    assert k4 == Graph.from_networkx(nx.complete_graph(4))


def test_encode_graph6_small_graphs(k4):
    assert encode_graph6(Graph.empty(3)) == b"B?"
    assert encode_graph6(k4) == b"C~"
    assert encode_graph6(Graph.from_edges(2, [(0, 1)])) == b"A_"


def test_graph6_matches_networkx_bit_order(petersen):
    expected = nx.to_graph6_bytes(nx.petersen_graph(), header=False).strip()
    assert encode_graph6(petersen) == expected
    assert parse_graph6(expected) == petersen


def test_graph6_round_trip_with_long_header():
    g = Graph.from_networkx(nx.path_graph(70))
    record = encode_graph6(g)
    assert record[0] == 126
    assert record == nx.to_graph6_bytes(nx.path_graph(70), header=False).strip()
    assert parse_graph6(record) == g


def test_graph6_header_and_whitespace_accepted(k4):
    assert parse_graph6(">>graph6<<C~\n") == k4


@pytest.mark.parametrize(
    "record, fragment",
    [
        (":Fa@x^", "sparse6"),
        ("C", "truncated"),
        ("C~~", "trailing"),
        ("C\x7f", "outside 63..126"),
        ("?", "without vertices"),
    ],
)
def test_parse_graph6_rejects_malformed_records(record, fragment):
    with pytest.raises(GraphFormatError, match=fragment) as info:
        parse_graph6(record)
    assert info.value.offset is not None


def test_out_of_range_byte_reports_offset():
    with pytest.raises(GraphFormatError) as info:
        parse_graph6("C\x21")
    assert info.value.offset == 1


def test_parse_edge_list(k4):
    text = "4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"
    assert parse_edge_list(text) == k4
    k2 = parse_edge_list("2\n0 1\n1 0\n")
    assert k2.m == 1


def test_parse_edge_list_errors():
    with pytest.raises(GraphFormatError, match="out of range"):
        parse_edge_list("3\n0 3\n")
    with pytest.raises(GraphFormatError, match="self-loop"):
        parse_edge_list("3\n1 1\n")


def test_edge_list_comments_and_round_trip(petersen):
    text = "# Petersen\n" + encode_edge_list(petersen)
    assert parse_edge_list(text) == petersen


def test_load_family_skips_blank_lines(rook, shrikhande):
    lines = [encode_graph6(rook).decode(), "", encode_graph6(shrikhande).decode()]
    family = load_family(lines, "graph6", source="srg16")
    assert len(family) == 2
    assert family[0] == rook and family[1] == shrikhande
    assert family.source == "srg16"


def test_load_family_empty():
    assert len(load_family([], "graph6")) == 0


def test_load_family_names_bad_line():
    with pytest.raises(GraphFormatError) as info:
        load_family(["C~", "B?", "C"], "graph6")
    assert info.value.line == 3
    assert "line 3" in str(info.value)


def test_load_family_file_detects_format(tmp_path, petersen, k4):
    graphs = [petersen, k4]
    for fmt, name in (("graph6", "f.g6"), ("edge-list", "f.txt")):
        path = tmp_path / name
        path.write_text(write_family(graphs, fmt), encoding="ascii")
        assert detect_format(path.read_text()) == fmt
        assert list(load_family_file(path)) == graphs


def test_parsing_is_deterministic():
    record = encode_graph6(fixtures.builtin("shrikhande"))
    first, second = parse_graph6(record), parse_graph6(record)
    assert np.array_equal(first.adjacency, second.adjacency)
    assert int(first.degrees.sum()) % 2 == 0


def test_non_ascii_file_names_its_line(tmp_path):
    path = tmp_path / "family.g6"
    path.write_bytes(b"C~\nB?\nC\xc3\xa9\n")
    with pytest.raises(GraphFormatError) as info:
        load_family_file(path)
    assert info.value.line == 3
    assert info.value.offset == 1
    assert str(info.value).startswith("line 3, byte 1:")


def test_non_ascii_record_names_its_line():
    with pytest.raises(GraphFormatError) as info:
        load_family(["C~", "Cé"])
    assert info.value.line == 2
    assert info.value.offset == 1
