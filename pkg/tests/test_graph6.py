import random

import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs, random_graph, to_nx

from cyclecliques.graph import build, complete, empty
from cyclecliques.graph6 import Graph6Error, emit_graph6, parse_graph6


def test_known_strings():
    assert emit_graph6(complete(3)) == "Bw"
    assert parse_graph6("Bw") == complete(3)
    assert emit_graph6(empty(1)) == "@"
    assert parse_graph6("@") == empty(1)
    assert emit_graph6(empty(0)) == "?"


@given(graphs(max_n=12))
def test_matches_networkx_encoder(g):
    ref = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert emit_graph6(g) == ref


@pytest.mark.parametrize("n", [62, 63, 64])
def test_long_order_header(n):
    g = random_graph(random.Random(n), n, 0.2)
    s = emit_graph6(g)
    assert s == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert parse_graph6(s) == g


@given(graphs(max_n=14))
def test_round_trip(g):
    assert parse_graph6(emit_graph6(g)) == g


def test_header_prefix_accepted():
    assert parse_graph6(">>graph6<<Bw") == complete(3)


@pytest.mark.parametrize("bad", ["", "B", "Bww", "Bx", "B\x7f", "~??", "~?@A"])
def test_malformed(bad):
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


def test_trailing_bits_rejected():
    # K_3 uses 3 of 6 bits; 'x' sets a padding bit
    with pytest.raises(Graph6Error):
        parse_graph6("Bx")


def test_order_overflow():
    with pytest.raises(Graph6Error):
        parse_graph6("~?@@")  # n = 65
