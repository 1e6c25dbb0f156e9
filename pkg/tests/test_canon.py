import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, random_graph, to_nx

from cyclecliques.canon import canonical_form, canonical_graph, is_isomorphic
from cyclecliques.graph import build, complete, cycle, empty, path
from cyclecliques.graph6 import parse_graph6


def test_relabeled_cycle():
    a = build(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    b = build(4, [(0, 2), (2, 1), (1, 3), (3, 0)])
    assert canonical_form(a) == canonical_form(b)


def test_triangle_vs_path():
    assert canonical_form(complete(3)) != canonical_form(path(3))


def test_eleven_graphs_on_four_vertices():
    pairs = list(combinations(range(4), 2))
    forms = {canonical_form(build(4, [p for i, p in enumerate(pairs) if mask >> i & 1]))
             for mask in range(1 << len(pairs))}
    assert len(forms) == 11


def test_atlas_classes_are_distinct(atlas):
    forms = [canonical_form(g) for g in atlas]
    assert len(set(forms)) == len(atlas) == 1253


@pytest.mark.parametrize("g", [empty(8), complete(8), cycle(8), build(8, [(i, i + 4) for i in range(4)]),
                               build(10, [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)]
                                     + [(5 + i, 5 + (i + 2) % 5) for i in range(5)])])
def test_symmetric_graphs_stable_under_100_relabelings(g):
    rng = random.Random(0)
    form = canonical_form(g)
    for _ in range(100):
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_form(g.relabel(perm)) == form


@settings(max_examples=30)
@given(graphs(max_n=10), st.randoms(use_true_random=False))
def test_invariant_under_relabeling(g, rng):
    form = canonical_form(g)
    for _ in range(25):
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_form(g.relabel(perm)) == form


def test_agrees_with_networkx_isomorphism():
    rng = random.Random(7)
    for _ in range(400):
        n = rng.randint(5, 8)
        p = rng.uniform(0.3, 0.6)
        g, h = random_graph(rng, n, p), random_graph(rng, n, p)
        if g.num_edges != h.num_edges:
            continue
        assert is_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))


@given(graphs(max_n=9))
def test_canonical_graph_is_isomorphic_and_encoded(g):
    cg = canonical_graph(g)
    assert nx.is_isomorphic(to_nx(cg), to_nx(g))
    assert parse_graph6(canonical_form(g).decode()) == cg


def test_colors_distinguish_edge_roles():
    p4 = path(4)
    end_edge = [1, 1, 0, 0]
    mid_edge = [0, 1, 1, 0]
    assert canonical_form(p4, end_edge) != canonical_form(p4, mid_edge)
    assert canonical_form(p4, end_edge) == canonical_form(p4, [0, 0, 1, 1])
