import random

import pytest
from hypothesis import given

from conftest import graphs, random_graph

from cyclecliques.cliques import (binom, census, count_cliques, count_cliques_oracle, decompose_nc, decompose_nk,
                                  f_formula, g_formula, h_formula)
from cyclecliques.constructions import build_F, build_H, build_X
from cyclecliques.graph import GraphError, complete, cycle, empty, join


def test_count_examples():
    assert count_cliques(complete(5), 3) == 10
    assert count_cliques(build_H(7, 4), 3) == 8
    assert count_cliques(build_X(8, 4), 3) == 12
    assert count_cliques(complete(3), 5) == 0
    assert count_cliques_oracle(empty(6), 2) == 0
    assert count_cliques_oracle(complete(6), 6) == 1


def test_census_examples():
    assert census(complete(3)).as_list() == [3, 3, 1]
    assert census(cycle(5)).as_list() == [5, 5, 0, 0, 0]
    assert census(build_F(8, 5, 2))[3] == 8
    assert census(empty(0)).as_list() == []
    assert census(cycle(5))[0] == 1


def test_formula_examples():
    assert h_formula(7, 4, 3) == 8
    assert h_formula(8, 4, 3) == 8
    assert h_formula(4, 5, 3) == 4
    assert g_formula(8, 4, 2) == 16
    assert g_formula(8, 4, 3) == 12
    assert g_formula(9, 5, 3) == 21
    assert f_formula(8, 5, 2, 3) == 8
    assert f_formula(10, 6, 3, 3) == 22
    assert f_formula(8, 5, 2, 5) == 0


def test_decompositions():
    d = decompose_nc(7, 4)
    assert (d.alpha, d.p) == (2, 0)
    d = decompose_nk(8, 4)
    assert (d.beta, d.q) == (3, 0)
    d = decompose_nk(9, 5)
    assert (d.beta, d.q) == (2, 1)


def test_parameter_errors():
    for call in (lambda: h_formula(5, 2, 3), lambda: g_formula(5, 2, 3), lambda: f_formula(5, 5, 2, 3),
                 lambda: count_cliques(complete(3), 0), lambda: decompose_nc(3, 1), lambda: decompose_nk(3, 2),
                 lambda: count_cliques_oracle(empty(17), 2)):
        with pytest.raises(GraphError):
            call()


def test_binom_convention():
    assert binom(3, 5) == 0 and binom(3, -1) == 0 and binom(0, 0) == 1 and binom(5, 2) == 10


def test_counts_match_oracle_on_random_graphs():
    rng = random.Random(3)
    for _ in range(200):
        g = random_graph(rng, rng.randint(0, 12), rng.random())
        lst = census(g).as_list()
        for s in range(1, g.n + 1):
            assert lst[s - 1] == count_cliques(g, s) == count_cliques_oracle(g, s)


@given(graphs(max_n=10))
def test_adding_an_edge_never_lowers_counts(g):
    before = census(g).as_list()
    for f in g.non_edges()[:5]:
        after = census(g.add_edge(*f)).as_list()
        assert all(a >= b for a, b in zip(after, before))


@given(graphs(max_n=6), graphs(max_n=6))
def test_join_identity(g, h):
    cg, ch, cj = census(g), census(h), census(join(g, h))
    for s in range(1, g.n + h.n + 1):
        assert cj[s] == sum(cg[i] * ch[s - i] for i in range(s + 1))


@pytest.mark.parametrize("n", range(4, 13))
def test_g2_counts_edges_of_x(n):
    for k in range(4, n + 1):
        assert g_formula(n, k, 2) == build_X(n, k).num_edges
