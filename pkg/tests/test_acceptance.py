"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line that is echoed in the pytest terminal
summary. Run alone with ``pytest tests/test_acceptance.py -v`` or
``python tests/test_acceptance.py``.
"""
import random
import time

import pytest

from conftest import random_graph, random_two_connected

from cyclecliques import enumeration, verify
from cyclecliques.cliques import census, count_cliques, count_cliques_oracle, decompose_nk, f_formula, g_formula, h_formula
from cyclecliques.constructions import build_F, build_H, build_X
from cyclecliques.cycles import circumference, circumference_oracle, max_cycle_through_edge
from cyclecliques.enumeration import EnumerationSpec, enumerate_graphs
from cyclecliques.graph import is_two_connected, is_vertex_cut, iter_bits
from cyclecliques.graph6 import emit_graph6, parse_graph6
from cyclecliques.transforms import contract_edge, edge_switch
from cyclecliques.verify import (verify_lemma8, verify_theorem1, verify_theorem2, verify_theorem3, verify_theorem4,
                                 verify_theorem6)

pytestmark = pytest.mark.acceptance


def _failures(reports):
    return [r for r in reports if r.verdict != "pass"]


def test_criterion1_formulas_match_constructions(acceptance_line):
    started = time.perf_counter()
    checked, bad = 0, []
    for n in range(4, 15):
        for c in range(3, n):
            lst = census(build_H(n, c)).as_list()
            for s in range(2, n + 1):
                checked += 1
                if lst[s - 1] != h_formula(n, c, s):
                    bad.append(("H", n, c, s))
        for k in range(4, n + 1):
            if decompose_nk(n, k).beta < 1:
                continue
            lst = census(build_X(n, k)).as_list()
            for s in range(2, n + 1):
                checked += 1
                if lst[s - 1] != g_formula(n, k, s):
                    bad.append(("X", n, k, s))
        for c in range(4, n):
            for k in range(2, c // 2 + 1):
                lst = census(build_F(n, c, k)).as_list()
                for s in range(2, n + 1):
                    checked += 1
                    if lst[s - 1] != f_formula(n, c, k, s):
                        bad.append(("F", n, c, k, s))
    elapsed = time.perf_counter() - started
    ok = not bad and elapsed < 60
    acceptance_line("criterion 1 formula/construction agreement", ok,
                    f"{checked} values, {len(bad)} mismatches, {elapsed:.1f}s")
    assert ok, bad[:10]


def test_criterion2_oracle_equivalence(acceptance_line):
    started = time.perf_counter()
    clique_checks = circ_checks = 0
    bad = []
    for n in range(0, 8):
        for g in enumerate_graphs(EnumerationSpec(n)):
            lst = census(g).as_list()
            for s in range(1, n + 1):
                clique_checks += 1
                if not lst[s - 1] == count_cliques(g, s) == count_cliques_oracle(g, s):
                    bad.append(("clique", emit_graph6(g), s))
    for n in range(1, 9):
        for g in enumerate_graphs(EnumerationSpec(n, connected=True)):
            circ_checks += 1
            if circumference(g) != circumference_oracle(g):
                bad.append(("circumference", emit_graph6(g)))
    elapsed = time.perf_counter() - started
    ok = not bad and clique_checks > 0 and elapsed < 600
    acceptance_line("criterion 2 oracle equivalence", ok,
                    f"{clique_checks} clique counts over 1044 graphs, {circ_checks} circumferences "
                    f"(all connected n <= 8), {len(bad)} mismatches, {elapsed:.1f}s")
    assert ok, bad[:10]


def test_criterion3_theorem3(acceptance_line):
    started = time.perf_counter()
    reports = [verify_theorem3(n, c, s) for n in range(4, 9) for c in range(4, n) for s in range(3, c + 1)]
    bad = _failures(reports) + [r for r in reports if r.achieved_max != r.bound]
    sharp = all(r.extremal_certificates for r in reports)
    elapsed = time.perf_counter() - started
    ok = not bad and sharp and elapsed < 1800
    acceptance_line("criterion 3 clique bound, circumference at most c", ok,
                    f"{len(reports)} parameter points, {len(bad)} failures, {elapsed:.1f}s")
    assert ok, [r.summary() for r in bad[:3]]


def test_criterion4_theorems4_and_6(acceptance_line):
    started = time.perf_counter()
    points = [(n, k, s) for n in range(5, 9) for k in range(4, n) for s in range(3, k + 1)]
    bounds = [verify_theorem4(*p) for p in points]
    closures = [verify_theorem6(*p) for p in points]
    bad = _failures(bounds) + [r for r in bounds if r.achieved_max != r.bound] + _failures(closures)
    elapsed = time.perf_counter() - started
    ok = not bad and elapsed < 3600
    acceptance_line("criterion 4 short-edge clique bound and closure structure", ok,
                    f"{len(points)} parameter points, {sum(r.graphs_checked for r in closures)} extremal graphs "
                    f"closed over all orders, {len(bad)} failures, {elapsed:.1f}s")
    assert ok, [r.summary() for r in bad[:3]]


def test_criterion5_edge_bounds_and_families(acceptance_line):
    started = time.perf_counter()
    first = [verify_theorem1(n, c) for n in range(3, 9) for c in range(3, n + 1)]
    second = [verify_theorem2(n, k) for n in range(4, 9) for k in range(4, n + 1)]
    reports = first + second
    bad = _failures(reports) + [r for r in reports if r.achieved_max != r.bound]
    elapsed = time.perf_counter() - started
    ok = not bad
    acceptance_line("criterion 5 edge bounds with equality families", ok,
                    f"{len(reports)} parameter points, {len(bad)} failures, {elapsed:.1f}s")
    assert ok, [r.summary() for r in bad[:3]]


def test_criterion6_lemma8_grid(acceptance_line):
    started = time.perf_counter()
    report = verify_lemma8(40, 40)
    elapsed = time.perf_counter() - started
    by_check: dict[str, int] = {}
    for ce in report.counterexamples:
        by_check[ce["check"]] = by_check.get(ce["check"], 0) + 1
    detail = ", ".join(f"{k}: {v}" for k, v in sorted(by_check.items())) or "none"
    acceptance_line("criterion 6a gap f < h on c <= 40, n <= c + 40", "f<h" not in by_check,
                    f"{report.notes[0]}")
    acceptance_line("criterion 6b binomial inequalities, even and odd c", not {"even", "odd"} & set(by_check),
                    "all 3 <= s <= c")
    acceptance_line("criterion 6c reduced product forms", not {"even_reduced", "odd_reduced"} & set(by_check),
                    f"violations {detail}")
    ok = report.verdict == "pass" and elapsed < 60
    acceptance_line("criterion 6 arithmetic grid", ok,
                    f"{report.graphs_checked} checks, {len(report.counterexamples)} violations, {elapsed:.1f}s")
    assert ok, report.counterexamples


def test_criterion7_transform_properties(acceptance_line):
    started = time.perf_counter()
    rng = random.Random(20241015)
    graphs = [random_two_connected(rng, 4, 9) for _ in range(1000)]
    tallies = {"contraction": 0, "switching": 0, "edge cycle": 0}
    bad = []
    for g in graphs:
        n3, n4 = count_cliques(g, 3), count_cliques(g, 4)
        for a, b in g.edges():
            for u, x in ((a, b), (b, a)):
                if is_vertex_cut(g, (u, x)):
                    continue
                if g.adj[u] & g.adj[x]:
                    h = edge_switch(g, x, u)
                    tallies["switching"] += 1
                    for v in iter_bits(g.adj[u] & ~(1 << x)):
                        k = max_cycle_through_edge(g, (u, v))
                        tallies["edge cycle"] += 1
                        if max_cycle_through_edge(h, (u, v)) > k:
                            bad.append(("edge cycle", emit_graph6(g), u, x, v))
                elif u < x:
                    h = contract_edge(g, u, x)
                    tallies["contraction"] += 1
                else:
                    continue
                if not is_two_connected(h) or count_cliques(h, 3) < n3 or count_cliques(h, 4) < n4:
                    bad.append(("surgery", emit_graph6(g), u, x))
    elapsed = time.perf_counter() - started
    ok = not bad and all(tallies.values())
    acceptance_line("criterion 7 contraction and switching properties", ok,
                    f"{len(graphs)} random 2-connected graphs, "
                    + ", ".join(f"{k} {v}" for k, v in tallies.items())
                    + f", {len(bad)} violations, {elapsed:.1f}s")
    assert ok, bad[:10]


def test_criterion8_round_trip_and_determinism(acceptance_line):
    rng = random.Random(8)
    corpus = [emit_graph6(random_graph(rng, rng.randint(0, 64), rng.random())) for _ in range(10_000)]
    round_trip_bad = [s for s in corpus if emit_graph6(parse_graph6(s)) != s]

    def fresh_payloads():
        verify._cached_records.cache_clear()
        enumeration._level.cache_clear()
        runs = [verify_theorem1(7, 4), verify_theorem3(7, 4, 3), verify_theorem4(7, 5, 3),
                verify_theorem6(7, 5, 3), verify_lemma8(12, 6)]
        return [r.canonical_payload() for r in runs]

    first, second = fresh_payloads(), fresh_payloads()
    ok = not round_trip_bad and first == second
    acceptance_line("criterion 8 graph6 round trip and report determinism", ok,
                    f"{len(corpus)} strings, {len(round_trip_bad)} round-trip failures, "
                    f"{sum(a == b for a, b in zip(first, second))}/{len(first)} payloads byte-identical")
    assert ok


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v", "-s"]))
