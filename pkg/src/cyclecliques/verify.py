"""Exhaustive checkers for the clique and edge bounds and their extremal structure.

Every checker walks all graphs of the requested order (or a graph6 corpus),
recomputes the bound from the closed forms, and returns a VerificationReport.
Per-graph statistics for an order are computed once and cached.
"""
from __future__ import annotations

import json
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .canon import canonical_form
from .cliques import binom, census, decompose_nc, f_formula, g_formula, h_formula
from .constructions import build_H, build_X, fan_variants, woodall_variants
from .cycles import circumference, edge_cycle_at_most, edge_cycle_profile
from .enumeration import EnumerationSpec, enumerate_graphs
from .graph import Graph, block_decomposition, is_connected, is_two_connected, is_vertex_cut
from .graph6 import emit_graph6, parse_graph6
from .transforms import all_closures_L, all_closures_M, contract_edge, contracted_label, edge_switch

MAX_VERIFY_ORDER = 9


class ParameterError(ValueError):
    pass


@dataclass
class VerificationReport:
    theorem: str
    parameters: dict
    graphs_checked: int = 0
    bound: int | None = None
    achieved_max: int | None = None
    extremal_certificates: list[str] = field(default_factory=list)
    counterexamples: list[dict] = field(default_factory=list)
    verdict: str = "vacuous"
    notes: list[str] = field(default_factory=list)
    elapsed_ms: float = 0.0

    def finish(self, started: float) -> VerificationReport:
        if self.counterexamples:
            self.verdict = "fail"
        elif self.graphs_checked == 0:
            self.verdict = "vacuous"
        else:
            self.verdict = "pass"
        self.extremal_certificates.sort()
        self.elapsed_ms = round((time.perf_counter() - started) * 1000, 3)
        return self

    def payload(self) -> dict:
        """Report contents without timing, for byte-exact comparison."""
        out = asdict(self)
        del out["elapsed_ms"]
        return out

    def canonical_payload(self) -> str:
        return json.dumps(self.payload(), sort_keys=True, separators=(",", ":"))

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2)

    def summary(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in sorted(self.parameters.items()))
        lines = [
            f"{self.theorem} [{params}]: {self.verdict}",
            f"  graphs checked: {self.graphs_checked}",
            f"  bound: {self.bound}  achieved max: {self.achieved_max}",
            f"  extremal certificates: {len(self.extremal_certificates)}",
            f"  counterexamples: {len(self.counterexamples)}",
        ]
        for ce in self.counterexamples[:10]:
            lines.append(f"    {ce}")
        for note in self.notes:
            lines.append(f"  note: {note}")
        lines.append(f"  elapsed: {self.elapsed_ms:.1f} ms")
        return "\n".join(lines)


@dataclass(frozen=True)
class GraphRecord:
    graph: Graph
    graph6: str
    two_connected: bool
    circumference: int
    census: tuple[int, ...]
    edge_cycles: tuple[tuple[tuple[int, int], int], ...]  # empty unless 2-connected

    def n_s(self, s: int) -> int:
        return self.census[s] if s < len(self.census) else 0

    def short_edges(self, k: int) -> list[tuple[int, int]]:
        return [e for e, ce in self.edge_cycles if ce <= k]


def make_record(g: Graph) -> GraphRecord:
    two = is_two_connected(g)
    profile = tuple(sorted(edge_cycle_profile(g).items())) if two else ()
    return GraphRecord(g, emit_graph6(g), two, circumference(g), census(g).counts, profile)


def _records_for_part(n: int, part: tuple[int, int] | None) -> list[GraphRecord]:
    return [make_record(g) for g in enumerate_graphs(EnumerationSpec(n, connected=True), part)]


@lru_cache(maxsize=None)
def _cached_records(n: int, jobs: int) -> tuple[GraphRecord, ...]:
    if jobs <= 1:
        records = _records_for_part(n, None)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = pool.map(_records_for_part, [n] * jobs, [(i, jobs) for i in range(jobs)])
            records = [r for chunk in chunks for r in chunk]
    # enumerated graphs are canonically labeled, so graph6 order is form order
    records.sort(key=lambda r: r.graph6)
    return tuple(records)


def connected_records(n: int, jobs: int = 1, corpus: Sequence[Graph] | None = None) -> Sequence[GraphRecord]:
    """Statistics for every connected order-n graph, or for the corpus graphs of order n."""
    if corpus is not None:
        return [make_record(g) for g in corpus if g.n == n and is_connected(g)]
    if n > MAX_VERIFY_ORDER:
        raise ParameterError(f"exhaustive checks stop at n = {MAX_VERIFY_ORDER}")
    return _cached_records(n, 1 if n <= 6 else jobs)


def block_signature(g: Graph) -> Counter:
    """Multiset of canonical forms of the blocks of a connected graph."""
    return Counter(canonical_form(g.induced(b)) for b in block_decomposition(g).blocks)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ParameterError(message)


def _max_over(report: VerificationReport, records: Iterable[GraphRecord],
              value: Callable[[GraphRecord], int], bound: int) -> list[GraphRecord]:
    """Fill count/max/certificates; flag graphs above the bound. Returns the extremal records."""
    best = None
    extremal: list[GraphRecord] = []
    for r in records:
        report.graphs_checked += 1
        v = value(r)
        if v > bound:
            report.counterexamples.append({"graph6": r.graph6, "value": v, "reason": "exceeds bound"})
        if best is None or v > best:
            best, extremal = v, [r]
        elif v == best:
            extremal.append(r)
    report.bound = bound
    report.achieved_max = best
    report.extremal_certificates = [r.graph6 for r in extremal]
    return extremal


def _sharpness(report: VerificationReport, witness: Graph | None) -> None:
    if report.achieved_max is not None and report.achieved_max < report.bound:
        report.counterexamples.append({
            "graph6": emit_graph6(witness) if witness is not None else "",
            "value": report.achieved_max,
            "reason": "bound not attained",
        })


def _circ_records(n: int, c: int, jobs: int, corpus) -> list[GraphRecord]:
    return [r for r in connected_records(n, jobs, corpus) if r.circumference <= c]


def _short_edge_records(n: int, k: int, jobs: int, corpus) -> list[GraphRecord]:
    return [r for r in connected_records(n, jobs, corpus) if r.two_connected and r.short_edges(k)]


def verify_theorem1(n: int, c: int, jobs: int = 1, corpus=None) -> VerificationReport:
    """Edge bound h_2(n, c) for connected graphs of circumference at most c, with equality families."""
    _require(c >= 3 and 3 <= n <= MAX_VERIFY_ORDER, f"need c >= 3 and 3 <= n <= {MAX_VERIFY_ORDER}")
    started = time.perf_counter()
    report = VerificationReport("theorem1", {"n": n, "c": c})
    extremal = _max_over(report, _circ_records(n, c, jobs, corpus), lambda r: r.graph.num_edges,
                         h_formula(n, c, 2))
    families = [block_signature(build_H(n, c))]
    variants = woodall_variants(n, c)
    families += [block_signature(g) for g in variants]
    report.notes.append(f"family (ii) members for these parameters: {len(variants)}")
    if report.achieved_max == report.bound:
        for r in extremal:
            if block_signature(r.graph) not in families:
                report.counterexamples.append({"graph6": r.graph6, "value": report.achieved_max,
                                               "reason": "extremal graph outside families (i)/(ii)"})
    _sharpness(report, build_H(n, c))
    return report.finish(started)


def verify_theorem2(n: int, k: int, jobs: int = 1, corpus=None) -> VerificationReport:
    """Edge bound g_2(n, k) for 2-connected graphs having an edge on no cycle longer than k."""
    _require(4 <= k <= n <= MAX_VERIFY_ORDER, f"need 4 <= k <= n <= {MAX_VERIFY_ORDER}")
    started = time.perf_counter()
    report = VerificationReport("theorem2", {"n": n, "k": k})
    extremal = _max_over(report, _short_edge_records(n, k, jobs, corpus), lambda r: r.graph.num_edges,
                         g_formula(n, k, 2))
    variants = fan_variants(n, k)
    members = {canonical_form(build_X(n, k))} | {canonical_form(g) for g in variants}
    report.notes.append(f"family (ii) members for these parameters: {len(variants)}")
    if report.achieved_max == report.bound:
        for r in extremal:
            if canonical_form(r.graph) not in members:
                report.counterexamples.append({"graph6": r.graph6, "value": report.achieved_max,
                                               "reason": "extremal graph outside families (i)/(ii)"})
    _sharpness(report, build_X(n, k))
    return report.finish(started)


def verify_theorem3(n: int, c: int, s: int, jobs: int = 1, corpus=None) -> VerificationReport:
    """Clique bound h_s(n, c) for connected graphs of circumference at most c."""
    _require(3 <= s <= c and 3 <= n <= MAX_VERIFY_ORDER, f"need 3 <= s <= c and 3 <= n <= {MAX_VERIFY_ORDER}")
    started = time.perf_counter()
    report = VerificationReport("theorem3", {"n": n, "c": c, "s": s})
    _max_over(report, _circ_records(n, c, jobs, corpus), lambda r: r.n_s(s), h_formula(n, c, s))
    _sharpness(report, build_H(n, c))
    return report.finish(started)


def verify_theorem4(n: int, k: int, s: int, jobs: int = 1, corpus=None) -> VerificationReport:
    """Clique bound g_s(n, k) for 2-connected graphs with an edge on no cycle longer than k."""
    _require(4 <= k <= n <= MAX_VERIFY_ORDER and 3 <= s <= k,
             f"need 4 <= k <= n <= {MAX_VERIFY_ORDER} and 3 <= s <= k")
    started = time.perf_counter()
    report = VerificationReport("theorem4", {"n": n, "k": k, "s": s})
    _max_over(report, _short_edge_records(n, k, jobs, corpus), lambda r: r.n_s(s), g_formula(n, k, s))
    _sharpness(report, build_X(n, k))
    return report.finish(started)


def _closure_has_h_structure(form: bytes, alpha: int, c: int) -> bool:
    g = parse_graph6(form.decode("ascii"))
    if not is_connected(g):
        return False
    sizes = []
    for block in block_decomposition(g).blocks:
        sub = g.induced(block)
        if sub.num_edges != binom(sub.n, 2):
            return False
        sizes.append(sub.n)
    return sizes.count(c) == alpha


def verify_theorem5(n: int, c: int, s: int, jobs: int = 1, corpus=None) -> VerificationReport:
    """Structure of graphs attaining h_s(n, c): the H family when s <= p + 1, otherwise via closures."""
    _require(3 <= s <= c and 3 <= n <= MAX_VERIFY_ORDER, f"need 3 <= s <= c and 3 <= n <= {MAX_VERIFY_ORDER}")
    started = time.perf_counter()
    d = decompose_nc(n, c)
    report = VerificationReport("theorem5", {"n": n, "c": c, "s": s})
    bound = h_formula(n, c, s)
    records = _circ_records(n, c, jobs, corpus)
    extremal = [r for r in records if r.n_s(s) == bound]
    report.bound = bound
    report.achieved_max = max((r.n_s(s) for r in records), default=None)
    report.extremal_certificates = [r.graph6 for r in extremal]
    report.graphs_checked = len(extremal)
    if s <= d.p + 1:
        report.notes.append("branch s <= p+1: extremal graphs must be in the H family")
        target = block_signature(build_H(n, c))
        for r in extremal:
            if block_signature(r.graph) != target:
                report.counterexamples.append({"graph6": r.graph6, "value": bound,
                                               "reason": "extremal graph not in the H family"})
    else:
        report.notes.append("branch s >= p+2: every maximal closure must have alpha K_c blocks, others complete")
        for r in extremal:
            bad = sorted(f.decode() for f in all_closures_L(r.graph, c)
                         if not _closure_has_h_structure(f, d.alpha, c))
            if bad:
                report.counterexamples.append({"graph6": r.graph6, "value": bound,
                                               "reason": f"closures without the block structure: {bad}"})
    return report.finish(started)


def verify_theorem6(n: int, k: int, s: int, jobs: int = 1, corpus=None) -> VerificationReport:
    """Graphs attaining g_s(n, k): every maximal closure around every short edge is X_{n,k}."""
    _require(4 <= k <= n <= MAX_VERIFY_ORDER and 3 <= s <= k,
             f"need 4 <= k <= n <= {MAX_VERIFY_ORDER} and 3 <= s <= k")
    started = time.perf_counter()
    report = VerificationReport("theorem6", {"n": n, "k": k, "s": s})
    bound = g_formula(n, k, s)
    records = _short_edge_records(n, k, jobs, corpus)
    extremal = [r for r in records if r.n_s(s) == bound]
    report.bound = bound
    report.achieved_max = max((r.n_s(s) for r in records), default=None)
    report.extremal_certificates = [r.graph6 for r in extremal]
    report.graphs_checked = len(extremal)
    target = canonical_form(build_X(n, k))
    weak_only = 0
    for r in extremal:
        failing = []
        for e in r.short_edges(k):
            forms = all_closures_M(r.graph, e, k)
            if forms != {target}:
                failing.append(e)
        if failing:
            weak = len(failing) < len(r.short_edges(k))
            weak_only += weak
            report.counterexamples.append({
                "graph6": r.graph6, "value": bound,
                "reason": f"closures not all X_(n,k) for short edges {failing}; "
                          f"some short edge works: {weak}",
            })
    if weak_only:
        report.notes.append(f"{weak_only} graphs satisfy only the some-short-edge form")
    return report.finish(started)


def verify_theorem7(n: int, c: int, s: int, jobs: int = 1, corpus=None) -> VerificationReport:
    """Clique bound max f_s(n, c, 2), f_s(n, c, floor(c/2)) for 2-connected graphs with circumference at most c < n."""
    _require(4 <= c < n <= MAX_VERIFY_ORDER and 2 <= s <= c,
             f"need 4 <= c < n <= {MAX_VERIFY_ORDER} and 2 <= s <= c")
    started = time.perf_counter()
    report = VerificationReport("theorem7", {"n": n, "c": c, "s": s})
    bound = max(f_formula(n, c, 2, s), f_formula(n, c, c // 2, s))
    records = [r for r in _circ_records(n, c, jobs, corpus) if r.two_connected]
    _max_over(report, records, lambda r: r.n_s(s), bound)
    return report.finish(started)


# ---- pure arithmetic -------------------------------------------------------

def lemma8_gap(n: int, c: int, s: int) -> int:
    """h_s(n, c) - max(f_s(n, c, 2), f_s(n, c, floor(c/2))); positive when the inequality holds."""
    return h_formula(n, c, s) - max(f_formula(n, c, 2, s), f_formula(n, c, c // 2, s))


def inequality_even(t: int, s: int) -> bool:
    return binom(t, s) + (2 * t - 1) * binom(t, s - 1) < binom(2 * t, s)


def inequality_odd(t: int, s: int) -> bool:
    return binom(t + 2, s) + 2 * t * binom(t, s - 1) < binom(2 * t + 1, s)


def reduced_even(t: int, s: int) -> bool:
    """(2s+1)t - 2s + 1 < prod_{i=0}^{s-2} (2t-i)/(t-i) * (2t-s+1), for t >= s."""
    rhs = Fraction(2 * t - s + 1)
    for i in range(s - 1):
        rhs *= Fraction(2 * t - i, t - i)
    return (2 * s + 1) * t - 2 * s + 1 < rhs


def reduced_odd(t: int, s: int) -> bool:
    """t + 2 + 2ts < prod_{i=-1}^{s-3} (2t-i)/(t-i) * (2t-s+2), for t >= s."""
    rhs = Fraction(2 * t - s + 2)
    for i in range(-1, s - 2):
        rhs *= Fraction(2 * t - i, t - i)
    return t + 2 + 2 * t * s < rhs


def verify_lemma8(c_max: int = 40, n_extra: int = 40, reduced_min_s: int = 3) -> VerificationReport:
    """Integer sweep of the f versus h gap and of the four binomial inequalities behind it.

    The gap is checked for 4 <= c <= c_max, 3 <= s <= c, c < n <= c + n_extra.
    The binomial inequalities are checked for every 3 <= s <= c with c = 2t
    or 2t + 1; the reduced product forms need t >= s and are checked for
    reduced_min_s <= s <= t.
    """
    _require(c_max >= 4 and n_extra >= 1, "need c_max >= 4 and n_extra >= 1")
    started = time.perf_counter()
    report = VerificationReport("lemma8", {"c_max": c_max, "n_extra": n_extra, "reduced_min_s": reduced_min_s})
    smallest = None
    for c in range(4, c_max + 1):
        for s in range(3, c + 1):
            for n in range(c + 1, c + n_extra + 1):
                report.graphs_checked += 1
                gap = lemma8_gap(n, c, s)
                smallest = gap if smallest is None else min(smallest, gap)
                if gap <= 0:
                    report.counterexamples.append({"check": "f<h", "n": n, "c": c, "s": s, "gap": gap})
    for t in range(2, c_max // 2 + 1):
        for s in range(3, 2 * t + 1):
            report.graphs_checked += 1
            if not inequality_even(t, s):
                report.counterexamples.append({"check": "even", "t": t, "s": s})
            if s <= t and s >= reduced_min_s:
                report.graphs_checked += 1
                if not reduced_even(t, s):
                    report.counterexamples.append({"check": "even_reduced", "t": t, "s": s})
        if 2 * t + 1 > c_max:
            continue
        for s in range(3, 2 * t + 2):
            report.graphs_checked += 1
            if not inequality_odd(t, s):
                report.counterexamples.append({"check": "odd", "t": t, "s": s})
            if s <= t and s >= reduced_min_s:
                report.graphs_checked += 1
                if not reduced_odd(t, s):
                    report.counterexamples.append({"check": "odd_reduced", "t": t, "s": s})
    report.notes.append(f"smallest gap h - max f over the grid: {smallest}")
    return report.finish(started)


# ---- structural implications ---------------------------------------------

def _closures_all_equal(g: Graph, uv: tuple[int, int], k: int, target: bytes) -> bool:
    if not is_two_connected(g) or not g.has_edge(*uv):
        return False
    if not edge_cycle_at_most(g, uv, k):
        return False
    return all_closures_M(g, uv, k) == {target}


def verify_structural_lemmas(n: int, k: int, s: int, jobs: int = 1, corpus=None) -> VerificationReport:
    """Implication tests: contraction (disjoint neighborhoods) and switching (common neighbor) cases.

    Hypotheses per instance (G, u, v, x): G 2-connected with N_s(G) = g_s(n, k),
    n >= k + 1, v and x distinct neighbors of u, c_uv(G) <= k, and either
    N(u), N(x) disjoint with N_s(G/ux) = N_s(G) and every closure of G/ux
    around uv equal to X_{n-1,k}, or N(u), N(x) meeting with
    N_s(G[x -> u]) = N_s(G) and every closure of G[x -> u] around uv equal to
    X_{n,k}. Conclusion: {u, v} separates G.
    """
    _require(4 <= k and k + 1 <= n <= 8 and 3 <= s <= k, "need 4 <= k, k + 1 <= n <= 8 and 3 <= s <= k")
    started = time.perf_counter()
    report = VerificationReport("structural", {"n": n, "k": k, "s": s})
    bound = g_formula(n, k, s)
    report.bound = bound
    records = [r for r in connected_records(n, jobs, corpus) if r.two_connected]
    extremal = [r for r in records if r.n_s(s) == bound]
    report.achieved_max = max((r.n_s(s) for r in records if r.short_edges(k)), default=None)
    report.extremal_certificates = [r.graph6 for r in extremal]
    target_small = canonical_form(build_X(n - 1, k)) if n - 1 >= k else None
    target_same = canonical_form(build_X(n, k))
    tally = Counter()
    for r in extremal:
        g = r.graph
        ce = dict(r.edge_cycles)
        for u in range(n):
            nbrs = g.neighbors(u)
            for v in nbrs:
                if ce[(min(u, v), max(u, v))] > k:
                    continue
                for x in nbrs:
                    if x == v:
                        continue
                    if g.adj[u] & g.adj[x] == 0:
                        lemma = "contraction"
                        if target_small is None:
                            continue
                        h = contract_edge(g, u, x)
                        if census(h)[s] != r.n_s(s):
                            continue
                        uv = (contracted_label(u, u, x), contracted_label(v, u, x))
                        if not _closures_all_equal(h, uv, k, target_small):
                            continue
                    else:
                        lemma = "switching"
                        h = edge_switch(g, x, u)
                        if census(h)[s] != r.n_s(s):
                            continue
                        if not _closures_all_equal(h, (u, v), k, target_same):
                            continue
                    tally[lemma] += 1
                    report.graphs_checked += 1
                    if not is_vertex_cut(g, (u, v)):
                        report.counterexamples.append({"graph6": r.graph6, "lemma": lemma,
                                                       "u": u, "v": v, "x": x,
                                                       "reason": "{u, v} does not separate G"})
    report.notes.append(f"hypothesis instances: contraction={tally['contraction']} switching={tally['switching']}")
    return report.finish(started)


THEOREMS = {
    "theorem1": verify_theorem1,
    "theorem2": verify_theorem2,
    "theorem3": verify_theorem3,
    "theorem4": verify_theorem4,
    "theorem5": verify_theorem5,
    "theorem6": verify_theorem6,
    "theorem7": verify_theorem7,
    "structural": verify_structural_lemmas,
}
