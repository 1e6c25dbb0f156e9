"""Exact s-clique counts and the closed-form counts of the extremal families."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .graph import Graph, GraphError, iter_bits


def binom(a: int, b: int) -> int:
    """C(a, b) with C(a, b) = 0 for b < 0 or b > a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def _pivot_census(adj: tuple[int, ...], cand: int, held: int, pivots: int,
                  counts: list[int], s_max: int) -> None:
    # Each leaf stands for the cliques made of all held vertices plus any
    # subset of the pivot vertices.
    if held > s_max:
        return
    if cand == 0:
        for j in range(min(pivots, s_max - held) + 1):
            counts[held + j] += comb(pivots, j)
        return
    pivot = -1
    best = -1
    for v in iter_bits(cand):
        d = (adj[v] & cand).bit_count()
        if d > best:
            pivot, best = v, d
    _pivot_census(adj, cand & adj[pivot], held, pivots + 1, counts, s_max)
    rest = cand & ~adj[pivot] & ~(1 << pivot)
    remaining = cand
    for v in iter_bits(rest):
        _pivot_census(adj, remaining & adj[v], held + 1, pivots, counts, s_max)
        remaining &= ~(1 << v)


def _counts(g: Graph, s_max: int) -> list[int]:
    counts = [0] * (s_max + 1)
    _pivot_census(g.adj, g.vertex_mask, 0, 0, counts, s_max)
    return counts


def count_cliques(g: Graph, s: int) -> int:
    if s < 1:
        raise GraphError("clique size must be at least 1")
    if s > g.n:
        return 0
    return _counts(g, s)[s]


@dataclass(frozen=True)
class CliqueCensus:
    counts: tuple[int, ...]  # counts[s] = N_s for s = 0..n, counts[0] = 1

    def __getitem__(self, s: int) -> int:
        return self.counts[s] if 0 <= s < len(self.counts) else 0

    def as_list(self) -> list[int]:
        """N_1..N_n."""
        return list(self.counts[1:])


def census(g: Graph) -> CliqueCensus:
    return CliqueCensus(tuple(_counts(g, g.n)))


def count_cliques_oracle(g: Graph, s: int) -> int:
    """Test every s-subset for completeness."""
    if g.n > 16:
        raise GraphError("subset oracle limited to n <= 16")
    if s < 1:
        raise GraphError("clique size must be at least 1")
    adj = g.adj
    return sum(1 for sub in combinations(range(g.n), s)
               if all(adj[a] >> b & 1 for a, b in combinations(sub, 2)))


@dataclass(frozen=True)
class DecompositionNC:
    n: int
    c: int
    alpha: int
    p: int


@dataclass(frozen=True)
class DecompositionNK:
    n: int
    k: int
    beta: int
    q: int


def decompose_nc(n: int, c: int) -> DecompositionNC:
    """n - 1 = alpha (c - 1) + p with 0 <= p <= c - 2."""
    if c - 1 < 1:
        raise GraphError("divisor c - 1 must be positive")
    alpha, p = divmod(n - 1, c - 1)
    return DecompositionNC(n, c, alpha, p)


def decompose_nk(n: int, k: int) -> DecompositionNK:
    """n - 2 = beta (k - 2) + q with 0 <= q <= k - 3."""
    if k - 2 < 1:
        raise GraphError("divisor k - 2 must be positive")
    beta, q = divmod(n - 2, k - 2)
    return DecompositionNK(n, k, beta, q)


def h_formula(n: int, c: int, s: int) -> int:
    """s-cliques in alpha blocks K_c plus one block K_{p+1}."""
    if c < 3:
        raise GraphError("h_s(n, c) needs c >= 3")
    if n < 1 or s < 2:
        raise GraphError("h_s(n, c) needs n >= 1 and s >= 2")
    d = decompose_nc(n, c)
    return d.alpha * binom(c, s) + binom(d.p + 1, s)


def g_formula(n: int, k: int, s: int) -> int:
    """s-cliques in K_2 joined with beta K_{k-2} + K_q."""
    if k < 3:
        raise GraphError("g_s(n, k) needs k >= 3")
    if n < 3 or s < 2:
        raise GraphError("g_s(n, k) needs n >= 3 and s >= 2")
    d = decompose_nk(n, k)
    if s == 2:
        # the hub edge is shared by every K_k block
        return d.beta * binom(k, 2) + binom(d.q + 2, 2) - d.beta
    return d.beta * binom(k, s) + binom(d.q + 2, s)


def f_formula(n: int, c: int, k: int, s: int) -> int:
    """s-cliques in K_k joined with K_{c+1-2k} + an independent set of n-c-1+k."""
    if not n - 1 >= c >= 2 * k >= 4:
        raise GraphError(f"f_s(n, c, k) needs n-1 >= c >= 2k >= 4, got n={n}, c={c}, k={k}")
    if s < 2:
        raise GraphError("f_s(n, c, k) needs s >= 2")
    return binom(c + 1 - k, s) + (n - c - 1 + k) * binom(k, s - 1)
