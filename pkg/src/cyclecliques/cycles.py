"""Exact longest-cycle search: circumference and longest cycle through an edge.

Both searches are depth-first over simple paths with bitmask visited sets. A
branch is cut when its length plus the number of vertices still reachable
from the path end cannot beat the best cycle found. Acyclic graphs have
circumference 0, and a bridge lies on cycles of length 0.
"""
from __future__ import annotations

from itertools import combinations, permutations

from .graph import Graph, GraphError, iter_bits, reachable


class BudgetExceeded(RuntimeError):
    """The node-expansion budget ran out before the search finished."""


class _Stop(Exception):
    pass


class _Counter:
    __slots__ = ("left",)

    def __init__(self, budget: int | None):
        self.left = budget

    def tick(self) -> None:
        if self.left is not None:
            self.left -= 1
            if self.left < 0:
                raise BudgetExceeded("cycle search exceeded its node budget")


def _reach_count(adj: tuple[int, ...], v: int, allowed: int) -> int:
    seen = 0
    frontier = adj[v] & allowed
    while frontier:
        seen |= frontier
        nxt = 0
        for w in iter_bits(frontier):
            nxt |= adj[w]
        frontier = nxt & allowed & ~seen
    return seen.bit_count()


def _circumference(g: Graph, cap: int | None, budget: int | None) -> int:
    adj = g.adj
    n = g.n
    limit = n if cap is None else min(cap, n)
    counter = _Counter(budget)
    best = 0

    # cycles are found from their smallest vertex
    for start in range(n):
        allowed = g.vertex_mask & ~((1 << start) - 1)
        if allowed.bit_count() <= best:
            break
        comp = reachable(g, start, allowed)
        if comp.bit_count() <= best or comp.bit_count() < 3:
            continue
        start_bit = 1 << start

        def dfs(v: int, visited: int, length: int) -> None:
            nonlocal best
            counter.tick()
            if length >= 3 and adj[v] & start_bit and length > best:
                best = length
                if best >= limit:
                    raise _Stop
            avail = comp & ~visited
            if length + _reach_count(adj, v, avail) <= best:
                return
            for w in iter_bits(adj[v] & avail):
                dfs(w, visited | 1 << w, length + 1)

        try:
            for w in iter_bits(adj[start] & comp):
                dfs(w, start_bit | 1 << w, 2)
        except _Stop:
            return best
    return best


def circumference(g: Graph, budget: int | None = None) -> int:
    """Length of a longest cycle, 0 for forests."""
    return _circumference(g, None, budget)


def circumference_at_most(g: Graph, c: int, budget: int | None = None) -> bool:
    """c(G) <= c, stopping as soon as a longer cycle turns up."""
    return _circumference(g, c + 1, budget) <= c


def _edge_cycle(g: Graph, u: int, v: int, cap: int | None, budget: int | None) -> int:
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    adj = g.adj
    limit = g.n if cap is None else min(cap, g.n)
    counter = _Counter(budget)
    u_bit = 1 << u
    base = g.vertex_mask & ~u_bit & ~(1 << v)
    best = 0

    # a cycle through uv is a u-v path of length >= 2 closed by uv
    def dfs(w: int, visited: int, length: int) -> None:
        nonlocal best
        counter.tick()
        if adj[w] & u_bit and length > best:
            best = length
            if best >= limit:
                raise _Stop
        avail = base & ~visited
        if length + _reach_count(adj, w, avail) <= best:
            return
        for x in iter_bits(adj[w] & avail):
            dfs(x, visited | 1 << x, length + 1)

    try:
        for w in iter_bits(adj[v] & base):
            dfs(w, 1 << w, 3)
    except _Stop:
        pass
    return best


def max_cycle_through_edge(g: Graph, edge: tuple[int, int], budget: int | None = None) -> int:
    u, v = edge
    return _edge_cycle(g, u, v, None, budget)


def edge_cycle_at_most(g: Graph, edge: tuple[int, int], k: int) -> bool:
    u, v = edge
    return _edge_cycle(g, u, v, k + 1, None) <= k


def edge_cycle_profile(g: Graph) -> dict[tuple[int, int], int]:
    """c_e for every edge, keyed by (min, max) pairs."""
    return {e: _edge_cycle(g, e[0], e[1], None, None) for e in g.edges()}


def short_edges(g: Graph, k: int) -> list[tuple[int, int]]:
    """Edges lying on no cycle longer than k, in lexicographic order."""
    return [e for e in g.edges() if _edge_cycle(g, e[0], e[1], k + 1, None) <= k]


def xi(g: Graph, k: int) -> int:
    """Largest degree among endpoints of short edges."""
    edges = short_edges(g, k)
    if not edges:
        raise GraphError(f"no edge lies only on cycles of length <= {k}")
    return max(max(g.degree(a), g.degree(b)) for a, b in edges)


def circumference_oracle(g: Graph) -> int:
    """Brute force over vertex sequences; independent of the pruned search."""
    if g.n > 8:
        raise GraphError("oracle limited to n <= 8")
    adj = g.adj
    for size in range(g.n, 2, -1):
        for subset in combinations(range(g.n), size):
            first = subset[0]
            for rest in permutations(subset[1:]):
                seq = (first,) + rest
                if rest[0] > rest[-1]:
                    continue
                if all(adj[seq[i]] >> seq[i + 1] & 1 for i in range(size - 1)) and adj[seq[-1]] >> first & 1:
                    return size
    return 0


def edge_cycle_oracle(g: Graph, edge: tuple[int, int]) -> int:
    """Brute-force c_e for small graphs."""
    if g.n > 8:
        raise GraphError("oracle limited to n <= 8")
    u, v = edge
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    adj = g.adj
    others = [w for w in range(g.n) if w not in (u, v)]
    for size in range(g.n, 2, -1):
        for middle in combinations(others, size - 2):
            for inner in permutations(middle):
                seq = (v,) + inner + (u,)
                if all(adj[seq[i]] >> seq[i + 1] & 1 for i in range(size - 1)):
                    return size
    return 0
