"""Edge contraction, edge-switching, and edge-maximal closures."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .canon import canonical_form
from .cycles import circumference_at_most, edge_cycle_at_most
from .graph import Graph, GraphError, is_connected, is_two_connected, iter_bits

MAX_CLOSURE_ORDER = 9


def contract_edge(g: Graph, u: int, x: int) -> Graph:
    """G/ux: merged vertex keeps label min(u, x); higher labels shift down."""
    if not g.has_edge(u, x):
        raise GraphError(f"({u}, {x}) is not an edge")
    keep, drop = min(u, x), max(u, x)
    merged = (g.adj[u] | g.adj[x]) & ~(1 << u) & ~(1 << x)

    def squeeze(mask: int) -> int:
        low = mask & ((1 << drop) - 1)
        return low | (mask >> (drop + 1) << drop)

    adj = []
    for v in range(g.n):
        if v == drop:
            continue
        if v == keep:
            row = merged
        else:
            row = g.adj[v]
            if row >> drop & 1:
                row = (row & ~(1 << drop)) | (1 << keep)
        adj.append(squeeze(row))
    return Graph(g.n - 1, tuple(adj))


def contracted_label(v: int, u: int, x: int) -> int:
    """Label of v after contracting ux."""
    keep, drop = min(u, x), max(u, x)
    if v in (u, x):
        return keep
    return v - 1 if v > drop else v


def edge_switch(g: Graph, v: int, u: int) -> Graph:
    """G[v -> u]: each edge vw with w in N(v) minus N[u] becomes uw."""
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    moved = g.adj[v] & ~g.adj[u] & ~(1 << u)
    adj = list(g.adj)
    adj[v] &= ~moved
    adj[u] |= moved
    for w in iter_bits(moved):
        adj[w] = (adj[w] & ~(1 << v)) | (1 << u)
    return Graph(g.n, tuple(adj))


@dataclass(frozen=True)
class ClosureResult:
    graph: Graph
    added_edges: tuple[tuple[int, int], ...]
    constraint: str


def _ordered(candidates: list[tuple[int, int]], order_policy: str, seed: int) -> list[tuple[int, int]]:
    if order_policy == "lex":
        return candidates
    if order_policy == "revlex":
        return candidates[::-1]
    if order_policy == "random":
        shuffled = list(candidates)
        random.Random(seed).shuffle(shuffled)
        return shuffled
    raise ValueError(f"unknown order policy {order_policy!r}")


def _greedy(g: Graph, ok: Callable[[Graph], bool], order_policy: str, seed: int) -> tuple[Graph, list]:
    # Both constraints are monotone under adding edges, so a rejected
    # candidate stays rejected and a single ordered pass is already maximal.
    added = []
    h = g
    for f in _ordered(g.non_edges(), order_policy, seed):
        trial = h.add_edge(*f)
        if ok(trial):
            h = trial
            added.append(f)
    return h, added


def closure_L(g: Graph, c: int, order_policy: str = "lex", seed: int = 0) -> ClosureResult:
    """Edge-maximal supergraph with circumference at most c."""
    if g.n == 0 or not is_connected(g):
        raise GraphError("closure_L needs a connected graph")
    if not circumference_at_most(g, c):
        raise GraphError(f"input circumference exceeds {c}")
    h, added = _greedy(g, lambda t: circumference_at_most(t, c), order_policy, seed)
    return ClosureResult(h, tuple(added), f"circumference<={c}")


def _check_edge_constraint(g: Graph, uv: tuple[int, int], k: int) -> None:
    if not is_two_connected(g):
        raise GraphError("closure_M needs a 2-connected graph")
    if not g.has_edge(*uv):
        raise GraphError(f"{uv} is not an edge")
    if not edge_cycle_at_most(g, uv, k):
        raise GraphError(f"edge {uv} already lies on a cycle longer than {k}")


def closure_M(g: Graph, uv: tuple[int, int], k: int, order_policy: str = "lex", seed: int = 0) -> ClosureResult:
    """Edge-maximal supergraph in which uv lies on no cycle longer than k."""
    _check_edge_constraint(g, uv, k)
    h, added = _greedy(g, lambda t: edge_cycle_at_most(t, uv, k), order_policy, seed)
    return ClosureResult(h, tuple(added), f"c_{uv[0]}{uv[1]}<={k}")


def _all_maximal(g: Graph, ok: Callable[[Graph], bool], colors: list[int] | None) -> set[bytes]:
    if g.n > MAX_CLOSURE_ORDER:
        raise GraphError(f"all_closures is limited to n <= {MAX_CLOSURE_ORDER}")
    results: set[bytes] = set()
    seen: set[bytes] = set()
    stack = [(g, g.non_edges())]
    while stack:
        h, candidates = stack.pop()
        key = canonical_form(h, colors)
        if key in seen:
            continue
        seen.add(key)
        allowed = []
        for f in candidates:
            trial = h.add_edge(*f)
            if ok(trial):
                allowed.append((f, trial))
        if not allowed:
            results.add(canonical_form(h))
            continue
        still = [f for f, _ in allowed]
        for f, trial in allowed:
            stack.append((trial, [e for e in still if e != f]))
    return results


def all_closures_L(g: Graph, c: int) -> set[bytes]:
    """Canonical forms of every maximal closure under circumference <= c, over all insertion orders."""
    if g.n == 0 or not is_connected(g):
        raise GraphError("closure_L needs a connected graph")
    if not circumference_at_most(g, c):
        raise GraphError(f"input circumference exceeds {c}")
    return _all_maximal(g, lambda t: circumference_at_most(t, c), None)


def all_closures_M(g: Graph, uv: tuple[int, int], k: int) -> set[bytes]:
    """Canonical forms of every maximal closure keeping c_uv <= k, over all insertion orders."""
    _check_edge_constraint(g, uv, k)
    colors = [1 if v in uv else 0 for v in range(g.n)]
    return _all_maximal(g, lambda t: edge_cycle_at_most(t, uv, k), colors)


def all_closures(g: Graph, constraint: tuple) -> set[bytes]:
    """Dispatch on ("L", c) or ("M", (u, v), k)."""
    kind = constraint[0]
    if kind == "L":
        return all_closures_L(g, constraint[1])
    if kind == "M":
        return all_closures_M(g, constraint[1], constraint[2])
    raise ValueError(f"unknown constraint {constraint!r}")
