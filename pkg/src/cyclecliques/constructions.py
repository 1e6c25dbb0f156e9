"""Labeled members of the extremal families.

Conventions: blocks of H-type graphs all pass through vertex 0; in X-type
graphs the hub edge is {0, 1}. Empty parts are omitted.
"""
from __future__ import annotations

from .cliques import decompose_nc, decompose_nk
from .graph import Graph, GraphError, build, complete, disjoint_union, empty, join


def _glue_at_zero(n: int, blocks: list[Graph]) -> Graph:
    """Blocks sharing vertex 0; block vertex 0 maps to global 0, the rest are fresh."""
    edges = []
    nxt = 1
    for b in blocks:
        label = [0] + list(range(nxt, nxt + b.n - 1))
        nxt += b.n - 1
        edges.extend((label[x], label[y]) for x, y in b.edges())
    if nxt != n:
        raise GraphError(f"blocks cover {nxt} vertices, expected {n}")
    return build(n, edges)


def _union_all(parts: list[Graph]) -> Graph:
    out = empty(0)
    for part in parts:
        if part.n:
            out = disjoint_union(out, part)
    return out


def build_H(n: int, c: int) -> Graph:
    """alpha copies of K_c plus K_{p+1} (when p >= 1), all through vertex 0."""
    if c < 3:
        raise GraphError("H_{n,c} needs c >= 3")
    if n < 1:
        raise GraphError("H_{n,c} needs n >= 1")
    d = decompose_nc(n, c)
    blocks = [complete(c)] * d.alpha
    if d.p >= 1:
        blocks.append(complete(d.p + 1))
    if not blocks:
        return complete(1)
    return _glue_at_zero(n, blocks)


def build_X(n: int, k: int) -> Graph:
    """K_2 joined with beta K_{k-2} + K_q; hub edge {0, 1}."""
    if k < 4 or n < 4:
        raise GraphError("X_{n,k} needs n >= 4 and k >= 4")
    d = decompose_nk(n, k)
    if d.beta < 1:
        raise GraphError(f"X_{{n,k}} needs n >= k (beta >= 1), got n={n}, k={k}")
    parts = [complete(k - 2)] * d.beta + [complete(d.q)]
    return join(complete(2), _union_all(parts))


def build_F(n: int, c: int, k: int) -> Graph:
    """K_k joined with K_{c+1-2k} + an independent set of n-c-1+k vertices."""
    if not n - 1 >= c >= 2 * k >= 4:
        raise GraphError(f"F(n,c,k) needs n-1 >= c >= 2k >= 4, got n={n}, c={c}, k={k}")
    rest = _union_all([complete(c + 1 - 2 * k), empty(n - c - 1 + k)])
    return join(complete(k), rest)


def woodall_block(t: int, size: int) -> Graph:
    """K_t joined with an independent set, size vertices total; vertex 0 lies in K_t."""
    return join(complete(t), empty(size - t))


def build_woodall_variant(n: int, c: int, alpha_prime: int) -> Graph:
    """alpha' blocks K_c plus one block K_t v empty(n' - t), c = 2t, sharing vertex 0.

    Only defined when p is c/2 or c/2 - 1 and alpha' < alpha.
    """
    if c < 4 or c % 2:
        raise GraphError("the Woodall variant needs even c = 2t with t >= 2")
    t = c // 2
    d = decompose_nc(n, c)
    if d.p not in (t, t - 1):
        raise GraphError(f"p = {d.p} is neither c/2 nor c/2 - 1")
    if not 0 <= alpha_prime < d.alpha:
        raise GraphError(f"alpha' must satisfy 0 <= alpha' < alpha = {d.alpha}")
    n_rest = n - alpha_prime * (c - 1)
    return _glue_at_zero(n, [complete(c)] * alpha_prime + [woodall_block(t, n_rest)])


def build_fan_variant(n: int, k: int, beta_prime: int) -> Graph:
    """K_2 joined with beta' K_{k-2} + (K_{t-1} v empty(n' - t - 1)), k = 2t + 1.

    This is a dominating vertex added to the Woodall variant with c = k - 1;
    it exists only for odd k with q in {(k-1)/2, (k-3)/2} and beta' < beta.
    Here n' = n - beta'(k - 2).
    """
    if k < 5 or k % 2 == 0:
        raise GraphError("the fan variant needs odd k = 2t + 1 with t >= 2")
    t = (k - 1) // 2
    d = decompose_nk(n, k)
    if d.q not in (t, t - 1):
        raise GraphError(f"q = {d.q} is neither (k-1)/2 nor (k-3)/2")
    if not 0 <= beta_prime < d.beta:
        raise GraphError(f"beta' must satisfy 0 <= beta' < beta = {d.beta}")
    n_rest = n - beta_prime * (k - 2)
    inner = join(complete(t - 1), empty(n_rest - t - 1))
    return join(complete(2), _union_all([complete(k - 2)] * beta_prime + [inner]))


def woodall_variants(n: int, c: int) -> list[Graph]:
    """Every Woodall variant the parameters allow (possibly none)."""
    try:
        d = decompose_nc(n, c)
        return [build_woodall_variant(n, c, a) for a in range(d.alpha)]
    except GraphError:
        return []


def fan_variants(n: int, k: int) -> list[Graph]:
    try:
        d = decompose_nk(n, k)
        return [build_fan_variant(n, k, b) for b in range(d.beta)]
    except GraphError:
        return []
