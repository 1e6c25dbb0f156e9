"""Small immutable simple graphs stored as per-vertex neighbor bitmasks."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

MAX_ORDER = 64


class GraphError(ValueError):
    """Raised for malformed graphs or operations outside their domain."""


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbor out of range")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for w in iter_bits(row):
                if not self.adj[w] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")

    @classmethod
    def trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        """Skip validation; only for adjacency produced by this package."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (min, max) pairs in lexicographic order."""
        return [(u, w) for u in range(self.n) for w in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        return [(u, w) for u, w in combinations(range(self.n), 2) if not self.adj[u] >> w & 1]

    def add_edge(self, u: int, v: int) -> Graph:
        _check_pair(self.n, u, v)
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def remove_edge(self, u: int, v: int) -> Graph:
        _check_pair(self.n, u, v)
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def relabel(self, perm: list[int]) -> Graph:
        """Graph in which old vertex v becomes perm[v]."""
        adj = [0] * self.n
        for v in range(self.n):
            row = 0
            for w in iter_bits(self.adj[v]):
                row |= 1 << perm[w]
            adj[perm[v]] = row
        return Graph(self.n, tuple(adj))

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, relabeled 0.. in increasing order of the kept vertices."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            row = 0
            for w in iter_bits(self.adj[v]):
                if w in index:
                    row |= 1 << index[w]
            adj.append(row)
        return Graph(len(keep), tuple(adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"endpoint out of range in ({u}, {v}) for n={n}")
    if u == v:
        raise GraphError(f"loop edge ({u}, {v})")


def build(n: int, edge_list: Iterable[tuple[int, int]] = ()) -> Graph:
    """Graph on vertices 0..n-1 with the given edges; duplicates collapse."""
    if not 0 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
    adj = [0] * n
    for u, v in edge_list:
        _check_pair(n, u, v)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def cycle(n: int) -> Graph:
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return build(n, [(i, i + 1) for i in range(n - 1)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    if g.n + h.n > MAX_ORDER:
        raise GraphError("combined order exceeds 64")
    return Graph(g.n + h.n, g.adj + tuple(row << g.n for row in h.adj))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h plus every edge between them."""
    u = disjoint_union(g, h)
    low = (1 << g.n) - 1
    high = ((1 << h.n) - 1) << g.n
    adj = [row | high for row in u.adj[: g.n]] + [row | low for row in u.adj[g.n:]]
    return Graph(u.n, tuple(adj))


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def reachable(g: Graph, start: int, allowed: int | None = None) -> int:
    """Bitmask of vertices reachable from start inside the allowed vertex mask."""
    if allowed is None:
        allowed = g.vertex_mask
    seen = 1 << start
    frontier = seen
    adj = g.adj
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise GraphError("connectivity of the empty graph is undefined")
    return reachable(g, 0) == g.vertex_mask


def _connected_without(g: Graph, removed: int) -> bool:
    allowed = g.vertex_mask & ~removed
    if allowed == 0:
        return True
    start = (allowed & -allowed).bit_length() - 1
    return reachable(g, start, allowed) == allowed


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: tuple[int, ...]


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Blocks (maximal 2-connected pieces or bridges) and cut vertices.

    Isolated vertices only occur for n == 1, where the single vertex is
    reported as a one-vertex block.
    """
    if g.n == 0 or not is_connected(g):
        raise GraphError("block decomposition needs a connected graph")
    if g.n == 1:
        return BlockDecomposition(((0,),), ())

    disc = [-1] * g.n
    low = [0] * g.n
    edge_stack: list[tuple[int, int]] = []
    blocks: list[tuple[int, ...]] = []
    cuts: set[int] = set()
    timer = 0

    disc[0] = low[0] = timer
    timer += 1
    stack = [(0, -1, iter(g.neighbors(0)))]
    root_children = 0
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                edge_stack.append((v, w))
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, v, iter(g.neighbors(w))))
                if v == 0:
                    root_children += 1
                advanced = True
                break
            if w != parent and disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent == -1:
            continue
        low[parent] = min(low[parent], low[v])
        if low[v] >= disc[parent]:
            if parent != 0:
                cuts.add(parent)
            verts: set[int] = set()
            while True:
                a, b = edge_stack.pop()
                verts.update((a, b))
                if (a, b) == (parent, v):
                    break
            blocks.append(tuple(sorted(verts)))
    if root_children > 1:
        cuts.add(0)
    blocks.sort()
    return BlockDecomposition(tuple(blocks), tuple(sorted(cuts)))


def is_two_connected(g: Graph) -> bool:
    if g.n < 3 or not is_connected(g):
        return False
    return all(_connected_without(g, 1 << v) for v in range(g.n))


def is_vertex_cut(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff deleting the vertices leaves a disconnected graph."""
    removed = 0
    for v in vertices:
        removed |= 1 << v
    remaining = g.vertex_mask & ~removed
    if remaining.bit_count() < 2:
        return False
    return not _connected_without(g, removed)


def two_cuts(g: Graph) -> list[tuple[int, int, bool]]:
    """All separating pairs (x, y, xy is an edge) of a 2-connected graph."""
    if not is_two_connected(g):
        raise GraphError("two_cuts expects a 2-connected graph")
    return [(x, y, g.has_edge(x, y)) for x, y in combinations(range(g.n), 2)
            if is_vertex_cut(g, (x, y))]
