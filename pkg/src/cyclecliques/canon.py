"""Canonical labeling by partition refinement and a pruned individualization tree.

The canonical graph is the relabeling whose adjacency rows are
lexicographically largest among all leaves of the search tree. Automorphisms
discovered at leaves prune sibling branches lying in the same orbit of the
stabilizer of the current prefix.
"""
from __future__ import annotations

from typing import Sequence

from .graph import Graph, iter_bits
from .graph6 import emit_graph6


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition."""
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(cells):
            splitter = 0
            for v in cells[i]:
                splitter |= 1 << v
            out: list[list[int]] = []
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((adj[v] & splitter).bit_count(), []).append(v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    changed = True
                    out.extend(groups[k] for k in sorted(groups))
            cells = out
            i += 1
    return cells


def _certificate(adj: Sequence[int], order: list[int]) -> tuple[int, ...]:
    n = len(order)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        r = 0
        for w in iter_bits(adj[v]):
            r |= 1 << (n - 1 - pos[w])
        rows.append(r)
    return tuple(rows)


class _Search:
    def __init__(self, adj: Sequence[int]):
        self.adj = adj
        self.best_cert: tuple[int, ...] | None = None
        self.best_order: list[int] = []
        self.first_cert: tuple[int, ...] | None = None
        self.first_order: list[int] = []
        self.autos: list[list[int]] = []

    def _record_auto(self, src: list[int], dst: list[int]) -> None:
        perm = [0] * len(src)
        for a, b in zip(src, dst):
            perm[a] = b
        if any(i != p for i, p in enumerate(perm)):
            self.autos.append(perm)

    def _leaf(self, order: list[int]) -> None:
        cert = _certificate(self.adj, order)
        if self.first_cert is None:
            self.first_cert = cert
            self.first_order = order
            self.best_cert = cert
            self.best_order = order
            return
        if cert == self.first_cert:
            self._record_auto(self.first_order, order)
        elif cert == self.best_cert:
            self._record_auto(self.best_order, order)
        elif cert > self.best_cert:
            self.best_cert = cert
            self.best_order = order

    def _same_orbit(self, v: int, explored: list[int], prefix: list[int]) -> bool:
        gens = [p for p in self.autos if all(p[x] == x for x in prefix)]
        if not gens:
            return False
        parent = list(range(len(self.adj)))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for p in gens:
            for a, b in enumerate(p):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
        root = find(v)
        return any(find(w) == root for w in explored)

    def visit(self, cells: list[list[int]], prefix: list[int]) -> None:
        cells = _refine(self.adj, cells)
        target = -1
        size = len(self.adj) + 1
        for i, cell in enumerate(cells):
            if 1 < len(cell) < size:
                target, size = i, len(cell)
        if target < 0:
            self._leaf([cell[0] for cell in cells])
            return
        explored: list[int] = []
        for v in sorted(cells[target]):
            if explored and self._same_orbit(v, explored, prefix):
                continue
            rest = [w for w in cells[target] if w != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            self.visit(child, prefix + [v])
            explored.append(v)


def canonical_order(g: Graph, colors: Sequence[int] | None = None) -> list[int]:
    """Vertex sequence; position i of the canonical graph holds vertex order[i]."""
    if g.n == 0:
        return []
    if colors is None:
        cells = [list(range(g.n))]
    else:
        if len(colors) != g.n:
            raise ValueError("one color per vertex required")
        by_color: dict[int, list[int]] = {}
        for v, col in enumerate(colors):
            by_color.setdefault(col, []).append(v)
        cells = [by_color[col] for col in sorted(by_color)]
    search = _Search(g.adj)
    search.visit(cells, [])
    return search.best_order


def canonical_graph(g: Graph, colors: Sequence[int] | None = None) -> Graph:
    order = canonical_order(g, colors)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm)


def canonical_form(g: Graph, colors: Sequence[int] | None = None) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic.

    With vertex colors the isomorphism must also preserve colors; the color
    sequence in canonical order is appended after a separator.
    """
    order = canonical_order(g, colors)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    form = emit_graph6(g.relabel(perm)).encode("ascii")
    if colors is not None:
        form += b"|" + ",".join(str(colors[v]) for v in order).encode("ascii")
    return form


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.num_edges == h.num_edges and canonical_form(g) == canonical_form(h)
