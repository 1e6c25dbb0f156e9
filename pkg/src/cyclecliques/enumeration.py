"""Streams of pairwise non-isomorphic graphs, optionally filtered."""
from __future__ import annotations

import zlib
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Callable, Iterable, Iterator

from .canon import canonical_form
from .cycles import circumference_at_most, short_edges
from .graph import Graph, GraphError, is_connected, is_two_connected
from .graph6 import Graph6Error, parse_graph6

MAX_GENERATED_ORDER = 10


@dataclass(frozen=True)
class EnumerationSpec:
    n: int
    connected: bool = False
    two_connected: bool = False
    max_circumference: int | None = None
    short_edge_k: int | None = None

    def predicate(self) -> Callable[[Graph], bool]:
        checks: list[Callable[[Graph], bool]] = []
        if self.connected:
            checks.append(lambda g: g.n > 0 and is_connected(g))
        if self.two_connected:
            checks.append(is_two_connected)
        if self.max_circumference is not None:
            c = self.max_circumference
            checks.append(lambda g: circumference_at_most(g, c))
        if self.short_edge_k is not None:
            k = self.short_edge_k
            checks.append(lambda g: bool(short_edges(g, k)))
        return lambda g: all(check(g) for check in checks)


def _extensions(h: Graph) -> Iterator[Graph]:
    """Add vertex h.n joined to every subset S such that it has minimum degree."""
    m = h.n
    degs = [row.bit_count() for row in h.adj]
    min_deg = min(degs) if degs else 0
    must = 0
    for w, d in enumerate(degs):
        if d == min_deg:
            must |= 1 << w
    for subset in range(1 << m):
        size = subset.bit_count()
        if m and (size > min_deg + 1 or (size == min_deg + 1 and subset & must != must)):
            continue
        adj = tuple(row | ((subset >> w & 1) << m) for w, row in enumerate(h.adj)) + (subset,)
        yield Graph.trusted(m + 1, adj)


@lru_cache(maxsize=None)
def _level(n: int, max_circumference: int | None) -> tuple[bytes, ...]:
    """Sorted canonical forms of all order-n graphs (with circumference bound)."""
    if n < 0:
        raise GraphError("order must be non-negative")
    if n == 0:
        return (canonical_form(Graph(0, ())),)
    forms: set[bytes] = set()
    for parent_form in _level(n - 1, max_circumference):
        parent = parse_graph6(parent_form.decode("ascii"))
        for g in _extensions(parent):
            if max_circumference is not None and not circumference_at_most(g, max_circumference):
                continue
            forms.add(canonical_form(g))
    return tuple(sorted(forms))


def _partition_ok(form: bytes, part: tuple[int, int] | None) -> bool:
    if part is None:
        return True
    index, jobs = part
    return zlib.crc32(form) % jobs == index


def enumerate_graphs(spec: EnumerationSpec, part: tuple[int, int] | None = None) -> Iterator[Graph]:
    """One canonically labeled representative per isomorphism class, in sorted form order.

    part=(i, jobs) keeps the classes whose form hash is i modulo jobs.
    """
    if spec.n > MAX_GENERATED_ORDER:
        raise GraphError(f"internal generator stops at n = {MAX_GENERATED_ORDER}; use a graph6 corpus")
    keep = spec.predicate()
    # the circumference bound survives vertex deletion, so it can prune every level
    for form in _level(spec.n, spec.max_circumference):
        if not _partition_ok(form, part):
            continue
        g = parse_graph6(form.decode("ascii"))
        if keep(g):
            yield g


def count_graphs(spec: EnumerationSpec) -> int:
    return sum(1 for _ in enumerate_graphs(spec))


def import_graph6_corpus(path: str | Path | Iterable[str], spec: EnumerationSpec | None = None) -> Iterator[Graph]:
    """Parse graph6 lines, apply filters, drop isomorphic repeats.

    spec.n is ignored for corpora; graphs of every order pass through.
    """
    lines: Iterable[str]
    if isinstance(path, (str, Path)):
        lines = Path(path).read_text().splitlines()
    else:
        lines = path
    keep = spec.predicate() if spec is not None else (lambda g: True)
    seen: set[bytes] = set()
    for lineno, line in enumerate(lines, start=1):
        text = line.strip()
        if not text:
            continue
        try:
            g = parse_graph6(text)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from None
        if not keep(g):
            continue
        form = canonical_form(g)
        if form in seen:
            continue
        seen.add(form)
        yield g
