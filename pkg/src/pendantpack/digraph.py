"""Immutable simple digraphs on dense integer vertex ids.

Vertices are 0..n-1.  Arcs are ordered pairs with no loops and no
duplicates.  Every transformation returns a new value, so digraphs are
safe to share across concurrent solves.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property


class GraphError(ValueError):
    """Raised for structurally invalid graph constructions."""


@dataclass(frozen=True)
class Digraph:
    """A simple directed graph: no loops, no parallel arcs."""

    n: int
    arcs: frozenset[tuple[int, int]]

    @cached_property
    def out_adj(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            adj[u].append(v)
        return tuple(tuple(sorted(row)) for row in adj)

    @cached_property
    def in_adj(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            adj[v].append(u)
        return tuple(tuple(sorted(row)) for row in adj)

    @property
    def m(self) -> int:
        return len(self.arcs)

    def vertices(self) -> range:
        return range(self.n)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def out_degree(self, v: int) -> int:
        return len(self.out_adj[v])

    def in_degree(self, v: int) -> int:
        return len(self.in_adj[v])

    def degree(self, v: int) -> int:
        return len(self.out_adj[v]) + len(self.in_adj[v])

    def sorted_arcs(self) -> list[tuple[int, int]]:
        """Arcs in lexicographic order (the canonical listing)."""
        return sorted(self.arcs)


@dataclass(frozen=True)
class DegreeSummary:
    """Minimum out-, in-, and semi-degree of a digraph."""

    delta_plus: int
    delta_minus: int
    delta_zero: int


def build_digraph(n: int, arc_list) -> Digraph:
    """Validate and build a digraph from an arc list.

    Rejects loops, duplicate arcs and out-of-range vertex ids.  Vertices
    with no incident arcs are retained.
    """
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    seen: set[tuple[int, int]] = set()
    for u, v in arc_list:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"arc ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"loop ({u}, {u}) is not allowed")
        if (u, v) in seen:
            raise GraphError(f"duplicate arc ({u}, {v})")
        seen.add((u, v))
    return Digraph(n, frozenset(seen))


def is_symmetric(digraph: Digraph) -> bool:
    """True iff the reverse of every arc is also an arc."""
    return all((v, u) in digraph.arcs for u, v in digraph.arcs)


def is_connected(digraph: Digraph) -> bool:
    """Connectivity of the underlying undirected graph."""
    if digraph.n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in digraph.out_adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
        for v in digraph.in_adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == digraph.n


def is_eulerian(digraph: Digraph) -> bool:
    """True iff the digraph is connected and in-degree equals out-degree everywhere."""
    if not is_connected(digraph):
        return False
    return all(
        digraph.out_degree(v) == digraph.in_degree(v) for v in digraph.vertices()
    )


def complement(digraph: Digraph) -> Digraph:
    """The digraph with arc (u, v) exactly when u != v and (u, v) is absent."""
    n = digraph.n
    arcs = frozenset(
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and (u, v) not in digraph.arcs
    )
    return Digraph(n, arcs)


def degree_summary(digraph: Digraph) -> DegreeSummary:
    """Exact minimum semi-degrees; requires at least one vertex."""
    if digraph.n < 1:
        raise GraphError("degree summary needs at least one vertex")
    delta_plus = min(digraph.out_degree(v) for v in digraph.vertices())
    delta_minus = min(digraph.in_degree(v) for v in digraph.vertices())
    return DegreeSummary(delta_plus, delta_minus, min(delta_plus, delta_minus))
