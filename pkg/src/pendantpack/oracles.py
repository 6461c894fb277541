"""Independent exact decision procedures used as ground truth.

Everything here is exhaustive backtracking or augmenting-path search:
correct at desk scale, never fast.  The solvers module consumes
constrained_disjoint_paths; the remaining oracles exist so gadget
equivalences and the tau_2 = kappa identity can be checked against code
that shares nothing with the packing search.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .digraph import Digraph, GraphError


@dataclass(frozen=True)
class LinkageQuery:
    """Pairs to connect by paths whose interiors avoid a forbidden set.

    Endpoints may repeat across pairs and may sit inside
    forbidden_internal (endpoints are exempt from the interior rule);
    each pair must have distinct source and target.
    """

    host: Digraph
    pairs: tuple[tuple[int, int], ...]
    forbidden_internal: frozenset[int] = frozenset()


@dataclass(frozen=True)
class Hypergraph:
    """Vertices 0..n-1 and a list of nonempty hyperedges."""

    n_vertices: int
    edges: tuple[frozenset[int], ...]


def build_hypergraph(n: int, edges) -> Hypergraph:
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    out = []
    for e in edges:
        members = frozenset(e)
        if not members:
            raise GraphError("empty hyperedge")
        for v in members:
            if not 0 <= v < n:
                raise GraphError(f"hyperedge vertex {v} out of range for n={n}")
        out.append(members)
    return Hypergraph(n, tuple(out))


@dataclass(frozen=True)
class TripartiteInstance:
    """Balanced tripartite graph on vertices 0..3q-1 with cross-part edges only."""

    part_a: tuple[int, ...]
    part_b: tuple[int, ...]
    part_c: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    @property
    def q(self) -> int:
        return len(self.part_a)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges


def build_tripartite(part_a, part_b, part_c, edges) -> TripartiteInstance:
    a, b, c = sorted(part_a), sorted(part_b), sorted(part_c)
    if not (len(a) == len(b) == len(c)):
        raise GraphError("parts must have equal size")
    all_vertices = a + b + c
    if sorted(all_vertices) != list(range(3 * len(a))):
        raise GraphError("parts must partition 0..3q-1")
    part_of = {}
    for name, part in (("A", a), ("B", b), ("C", c)):
        for v in part:
            part_of[v] = name
    norm = set()
    for u, v in edges:
        if u == v or part_of.get(u) is None or part_of.get(v) is None:
            raise GraphError(f"bad edge ({u}, {v})")
        if part_of[u] == part_of[v]:
            raise GraphError(f"edge ({u}, {v}) inside part {part_of[u]}")
        norm.add((min(u, v), max(u, v)))
    return TripartiteInstance(tuple(a), tuple(b), tuple(c), frozenset(norm))


def directed_two_linkage(
    digraph: Digraph, s1: int, t1: int, s2: int, t2: int
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Two fully vertex-disjoint paths s1->t1 and s2->t2, or None.

    Exhaustive: enumerates simple s1->t1 paths depth-first (neighbors
    ascending) and checks s2->t2 reachability in what remains.
    """
    quad = (s1, t1, s2, t2)
    if len(set(quad)) != 4:
        raise GraphError("two-linkage terminals must be four distinct vertices")
    for v in quad:
        if not 0 <= v < digraph.n:
            raise GraphError(f"vertex {v} out of range for n={digraph.n}")
    out_adj = digraph.out_adj

    def second_path(blocked: set[int]) -> tuple[int, ...] | None:
        # any walk yields a simple path, so BFS reachability suffices
        parent = {s2: None}
        queue = [s2]
        qi = 0
        while qi < len(queue):
            u = queue[qi]
            qi += 1
            for v in out_adj[u]:
                if v in blocked or v in parent:
                    continue
                parent[v] = u
                if v == t2:
                    path = [t2]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    return tuple(reversed(path))
                queue.append(v)
        return None

    path1 = [s1]
    used1 = {s1}

    def dfs() -> tuple[tuple[int, ...], tuple[int, ...]] | None:
        u = path1[-1]
        if u == t1:
            p2 = second_path(used1)
            if p2 is not None:
                return tuple(path1), p2
            return None
        for v in out_adj[u]:
            if v in used1 or v == s2 or v == t2:
                continue
            path1.append(v)
            used1.add(v)
            res = dfs()
            path1.pop()
            used1.remove(v)
            if res is not None:
                return res
        return None

    return dfs()


def constrained_disjoint_paths(
    query: LinkageQuery,
) -> list[tuple[int, ...]] | None:
    """Exact backtracking for the constrained disjoint-paths contract.

    Returns one path per pair (aligned with the input order) such that
    no interior vertex of any path lies in forbidden_internal, in any
    other path (endpoints included), or is any pair's endpoint, and the
    paths are pairwise arc-disjoint.  None when infeasible.
    """
    host = query.host
    pairs = list(query.pairs)
    for s, t in pairs:
        if s == t:
            raise GraphError(f"degenerate pair ({s}, {t})")
        for v in (s, t):
            if not 0 <= v < host.n:
                raise GraphError(f"vertex {v} out of range for n={host.n}")
    out_adj = host.out_adj
    blocked_interior = set(query.forbidden_internal)
    for s, t in pairs:
        blocked_interior.add(s)
        blocked_interior.add(t)

    used_arcs: set[tuple[int, int]] = set()
    finished_vertices: list[set[int]] = []
    chosen: list[tuple[int, ...]] = []

    def extend(path: list[int], target: int, next_pair: int) -> bool:
        u = path[-1]
        for v in out_adj[u]:
            if (u, v) in used_arcs:
                continue
            if v == target:
                used_arcs.add((u, v))
                verts = set(path)
                verts.add(v)
                finished_vertices.append(verts)
                chosen.append(tuple(path) + (v,))
                if solve(next_pair):
                    return True
                chosen.pop()
                finished_vertices.pop()
                used_arcs.remove((u, v))
            else:
                if v in blocked_interior or v in path:
                    continue
                if any(v in fv for fv in finished_vertices):
                    continue
                used_arcs.add((u, v))
                path.append(v)
                ok = extend(path, target, next_pair)
                path.pop()
                used_arcs.remove((u, v))
                if ok:
                    return True
        return False

    def solve(i: int) -> bool:
        if i == len(pairs):
            return True
        s, t = pairs[i]
        return extend([s], t, i + 1)

    if solve(0):
        return list(chosen)
    return None


def hypergraph_two_coloring(h: Hypergraph) -> list[int] | None:
    """A red/blue assignment giving every edge both colors, or None.

    Size-one edges make the instance infeasible (a single vertex cannot
    carry both colors); that is reported as None, not an error.
    """
    if any(len(e) == 1 for e in h.edges):
        return None
    colors = [-1] * h.n_vertices
    incident: list[list[int]] = [[] for _ in range(h.n_vertices)]
    for idx, e in enumerate(h.edges):
        for v in e:
            incident[v].append(idx)

    def edge_ok(idx: int) -> bool:
        seen = set()
        uncolored = 0
        for v in h.edges[idx]:
            if colors[v] == -1:
                uncolored += 1
            else:
                seen.add(colors[v])
        if len(seen) == 2:
            return True
        return uncolored > 0 or len(h.edges[idx]) == 0

    def backtrack(v: int) -> bool:
        if v == h.n_vertices:
            return True
        for color in (0, 1):
            colors[v] = color
            if all(edge_ok(idx) for idx in incident[v]):
                if backtrack(v + 1):
                    return True
        colors[v] = -1
        return False

    if backtrack(0):
        return list(colors)
    return None


def cllm_solve(g: TripartiteInstance) -> list[tuple[int, int, int]] | None:
    """Partition into connected transversal triples, one vertex per part.

    Exact backtracking over triples: part-A vertices in order, partners
    ascending.  A triple is connected when at least two of its three
    cross pairs are edges.
    """

    def connected(a: int, b: int, c: int) -> bool:
        return (
            int(g.has_edge(a, b)) + int(g.has_edge(a, c)) + int(g.has_edge(b, c))
        ) >= 2

    used_b: set[int] = set()
    used_c: set[int] = set()
    triples: list[tuple[int, int, int]] = []

    def backtrack(i: int) -> bool:
        if i == g.q:
            return True
        a = g.part_a[i]
        for b in g.part_b:
            if b in used_b:
                continue
            for c in g.part_c:
                if c in used_c:
                    continue
                if not connected(a, b, c):
                    continue
                used_b.add(b)
                used_c.add(c)
                triples.append((a, b, c))
                if backtrack(i + 1):
                    return True
                triples.pop()
                used_c.remove(c)
                used_b.remove(b)
        return False

    if backtrack(0):
        return list(triples)
    return None


def _max_internally_disjoint_paths(digraph: Digraph, s: int, t: int) -> int:
    """Menger count via unit-capacity max flow on the vertex-split graph."""
    # node 2w is w's entry, 2w+1 its exit
    size = 2 * digraph.n
    graph: list[list[list[int]]] = [[] for _ in range(size)]

    def add_edge(u: int, v: int) -> None:
        graph[u].append([v, 1, len(graph[v])])
        graph[v].append([u, 0, len(graph[u]) - 1])

    for w in digraph.vertices():
        add_edge(2 * w, 2 * w + 1)
    for u, v in digraph.sorted_arcs():
        add_edge(2 * u + 1, 2 * v)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent: dict[int, tuple[int, int]] = {source: (-1, -1)}
        queue = [source]
        qi = 0
        while qi < len(queue) and sink not in parent:
            u = queue[qi]
            qi += 1
            for ei, edge in enumerate(graph[u]):
                v, cap, _ = edge
                if cap > 0 and v not in parent:
                    parent[v] = (u, ei)
                    queue.append(v)
        if sink not in parent:
            return flow
        v = sink
        while v != source:
            u, ei = parent[v]
            graph[u][ei][1] -= 1
            rev = graph[u][ei][2]
            graph[v][rev][1] += 1
            v = u
        flow += 1


def vertex_connectivity(digraph: Digraph) -> int:
    """Classical vertex-strong connectivity kappa via Menger.

    Minimum over ordered pairs of the number of internally-disjoint
    paths; the direct arc counts as a path, which yields n-1 on the
    bidirected complete digraph.
    """
    if digraph.n < 2:
        raise GraphError("vertex connectivity needs at least two vertices")
    best = digraph.n - 1
    for u, v in combinations(digraph.vertices(), 2):
        for s, t in ((u, v), (v, u)):
            best = min(best, _max_internally_disjoint_paths(digraph, s, t))
            if best == 0:
                return 0
    return best
