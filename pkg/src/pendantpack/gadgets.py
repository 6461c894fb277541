"""Reduction-instance constructors with auditable vertex provenance.

Each constructor emits the digraph, its terminal spec, and a bijective
name map from construction roles onto vertex ids, so the small-scale
equivalence tests can point at the exact vertex that breaks when a
wiring is wrong.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .digraph import Digraph, GraphError, is_eulerian
from .oracles import Hypergraph, TripartiteInstance
from .trees import TerminalSpec


@dataclass(frozen=True)
class Provenance:
    """Source-instance description plus a name -> id bijection."""

    description: str
    names: dict[str, int]

    def id_of(self, name: str) -> int:
        return self.names[name]

    def name_of(self, vertex: int) -> str:
        for name, v in self.names.items():
            if v == vertex:
                return name
        raise KeyError(vertex)


@dataclass(frozen=True)
class GadgetInstance:
    digraph: Digraph
    spec: TerminalSpec
    provenance: Provenance


def _finish(description, names, n, arcs, terminals, root) -> GadgetInstance:
    if len(names) != n or set(names.values()) != set(range(n)):
        raise RuntimeError("provenance map is not a bijection onto the vertices")
    digraph = Digraph(n, frozenset(arcs))
    spec = TerminalSpec(frozenset(terminals), root)
    return GadgetInstance(digraph, spec, Provenance(description, names))


class _ArcSet:
    """Arc accumulator that rejects accidental duplicates."""

    def __init__(self):
        self.arcs: set[tuple[int, int]] = set()

    def add(self, u: int, v: int) -> None:
        if u == v:
            raise RuntimeError(f"gadget construction produced loop ({u}, {u})")
        if (u, v) in self.arcs:
            raise RuntimeError(f"gadget construction duplicated arc ({u}, {v})")
        self.arcs.add((u, v))

    def add_both(self, u: int, v: int) -> None:
        self.add(u, v)
        self.add(v, u)


def gadget_eulerian(
    source: Digraph, s1: int, s2: int, t1: int, t2: int, k: int, ell: int
) -> GadgetInstance:
    """Host whose packing threshold ell mirrors 2-linkage in the source.

    Appends a root, two relay vertices wired to the linkage terminals,
    k-3 extra terminals and ell-2 spare branch vertices; the output is
    Eulerian whenever the source is.
    """
    if k < 3:
        raise GraphError(f"k must be at least 3, got {k}")
    if ell < 2:
        raise GraphError(f"ell must be at least 2, got {ell}")
    quad = (s1, s2, t1, t2)
    if len(set(quad)) != 4:
        raise GraphError("linkage terminals must be four distinct vertices")
    for v in quad:
        if not 0 <= v < source.n:
            raise GraphError(f"vertex {v} out of range for n={source.n}")
    if not is_eulerian(source):
        warnings.warn("source digraph is not Eulerian; construction proceeds anyway")

    base = source.n
    r = base
    u1 = base + 1
    u2 = base + 2
    extra_u = {i: base + 3 + (i - 3) for i in range(3, k)}  # u_3 .. u_{k-1}
    spare_v = {j: base + k + (j - 1) for j in range(1, ell - 1)}  # v_1 .. v_{ell-2}
    n = base + k + ell - 2

    names = {f"src{i}": i for i in range(base)}
    names["r"] = r
    names["u1"] = u1
    names["u2"] = u2
    for i, vid in extra_u.items():
        names[f"u{i}"] = vid
    for j, vid in spare_v.items():
        names[f"v{j}"] = vid

    acc = _ArcSet()
    for a, b in source.sorted_arcs():
        acc.add(a, b)
    acc.add(r, s1)
    acc.add(r, s2)
    acc.add_both(t1, u1)
    acc.add_both(t2, u2)
    acc.add(s1, u2)
    acc.add(s2, u1)
    acc.add(u1, r)
    acc.add(u2, r)
    # spare branch vertices must reach every non-root terminal, u1 and u2
    # included; the trees hung off them cover S in one hop
    for vid in spare_v.values():
        acc.add_both(r, vid)
        for uid in (u1, u2, *extra_u.values()):
            acc.add_both(vid, uid)
    for t in (t1, t2):
        for uid in extra_u.values():
            acc.add_both(t, uid)

    terminals = {r, u1, u2} | set(extra_u.values())
    description = (
        f"from 2-linkage instance on {base} vertices with "
        f"s1=src{s1}, s2=src{s2}, t1=src{t1}, t2=src{t2}; k={k}, ell={ell}"
    )
    return _finish(description, names, n, acc.arcs, terminals, r)


def gadget_cllm(g: TripartiteInstance, k: int) -> GadgetInstance:
    """Symmetric host whose packing threshold q mirrors the connected-triple partition."""
    if k < 3:
        raise GraphError(f"k must be at least 3, got {k}")
    q = g.q
    if q < 1:
        raise GraphError("tripartite instance must be nonempty")
    base = 3 * q
    s_ids = {i: base + (i - 1) for i in range(1, k)}  # s_1 .. s_{k-1}
    r = base + k - 1
    n = base + k

    names = {}
    for label, part in (("a", g.part_a), ("b", g.part_b), ("c", g.part_c)):
        for pos, v in enumerate(part, start=1):
            names[f"{label}{pos}"] = v
    for i, vid in s_ids.items():
        names[f"s{i}"] = vid
    names["r"] = r

    acc = _ArcSet()
    for u, v in sorted(g.edges):
        acc.add_both(u, v)
    for u in g.part_a:
        acc.add_both(r, u)
    for v in g.part_b:
        acc.add_both(s_ids[1], v)
    for i in range(2, k):
        for w in g.part_c:
            acc.add_both(s_ids[i], w)

    terminals = {r} | set(s_ids.values())
    description = f"from tripartite instance with q={q}, {len(g.edges)} edges; k={k}"
    return _finish(description, names, n, acc.arcs, terminals, r)


def gadget_hypergraph(h: Hypergraph, ell: int) -> GadgetInstance:
    """Symmetric host whose packing threshold ell mirrors 2-colorability.

    Terminals are the hyperedges plus the root, so k = m + 1 is driven
    by the instance.
    """
    if ell < 2:
        raise GraphError(f"ell must be at least 2, got {ell}")
    if not h.edges:
        raise GraphError("hypergraph must have at least one edge")
    if any(len(e) < 2 for e in h.edges):
        raise GraphError("every hyperedge must have at least two vertices")

    nv = h.n_vertices
    m = len(h.edges)
    edge_ids = {j: nv + j for j in range(m)}
    u_ids = {i: nv + m + (i - 1) for i in range(1, ell - 1)}  # u_1 .. u_{ell-2}
    r = nv + m + ell - 2
    n = nv + m + ell - 1

    names = {f"v{i + 1}": i for i in range(nv)}
    for j, vid in edge_ids.items():
        names[f"e{j + 1}"] = vid
    for i, vid in u_ids.items():
        names[f"u{i}"] = vid
    names["r"] = r

    acc = _ArcSet()
    for j, edge in enumerate(h.edges):
        for x in sorted(edge):
            acc.add_both(x, edge_ids[j])
    for uid in u_ids.values():
        acc.add_both(r, uid)
        for eid in edge_ids.values():
            acc.add_both(uid, eid)
    for x in range(nv):
        for y in range(x + 1, nv):
            acc.add_both(x, y)
    for z in range(nv):
        acc.add_both(r, z)

    terminals = {r} | set(edge_ids.values())
    description = (
        f"from hypergraph with {nv} vertices and {m} edges; ell={ell}, k={m + 1}"
    )
    return _finish(description, names, n, acc.arcs, terminals, r)


def amplifier_copy_count(n_param: int) -> int:
    """Number of source copies placed in the amplifier grid."""
    return (n_param * n_param - 2 * n_param + 2) * (n_param - 1) // 2


def gadget_amplifier(
    h: Digraph, x1: int, y1: int, x2: int, y2: int, n_param: int
) -> GadgetInstance:
    """Gap-amplifier grid built from copies of a 2-linkage instance.

    Copies H_{i,j}^k sit at the crossing of row i (the s_i layer) and
    the column of u_{k,j}; rows run left to right through port x1/y1,
    columns run top to bottom through x2/y2 into t_j, and the escape
    chains (the u_{*,1} ladder plus the anti-diagonals) guarantee one
    pendant tree regardless of the source instance.
    """
    if n_param < 2:
        raise GraphError(f"N must be at least 2, got {n_param}")
    ports = (x1, y1, x2, y2)
    if len(set(ports)) != 4:
        raise GraphError("ports must be four distinct vertices")
    for v in ports:
        if not 0 <= v < h.n:
            raise GraphError(f"vertex {v} out of range for n={h.n}")

    big_n = n_param
    copies = [
        (i, j, k)
        for i in range(1, big_n)
        for j in range(1, big_n)
        for k in range(i + 1, big_n + 1)
        if j != k
    ]
    if len(copies) != amplifier_copy_count(big_n):
        raise RuntimeError("copy index enumeration disagrees with the closed form")

    r = 0
    s_id = {i: i for i in range(1, big_n + 1)}
    t_id = {i: big_n + i for i in range(1, big_n + 1)}
    u_pairs = [
        (i, j)
        for i in range(1, big_n + 1)
        for j in range(1, big_n + 1)
        if i != j
    ]
    u_id = {pair: 2 * big_n + 1 + idx for idx, pair in enumerate(u_pairs)}
    copy_base = {
        c: 2 * big_n + 1 + len(u_pairs) + idx * h.n for idx, c in enumerate(copies)
    }
    n = 2 * big_n + 1 + len(u_pairs) + len(copies) * h.n

    def cid(c, w):
        return copy_base[c] + w

    names = {"r": r}
    for i in range(1, big_n + 1):
        names[f"s{i}"] = s_id[i]
        names[f"t{i}"] = t_id[i]
    for i, j in u_pairs:
        names[f"u_{i}_{j}"] = u_id[(i, j)]
    for (i, j, k) in copies:
        for w in range(h.n):
            names[f"H_{i}_{j}_{k}:{w}"] = cid((i, j, k), w)

    acc = _ArcSet()
    for c in copies:
        for a, b in h.sorted_arcs():
            acc.add(cid(c, a), cid(c, b))

    # horizontal rows: s_i, then per column group j the cells at ascending k
    for i in range(1, big_n + 1):
        prev_out = s_id[i]
        for j in range(1, big_n):
            for k in range(1, big_n + 1):
                if k == j:
                    continue
                if k == i:
                    acc.add(prev_out, u_id[(i, j)])
                    prev_out = u_id[(i, j)]
                elif k > i:
                    c = (i, j, k)
                    acc.add(prev_out, cid(c, x1))
                    prev_out = cid(c, y1)
        if i < big_n:
            acc.add(prev_out, u_id[(i, big_n)])
            acc.add(u_id[(i, big_n)], t_id[big_n])
        else:
            acc.add(prev_out, u_id[(big_n - 1, big_n)])

    # vertical columns: u_{k,j} descends through copies H_{i,j}^k into t_j
    for j in range(1, big_n):
        for k in range(1, big_n + 1):
            if k == j:
                continue
            prev_out = u_id[(k, j)]
            for i in range(k - 1, 0, -1):
                c = (i, j, k)
                acc.add(prev_out, cid(c, x2))
                prev_out = cid(c, y2)
            acc.add(prev_out, t_id[j])

    # root, shortcut arcs, the first-column ladder and the anti-diagonals
    for i in range(1, big_n + 1):
        acc.add(r, s_id[i])
    for i in range(1, big_n + 1):
        acc.add(s_id[i], t_id[i])
    acc.add(s_id[1], u_id[(2, 1)])
    for m in range(2, big_n):
        acc.add(u_id[(m, 1)], u_id[(m + 1, 1)])
    for q in range(2, big_n):
        ks = [
            k
            for k in range(q, 0, -1)
            if not (q % 2 == 1 and k == (q + 1) // 2)
        ]
        positions = [(k, q + 1 - k) for k in ks]
        for p1, p2 in zip(positions, positions[1:]):
            acc.add(u_id[p1], u_id[p2])

    terminals = {r} | set(t_id.values())
    description = (
        f"gap amplifier: N={big_n}, copies={len(copies)}, source on {h.n} vertices, "
        f"ports x1={x1}, y1={y1}, x2={x2}, y2={y2}"
    )
    return _finish(description, names, n, acc.arcs, terminals, r)
