"""Terminal specs, pendant trees, packings and skeletons, with validators.

The validators here are the single source of truth: every solver
certificate and every gadget equivalence test is re-checked through
them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Iterator

from .digraph import Digraph, GraphError


@dataclass(frozen=True)
class TerminalSpec:
    """A terminal set with a designated root inside some host digraph."""

    terminals: frozenset[int]
    root: int

    @property
    def k(self) -> int:
        return len(self.terminals)

    def others(self) -> tuple[int, ...]:
        """Non-root terminals in ascending order."""
        return tuple(sorted(self.terminals - {self.root}))

    def sort_key(self) -> tuple:
        return (tuple(sorted(self.terminals)), self.root)


def make_spec(root: int, others) -> TerminalSpec:
    return TerminalSpec(frozenset((root, *others)), root)


def check_terminal_spec(digraph: Digraph, spec: TerminalSpec) -> None:
    """Raise GraphError unless the spec is valid in the host."""
    if spec.root not in spec.terminals:
        raise GraphError(f"root {spec.root} not in terminal set")
    if not 2 <= spec.k <= digraph.n:
        raise GraphError(f"terminal count {spec.k} outside [2, {digraph.n}]")
    for v in spec.terminals:
        if not 0 <= v < digraph.n:
            raise GraphError(f"terminal {v} out of range for n={digraph.n}")


@dataclass(frozen=True)
class PendantTree:
    """An out-tree certificate; terminals must end up with degree one."""

    root: int
    arcs: frozenset[tuple[int, int]]

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        verts = {self.root}
        for u, v in self.arcs:
            verts.add(u)
            verts.add(v)
        return frozenset(verts)

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)


@dataclass(frozen=True)
class Packing:
    """A collection of pairwise internally-disjoint pendant trees."""

    spec: TerminalSpec
    trees: tuple[PendantTree, ...]

    def size(self) -> int:
        return len(self.trees)


@dataclass(frozen=True)
class Skeleton:
    """Contracted shape of a minimal pendant tree: terminals plus branch vertices.

    Skeleton arcs are abstract; they need not be arcs of the host.
    """

    spec: TerminalSpec
    branch_set: frozenset[int]
    arcs: frozenset[tuple[int, int]]

    def vertex_set(self) -> frozenset[int]:
        return self.spec.terminals | self.branch_set


@dataclass(frozen=True)
class ValidationResult:
    """Boolean verdict plus a machine-readable reason when it fails."""

    ok: bool
    reason: str | None = None
    detail: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


_VALID = ValidationResult(True)


def validate_pendant_tree(
    digraph: Digraph, spec: TerminalSpec, tree: PendantTree
) -> ValidationResult:
    """Check the full pendant-tree contract against a host digraph.

    Failure reasons: arc-not-in-host, wrong-root, not-a-tree,
    terminal-degree.
    """
    for arc in tree.arcs:
        if arc not in digraph.arcs:
            return ValidationResult(False, "arc-not-in-host", (arc,))
    if tree.root != spec.root:
        return ValidationResult(False, "wrong-root", (tree.root,))

    verts = tree.vertex_set
    in_deg = {v: 0 for v in verts}
    out_deg = {v: 0 for v in verts}
    for u, v in tree.arcs:
        out_deg[u] += 1
        in_deg[v] += 1
    if in_deg[tree.root] != 0:
        return ValidationResult(False, "not-a-tree", (tree.root,))
    for v in verts:
        if v != tree.root and in_deg[v] != 1:
            return ValidationResult(False, "not-a-tree", (v,))
    # in-degrees are right; an out-tree additionally needs everything
    # reachable from the root
    seen = {tree.root}
    stack = [tree.root]
    children: dict[int, list[int]] = {v: [] for v in verts}
    for u, v in tree.arcs:
        children[u].append(v)
    while stack:
        u = stack.pop()
        for v in children[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    if len(seen) != len(verts):
        return ValidationResult(False, "not-a-tree", ())

    if not spec.terminals <= verts:
        return ValidationResult(False, "terminal-degree", tuple(sorted(spec.terminals - verts)))
    if out_deg[spec.root] != 1:
        return ValidationResult(False, "terminal-degree", (spec.root,))
    for s in spec.terminals:
        if s != spec.root and (out_deg[s] != 0 or in_deg[s] != 1):
            return ValidationResult(False, "terminal-degree", (s,))
    return _VALID


def validate_packing(digraph: Digraph, packing: Packing) -> ValidationResult:
    """Check every tree and every pair for internal disjointness.

    Failure reasons: bad-tree (with index and inner reason), shared-arc,
    shared-internal-vertex (with the offending pair).
    """
    for i, tree in enumerate(packing.trees):
        res = validate_pendant_tree(digraph, packing.spec, tree)
        if not res:
            return ValidationResult(False, "bad-tree", (i, res.reason))
    terminals = packing.spec.terminals
    for i, j in combinations(range(len(packing.trees)), 2):
        ti, tj = packing.trees[i], packing.trees[j]
        if ti.arcs & tj.arcs:
            return ValidationResult(False, "shared-arc", (i, j))
        if (ti.vertex_set & tj.vertex_set) != terminals:
            return ValidationResult(False, "shared-internal-vertex", (i, j))
    return _VALID


def enumerate_skeletons(digraph: Digraph, spec: TerminalSpec) -> Iterator[Skeleton]:
    """Every abstract skeleton over branch sets drawn from the host's non-terminals.

    A skeleton is an out-tree on the terminals plus at most k-2 branch
    vertices, where terminals have degree one and branch vertices degree
    at least three.  Arcs are abstract: realization against the host is
    the solvers' job.
    """
    check_terminal_spec(digraph, spec)
    root = spec.root
    others = list(spec.others())
    non_terminals = [v for v in digraph.vertices() if v not in spec.terminals]
    for size in range(0, spec.k - 1):
        for branch in combinations(non_terminals, size):
            targets = sorted(others + list(branch))
            branch_set = set(branch)
            candidate_lists = []
            for t in targets:
                cands = [root] + [x for x in branch if x != t]
                candidate_lists.append(cands)
            for parents in product(*candidate_lists):
                arcs = frozenset(zip(parents, targets))
                if sum(1 for p in parents if p == root) != 1:
                    continue
                child_count = {x: 0 for x in branch}
                for p in parents:
                    if p != root:
                        child_count[p] += 1
                if any(c < 2 for c in child_count.values()):
                    continue
                # reachability from the root makes it an out-tree
                seen = {root}
                stack = [root]
                children: dict[int, list[int]] = {}
                for p, t in zip(parents, targets):
                    children.setdefault(p, []).append(t)
                while stack:
                    u = stack.pop()
                    for v in children.get(u, ()):  # noqa: B905
                        if v not in seen:
                            seen.add(v)
                            stack.append(v)
                if len(seen) != len(targets) + 1:
                    continue
                yield Skeleton(spec, frozenset(branch_set), arcs)


def enumerate_pendant_trees(
    digraph: Digraph, spec: TerminalSpec, root_child: int | None = None
) -> Iterator[PendantTree]:
    """Every minimal pendant tree of the host, each exactly once.

    Minimal means the degree-one vertex set is exactly the terminal set.
    The stream is deterministic: trees are grown depth-first from the
    root, children sets taken in ascending size then lexicographic
    order; `root_child` restricts the stream to trees whose single root
    arc points at that vertex.
    """
    check_terminal_spec(digraph, spec)
    root = spec.root
    terminals = spec.terminals
    out_adj = digraph.out_adj
    # vertex sets are bitmasks throughout the search
    term_mask = 0
    for t in terminals:
        term_mask |= 1 << t
    out_mask = []
    nt_out = []  # out-neighbors that are not terminals
    out_term_mask = []  # non-root terminals one arc away
    for u in range(digraph.n):
        full = 0
        picks = 0
        for v in out_adj[u]:
            full |= 1 << v
            if v in terminals and v != root:
                picks |= 1 << v
        out_mask.append(full)
        nt_out.append(tuple(v for v in out_adj[u] if v not in terminals))
        out_term_mask.append(picks)

    def scan(frontier, blocked_mask) -> int:
        # terminals reachable by one arc from anything the frontier can
        # reach through fresh non-terminal vertices
        seen = 0
        hits = 0
        stack = list(frontier)
        for w in stack:
            seen |= 1 << w
            hits |= out_term_mask[w]
        while stack:
            for v in nt_out[stack.pop()]:
                bit = 1 << v
                if not seen & bit and not blocked_mask & bit:
                    seen |= bit
                    hits |= out_term_mask[v]
                    stack.append(v)
        return hits

    def viable(in_tree_mask, new_open, new_missing) -> bool:
        # prune: every missing terminal must stay reachable, and every
        # open vertex must be able to pick up some missing terminal in
        # its own subtree (else it would end as a bare non-terminal
        # leaf); direct adjacency short-circuits the reachability scan
        if not new_missing:
            return not new_open
        if not new_open:
            return False
        direct = 0
        for w in new_open:
            direct |= out_term_mask[w]
        if direct & new_missing != new_missing:
            if scan(new_open, in_tree_mask) & new_missing != new_missing:
                return False
        if len(new_open) > 1:
            for w in new_open:
                if out_term_mask[w] & new_missing:
                    continue
                if not scan((w,), in_tree_mask) & new_missing:
                    return False
        return True

    def grow(arcs, in_tree_mask, open_q, missing):
        if not open_q:
            if not missing:
                yield PendantTree(root, frozenset(arcs))
            return
        u = open_q[0]
        rest = open_q[1:]
        avail = out_mask[u] & ~in_tree_mask
        cands = []
        while avail:
            low = avail & -avail
            cands.append(low.bit_length() - 1)
            avail ^= low
        for size in range(1, len(cands) + 1):
            for chosen in combinations(cands, size):
                chosen_mask = 0
                for c in chosen:
                    chosen_mask |= 1 << c
                new_missing = missing & ~chosen_mask
                new_open = rest + tuple(
                    c for c in chosen if not term_mask >> c & 1
                )
                new_in_tree = in_tree_mask | chosen_mask
                if not viable(new_in_tree, new_open, new_missing):
                    continue
                yield from grow(
                    arcs + [(u, c) for c in chosen],
                    new_in_tree,
                    new_open,
                    new_missing,
                )

    others_mask = term_mask & ~(1 << root)
    if root_child is None:
        first = list(out_adj[root])
    else:
        first = [root_child] if root_child in out_adj[root] else []
    for x in first:
        missing = others_mask & ~(1 << x)
        open_q = () if term_mask >> x & 1 else (x,)
        if missing and not open_q:
            continue
        yield from grow([(root, x)], 1 << root | 1 << x, open_q, missing)
