"""Exact solvers for pendant Steiner tree packing.

solve_tau_sr runs a branch-and-bound over lazily enumerated minimal
pendant trees, branching on the root's out-arcs (each tree in a packing
consumes a distinct one).  solve_tau_k minimizes over terminal choices.
decide_tau_symmetric is the skeleton-tuple threshold algorithm for
symmetric digraphs, with path realization delegated to the constrained
disjoint-paths oracle.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .digraph import Digraph, GraphError, is_symmetric
from .oracles import LinkageQuery, constrained_disjoint_paths
from .trees import (
    Packing,
    PendantTree,
    Skeleton,
    TerminalSpec,
    check_terminal_spec,
    enumerate_pendant_trees,
    enumerate_skeletons,
    validate_packing,
)


@dataclass(frozen=True)
class SearchStats:
    """Branch-and-bound effort counters."""

    trees_enumerated: int
    nodes: int
    upper_bound: int


@dataclass(frozen=True)
class SolveResult:
    """Exact packing number with a validated certificate.

    When a target was supplied and reached early, `exact` is False and
    `value` means "at least this many".
    """

    value: int
    certificate: Packing
    exact: bool
    stats: SearchStats


@dataclass(frozen=True)
class TauKResult:
    """Minimum of tau over all k-element terminal specs."""

    value: int
    witness_spec: TerminalSpec
    per_spec: dict[TerminalSpec, int] | None = None


def packing_upper_bound(digraph: Digraph, spec: TerminalSpec) -> int:
    """Cheapest provable cap on the packing number for this spec.

    For k >= 3: the arc-cut bound floor(|(outside -> S\\{r})| / (k-1))
    and the root/terminal neighborhood bounds |N+(r)\\S| and
    min |N-(s)\\S|.  For k = 2 trees are paths, so the semi-degrees of
    the two endpoints cap the packing.
    """
    root = spec.root
    terminals = spec.terminals
    if spec.k >= 3:
        cut = sum(
            1
            for s in spec.others()
            for u in digraph.in_adj[s]
            if u not in terminals
        )
        bound = cut // (spec.k - 1)
        bound = min(
            bound, sum(1 for v in digraph.out_adj[root] if v not in terminals)
        )
        for s in spec.others():
            bound = min(
                bound, sum(1 for u in digraph.in_adj[s] if u not in terminals)
            )
        return bound
    (other,) = spec.others()
    return min(digraph.out_degree(root), digraph.in_degree(other))


class _TreeGroup:
    """Caching wrapper so a per-root-arc tree stream can be re-iterated.

    Items carry the tree plus bitmasks of its arcs and internal vertices
    for constant-factor conflict checks.
    """

    def __init__(self, gen, counter, to_item):
        self._gen = gen
        self._counter = counter
        self._to_item = to_item
        self.items: list[tuple[PendantTree, int, int]] = []
        self.done = False

    def __iter__(self):
        i = 0
        while True:
            if i < len(self.items):
                yield self.items[i]
            elif self.done:
                return
            else:
                try:
                    tree = next(self._gen)
                except StopIteration:
                    self.done = True
                    return
                self._counter[0] += 1
                item = self._to_item(tree)
                self.items.append(item)
                yield item
            i += 1


def solve_tau_sr(
    digraph: Digraph, spec: TerminalSpec, target: int | None = None
) -> SolveResult:
    """Exact maximum packing of internally-disjoint pendant trees.

    With `target`, the search stops as soon as that many trees are
    packed; the result is then flagged inexact ("at least target").
    The certificate always re-validates.
    """
    check_terminal_spec(digraph, spec)
    terminals = spec.terminals
    root = spec.root
    ub = packing_upper_bound(digraph, spec)
    counter = [0]
    nodes = [0]

    def finish(trees: list[PendantTree], exact: bool) -> SolveResult:
        packing = Packing(spec, tuple(trees))
        check = validate_packing(digraph, packing)
        if not check:
            raise RuntimeError(f"solver produced an invalid packing: {check.reason}")
        stats = SearchStats(counter[0], nodes[0], ub)
        if packing.size() > ub:
            raise RuntimeError("solver exceeded its own upper bound")
        return SolveResult(packing.size(), packing, exact, stats)

    if target is not None and target <= 0:
        return finish([], exact=False)
    if ub == 0:
        return finish([], exact=True)

    if spec.k >= 3:
        root_targets = [v for v in digraph.out_adj[root] if v not in terminals]
    else:
        root_targets = list(digraph.out_adj[root])

    arc_bit = {arc: i for i, arc in enumerate(digraph.sorted_arcs())}
    term_mask = 0
    for t in terminals:
        term_mask |= 1 << t

    def to_item(tree: PendantTree) -> tuple[PendantTree, int, int]:
        arc_mask = 0
        for arc in tree.arcs:
            arc_mask |= 1 << arc_bit[arc]
        vert_mask = 0
        for v in tree.vertex_set:
            vert_mask |= 1 << v
        return tree, arc_mask, vert_mask & ~term_mask

    groups: dict[int, _TreeGroup] = {}

    def group_for(x: int) -> _TreeGroup:
        if x not in groups:
            gen = enumerate_pendant_trees(digraph, spec, root_child=x)
            groups[x] = _TreeGroup(gen, counter, to_item)
        return groups[x]

    best: list[PendantTree] = []
    chosen: list[PendantTree] = []
    used = [0, 0]  # arc mask, internal-vertex mask
    STOP_EXACT, STOP_TARGET, KEEP_GOING = 2, 1, 0

    def search(idx: int) -> int:
        nonlocal best
        nodes[0] += 1
        if len(chosen) > len(best):
            best = list(chosen)
        if len(best) >= ub:
            return STOP_EXACT
        if target is not None and len(best) >= target:
            return STOP_TARGET
        if idx == len(root_targets):
            return KEEP_GOING
        if len(chosen) + (len(root_targets) - idx) <= len(best):
            return KEEP_GOING
        for tree, arc_mask, internal_mask in group_for(root_targets[idx]):
            if not used[0] & arc_mask and not used[1] & internal_mask:
                chosen.append(tree)
                used[0] |= arc_mask
                used[1] |= internal_mask
                verdict = search(idx + 1)
                used[0] &= ~arc_mask
                used[1] &= ~internal_mask
                chosen.pop()
                if verdict:
                    return verdict
        return search(idx + 1)

    verdict = search(0)
    return finish(best, exact=verdict != STOP_TARGET)


def _exact_value(args) -> int:
    digraph, spec = args
    return solve_tau_sr(digraph, spec).value


def all_terminal_specs(digraph: Digraph, k: int) -> list[TerminalSpec]:
    """Every (S, r) choice with |S| = k, in lexicographic order."""
    specs = []
    for members in combinations(digraph.vertices(), k):
        for root in members:
            specs.append(TerminalSpec(frozenset(members), root))
    return specs


def solve_tau_k(
    digraph: Digraph,
    k: int,
    threads: int = 1,
    keep_per_spec: bool = False,
) -> TauKResult:
    """Exact minimum of the packing number over all k-element specs.

    Sequential mode scans specs in lexicographic order and short-circuits
    each sub-solve at the current minimum (a sub-solve that reaches it
    cannot lower it); specs whose neighborhood screening bound is zero
    cost nothing.  With threads > 1 the exact per-spec values are
    computed in parallel and reduced; results are identical.
    """
    if not 2 <= k <= digraph.n:
        raise GraphError(f"k={k} outside [2, {digraph.n}]")
    specs = all_terminal_specs(digraph, k)
    per_spec: dict[TerminalSpec, int] = {}

    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(_exact_value, [(digraph, s) for s in specs]))
        best = min(values)
        witness = specs[values.index(best)]
        if keep_per_spec:
            per_spec = dict(zip(specs, values))
        return TauKResult(best, witness, per_spec if keep_per_spec else None)

    current: int | None = None
    witness = specs[0]
    for spec in specs:
        if current == 0 and not keep_per_spec:
            break
        limit = current if not keep_per_spec else None
        res = solve_tau_sr(digraph, spec, target=limit)
        if keep_per_spec:
            per_spec[spec] = res.value
        if res.exact and (current is None or res.value < current):
            current = res.value
            witness = spec
    assert current is not None
    return TauKResult(current, witness, per_spec if keep_per_spec else None)


def _disjoint_skeleton_tuples(skeletons: list[Skeleton], ell: int):
    chosen: list[Skeleton] = []
    used: set[int] = set()

    def rec(start: int):
        if len(chosen) == ell:
            yield tuple(chosen)
            return
        for idx in range(start, len(skeletons)):
            sk = skeletons[idx]
            if used & sk.branch_set:
                continue
            chosen.append(sk)
            used.update(sk.branch_set)
            yield from rec(idx + 1)
            used.difference_update(sk.branch_set)
            chosen.pop()

    yield from rec(0)


def decide_tau_symmetric(
    digraph: Digraph, spec: TerminalSpec, ell: int
) -> tuple[bool, Packing | None]:
    """Threshold decision "are there at least ell disjoint trees?" on a symmetric host.

    Tries every ell-tuple of skeletons whose branch vertices do not
    collide, keeps tuple arcs already present in the host, and realizes
    the remaining skeleton arcs as paths through fresh vertices (interior
    forbidden on terminals and on every branch vertex of the tuple).
    Returns the validated packing on success.
    """
    if not is_symmetric(digraph):
        raise GraphError("decide_tau_symmetric requires a symmetric digraph")
    check_terminal_spec(digraph, spec)
    if ell < 1:
        raise GraphError(f"ell must be positive, got {ell}")

    terminals = spec.terminals
    skeletons = list(enumerate_skeletons(digraph, spec))
    host = Digraph(
        digraph.n,
        frozenset(
            (u, v)
            for u, v in digraph.arcs
            if not (u in terminals and v in terminals)
        ),
    )

    if spec.k == 2:
        tuples = iter([(skeletons[0],) * ell]) if skeletons else iter([])
    else:
        tuples = _disjoint_skeleton_tuples(skeletons, ell)

    for tup in tuples:
        skeleton_vertices = set(terminals)
        for sk in tup:
            skeleton_vertices |= sk.branch_set
        kept: dict[tuple[int, int], int] = {}
        pending: list[tuple[tuple[int, int], int]] = []
        for i, sk in enumerate(tup):
            for arc in sorted(sk.arcs):
                if arc in digraph.arcs and arc not in kept:
                    kept[arc] = i
                else:
                    pending.append((arc, i))
        pending.sort()
        query = LinkageQuery(
            host,
            tuple(arc for arc, _ in pending),
            frozenset(skeleton_vertices),
        )
        paths = constrained_disjoint_paths(query)
        if paths is None:
            continue
        tree_arcs: list[set[tuple[int, int]]] = [set() for _ in tup]
        for arc, i in kept.items():
            tree_arcs[i].add(arc)
        for (arc, i), path in zip(pending, paths):
            for a, b in zip(path, path[1:]):
                tree_arcs[i].add((a, b))
        trees = tuple(
            PendantTree(spec.root, frozenset(arcs)) for arcs in tree_arcs
        )
        packing = Packing(spec, trees)
        check = validate_packing(digraph, packing)
        if not check:
            raise RuntimeError(
                f"skeleton realization produced an invalid packing: {check.reason}"
            )
        return True, packing
    return False, None
