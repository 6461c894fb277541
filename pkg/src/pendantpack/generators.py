"""Seeded instance generators for the extremal families and random corpora."""

from __future__ import annotations

import random

from .digraph import Digraph, GraphError, is_connected, is_eulerian, is_symmetric

FAMILIES = (
    "bidirected-complete",
    "bidirected-complete-minus-arc",
    "star-orientation",
    "transitive-tournament",
    "random-tournament",
    "random-digraph",
    "random-symmetric",
    "random-eulerian",
)

_EULERIAN_ATTEMPTS = 32


def bidirected_complete(n: int) -> Digraph:
    return Digraph(
        n, frozenset((u, v) for u in range(n) for v in range(n) if u != v)
    )


def generate(family: str, n: int, p: float | None = None, seed: int = 0) -> Digraph:
    """Build one instance; random families are reproducible from the seed.

    The family predicate is re-checked after generation; random-eulerian
    retries a bounded number of times before failing.
    """
    if family not in FAMILIES:
        raise GraphError(f"unknown family {family!r}")
    if n < 1:
        raise GraphError(f"family {family!r} needs at least one vertex")
    rng = random.Random(seed)

    if family == "bidirected-complete":
        digraph = bidirected_complete(n)
    elif family == "bidirected-complete-minus-arc":
        if n < 2:
            raise GraphError("need n >= 2 to delete an arc")
        digraph = Digraph(n, bidirected_complete(n).arcs - {(0, 1)})
    elif family == "star-orientation":
        if n < 2:
            raise GraphError("star orientation needs n >= 2")
        digraph = Digraph(n, frozenset((0, i) for i in range(1, n)))
    elif family == "transitive-tournament":
        digraph = Digraph(
            n, frozenset((i, j) for i in range(n) for j in range(i + 1, n))
        )
    elif family == "random-tournament":
        arcs = set()
        for i in range(n):
            for j in range(i + 1, n):
                arcs.add((i, j) if rng.random() < 0.5 else (j, i))
        digraph = Digraph(n, frozenset(arcs))
    elif family == "random-digraph":
        prob = 0.5 if p is None else p
        arcs = set()
        for u in range(n):
            for v in range(n):
                if u != v and rng.random() < prob:
                    arcs.add((u, v))
        digraph = Digraph(n, frozenset(arcs))
    elif family == "random-symmetric":
        prob = 0.5 if p is None else p
        arcs = set()
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < prob:
                    arcs.add((u, v))
                    arcs.add((v, u))
        digraph = Digraph(n, frozenset(arcs))
    else:  # random-eulerian
        if n < 2:
            raise GraphError("random-eulerian needs n >= 2")
        digraph = None
        for _ in range(_EULERIAN_ATTEMPTS):
            candidate = _random_eulerian(rng, n)
            if candidate is not None and is_eulerian(candidate):
                digraph = candidate
                break
        if digraph is None:
            raise GraphError("random-eulerian generation failed after retries")

    if not family_predicate(family, digraph, p):
        raise GraphError(f"generated instance violates the {family!r} predicate")
    return digraph


def _random_eulerian(rng: random.Random, n: int) -> Digraph | None:
    # one directed cycle through every vertex keeps the result balanced,
    # spanning and connected; extra arc-disjoint cycles add bulk
    perm = list(range(n))
    rng.shuffle(perm)
    arcs = {(perm[i], perm[(i + 1) % n]) for i in range(n)}
    for _ in range(n):
        length = rng.randint(2, n)
        verts = rng.sample(range(n), length)
        cycle = [(verts[i], verts[(i + 1) % length]) for i in range(length)]
        if all(a not in arcs for a in cycle):
            arcs.update(cycle)
    if any(u == v for u, v in arcs):
        return None
    return Digraph(n, frozenset(arcs))


def family_predicate(family: str, digraph: Digraph, p: float | None = None) -> bool:
    """The structural property each family promises."""
    n = digraph.n
    if family == "bidirected-complete":
        return digraph.m == n * (n - 1) and is_symmetric(digraph)
    if family == "bidirected-complete-minus-arc":
        return digraph.m == n * (n - 1) - 1
    if family == "star-orientation":
        return digraph.arcs == frozenset((0, i) for i in range(1, n))
    if family in ("transitive-tournament", "random-tournament"):
        tournament = all(
            ((u, v) in digraph.arcs) != ((v, u) in digraph.arcs)
            for u in range(n)
            for v in range(u + 1, n)
        )
        if family == "random-tournament":
            return tournament
        transitive = all(
            (u, w) in digraph.arcs
            for u, v in digraph.arcs
            for w in digraph.out_adj[v]
            if w != u
        )
        return tournament and transitive
    if family == "random-digraph":
        return True
    if family == "random-symmetric":
        return is_symmetric(digraph)
    if family == "random-eulerian":
        return is_eulerian(digraph) and is_connected(digraph)
    raise GraphError(f"unknown family {family!r}")
