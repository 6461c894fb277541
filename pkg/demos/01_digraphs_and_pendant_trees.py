"""Walkthrough: digraphs, terminal specs, and pendant tree validation.

A pendant tree for a terminal set S rooted at r is an out-tree that
touches every terminal exactly once: the root contributes one out-arc
and nothing in, every other terminal is a leaf.  This script builds the
two classic four-vertex examples (one valid, one not) and then
enumerates every minimal pendant tree of a small complete digraph.
"""

from pendantpack import (
    PendantTree,
    bidirected_complete,
    build_digraph,
    enumerate_pendant_trees,
    make_spec,
    validate_pendant_tree,
)

# r -> u -> {v1, v2}: vertex 1 fans out to both leaves
host = build_digraph(4, [(0, 1), (1, 2), (1, 3)])
spec = make_spec(0, [2, 3])

good = PendantTree(0, frozenset({(0, 1), (1, 2), (1, 3)}))
print("r->u->{v1,v2} is a pendant tree:", bool(validate_pendant_tree(host, spec, good)))

# the root fanning out directly gives r degree two, which disqualifies it
flat_host = build_digraph(3, [(0, 1), (0, 2)])
flat = PendantTree(0, frozenset({(0, 1), (0, 2)}))
verdict = validate_pendant_tree(flat_host, make_spec(0, [1, 2]), flat)
print("r->{v1,v2} fails with reason:", verdict.reason)

# on a bidirected complete digraph the minimal trees are easy to read off
k5 = bidirected_complete(5)
spec5 = make_spec(0, [1, 2])
print("\nminimal pendant trees of bidirected K_5, S={0,1,2}, r=0:")
for tree in enumerate_pendant_trees(k5, spec5):
    print("  ", tree.sorted_arcs())
