"""Walkthrough: the skeleton-tuple threshold decision on symmetric digraphs.

Every minimal pendant tree contracts to a skeleton: the terminals plus
at most k-2 branch vertices.  On a symmetric host, asking "are there at
least ell disjoint trees?" reduces to trying every ell-tuple of
skeletons with non-colliding branch vertices and realizing the missing
skeleton arcs as interior-disjoint paths.  The decision always agrees
with the exact solver; this script shows the machinery on one host.
"""

from pendantpack import (
    decide_tau_symmetric,
    enumerate_skeletons,
    generate,
    is_connected,
    make_spec,
    solve_tau_sr,
    validate_packing,
)
from pendantpack.formats import write_certificate

host = generate("random-symmetric", 7, p=0.6, seed=20)
assert is_connected(host)
spec = make_spec(0, [1, 2])

skeletons = list(enumerate_skeletons(host, spec))
print(f"host has {host.m} arcs; {len(skeletons)} skeletons for k=3")
for sk in skeletons[:4]:
    print("  branch", sorted(sk.branch_set), "arcs", sorted(sk.arcs))

exact = solve_tau_sr(host, spec).value
print(f"\nexact packing number: {exact}")
for ell in (1, 2, 3, 4):
    ok, packing = decide_tau_symmetric(host, spec, ell)
    print(f"at least {ell} disjoint trees? {ok}")
    if ok:
        assert validate_packing(host, packing)
print("\ncertificate for the largest ell that succeeded:")
ok, packing = decide_tau_symmetric(host, spec, exact)
print(write_certificate(spec, packing.trees))
