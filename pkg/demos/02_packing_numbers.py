"""Walkthrough: exact packing numbers and their certificates.

tau_{S,r} is the largest number of pairwise internally-disjoint pendant
trees for one terminal choice; tau_k minimizes that over every k-subset
and root.  The solver always returns a certificate packing, re-checked
by the validators, and the k=2 case collapses to classical vertex
connectivity.
"""

from pendantpack import (
    bidirected_complete,
    generate,
    make_spec,
    solve_tau_k,
    solve_tau_sr,
    validate_packing,
    vertex_connectivity,
)
from pendantpack.formats import write_certificate

k6 = bidirected_complete(6)
spec = make_spec(0, [1, 2])
res = solve_tau_sr(k6, spec)
print(f"tau_(S,r) on bidirected K_6 with |S|=3: {res.value}")
print("certificate validates:", bool(validate_packing(k6, res.certificate)))
print(write_certificate(spec, res.certificate.trees))

# the minimum over all terminal choices matches the sharp n-k value
for k in (3, 4, 5):
    print(f"tau_{k}(K_6) = {solve_tau_k(k6, k).value}   (n-k = {6 - k})")

# a target stops the search as soon as enough trees are packed
partial = solve_tau_sr(k6, spec, target=2)
print(f"\ntarget=2 stops early: value={partial.value}, exact={partial.exact}")

# k=2 packing equals vertex connectivity (Menger)
d = generate("random-digraph", 6, p=0.5, seed=4)
tau2 = min(
    solve_tau_sr(d, make_spec(u, [v])).value
    for u in range(6)
    for v in range(6)
    if u != v
)
print(f"\nrandom digraph: tau_2 = {tau2}, kappa = {vertex_connectivity(d)}")
