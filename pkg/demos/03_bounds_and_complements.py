"""Walkthrough: closed-form bounds and complement (Nordhaus-Gaddum) audits.

Three caps hold for every digraph: tau_k <= n-k with equality only on
the bidirected complete digraph, tau_k <= min semi-degree, and the
arc-cut bound floor(|arcs into S\\{r} from outside| / (k-1)) minimized
over specs.  The zero rule kills tau_k outright once k exceeds the
minimum semi-degree.  Finally, tau_k(D) + tau_k(Dc) never exceeds n-k.
"""

from pendantpack import (
    bidirected_complete,
    bounds_report,
    generate,
    nordhaus_gaddum_check,
    solve_tau_k,
)

d = generate("random-digraph", 7, p=0.75, seed=7)
for k in (3, 4):
    report = bounds_report(d, k)
    tau = solve_tau_k(d, k).value
    print(
        f"k={k}: tau={tau}  order<={report.order_bound}  "
        f"semidegree<={report.semidegree_bound}  cut<={report.cut_bound}  "
        f"zero-rule={'fires' if report.zero_rule_fires else 'quiet'}"
    )

star = generate("star-orientation", 7)
print("\nstar orientation: tau_3 =", solve_tau_k(star, 3).value, "(sharp lower bound)")
print("complete digraph: tau_3 =", solve_tau_k(bidirected_complete(7), 3).value, "(sharp upper bound)")

print("\nNordhaus-Gaddum on the complete digraph (sum attains n-k):")
print(" ", nordhaus_gaddum_check(bidirected_complete(6), 3))
print("on a transitive tournament (both terms vanish):")
print(" ", nordhaus_gaddum_check(generate("transitive-tournament", 5), 3))
print("on a random digraph:")
print(" ", nordhaus_gaddum_check(d, 3))
