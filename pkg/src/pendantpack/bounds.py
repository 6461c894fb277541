"""Closed-form bounds on the packing parameter and complement audits.

A violated bound is a bug (these are theorems), so the Nordhaus-Gaddum
report carries an explicit violation list that callers treat as fatal;
"bound not tight" is ordinary and merely reported.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Digraph, GraphError, complement, degree_summary
from .solvers import all_terminal_specs, solve_tau_k
from .trees import TerminalSpec


@dataclass(frozen=True)
class BoundsReport:
    """Every closed-form cap for one (digraph, k) pair."""

    order_bound: int
    semidegree_bound: int
    zero_rule_fires: bool
    cut_bound: int
    per_spec_cut: dict[TerminalSpec, int] | None = None


@dataclass(frozen=True)
class NordhausGaddumReport:
    """Packing numbers of a digraph and its complement, with range checks."""

    tau: int
    tau_complement: int
    sum_value: int
    product_value: int
    sum_upper: int
    product_upper: int
    sum_attains_upper: bool
    sum_attains_lower: bool
    product_attains_lower: bool
    violations: tuple[str, ...]


def spec_cut_value(digraph: Digraph, spec: TerminalSpec) -> int:
    """floor(|arcs from outside S into S\\{r}| / (k-1)) for one spec."""
    terminals = spec.terminals
    cut = sum(
        1 for s in spec.others() for u in digraph.in_adj[s] if u not in terminals
    )
    return cut // (spec.k - 1)


def bound_cut(digraph: Digraph, k: int) -> int:
    """Minimum of the arc-cut cap over every spec; exact enumeration."""
    if not 3 <= k <= digraph.n:
        raise GraphError(f"cut bound needs 3 <= k <= n, got k={k}, n={digraph.n}")
    return min(
        spec_cut_value(digraph, spec) for spec in all_terminal_specs(digraph, k)
    )


def bound_semidegree(digraph: Digraph) -> int:
    """min(minimum out-degree, minimum in-degree)."""
    summary = degree_summary(digraph)
    return min(summary.delta_plus, summary.delta_minus)


def zero_rule(digraph: Digraph, k: int) -> bool:
    """True when the packing number is forced to zero: k >= max(delta0+1, 3)."""
    if k < 2:
        raise GraphError(f"k must be at least 2, got {k}")
    return k >= max(degree_summary(digraph).delta_zero + 1, 3)


def bounds_report(
    digraph: Digraph, k: int, include_per_spec: bool = False
) -> BoundsReport:
    per_spec = None
    if include_per_spec:
        per_spec = {
            spec: spec_cut_value(digraph, spec)
            for spec in all_terminal_specs(digraph, k)
        }
    return BoundsReport(
        order_bound=digraph.n - k,
        semidegree_bound=bound_semidegree(digraph),
        zero_rule_fires=zero_rule(digraph, k),
        cut_bound=bound_cut(digraph, k),
        per_spec_cut=per_spec,
    )


def nordhaus_gaddum_check(
    digraph: Digraph, k: int, threads: int = 1
) -> NordhausGaddumReport:
    """Exact packing numbers of D and its complement, checked against
    0 <= sum <= n-k and 0 <= product <= floor(((n-k)/2)^2)."""
    if not 3 <= k <= digraph.n:
        raise GraphError(f"need 3 <= k <= n, got k={k}, n={digraph.n}")
    tau = solve_tau_k(digraph, k, threads=threads).value
    tau_c = solve_tau_k(complement(digraph), k, threads=threads).value
    n_minus_k = digraph.n - k
    sum_value = tau + tau_c
    product_value = tau * tau_c
    product_upper = (n_minus_k * n_minus_k) // 4
    violations = []
    if not 0 <= sum_value <= n_minus_k:
        violations.append(f"sum {sum_value} outside [0, {n_minus_k}]")
    if not 0 <= product_value <= product_upper:
        violations.append(f"product {product_value} outside [0, {product_upper}]")
    return NordhausGaddumReport(
        tau=tau,
        tau_complement=tau_c,
        sum_value=sum_value,
        product_value=product_value,
        sum_upper=n_minus_k,
        product_upper=product_upper,
        sum_attains_upper=sum_value == n_minus_k,
        sum_attains_lower=sum_value == 0,
        product_attains_lower=product_value == 0,
        violations=tuple(violations),
    )
