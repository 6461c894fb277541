"""Command-line front end.

Machine mode (--machine) prints a flat, byte-stable `key: value` report;
certificates are embedded verbatim between certificate-begin/-end
markers so they can be cut out and fed back to `verify`.  Human mode is
free-form.  Exit codes: 0 success, 1 failed verification or violated
bound, 2 parse/usage errors (including the exact-solver size guardrail).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .bounds import bounds_report, nordhaus_gaddum_check
from .digraph import GraphError, is_eulerian, is_symmetric
from .formats import (
    ParseError,
    parse_certificate,
    parse_digraph,
    parse_hypergraph,
    parse_tripartite,
    write_certificate,
    write_digraph,
    write_provenance,
)
from .gadgets import (
    gadget_amplifier,
    gadget_cllm,
    gadget_eulerian,
    gadget_hypergraph,
)
from .generators import FAMILIES, generate
from .oracles import (
    LinkageQuery,
    cllm_solve,
    constrained_disjoint_paths,
    directed_two_linkage,
    hypergraph_two_coloring,
    vertex_connectivity,
)
from .solvers import decide_tau_symmetric, solve_tau_k, solve_tau_sr
from .trees import Packing, TerminalSpec, validate_packing

GUARDRAIL_N = 12


class _UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from None


def _load_digraph(path: str):
    return parse_digraph(_read_text(path), source=path)


def _parse_id_list(text: str, what: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise _UsageError(f"{what} must be a comma-separated id list, got {text!r}") from None


def _spec_from_arg(text: str) -> TerminalSpec:
    ids = _parse_id_list(text, "--terminals")
    if len(ids) < 2 or len(set(ids)) != len(ids):
        raise _UsageError("--terminals needs at least two distinct ids, root first")
    return TerminalSpec(frozenset(ids), ids[0])


def _guardrail(n: int, force: bool) -> None:
    if n > GUARDRAIL_N and not force:
        raise _UsageError(
            f"instance has n={n} > {GUARDRAIL_N}; the exact solver is exponential, "
            "pass --force to run anyway"
        )


def _spec_text(spec: TerminalSpec) -> str:
    return " ".join(str(v) for v in (spec.root, *spec.others()))


def _emit(lines) -> None:
    sys.stdout.write("\n".join(lines) + "\n")


def _cert_block(spec: TerminalSpec, trees) -> list[str]:
    body = write_certificate(spec, trees).rstrip("\n").split("\n")
    return ["certificate-begin", *body, "certificate-end"]


def cmd_solve(args) -> int:
    digraph = _load_digraph(args.graph)
    _guardrail(digraph.n, args.force)
    spec = _spec_from_arg(args.terminals)
    res = solve_tau_sr(digraph, spec, target=args.target)
    lines = [
        "command: solve",
        f"graph: {args.graph}",
        f"seed: {args.seed}",
        f"terminals: {_spec_text(spec)}",
        f"value: {res.value}",
        f"exact: {str(res.exact).lower()}",
        f"trees-enumerated: {res.stats.trees_enumerated}",
        f"search-nodes: {res.stats.nodes}",
        f"upper-bound: {res.stats.upper_bound}",
    ]
    lines.extend(_cert_block(spec, res.certificate.trees))
    if not args.machine:
        prefix = "at least " if not res.exact else ""
        lines = [
            f"packing number for root {spec.root}, terminals {sorted(spec.terminals)}: "
            f"{prefix}{res.value}",
            f"(enumerated {res.stats.trees_enumerated} trees, "
            f"{res.stats.nodes} search nodes, upper bound {res.stats.upper_bound})",
        ] + _cert_block(spec, res.certificate.trees)
    _emit(lines)
    return 0


def cmd_tau_k(args) -> int:
    digraph = _load_digraph(args.graph)
    _guardrail(digraph.n, args.force)
    result = solve_tau_k(digraph, args.k, threads=args.threads)
    witness = result.witness_spec
    witness_res = solve_tau_sr(digraph, witness)
    lines = [
        "command: tau-k",
        f"graph: {args.graph}",
        f"seed: {args.seed}",
        f"k: {args.k}",
        f"value: {result.value}",
        f"witness: {_spec_text(witness)}",
    ]
    lines.extend(_cert_block(witness, witness_res.certificate.trees))
    if not args.machine:
        lines = [
            f"tau_{args.k} = {result.value}, attained at root {witness.root}, "
            f"terminals {sorted(witness.terminals)}",
        ] + _cert_block(witness, witness_res.certificate.trees)
    _emit(lines)
    return 0


def cmd_bounds(args) -> int:
    digraph = _load_digraph(args.graph)
    report = bounds_report(digraph, args.k, include_per_spec=args.per_spec)
    lines = [
        "command: bounds",
        f"graph: {args.graph}",
        f"seed: {args.seed}",
        f"k: {args.k}",
        f"order-bound: {report.order_bound}",
        f"semidegree-bound: {report.semidegree_bound}",
        f"zero-rule: {str(report.zero_rule_fires).lower()}",
        f"cut-bound: {report.cut_bound}",
    ]
    if report.per_spec_cut is not None:
        for spec in sorted(report.per_spec_cut, key=lambda s: s.sort_key()):
            lines.append(
                f"per-spec-cut: {_spec_text(spec)} = {report.per_spec_cut[spec]}"
            )
    if not args.machine:
        lines = [
            f"bounds for k={args.k}: order {report.order_bound}, "
            f"semidegree {report.semidegree_bound}, cut {report.cut_bound}, "
            f"zero rule {'fires' if report.zero_rule_fires else 'does not fire'}",
        ] + lines[8:]
    _emit(lines)
    return 0


def cmd_ng_check(args) -> int:
    digraph = _load_digraph(args.graph)
    _guardrail(digraph.n, args.force)
    report = nordhaus_gaddum_check(digraph, args.k, threads=args.threads)
    lines = [
        "command: ng-check",
        f"graph: {args.graph}",
        f"seed: {args.seed}",
        f"k: {args.k}",
        f"tau: {report.tau}",
        f"tau-complement: {report.tau_complement}",
        f"sum: {report.sum_value}",
        f"product: {report.product_value}",
        f"sum-upper: {report.sum_upper}",
        f"product-upper: {report.product_upper}",
        f"sum-attains-upper: {str(report.sum_attains_upper).lower()}",
        f"sum-attains-lower: {str(report.sum_attains_lower).lower()}",
        f"product-attains-lower: {str(report.product_attains_lower).lower()}",
        f"violations: {len(report.violations)}",
    ]
    for v in report.violations:
        lines.append(f"violation: {v}")
    if not args.machine:
        verdict = "OK" if not report.violations else "VIOLATED (bug!)"
        lines = [
            f"tau_{args.k}(D) = {report.tau}, tau_{args.k}(Dc) = {report.tau_complement}; "
            f"sum {report.sum_value} <= {report.sum_upper}, "
            f"product {report.product_value} <= {report.product_upper}: {verdict}",
        ] + [f"violation: {v}" for v in report.violations]
    _emit(lines)
    return 1 if report.violations else 0


def _write_gadget(args, instance, extra_lines) -> int:
    out = Path(args.out)
    out.write_text(write_digraph(instance.digraph))
    prov_path = Path(args.provenance) if args.provenance else out.with_suffix(
        out.suffix + ".prov"
    )
    prov_path.write_text(write_provenance(instance.provenance, instance.spec))
    lines = [
        f"command: gadget {args.which}",
        f"seed: {args.seed}",
        f"out: {out}",
        f"provenance: {prov_path}",
        f"vertices: {instance.digraph.n}",
        f"arcs: {instance.digraph.m}",
        f"terminals: {_spec_text(instance.spec)}",
    ] + extra_lines
    _emit(lines)
    return 0


def cmd_gadget(args) -> int:
    if args.which == "eulerian":
        source = _load_digraph(args.graph)
        ids = _parse_id_list(args.terminals, "--terminals")
        if len(ids) != 4:
            raise _UsageError("--terminals must be s1,s2,t1,t2")
        instance = gadget_eulerian(source, *ids, k=args.k, ell=args.ell)
        extra = [f"eulerian: {str(is_eulerian(instance.digraph)).lower()}"]
    elif args.which == "cllm":
        g = parse_tripartite(_read_text(args.tripartite), source=args.tripartite)
        instance = gadget_cllm(g, k=args.k)
        extra = [f"symmetric: {str(is_symmetric(instance.digraph)).lower()}"]
    elif args.which == "hypergraph":
        h = parse_hypergraph(_read_text(args.hypergraph), source=args.hypergraph)
        instance = gadget_hypergraph(h, ell=args.ell)
        extra = [f"symmetric: {str(is_symmetric(instance.digraph)).lower()}"]
    else:
        source = _load_digraph(args.graph)
        ids = _parse_id_list(args.terminals, "--terminals")
        if len(ids) != 4:
            raise _UsageError("--terminals must be x1,y1,x2,y2")
        instance = gadget_amplifier(source, *ids, n_param=args.n_param)
        copies = len({n.split(":")[0] for n in instance.provenance.names if n.startswith("H_")})
        extra = [f"copies: {copies}"]
    return _write_gadget(args, instance, extra)


def cmd_verify(args) -> int:
    digraph = _load_digraph(args.graph)
    spec, trees = parse_certificate(_read_text(args.certificate), source=args.certificate)
    packing = Packing(spec, tuple(trees))
    res = validate_packing(digraph, packing)
    lines = [
        "command: verify",
        f"graph: {args.graph}",
        f"certificate: {args.certificate}",
        f"seed: {args.seed}",
        f"trees: {len(trees)}",
        f"valid: {str(bool(res)).lower()}",
    ]
    if not res:
        lines.append(f"reason: {res.reason}")
        if res.detail:
            lines.append(f"detail: {' '.join(str(x) for x in res.detail)}")
    _emit(lines)
    return 0 if res else 1


def cmd_oracle(args) -> int:
    lines = [f"command: oracle {args.which}", f"seed: {args.seed}"]
    if args.which == "2linkage":
        digraph = _load_digraph(args.graph)
        ids = _parse_id_list(args.terminals, "--terminals")
        if len(ids) != 4:
            raise _UsageError("--terminals must be s1,t1,s2,t2")
        result = directed_two_linkage(digraph, *ids)
        lines.append(f"feasible: {str(result is not None).lower()}")
        if result is not None:
            for i, path in enumerate(result, start=1):
                lines.append(f"path{i}: " + " ".join(str(v) for v in path))
        else:
            lines.append("infeasible")
    elif args.which == "2color":
        h = parse_hypergraph(_read_text(args.hypergraph), source=args.hypergraph)
        coloring = hypergraph_two_coloring(h)
        lines.append(f"feasible: {str(coloring is not None).lower()}")
        if coloring is not None:
            lines.append("colors: " + " ".join(str(c) for c in coloring))
        else:
            lines.append("infeasible")
    elif args.which == "cllm":
        g = parse_tripartite(_read_text(args.tripartite), source=args.tripartite)
        triples = cllm_solve(g)
        lines.append(f"feasible: {str(triples is not None).lower()}")
        if triples is not None:
            for a, b, c in triples:
                lines.append(f"triple: {a} {b} {c}")
        else:
            lines.append("infeasible")
    else:  # kappa
        digraph = _load_digraph(args.graph)
        lines.append(f"kappa: {vertex_connectivity(digraph)}")
    _emit(lines)
    return 0


def cmd_decide(args) -> int:
    digraph = _load_digraph(args.graph)
    _guardrail(digraph.n, args.force)
    spec = _spec_from_arg(args.terminals)
    found, packing = decide_tau_symmetric(digraph, spec, args.ell)
    lines = [
        "command: decide-symmetric",
        f"graph: {args.graph}",
        f"seed: {args.seed}",
        f"terminals: {_spec_text(spec)}",
        f"ell: {args.ell}",
        f"decision: {str(found).lower()}",
    ]
    if packing is not None:
        lines.extend(_cert_block(spec, packing.trees))
    _emit(lines)
    return 0


def cmd_gen(args) -> int:
    digraph = generate(args.family, args.n, p=args.p, seed=args.seed)
    text = write_digraph(digraph)
    if args.out:
        Path(args.out).write_text(text)
        _emit(
            [
                "command: gen",
                f"family: {args.family}",
                f"n: {args.n}",
                f"seed: {args.seed}",
                f"arcs: {digraph.m}",
                f"out: {args.out}",
            ]
        )
    else:
        sys.stdout.write(text)
    return 0


def _add_common(parser, force: bool = False, threads: bool = False) -> None:
    parser.add_argument("--seed", type=int, default=0, help="seed recorded in the report")
    parser.add_argument("--machine", action="store_true", help="stable key-value output")
    if force:
        parser.add_argument(
            "--force", action="store_true", help=f"run even above n={GUARDRAIL_N}"
        )
    if threads:
        parser.add_argument(
            "--threads",
            type=int,
            default=int(os.environ.get("PENDANTPACK_THREADS", "1")),
            help="parallel sub-solves (default $PENDANTPACK_THREADS or 1)",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pendantpack",
        description="exact pendant Steiner tree packing in digraphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="exact packing number for one terminal spec")
    p.add_argument("--graph", required=True)
    p.add_argument("--terminals", required=True, help="root,v1,v2,... (root first)")
    p.add_argument("--target", type=int, default=None, help="stop once this many trees are packed")
    _add_common(p, force=True)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("tau-k", help="minimum packing number over all k-specs")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    _add_common(p, force=True, threads=True)
    p.set_defaults(func=cmd_tau_k)

    p = sub.add_parser("bounds", help="closed-form bounds report")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--per-spec", action="store_true", dest="per_spec")
    _add_common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("ng-check", help="Nordhaus-Gaddum audit of D and its complement")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    _add_common(p, force=True, threads=True)
    p.set_defaults(func=cmd_ng_check)

    p = sub.add_parser("gadget", help="emit a hardness-reduction instance")
    gsub = p.add_subparsers(dest="which", required=True)
    for which in ("eulerian", "cllm", "hypergraph", "amplifier"):
        gp = gsub.add_parser(which)
        gp.add_argument("--out", required=True)
        gp.add_argument("--provenance", default=None)
        if which in ("eulerian", "amplifier"):
            gp.add_argument("--graph", required=True)
            gp.add_argument("--terminals", required=True)
        if which == "eulerian":
            gp.add_argument("--k", type=int, required=True)
            gp.add_argument("--ell", type=int, required=True)
        if which == "cllm":
            gp.add_argument("--tripartite", required=True)
            gp.add_argument("--k", type=int, required=True)
        if which == "hypergraph":
            gp.add_argument("--hypergraph", required=True)
            gp.add_argument("--ell", type=int, required=True)
        if which == "amplifier":
            gp.add_argument("--n-param", type=int, required=True, dest="n_param")
        _add_common(gp)
        gp.set_defaults(func=cmd_gadget)

    p = sub.add_parser("verify", help="re-validate a packing certificate")
    p.add_argument("--graph", required=True)
    p.add_argument("--certificate", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="run one of the independent oracles")
    osub = p.add_subparsers(dest="which", required=True)
    for which in ("2linkage", "2color", "cllm", "kappa"):
        op = osub.add_parser(which)
        if which in ("2linkage", "kappa"):
            op.add_argument("--graph", required=True)
        if which == "2linkage":
            op.add_argument("--terminals", required=True, help="s1,t1,s2,t2")
        if which == "2color":
            op.add_argument("--hypergraph", required=True)
        if which == "cllm":
            op.add_argument("--tripartite", required=True)
        _add_common(op)
        op.set_defaults(func=cmd_oracle)

    p = sub.add_parser("decide-symmetric", help="skeleton-tuple threshold decision")
    p.add_argument("--graph", required=True)
    p.add_argument("--terminals", required=True, help="root,v1,v2,...")
    p.add_argument("--ell", type=int, required=True)
    _add_common(p, force=True)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("gen", help="generate an instance from a named family")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--out", default=None)
    _add_common(p)
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (_UsageError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
