"""Line-oriented text formats: digraph, hypergraph, tripartite, certificate, provenance.

Writers are deterministic (sorted arc listings), so parse(write(x)) == x
and identical inputs give byte-identical files.  Parsers reject
violations with the offending line number.
"""

from __future__ import annotations

from .digraph import Digraph
from .gadgets import Provenance
from .oracles import Hypergraph, TripartiteInstance, build_tripartite
from .trees import PendantTree, TerminalSpec


class ParseError(ValueError):
    def __init__(self, source: str, lineno: int, message: str):
        self.source = source
        self.lineno = lineno
        super().__init__(f"{source}:{lineno}: {message}")


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if raw.startswith("#"):
            continue
        yield lineno, raw.split(), raw


def _int_fields(source, lineno, fields, expected, what):
    if len(fields) != expected:
        raise ParseError(source, lineno, f"expected {what}")
    try:
        return [int(f) for f in fields[1:]]
    except ValueError:
        raise ParseError(source, lineno, f"expected {what}") from None


def parse_digraph(text: str, source: str = "<input>") -> Digraph:
    """Parse `p <n> <m>` followed by exactly m `a <u> <v>` lines."""
    n = m = None
    arcs: set[tuple[int, int]] = set()
    for lineno, fields, raw in _data_lines(text):
        if not fields:
            raise ParseError(source, lineno, "blank line")
        if n is None:
            if fields[0] != "p":
                raise ParseError(source, lineno, f"expected header 'p <n> <m>', got {raw!r}")
            n, m = _int_fields(source, lineno, fields, 3, "header 'p <n> <m>'")
            if n < 0 or m < 0:
                raise ParseError(source, lineno, "negative count in header")
            continue
        if fields[0] != "a":
            raise ParseError(source, lineno, f"expected arc line 'a <u> <v>', got {raw!r}")
        u, v = _int_fields(source, lineno, fields, 3, "arc line 'a <u> <v>'")
        if len(arcs) == m:
            raise ParseError(source, lineno, f"more than {m} arc lines")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(source, lineno, f"arc ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ParseError(source, lineno, f"loop ({u}, {u})")
        if (u, v) in arcs:
            raise ParseError(source, lineno, f"duplicate arc ({u}, {v})")
        arcs.add((u, v))
    if n is None:
        raise ParseError(source, 1, "missing header 'p <n> <m>'")
    if len(arcs) != m:
        raise ParseError(source, 1 + text.count("\n"), f"expected {m} arcs, found {len(arcs)}")
    return Digraph(n, frozenset(arcs))


def write_digraph(digraph: Digraph) -> str:
    lines = [f"p {digraph.n} {digraph.m}"]
    lines.extend(f"a {u} {v}" for u, v in digraph.sorted_arcs())
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str, source: str = "<input>") -> Hypergraph:
    """Parse `h <n> <m>` followed by m `e <v1> <v2> ...` lines."""
    n = m = None
    edges: list[frozenset[int]] = []
    for lineno, fields, raw in _data_lines(text):
        if not fields:
            raise ParseError(source, lineno, "blank line")
        if n is None:
            if fields[0] != "h":
                raise ParseError(source, lineno, f"expected header 'h <n> <m>', got {raw!r}")
            n, m = _int_fields(source, lineno, fields, 3, "header 'h <n> <m>'")
            continue
        if fields[0] != "e" or len(fields) < 2:
            raise ParseError(source, lineno, f"expected edge line 'e <v1> ...', got {raw!r}")
        try:
            members = [int(f) for f in fields[1:]]
        except ValueError:
            raise ParseError(source, lineno, "non-integer vertex id") from None
        if len(edges) == m:
            raise ParseError(source, lineno, f"more than {m} edge lines")
        if len(set(members)) != len(members):
            raise ParseError(source, lineno, "repeated vertex in hyperedge")
        for v in members:
            if not 0 <= v < n:
                raise ParseError(source, lineno, f"vertex {v} out of range for n={n}")
        edges.append(frozenset(members))
    if n is None:
        raise ParseError(source, 1, "missing header 'h <n> <m>'")
    if len(edges) != m:
        raise ParseError(source, 1 + text.count("\n"), f"expected {m} edges, found {len(edges)}")
    return Hypergraph(n, tuple(edges))


def write_hypergraph(h: Hypergraph) -> str:
    lines = [f"h {h.n_vertices} {len(h.edges)}"]
    for e in h.edges:
        lines.append("e " + " ".join(str(v) for v in sorted(e)))
    return "\n".join(lines) + "\n"


def parse_tripartite(text: str, source: str = "<input>") -> TripartiteInstance:
    """Parse `t <q> <m>`, rosters `A/B/C <ids...>`, then m `e <u> <v>` lines."""
    q = m = None
    rosters: dict[str, list[int]] = {}
    expected_roster = iter(("A", "B", "C"))
    next_roster = next(expected_roster)
    edges: list[tuple[int, int]] = []
    header_line = 1
    for lineno, fields, raw in _data_lines(text):
        if not fields:
            raise ParseError(source, lineno, "blank line")
        if q is None:
            if fields[0] != "t":
                raise ParseError(source, lineno, f"expected header 't <q> <m>', got {raw!r}")
            q, m = _int_fields(source, lineno, fields, 3, "header 't <q> <m>'")
            header_line = lineno
            continue
        if next_roster is not None:
            if fields[0] != next_roster:
                raise ParseError(source, lineno, f"expected roster line '{next_roster} <ids...>'")
            try:
                members = [int(f) for f in fields[1:]]
            except ValueError:
                raise ParseError(source, lineno, "non-integer vertex id") from None
            if len(members) != q:
                raise ParseError(source, lineno, f"roster {fields[0]} must list {q} vertices")
            rosters[fields[0]] = members
            next_roster = next(expected_roster, None)
            continue
        if fields[0] != "e":
            raise ParseError(source, lineno, f"expected edge line 'e <u> <v>', got {raw!r}")
        u, v = _int_fields(source, lineno, fields, 3, "edge line 'e <u> <v>'")
        if len(edges) == m:
            raise ParseError(source, lineno, f"more than {m} edge lines")
        edges.append((u, v))
    if q is None:
        raise ParseError(source, 1, "missing header 't <q> <m>'")
    if next_roster is not None:
        raise ParseError(source, 1 + text.count("\n"), f"missing roster line '{next_roster} ...'")
    if len(edges) != m:
        raise ParseError(source, 1 + text.count("\n"), f"expected {m} edges, found {len(edges)}")
    try:
        return build_tripartite(rosters["A"], rosters["B"], rosters["C"], edges)
    except ValueError as exc:
        raise ParseError(source, header_line, str(exc)) from None


def write_tripartite(g: TripartiteInstance) -> str:
    lines = [f"t {g.q} {len(g.edges)}"]
    for label, part in (("A", g.part_a), ("B", g.part_b), ("C", g.part_c)):
        lines.append(label + " " + " ".join(str(v) for v in part))
    lines.extend(f"e {u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def parse_certificate(
    text: str, source: str = "<certificate>"
) -> tuple[TerminalSpec, list[PendantTree]]:
    """Parse `s <r> <v1> ...` followed by `tree` / `a <u> <v>` / `end` blocks."""
    spec: TerminalSpec | None = None
    trees: list[PendantTree] = []
    current: list[tuple[int, int]] | None = None
    for lineno, fields, raw in _data_lines(text):
        if not fields:
            raise ParseError(source, lineno, "blank line")
        if spec is None:
            if fields[0] != "s" or len(fields) < 3:
                raise ParseError(source, lineno, "expected terminal line 's <r> <v1> ...'")
            try:
                ids = [int(f) for f in fields[1:]]
            except ValueError:
                raise ParseError(source, lineno, "non-integer vertex id") from None
            if len(set(ids)) != len(ids):
                raise ParseError(source, lineno, "repeated terminal")
            spec = TerminalSpec(frozenset(ids), ids[0])
            continue
        if fields[0] == "tree":
            if current is not None:
                raise ParseError(source, lineno, "nested 'tree' block")
            current = []
        elif fields[0] == "end":
            if current is None:
                raise ParseError(source, lineno, "'end' outside a tree block")
            trees.append(PendantTree(spec.root, frozenset(current)))
            current = None
        elif fields[0] == "a":
            if current is None:
                raise ParseError(source, lineno, "arc line outside a tree block")
            u, v = _int_fields(source, lineno, fields, 3, "arc line 'a <u> <v>'")
            if u == v:
                raise ParseError(source, lineno, f"loop ({u}, {u})")
            if (u, v) in current:
                raise ParseError(source, lineno, f"duplicate arc ({u}, {v}) in tree")
            current.append((u, v))
        else:
            raise ParseError(source, lineno, f"unexpected line {raw!r}")
    if spec is None:
        raise ParseError(source, 1, "missing terminal line 's <r> <v1> ...'")
    if current is not None:
        raise ParseError(source, 1 + text.count("\n"), "unterminated tree block")
    return spec, trees


def write_certificate(spec: TerminalSpec, trees) -> str:
    lines = ["s " + " ".join(str(v) for v in (spec.root, *spec.others()))]
    for tree in trees:
        lines.append("tree")
        lines.extend(f"a {u} {v}" for u, v in tree.sorted_arcs())
        lines.append("end")
    return "\n".join(lines) + "\n"


def parse_provenance(
    text: str, source: str = "<provenance>"
) -> tuple[dict[str, int], TerminalSpec | None]:
    """Parse `name <paper-name> <id>` lines plus an optional terminal line."""
    names: dict[str, int] = {}
    spec: TerminalSpec | None = None
    for lineno, fields, raw in _data_lines(text):
        if not fields:
            raise ParseError(source, lineno, "blank line")
        if fields[0] == "name":
            if len(fields) != 3:
                raise ParseError(source, lineno, "expected 'name <paper-name> <id>'")
            try:
                vid = int(fields[2])
            except ValueError:
                raise ParseError(source, lineno, "non-integer vertex id") from None
            if fields[1] in names:
                raise ParseError(source, lineno, f"duplicate name {fields[1]!r}")
            names[fields[1]] = vid
        elif fields[0] == "s":
            try:
                ids = [int(f) for f in fields[1:]]
            except ValueError:
                raise ParseError(source, lineno, "non-integer vertex id") from None
            if len(ids) < 2 or len(set(ids)) != len(ids):
                raise ParseError(source, lineno, "bad terminal line")
            spec = TerminalSpec(frozenset(ids), ids[0])
        else:
            raise ParseError(source, lineno, f"unexpected line {raw!r}")
    return names, spec


def write_provenance(provenance: Provenance, spec: TerminalSpec | None = None) -> str:
    lines = [
        f"name {name} {vid}"
        for vid, name in sorted((v, k) for k, v in provenance.names.items())
    ]
    if spec is not None:
        lines.append("s " + " ".join(str(v) for v in (spec.root, *spec.others())))
    return "\n".join(lines) + "\n"
