import random

import pytest

from pendantpack import (
    PendantTree,
    bidirected_complete,
    build_hypergraph,
    build_tripartite,
    gadget_hypergraph,
    generate,
    make_spec,
    solve_tau_sr,
)
from pendantpack.formats import (
    ParseError,
    parse_certificate,
    parse_digraph,
    parse_hypergraph,
    parse_provenance,
    parse_tripartite,
    write_certificate,
    write_digraph,
    write_hypergraph,
    write_provenance,
    write_tripartite,
)


def test_digraph_roundtrip_simple():
    d = bidirected_complete(4)
    assert parse_digraph(write_digraph(d)) == d


def test_digraph_roundtrip_random():
    for seed in range(20):
        d = generate("random-digraph", random.Random(seed).randint(1, 8), p=0.4, seed=seed)
        assert parse_digraph(write_digraph(d)) == d


def test_digraph_write_deterministic():
    d = generate("random-digraph", 6, p=0.5, seed=9)
    assert write_digraph(d) == write_digraph(parse_digraph(write_digraph(d)))


def test_digraph_comments_allowed():
    text = "# a comment\np 3 1\n# between\na 0 1\n"
    d = parse_digraph(text)
    assert d.n == 3 and d.m == 1


def test_digraph_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError, match=r"<input>:1"):
        parse_digraph("a 0 1\n")
    with pytest.raises(ParseError, match=r"f:2.*loop"):
        parse_digraph("p 3 1\na 1 1\n", source="f")
    with pytest.raises(ParseError, match=r"f:3.*duplicate"):
        parse_digraph("p 3 2\na 0 1\na 0 1\n", source="f")
    with pytest.raises(ParseError, match=r"f:2.*out of range"):
        parse_digraph("p 3 1\na 0 3\n", source="f")
    with pytest.raises(ParseError, match="expected 2 arcs"):
        parse_digraph("p 3 2\na 0 1\n", source="f")
    with pytest.raises(ParseError, match=r"f:3.*more than"):
        parse_digraph("p 3 1\na 0 1\na 1 2\n", source="f")
    with pytest.raises(ParseError, match=r"f:2.*blank"):
        parse_digraph("p 3 1\n\na 0 1\n", source="f")


def test_hypergraph_roundtrip():
    h = build_hypergraph(5, [{0, 1}, {1, 2, 3}, {0, 4}])
    assert parse_hypergraph(write_hypergraph(h)) == h
    with pytest.raises(ParseError, match="repeated vertex"):
        parse_hypergraph("h 3 1\ne 0 0\n")
    with pytest.raises(ParseError, match=r"out of range"):
        parse_hypergraph("h 3 1\ne 0 5\n")


def test_tripartite_roundtrip():
    g = build_tripartite([0, 1], [2, 3], [4, 5], [(0, 2), (3, 5), (1, 4)])
    assert parse_tripartite(write_tripartite(g)) == g
    with pytest.raises(ParseError, match="roster"):
        parse_tripartite("t 1 0\nA 0\nB 1\n")
    with pytest.raises(ParseError, match="bad edge"):
        parse_tripartite("t 1 1\nA 0\nB 1\nC 2\ne 0 0\n")
    with pytest.raises(ParseError, match="inside part"):
        parse_tripartite("t 2 1\nA 0 1\nB 2 3\nC 4 5\ne 0 1\n")


def test_tripartite_rejects_cross_part_violations():
    with pytest.raises(ParseError):
        parse_tripartite("t 2 1\nA 0 1\nB 2 3\nC 4 5\ne 0 1\n")


def test_certificate_roundtrip():
    k5 = bidirected_complete(5)
    spec = make_spec(0, [1, 2])
    res = solve_tau_sr(k5, spec)
    text = write_certificate(spec, res.certificate.trees)
    parsed_spec, parsed_trees = parse_certificate(text)
    assert parsed_spec == spec
    assert [t.arcs for t in parsed_trees] == [t.arcs for t in res.certificate.trees]
    assert write_certificate(parsed_spec, parsed_trees) == text


def test_certificate_parse_errors():
    with pytest.raises(ParseError, match="terminal line"):
        parse_certificate("tree\nend\n")
    with pytest.raises(ParseError, match="unterminated"):
        parse_certificate("s 0 1\ntree\na 0 1\n")
    with pytest.raises(ParseError, match="outside a tree block"):
        parse_certificate("s 0 1\na 0 1\n")
    with pytest.raises(ParseError, match="nested"):
        parse_certificate("s 0 1\ntree\ntree\n")


def test_certificate_trees_parse_as_given():
    text = "s 0 1 2\ntree\na 0 3\na 3 1\na 3 2\nend\n"
    spec, trees = parse_certificate(text)
    assert spec.root == 0 and spec.terminals == frozenset({0, 1, 2})
    assert trees == [PendantTree(0, frozenset({(0, 3), (3, 1), (3, 2)}))]


def test_provenance_roundtrip():
    h = build_hypergraph(2, [{0, 1}])
    inst = gadget_hypergraph(h, 2)
    text = write_provenance(inst.provenance, inst.spec)
    names, spec = parse_provenance(text)
    assert names == inst.provenance.names
    assert spec == inst.spec
    assert write_provenance(inst.provenance, inst.spec) == text
