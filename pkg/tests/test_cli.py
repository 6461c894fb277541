import subprocess
import sys

import pytest

from pendantpack import bidirected_complete, generate
from pendantpack.cli import main
from pendantpack.formats import write_digraph


@pytest.fixture
def k5_file(tmp_path):
    path = tmp_path / "k5.dg"
    path.write_text(write_digraph(bidirected_complete(5)))
    return str(path)


def run_cli(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def get_value(stdout, key):
    for line in stdout.splitlines():
        if line.startswith(key + ":"):
            return line.split(":", 1)[1].strip()
    raise KeyError(key)


def extract_certificate(stdout):
    lines = stdout.splitlines()
    start = lines.index("certificate-begin") + 1
    end = lines.index("certificate-end")
    return "\n".join(lines[start:end]) + "\n"


def test_solve_reports_value_and_certificate(capsys, tmp_path, k5_file):
    code, out, _ = run_cli(
        capsys, ["solve", "--graph", k5_file, "--terminals", "0,1,2", "--machine"]
    )
    assert code == 0
    assert get_value(out, "value") == "2"
    assert get_value(out, "exact") == "true"
    cert = tmp_path / "cert.txt"
    cert.write_text(extract_certificate(out))
    code, out, _ = run_cli(
        capsys, ["verify", "--graph", k5_file, "--certificate", str(cert), "--machine"]
    )
    assert code == 0
    assert get_value(out, "valid") == "true"


def test_tau_k_report(capsys, k5_file):
    code, out, _ = run_cli(capsys, ["tau-k", "--graph", k5_file, "--k", "3", "--machine"])
    assert code == 0
    assert get_value(out, "value") == "2"


def test_verify_rejects_arc_sharing_trees(capsys, tmp_path, k5_file):
    cert = tmp_path / "bad.txt"
    cert.write_text(
        "s 0 1 2\n"
        "tree\na 0 3\na 3 1\na 3 2\nend\n"
        "tree\na 0 3\na 3 1\na 3 2\nend\n"
    )
    code, out, _ = run_cli(
        capsys, ["verify", "--graph", k5_file, "--certificate", str(cert), "--machine"]
    )
    assert code == 1
    assert get_value(out, "valid") == "false"
    assert get_value(out, "reason") in ("shared-arc", "shared-internal-vertex")


def test_oracle_two_linkage_infeasible(capsys, tmp_path):
    path = tmp_path / "neg.dg"
    path.write_text("p 4 4\na 0 1\na 1 2\na 2 3\na 3 0\n")
    code, out, _ = run_cli(
        capsys,
        ["oracle", "2linkage", "--graph", str(path), "--terminals", "0,2,1,3", "--machine"],
    )
    assert code == 0
    assert get_value(out, "feasible") == "false"
    assert "infeasible" in out


def test_oracle_kappa(capsys, k5_file):
    code, out, _ = run_cli(capsys, ["oracle", "kappa", "--graph", k5_file, "--machine"])
    assert code == 0
    assert get_value(out, "kappa") == "4"


def test_oracle_2color_and_cllm(capsys, tmp_path):
    h = tmp_path / "h.hg"
    h.write_text("h 3 3\ne 0 1\ne 0 2\ne 1 2\n")
    code, out, _ = run_cli(capsys, ["oracle", "2color", "--hypergraph", str(h), "--machine"])
    assert code == 0 and get_value(out, "feasible") == "false"
    t = tmp_path / "t.tp"
    t.write_text("t 1 3\nA 0\nB 1\nC 2\ne 0 1\ne 0 2\ne 1 2\n")
    code, out, _ = run_cli(capsys, ["oracle", "cllm", "--tripartite", str(t), "--machine"])
    assert code == 0 and get_value(out, "feasible") == "true"


def test_gen_same_seed_byte_identical(capsys):
    code1, out1, _ = run_cli(
        capsys, ["gen", "--family", "random-digraph", "--n", "6", "--p", "0.5", "--seed", "11"]
    )
    code2, out2, _ = run_cli(
        capsys, ["gen", "--family", "random-digraph", "--n", "6", "--p", "0.5", "--seed", "11"]
    )
    assert code1 == code2 == 0
    assert out1 == out2
    code3, out3, _ = run_cli(
        capsys, ["gen", "--family", "random-digraph", "--n", "6", "--p", "0.5", "--seed", "12"]
    )
    assert code3 == 0 and out3 != out1


def test_gen_writes_parseable_file(capsys, tmp_path):
    out_path = tmp_path / "g.dg"
    code, out, _ = run_cli(
        capsys,
        ["gen", "--family", "random-eulerian", "--n", "6", "--seed", "5", "--out", str(out_path), "--machine"],
    )
    assert code == 0
    from pendantpack.formats import parse_digraph

    d = parse_digraph(out_path.read_text(), source=str(out_path))
    assert d == generate("random-eulerian", 6, seed=5)


def test_gadget_emits_files_and_provenance(capsys, tmp_path):
    src = tmp_path / "src.dg"
    src.write_text("p 4 4\na 0 1\na 1 2\na 2 3\na 3 0\n")
    out_path = tmp_path / "gadget.dg"
    code, out, _ = run_cli(
        capsys,
        [
            "gadget", "eulerian", "--graph", str(src), "--terminals", "0,1,2,3",
            "--k", "3", "--ell", "2", "--out", str(out_path), "--machine",
        ],
    )
    assert code == 0
    assert get_value(out, "eulerian") == "true"
    from pendantpack.formats import parse_digraph, parse_provenance

    d = parse_digraph(out_path.read_text())
    names, spec = parse_provenance((tmp_path / "gadget.dg.prov").read_text())
    assert len(names) == d.n
    assert spec is not None and spec.root == names["r"]


def test_gadget_amplifier_cli(capsys, tmp_path):
    src = tmp_path / "h.dg"
    src.write_text("p 4 4\na 0 1\na 1 2\na 2 3\na 3 0\n")
    out_path = tmp_path / "amp.dg"
    code, out, _ = run_cli(
        capsys,
        [
            "gadget", "amplifier", "--graph", str(src), "--terminals", "0,1,2,3",
            "--n-param", "2", "--out", str(out_path), "--machine",
        ],
    )
    assert code == 0
    assert get_value(out, "copies") == "1"


def test_decide_symmetric_cli(capsys, k5_file):
    code, out, _ = run_cli(
        capsys,
        ["decide-symmetric", "--graph", k5_file, "--terminals", "0,1,2", "--ell", "2", "--machine"],
    )
    assert code == 0
    assert get_value(out, "decision") == "true"


def test_bounds_and_ng_check(capsys, k5_file):
    code, out, _ = run_cli(capsys, ["bounds", "--graph", k5_file, "--k", "3", "--machine"])
    assert code == 0
    assert get_value(out, "order-bound") == "2"
    code, out, _ = run_cli(capsys, ["ng-check", "--graph", k5_file, "--k", "3", "--machine"])
    assert code == 0
    assert get_value(out, "sum-attains-upper") == "true"
    assert get_value(out, "violations") == "0"


def test_parse_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.dg"
    bad.write_text("p 3 1\na 1 1\n")
    code, _, err = run_cli(capsys, ["solve", "--graph", str(bad), "--terminals", "0,1"])
    assert code == 2
    assert "loop" in err and str(bad) in err


def test_guardrail_requires_force(capsys, tmp_path):
    big = tmp_path / "big.dg"
    big.write_text(write_digraph(bidirected_complete(13)))
    code, _, err = run_cli(capsys, ["solve", "--graph", str(big), "--terminals", "0,1,2"])
    assert code == 2
    assert "--force" in err


def test_machine_output_byte_identical_across_runs(capsys, k5_file):
    argv = ["tau-k", "--graph", k5_file, "--k", "3", "--machine", "--seed", "7"]
    _, out1, _ = run_cli(capsys, argv)
    _, out2, _ = run_cli(capsys, argv)
    assert out1 == out2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "pendantpack.cli", "gen", "--family",
         "bidirected-complete", "--n", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("p 3 6")
