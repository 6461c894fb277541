import random

import pytest

from oracle_helpers import brute_max_packing
from pendantpack import (
    Digraph,
    GraphError,
    bidirected_complete,
    build_digraph,
    decide_tau_symmetric,
    generate,
    is_connected,
    make_spec,
    packing_upper_bound,
    solve_tau_k,
    solve_tau_sr,
    validate_packing,
    vertex_connectivity,
)


def test_k5_any_spec_is_two():
    k5 = bidirected_complete(5)
    for root in range(3):
        spec = make_spec(root, [v for v in (0, 1, 2) if v != root])
        res = solve_tau_sr(k5, spec)
        assert res.value == 2 and res.exact
        assert validate_packing(k5, res.certificate)


def test_cycle_has_no_packing():
    c4 = build_digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    res = solve_tau_sr(c4, make_spec(0, [1, 2]))
    assert res.value == 0


def test_k5_minus_root_arc_drops_to_one():
    k5 = bidirected_complete(5)
    spec = make_spec(0, [1, 2])
    pruned = Digraph(5, k5.arcs - {(0, 4)})  # remove r -> v with v outside S
    res = solve_tau_sr(pruned, spec)
    assert res.value == 1
    assert packing_upper_bound(pruned, spec) == 1


def test_certificates_always_revalidate():
    rng = random.Random(61)
    for trial in range(30):
        n = rng.randint(3, 6)
        d = generate("random-digraph", n, p=rng.uniform(0.3, 0.8), seed=6100 + trial)
        members = rng.sample(range(n), rng.randint(2, 3))
        spec = make_spec(members[0], members[1:])
        res = solve_tau_sr(d, spec)
        assert validate_packing(d, res.certificate)
        assert res.certificate.size() == res.value
        assert res.value <= res.stats.upper_bound


def test_matches_bruteforce_max_packing():
    rng = random.Random(67)
    for trial in range(35):
        n = rng.randint(3, 5)
        d = generate("random-digraph", n, p=rng.uniform(0.3, 0.9), seed=6700 + trial)
        members = rng.sample(range(n), rng.randint(2, 3))
        spec = make_spec(members[0], members[1:])
        assert solve_tau_sr(d, spec).value == brute_max_packing(d, spec)


def test_target_mode_flags_early_exit():
    k6 = bidirected_complete(6)
    spec = make_spec(0, [1, 2])
    res = solve_tau_sr(k6, spec, target=2)
    assert res.value == 2 and not res.exact
    res_full = solve_tau_sr(k6, spec)
    assert res_full.value == 3 and res_full.exact
    # unreachable target still yields the exact optimum
    res_high = solve_tau_sr(k6, spec, target=99)
    assert res_high.value == 3 and res_high.exact


def test_tau2_equals_menger_per_pair_and_kappa():
    rng = random.Random(71)
    for trial in range(20):
        n = rng.randint(2, 6)
        d = generate("random-digraph", n, p=rng.uniform(0.2, 0.8), seed=7100 + trial)
        values = []
        for u in range(n):
            for v in range(n):
                if u != v:
                    values.append(solve_tau_sr(d, make_spec(u, [v])).value)
        assert min(values) == vertex_connectivity(d)


def test_monotone_under_arc_insertion():
    rng = random.Random(73)
    for trial in range(10):
        n = rng.randint(4, 6)
        d = generate("random-digraph", n, p=0.4, seed=7300 + trial)
        missing = sorted(bidirected_complete(n).arcs - d.arcs)
        if not missing:
            continue
        extra = rng.choice(missing)
        bigger = Digraph(n, d.arcs | {extra})
        for k in (3, 4):
            if k <= n:
                assert solve_tau_k(d, k).value <= solve_tau_k(bigger, k).value


def test_tau_k_complete_families():
    for n in range(3, 7):
        kn = bidirected_complete(n)
        for k in range(3, n + 1):
            assert solve_tau_k(kn, k).value == n - k


def test_tau_k_star_is_zero():
    star = generate("star-orientation", 6)
    res = solve_tau_k(star, 3)
    assert res.value == 0


def test_tau_k_zero_when_semidegree_one():
    # delta0 = 1 forces tau_3 = 0
    d = build_digraph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert solve_tau_k(d, 3).value == 0


def test_tau_k_witness_attains_value():
    rng = random.Random(79)
    for trial in range(10):
        d = generate("random-digraph", 6, p=0.6, seed=7900 + trial)
        res = solve_tau_k(d, 3)
        assert solve_tau_sr(d, res.witness_spec).value == res.value


def test_tau_k_per_spec_and_threads_agree():
    d = generate("random-digraph", 5, p=0.6, seed=42)
    seq = solve_tau_k(d, 3, keep_per_spec=True)
    par = solve_tau_k(d, 3, threads=2, keep_per_spec=True)
    assert seq.value == par.value
    assert seq.witness_spec == par.witness_spec
    assert seq.per_spec == par.per_spec
    assert min(seq.per_spec.values()) == seq.value


def test_tau_k_validates_k():
    with pytest.raises(GraphError):
        solve_tau_k(bidirected_complete(4), 1)
    with pytest.raises(GraphError):
        solve_tau_k(bidirected_complete(4), 5)


def test_decide_symmetric_k5_true_with_certificate():
    k5 = bidirected_complete(5)
    spec = make_spec(0, [1, 2])
    ok, packing = decide_tau_symmetric(k5, spec, 2)
    assert ok
    assert validate_packing(k5, packing)
    assert packing.size() == 2


def test_decide_symmetric_k4_false():
    k4 = bidirected_complete(4)
    ok, packing = decide_tau_symmetric(k4, make_spec(0, [1, 2]), 2)
    assert not ok and packing is None


def test_decide_symmetric_requires_symmetry():
    c3 = build_digraph(3, [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(GraphError):
        decide_tau_symmetric(c3, make_spec(0, [1]), 1)


def test_decide_symmetric_k2_with_direct_arc():
    # the direct arc plus realized detours: tau_2 of bidirected K_4 is 3
    k4 = bidirected_complete(4)
    spec = make_spec(0, [1])
    for ell in (1, 2, 3):
        ok, packing = decide_tau_symmetric(k4, spec, ell)
        assert ok and packing.size() == ell
        assert validate_packing(k4, packing)
    ok, _ = decide_tau_symmetric(k4, spec, 4)
    assert not ok


def test_decide_symmetric_agrees_with_solver():
    rng = random.Random(83)
    checked = 0
    for trial in range(200):
        n = rng.randint(4, 7)
        d = generate("random-symmetric", n, p=rng.uniform(0.4, 0.9), seed=8300 + trial)
        if not is_connected(d):
            continue
        for k in (3, 4):
            if k > n:
                continue
            members = rng.sample(range(n), k)
            spec = make_spec(members[0], members[1:])
            exact = solve_tau_sr(d, spec).value
            for ell in (1, 2, 3):
                ok, packing = decide_tau_symmetric(d, spec, ell)
                assert ok == (exact >= ell), (d, spec, ell, exact)
                if ok:
                    assert validate_packing(d, packing)
                    assert packing.size() == ell
            checked += 1
        if checked >= 40:
            break
    assert checked >= 40
