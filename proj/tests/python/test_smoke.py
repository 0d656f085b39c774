import json
import math

import pytest

import critgraph as cg


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return cg.Graph(10, outer + spokes + inner)


def test_params_and_threshold():
    p = cg.derive_params(1, 7)
    assert (p["s"], p["m"], p["n"], p["l"]) == (4, 32, 25, 10)
    assert p["C"] == pytest.approx(12.0)
    assert p["p"] == pytest.approx(cg.shamir_p(24, 4, 12.0))
    assert cg.shamir_p(12, 3, 2.0) == pytest.approx(2 * math.log(12) / 144)
    with pytest.raises(ValueError):
        cg.derive_params(0, 5)


def test_two_section_and_complement():
    h = cg.Hypergraph(4, [[0, 1, 2]])
    g = cg.two_section(h)
    assert sorted(g.edges) == [(0, 1), (0, 2), (1, 2)]
    assert sorted(cg.complement(g).edges) == [(0, 3), (1, 3), (2, 3)]


def test_matching_and_deletions():
    h = cg.Hypergraph(6, [[0, 1, 2], [3, 4, 5], [0, 3, 4]])
    assert cg.find_perfect_matching(h) == [[0, 1, 2], [3, 4, 5]]
    assert cg.find_perfect_matching(cg.Hypergraph(6, [[0, 1, 2], [0, 3, 4]])) is None
    k5 = cg.Hypergraph(7, [[a, b, c] for a in range(7) for b in range(a + 1, 7) for c in range(b + 1, 7)])
    assert cg.all_deletions_matchable(k5, 3)


def test_sparsity_agrees_with_brute_force():
    h = cg.Hypergraph(5, [[0, 1, 2], [0, 1, 3], [0, 2, 3]])
    fast = cg.check_sparsity(h, 4, 3)
    slow = cg.brute_force_sparsity(h, 4, 3)
    assert fast["holds"] is False and slow["holds"] is False
    assert fast["violator"] == [0, 1, 2] and fast["span"] == 4
    assert cg.check_sparsity(h, 2, 3)["holds"]


def test_exact_parameters():
    g = petersen()
    assert cg.exact_independence(g) == 4
    assert cg.exact_chromatic(g) == 3
    count, witness = cg.min_subset_edges(g, 4)
    assert count == 0 and len(witness) == 4


def test_sampler_is_deterministic():
    a = cg.sample_hypergraph(12, 3, 0.1, 5)
    b = cg.sample_hypergraph(12, 3, 0.1, 5)
    assert a == b and a.uniformity() in (3, None)


def test_sweep_rows():
    rows = cg.pm_threshold_sweep(3, [6], [0.0, 1.0], 10, 1)
    assert [r["fraction"] for r in rows] == [0.0, 1.0]
    with pytest.raises(ValueError):
        cg.pm_threshold_sweep(3, [7], [0.5], 1, 1)


def test_construct_and_check_certificate():
    ok, text = cg.construct(1, 2, 11, restarts=5)
    assert ok is False
    doc = json.loads(text)
    assert doc["params"]["n"] == 5
    valid, reasons = cg.check_certificate(text)
    assert valid, reasons
    doc["params"]["n"] = 6
    valid, reasons = cg.check_certificate(json.dumps(doc))
    assert not valid


def test_lemma_helpers():
    cut = cg.find_small_cut(cg.Hypergraph(4, [[0, 1], [1, 2], [2, 3]]))
    assert cut == ([1], [0], [2, 3])
    report = cg.run_suite("blocks")
    assert report["counterexamples"] == []
    with pytest.raises(cg.CapExceeded):
        cg.run_suite("obs1", cap=1000)


def test_dot_output():
    assert cg.Graph(2, [(0, 1)]).to_dot().startswith("graph G {")
