"""Smoke tests for the python bindings."""

import math

import _qclique as qc


def test_factorization_covers_complete_graph():
    classes = qc.one_factorization(6)
    assert len(classes) == 5
    seen = set()
    for cls in classes:
        assert len(cls) == 3
        nodes = [v for e in cls for v in e]
        assert len(set(nodes)) == 6
        seen.update(tuple(sorted(e)) for e in cls)
    assert len(seen) == 15


def test_graph_and_cliques():
    g = qc.Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    assert g.node_count == 4
    assert g.has_edge(2, 0)
    assert qc.list_k_cliques(g, 3) == [[0, 1, 2]]
    assert qc.list_k_cliques(qc.Graph.complete(4), 3) == [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]


def test_apex_augmentation_matches_qubit_table():
    for n, k, qubits in [(6, 3, 22), (6, 4, 20), (7, 5, 20), (8, 6, 20)]:
        q = qc.apex_count_for(k)
        assert 2 * (n + q) + 2 == qubits


def test_alpha_overlap_triangle_table():
    empty = qc.Graph(3, [])
    full = qc.Graph(3, [(0, 1), (0, 2), (1, 2)])
    path = qc.Graph(3, [(0, 1), (1, 2)])
    assert math.isclose(qc.alpha_overlap(empty, [0, 1, 2]), 1.0, abs_tol=1e-10)
    assert math.isclose(qc.alpha_overlap(full, [0, 1, 2]), -1.0, abs_tol=1e-10)
    assert abs(qc.alpha_overlap(path, [0, 1, 2])) < 1e-10


def test_edge_detector_answers_queries():
    g = qc.Graph(4, [(0, 1), (2, 3)])
    det = qc.build_edge_detector(g)
    amps = qc.run_on_basis(det, (1 << 0) | (1 << 1))
    out_bit = 1 << 6  # idx(4) + anc(2), out is qubit 6
    assert abs(amps[(1 << 0) | (1 << 1) | out_bit] - 1.0) < 1e-12
    amps_no = qc.run_on_basis(det, (1 << 0) | (1 << 2))
    assert abs(amps_no[(1 << 0) | (1 << 2)] - 1.0) < 1e-12


def test_dicke_prep_amplitudes():
    prep = qc.build_dicke_prep(4, 2)
    amps = qc.run_on_basis(prep, 0)
    want = 1.0 / math.sqrt(6.0)
    for i, a in enumerate(amps):
        if bin(i).count("1") == 2:
            assert math.isclose(a.real, want, abs_tol=1e-10)
            assert abs(a.imag) < 1e-12
        else:
            assert abs(a) < 1e-12


def test_amplification_with_exact_oracle():
    g = qc.Graph(6, [(0, 1), (0, 2), (1, 2)])
    ag = qc.augment_apex(g, 3)
    prep = qc.build_search_prep(6, 3)
    oracle = qc.build_exact_marking_oracle(ag, 3)
    t = qc.optimal_iterations(20, 1)
    assert t == 3
    hist = qc.run_aa(prep, oracle, t, 2000, 11)
    target = sum(1 << v for v in [0, 1, 2, 6, 7, 8, 9])
    assert hist["counts"][target] > 1900


def test_benchmark_roundtrip():
    result = qc.run_benchmark(density=1.0, total_nodes=10, n=4, k=3, instances=2, shots=200, seed=3)
    assert result["qubits"] == 18
    assert result["with_clique"] == 2
    assert result["successes"] == 2
    assert all(rec["gamma_iterations"] == 1 for rec in result["records"])


def test_gamma_flips_complete_query():
    ag = qc.augment_apex(qc.Graph.complete(4), 2)
    gamma = qc.build_gamma(ag)
    assert gamma.qubit_count == 2 * (4 + 1) + 2
    idx_value = sum(1 << v for v in [0, 1, 4])  # an edge plus the apex node
    amps = qc.run_on_basis(gamma, idx_value)
    assert abs(amps[idx_value] + 1.0) < 1e-10
