import math
from itertools import combinations

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from triadminor.embedding import verify_embedding
from triadminor.hardware import (BICLIQUE, CLIQUE, INTER, INTRA, HardwareGraph, check_physical,
                                 chopped_length_bound, decompose_complete, optimal_segment_sizes,
                                 segments_per_chain, triad_chopped, triad_virtual)
from triadminor.ising import Graph


def explicit_triad(n):
    """Virtual TRIAD written out node by node with networkx."""
    G = nx.Graph()
    for i in range(n):
        for k in range(1, n):
            G.add_node((i, k))
        for k in range(1, n - 1):
            G.add_edge((i, k), (i, k + 1), kind=INTRA)
    for i in range(n):
        for j in range(i + 1, n):
            G.add_edge((i, j), (j, i + 1), kind=INTER)
    return G


def lengths(hw):
    xy = np.array(hw.coords)
    e = np.array(hw.graph.edges).reshape(-1, 2)
    return np.linalg.norm(xy[e[:, 0]] - xy[e[:, 1]], axis=1)


def test_triad_virtual_k3_chains_of_two():
    hw, emb = triad_virtual(3)
    assert [len(m) for m in emb.models] == [2, 2, 2]


def test_triad_virtual_k8_shape():
    hw, emb = triad_virtual(8)
    assert [len(m) for m in emb.models] == [7] * 8
    assert hw.num_qubits == 56


def test_triad_virtual_k2():
    hw, _ = triad_virtual(2)
    assert hw.num_qubits == 2
    assert hw.count_kind(INTER) == 1 and hw.count_kind(INTRA) == 0


@pytest.mark.parametrize("n", [2, 3, 5, 8, 13])
def test_triad_virtual_matches_explicit_enumeration(n):
    hw, _ = triad_virtual(n)
    ref = explicit_triad(n)
    label = {(i, k): i * (n - 1) + k - 1 for i, k in ref.nodes}
    ref_edges = {tuple(sorted((label[a], label[b]))): d["kind"] for a, b, d in ref.edges(data=True)}
    assert dict(hw.coupler_kind) == ref_edges
    assert set(hw.graph.edges) == set(ref_edges)


def test_triad_virtual_k8_coupler_counts():
    ref = explicit_triad(8)
    kinds = [d["kind"] for _, _, d in ref.edges(data=True)]
    hw, _ = triad_virtual(8)
    assert hw.count_kind(INTRA) == kinds.count(INTRA) == 48
    assert hw.count_kind(INTER) == kinds.count(INTER) == 28


@pytest.mark.parametrize("n", range(2, 65))
def test_triad_virtual_invariants(n):
    hw, emb = triad_virtual(n)
    assert hw.num_qubits == n * (n - 1)
    assert hw.count_kind(INTRA) == n * (n - 2)
    assert hw.count_kind(INTER) == n * (n - 1) // 2
    assert hw.graph.max_degree() <= 3
    inter_per_qubit = [0] * hw.num_qubits
    for (u, v), kind in hw.coupler_kind.items():
        if kind == INTER:
            inter_per_qubit[u] += 1
            inter_per_qubit[v] += 1
    assert set(inter_per_qubit) == {1}
    assert not verify_embedding(emb)


def test_triad_virtual_rejects_small_n():
    with pytest.raises(ValueError):
        triad_virtual(1)


def test_layout_k2_two_slots():
    hw, _ = triad_virtual(2)
    assert lengths(hw)[0] == pytest.approx(0.25 * math.sqrt(2))


def test_layout_bound_is_independent_of_n():
    base = lengths(triad_virtual(8)[0]).max()
    assert base <= 1.5
    for n in range(3, 65):
        assert lengths(triad_virtual(n)[0]).max() == pytest.approx(base, abs=1e-12)


def test_layout_places_qubits_at_distinct_points():
    hw, _ = triad_virtual(10)
    assert len(set(hw.coords)) == hw.num_qubits


@pytest.mark.parametrize("n, deg, expected", [(8, 6, [3, 4]), (8, 4, [2, 2, 3]), (4, 3, [3]), (2, 3, [1]),
                                              (3, 7, [2])])
def test_optimal_segment_sizes(n, deg, expected):
    assert optimal_segment_sizes(n, deg) == expected


def test_chopped_k8_deg6_matches_chop_example():
    hw, emb = triad_chopped(8, 6)
    assert all(len(m) == 2 for m in emb.models)
    assert [hw.qubit_meta[q].size for q in emb.models[0]] == [3, 4]


def test_chopped_k4_deg3_is_k4_itself():
    hw, emb = triad_chopped(4, 3)
    assert hw.num_qubits == 4
    assert nx.is_isomorphic(nx.Graph(list(hw.graph.edges)), nx.complete_graph(4))
    assert check_physical(hw, 3, chopped_length_bound(3)).degree_ok


def test_chopped_k8_deg4():
    hw, emb = triad_chopped(8, 4)
    assert segments_per_chain(8, 4) == 3
    assert hw.num_qubits == 24
    assert not verify_embedding(emb)


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("deg", [3, 4, 8])
def test_chopped_small_n_clamps_to_one(n, deg):
    hw, emb = triad_chopped(n, deg)
    assert all(len(m) == 1 for m in emb.models)


@pytest.mark.parametrize("n, deg", [(5, 3), (8, 6), (11, 4), (16, 5), (9, 3)])
def test_chopped_equals_quotient_of_virtual(n, deg):
    vhw, _ = triad_virtual(n)
    hw, _ = triad_chopped(n, deg)
    V = nx.Graph(list(vhw.graph.edges))
    block = {}
    for q, meta in enumerate(hw.qubit_meta):
        for k in range(meta.first, meta.last + 1):
            block[meta.chain * (n - 1) + k - 1] = q
    Q = nx.relabel_nodes(nx.quotient_graph(V, lambda a, b: block[a] == block[b]),
                         lambda s: block[next(iter(s))])
    assert {tuple(sorted(e)) for e in Q.edges} == set(hw.graph.edges)


def test_chopped_invariants_over_grid():
    for deg in range(3, 9):
        for n in range(2, 65):
            hw, emb = triad_chopped(n, deg)
            m = max(1, math.ceil((n - 3) / (deg - 2)))
            assert hw.num_qubits == n * m
            assert hw.graph.max_degree() <= deg
            assert hw.num_qubits >= n * (n - 1) / deg
            for qs in hw.chains().values():
                spans = [(hw.qubit_meta[q].first, hw.qubit_meta[q].last) for q in qs]
                assert spans[0][0] == 1 and spans[-1][1] == n - 1
                assert all(b + 1 == c for (_, b), (c, _) in zip(spans, spans[1:]))


def test_uniform_mode_tiles_with_basic_unit():
    # deg = c + 2 and n - 1 a multiple of c gives equal segments
    for n in (5, 9, 13, 17, 33):
        hw, emb = triad_chopped(n, 6, mode="uniform", segment_size=4)
        assert {hw.qubit_meta[q].size for q in hw.graph.vertices} == {4}
        assert hw.graph.max_degree() <= 6
        assert not verify_embedding(emb)


def test_uniform_mode_last_segment_shorter():
    hw, _ = triad_chopped(8, 5, mode="uniform", segment_size=3)
    assert [hw.qubit_meta[q].size for q in hw.chains()[0]] == [3, 3, 1]


def test_uniform_mode_errors():
    with pytest.raises(ValueError):
        triad_chopped(8, 5, mode="uniform", segment_size=4)
    with pytest.raises(ValueError):
        triad_chopped(8, 6, mode="uniform", segment_size=0)
    with pytest.raises(ValueError):
        triad_chopped(8, 6, mode="uniform")
    with pytest.raises(ValueError):
        triad_chopped(8, 2)
    with pytest.raises(ValueError):
        triad_chopped(8, 6, mode="spiral")


def test_check_physical_virtual_degree_three():
    hw, _ = triad_virtual(8)
    r = check_physical(hw, 3, 1.5)
    assert r.degree_ok and r.length_ok and r.max_degree == 3


def test_check_physical_isolated_qubit():
    hw = HardwareGraph(Graph(1), coords=((0, 0),))
    r = check_physical(hw, 0, 0.0)
    assert r.ok and r.max_degree == 0 and not r.violations


def test_check_physical_chopped_16_6():
    hw, _ = triad_chopped(16, 6)
    r = check_physical(hw, 6, 1.5 * 5)
    assert r.degree_ok and r.length_ok
    assert r.max_edge_length == pytest.approx(lengths(hw).max())


def test_check_physical_flags_planted_faults():
    hw, _ = triad_virtual(5)
    edges = hw.graph.edges + ((0, 5), (0, 10))  # qubit 0 now has degree 4
    coords = list(hw.coords)
    coords[19] = (40.0, 40.0)
    bad = HardwareGraph(Graph(hw.num_qubits, edges), tuple(coords))
    r = check_physical(bad, 3, 1.5)
    assert not r.degree_ok and not r.length_ok
    subjects = [s for s, _ in r.violations]
    assert ("qubit", 0) in subjects
    assert any(kind == "coupler" and 19 in e for kind, e in subjects)


def test_check_physical_needs_coords():
    with pytest.raises(ValueError):
        check_physical(HardwareGraph(Graph(2, ((0, 1),))), 3, 1.0)


def test_decompose_k8_c4():
    d = decompose_complete(8, 4)
    assert [(b.kind, b.left, b.right) for b in d.blocks] == [
        (CLIQUE, (0, 1, 2, 3), None),
        (BICLIQUE, (0, 1, 2, 3), (4, 5, 6, 7)),
        (CLIQUE, (4, 5, 6, 7), None),
    ]
    assert [len(s) for s in d.edge_sets()] == [6, 16, 6]


def test_decompose_trivial():
    d = decompose_complete(4, 4)
    assert len(d.blocks) == 1 and d.blocks[0].kind == CLIQUE


def test_decompose_k16_c4():
    d = decompose_complete(16, 4)
    kinds = [b.kind for b in d.blocks]
    assert kinds.count(CLIQUE) == 4 and kinds.count(BICLIQUE) == 6
    assert all(len(b.left) == 4 and (b.right is None or len(b.right) == 4) for b in d.blocks)


@pytest.mark.parametrize("n, c", [(c * 2 ** k, c) for c in (1, 2, 3, 4) for k in range(6) if c * 2 ** k <= 32])
def test_decompose_partitions_edges(n, c):
    sets = decompose_complete(n, c).edge_sets()
    union = set().union(*sets)
    assert union == set(combinations(range(n), 2))
    assert sum(len(s) for s in sets) == len(union)


@pytest.mark.parametrize("n, c", [(6, 4), (12, 4), (0, 2), (3, 0)])
def test_decompose_rejects_bad_sizes(n, c):
    with pytest.raises(ValueError):
        decompose_complete(n, c)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 40), st.integers(3, 10))
def test_chopped_embedding_contracts_to_complete_graph(n, deg):
    from triadminor.embedding import contract, embedded_subgraph
    hw, emb = triad_chopped(n, deg)
    part = {q: i for i, m in enumerate(emb.models) for q in m}
    got = contract(embedded_subgraph(emb), part)
    assert set(got.edges) == set(combinations(range(n), 2))
