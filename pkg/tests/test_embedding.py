from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from triadminor.embedding import (GENERAL_MINOR, SUBGRAPH, TOPOLOGICAL_MINOR, InvalidEmbeddingError,
                                  MinorEmbedding, classify_embedding, contract, embed_via_complete,
                                  embedded_subgraph, verify_embedding)
from triadminor.hardware import HardwareGraph, triad_chopped, triad_virtual
from triadminor.ising import Graph, complete_graph

from conftest import cycle_graph


def square_lattice(rows, cols):
    edges = []
    for r in range(rows):
        for c in range(cols):
            q = r * cols + c
            if c + 1 < cols:
                edges.append((q, q + 1))
            if r + 1 < rows:
                edges.append((q, q + cols))
    coords = tuple((c, r) for r in range(rows) for c in range(cols))
    return HardwareGraph(Graph(rows * cols, tuple(edges)), coords, 4)


def lattice_example():
    """Five logical qubits in a 4x4 lattice; vertex 0 uses a 3-qubit tree."""
    G = Graph(5, ((0, 1), (0, 2), (0, 3), (0, 4), (1, 2)))
    hw = square_lattice(4, 4)
    models = ((5, 6, 9), (1,), (2,), (10,), (4,))
    tau = {(0, 1): (1, 5), (0, 2): (2, 6), (0, 3): (9, 10), (0, 4): (4, 5), (1, 2): (1, 2)}
    return MinorEmbedding(G, hw, models, tau, "square-lattice 4x4")


def mutate(emb, models=None, tau=None):
    return MinorEmbedding(emb.logical_graph, emb.hardware, emb.models if models is None else models,
                          emb.tau if tau is None else tau)


def test_triad_virtual_6_verifies():
    assert verify_embedding(triad_virtual(6)[1]) == []


def test_lattice_example_verifies():
    emb = lattice_example()
    assert verify_embedding(emb) == []
    assert sorted(len(m) for m in emb.models) == [1, 1, 1, 1, 3]
    assert classify_embedding(emb) == TOPOLOGICAL_MINOR


def test_split_model_is_reported():
    emb = lattice_example()
    models = list(emb.models)
    models[0] = (5, 6, 15)  # 15 sits in the far corner
    v = verify_embedding(mutate(emb, models))
    assert any(x.condition == "connected" and x.subject == ("vertex", 0) for x in v)


def _base():
    return triad_virtual(5)[1]


def _mutations():
    emb = _base()
    m = [list(x) for x in emb.models]
    tau = dict(emb.tau)
    cases = {}

    # disjointness
    a = [list(x) for x in m]
    a[0].append(next(q for q in tau[(0, 1)] if q in m[1]))
    # the overlap is reported against the later model
    cases["disjoint/steal-neighbour"] = (a, tau, "disjoint", ("vertex", 1))
    a = [list(x) for x in m]
    a[2] = a[2] + [a[1][0]]
    cases["disjoint/share-end"] = (a, tau, "disjoint", ("vertex", 2))
    a = [list(x) for x in m]
    a[3] = a[3] + [a[3][0]]
    cases["disjoint/duplicate"] = (a, tau, "disjoint", ("vertex", 3))

    # connectedness
    a = [list(x) for x in m]
    del a[1][1]
    cases["connected/drop-middle"] = (a, tau, "connected", ("vertex", 1))
    a = [list(x) for x in m]
    a[4] = [a[4][0], a[4][-1]]
    cases["connected/ends-only"] = (a, tau, "connected", ("vertex", 4))
    a = [list(x) for x in m]
    a[2] = []
    cases["connected/empty"] = (a, tau, "connected", ("vertex", 2))

    # coupler map
    t = dict(tau)
    t[(0, 1)] = (m[0][0], m[0][1])
    cases["coupler/inside-model"] = (m, t, "coupler", ("edge", (0, 1)))
    t = dict(tau)
    t[(2, 3)] = (m[2][0], m[3][2])
    cases["coupler/not-in-hardware"] = (m, t, "coupler", ("edge", (2, 3)))
    t = dict(tau)
    del t[(1, 4)]
    cases["coupler/missing"] = (m, t, "coupler", ("edge", (1, 4)))
    t = dict(tau)
    t[(0, 2)] = tau[(1, 3)]
    cases["coupler/wrong-models"] = (m, t, "coupler", ("edge", (0, 2)))
    return cases


MUTATIONS = _mutations()


@pytest.mark.parametrize("name", sorted(MUTATIONS))
def test_mutation_is_caught(name):
    models, tau, condition, subject = MUTATIONS[name]
    v = verify_embedding(mutate(_base(), tuple(map(tuple, models)), tau))
    assert any(x.condition == condition and x.subject == subject for x in v), v


def test_dangling_references_are_violations():
    emb = _base()
    models = list(emb.models)
    models[0] = models[0] + (999,)
    v = verify_embedding(mutate(emb, models))
    assert any(x.condition == "reference" for x in v)
    tau = dict(emb.tau)
    tau[(0, 9)] = (0, 1)
    v = verify_embedding(mutate(emb, tau=tau))
    assert any(x.condition == "reference" for x in v)


def test_classify_subgraph():
    hw = HardwareGraph(complete_graph(3))
    emb = MinorEmbedding(complete_graph(3), hw, ((0,), (1,), (2,)), {(0, 1): (0, 1), (0, 2): (0, 2), (1, 2): (1, 2)})
    assert classify_embedding(emb) == SUBGRAPH


def test_classify_triad_chains():
    assert classify_embedding(triad_virtual(8)[1]) == TOPOLOGICAL_MINOR


def test_classify_tree_model():
    hw = HardwareGraph(Graph(5, ((0, 1), (0, 2), (0, 3), (3, 4))))
    emb = MinorEmbedding(Graph(2, ((0, 1),)), hw, ((0, 1, 2, 3), (4,)), {(0, 1): (3, 4)})
    assert classify_embedding(emb) == GENERAL_MINOR


def test_classify_rejects_invalid():
    emb = _base()
    with pytest.raises(InvalidEmbeddingError):
        classify_embedding(mutate(emb, tau={}))


@pytest.mark.parametrize("n", range(2, 12))
@pytest.mark.parametrize("deg", [3, 4, 6])
def test_triad_canonical_classification(n, deg):
    for _, emb in (triad_virtual(n), triad_chopped(n, deg)):
        expected = SUBGRAPH if all(len(m) == 1 for m in emb.models) else TOPOLOGICAL_MINOR
        assert classify_embedding(emb) == expected


def test_embed_k5_is_canonical_chopped():
    emb = embed_via_complete(complete_graph(5), 6)
    _, ref = triad_chopped(5, 6)
    assert emb.models == ref.models and dict(emb.tau) == dict(ref.tau)


def test_embed_five_cycle():
    G = cycle_graph(5)
    emb = embed_via_complete(G, 6)
    assert len(emb.models) == 5
    assert set(emb.tau) == set(G.edges)
    assert verify_embedding(emb) == []


@pytest.mark.parametrize("n", [0, 1])
def test_embed_degenerate(n):
    emb = embed_via_complete(Graph(n), 6)
    assert emb.models == tuple((i,) for i in range(n))
    assert not emb.tau and verify_embedding(emb) == []


def test_embed_rejects_small_degree():
    with pytest.raises(ValueError):
        embed_via_complete(cycle_graph(4), 2)


def test_contract_triad_gives_complete_graph():
    _, emb = triad_virtual(6)
    part = {q: i for i, m in enumerate(emb.models) for q in m}
    assert contract(embedded_subgraph(emb), part) == complete_graph(6)


def test_contract_identity_partition():
    g = cycle_graph(6)
    assert contract(g, {v: v for v in g.vertices}) == g


def test_contract_triangle_edge():
    assert contract(complete_graph(3), {0: 0, 1: 0, 2: 1}) == complete_graph(2)


def test_contract_rejects_disconnected_class():
    with pytest.raises(ValueError):
        contract(Graph(3, ((0, 1),)), {0: 0, 2: 0, 1: 1})
    with pytest.raises(ValueError):
        contract(complete_graph(3), {0: 0, 1: 2, 2: 2})


@st.composite
def partitioned_graphs(draw):
    n = draw(st.integers(1, 9))
    pairs = list(combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    labels = draw(st.lists(st.integers(0, 3), min_size=n, max_size=n))
    return Graph(n, tuple(edges)), labels


@settings(max_examples=100, deadline=None)
@given(partitioned_graphs())
def test_contract_agrees_with_networkx_quotient(case):
    g, labels = case
    # relabel classes by connected component inside each label to get a valid partition
    H = nx.Graph()
    H.add_nodes_from(g.vertices)
    H.add_edges_from(e for e in g.edges if labels[e[0]] == labels[e[1]])
    blocks = sorted(sorted(c) for c in nx.connected_components(H))
    part = {v: b for b, comp in enumerate(blocks) for v in comp}
    N = nx.Graph()
    N.add_nodes_from(g.vertices)
    N.add_edges_from(g.edges)
    Q = nx.quotient_graph(N, [set(c) for c in blocks])
    expected = {tuple(sorted((part[next(iter(a))], part[next(iter(b))]))) for a, b in Q.edges}
    assert set(contract(g, part).edges) == expected


@pytest.mark.parametrize("deg", [3, 6])
def test_round_trip_contract_equals_logical_graph(deg):
    for G in (cycle_graph(7), Graph(6, ((0, 5), (1, 2), (2, 3))), complete_graph(5)):
        emb = embed_via_complete(G, deg)
        part = {q: i for i, m in enumerate(emb.models) for q in m}
        assert contract(embedded_subgraph(emb), part) == G


def atlas_graphs(max_nodes):
    for A in nx.graph_atlas_g():
        if A.number_of_nodes() <= max_nodes:
            yield Graph(A.number_of_nodes(), tuple(A.edges))


def test_atlas_counts():
    counts = {}
    for g in atlas_graphs(6):
        counts[g.vertex_count] = counts.get(g.vertex_count, 0) + 1
    assert counts == {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}


def test_every_small_graph_embeds():
    for g in atlas_graphs(6):
        emb = embed_via_complete(g, 6)
        assert verify_embedding(emb) == []
        assert set(emb.tau) == set(g.edges)
