"""
Embedding an arbitrary graph
============================

Any graph on n vertices is a subgraph of K_n, so a K_n host embeds it by
dropping the inter-chain couplers it does not need.
"""
from triadminor import Graph, MinorEmbedding, classify_embedding, embed_via_complete, verify_embedding
from triadminor.embedding import contract, embedded_subgraph
from triadminor.export import to_dot

# the Petersen graph on a degree-4 host
outer = [(i, (i + 1) % 5) for i in range(5)]
spokes = [(i, i + 5) for i in range(5)]
inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
G = Graph.from_edges(10, outer + spokes + inner)
emb = embed_via_complete(G, 4)
print("hardware qubits:", emb.hardware.num_qubits, "used couplers:", len(emb.tau))
print("kind:", classify_embedding(emb))
print("violations:", verify_embedding(emb))

# contracting every model back to a point recovers the Petersen graph
part = {q: i for i, m in enumerate(emb.models) for q in m}
print("contracts back:", contract(embedded_subgraph(emb), part) == G)

# a broken embedding: give edge (0, 1) the coupler to the wrong pair of models
bad_tau = dict(emb.tau)
bad_tau[(0, 1)] = emb.tau[(2, 3)]
for v in verify_embedding(MinorEmbedding(G, emb.hardware, emb.models, bad_tau)):
    print("  ", v.condition, v.subject, v.reason)

with open("petersen.dot", "w") as f:
    f.write(to_dot(emb))
print("wrote petersen.dot (render with: neato -n -Tsvg petersen.dot)")
