"""
Ising reduction checked by exhaustive search
============================================

Embedding an Ising problem spreads each bias over a chain and ties the
chain together with strong ferromagnetic couplers.  The brute-force solver
confirms the embedded minimum is the logical minimum plus a fixed offset.
"""
import random

from triadminor import IsingInstance, complete_graph, embed_ising, reduction_check, solve_exhaustive
from triadminor import triad_virtual, unembed

rng = random.Random(7)
G = complete_graph(5)
inst = IsingInstance(G, [rng.randint(-2, 2) for _ in G.vertices],
                     {e: rng.randint(-2, 2) for e in G.edges})

_, emb = triad_virtual(5)
embedded = embed_ising(inst, emb)
print("chain strengths:", embedded.strengths)
print("aligned offset:", embedded.aligned_offset)

logical = solve_exhaustive(inst)
physical = solve_exhaustive(embedded.instance, workers=4)
print("logical min:", logical.min_energy, "argmin:", logical.argmin)
print("embedded min:", physical.min_energy, "over", 2 ** embedded.instance.graph.vertex_count, "states")
print("unembedded:", unembed(physical.argmin, emb))

r = reduction_check(inst, emb)
print("reduction holds:", r.ok)

# a chain strength that is too weak lets chains break
frustrated = IsingInstance(complete_graph(3), [0, 0, 0], {(0, 1): 1, (0, 2): 1, (1, 2): 1})
weak = reduction_check(frustrated, triad_virtual(3)[1], -0.01)
print("weak chains ok?", weak.ok, "broken:", weak.broken_chains)
