"""
Building the TRIAD virtual hardware
===================================

Each logical vertex becomes a straight chain of n-1 degree-3 qubits, and
every pair of chains meets at exactly one coupler.
"""
from triadminor import check_physical, triad_virtual, verify_embedding
from triadminor.hardware import INTER, INTRA
from triadminor.export import to_svg

# a K_6 host: six chains of five qubits
hw, emb = triad_virtual(6)
print("qubits:", hw.num_qubits, "couplers:", hw.num_couplers)
print("intra-chain:", hw.count_kind(INTRA), "inter-chain:", hw.count_kind(INTER))
for i, model in enumerate(emb.models):
    print(f"chain {i}: qubits {model}")

# the coupler that realises logical edge (0, 3)
print("tau(0, 3) =", emb.tau[(0, 3)])

# the canonical embedding is a valid minor of the hardware
print("violations:", verify_embedding(emb))

# degree stays at 3 and couplers stay short no matter how big n gets
for n in (4, 16, 64):
    r = check_physical(triad_virtual(n)[0], 3, 1.5)
    print(f"n={n:2d}  max degree {r.max_degree}  longest coupler {r.max_edge_length:.4f}")

with open("triad_virtual_6.svg", "w") as f:
    f.write(to_svg(emb))
print("wrote triad_virtual_6.svg")
