"""
Trading qubits for degree: chopped chains and block decomposition
=================================================================

When the hardware allows degree deg > 3, runs of consecutive chain qubits
can be merged into a single physical qubit.
"""
import math

from triadminor import check_physical, decompose_complete, triad_chopped, triad_virtual
from triadminor.hardware import chopped_length_bound, optimal_segment_sizes

# K_8 with degree 6: every chain of seven virtual qubits becomes two physical ones
hw, emb = triad_chopped(8, 6)
print("segments per chain:", optimal_segment_sizes(8, 6))
print("physical qubits:", hw.num_qubits, "max degree:", hw.graph.max_degree())

# qubit count versus degree for a K_32 host
print("\n deg  qubits  per-chain  lower bound n(n-1)/deg")
n = 32
print(f"   3 {triad_virtual(n)[0].num_qubits:7d}  (virtual)")
for deg in range(3, 9):
    hw, emb = triad_chopped(n, deg)
    print(f"{deg:4d} {hw.num_qubits:7d} {len(emb.models[0]):10d} {math.ceil(n * (n - 1) / deg):10d}")

# physical checks at the advertised bounds
hw, _ = triad_chopped(n, 5)
r = check_physical(hw, 5, chopped_length_bound(5))
print("\ndeg 5 check:", "ok" if r.ok else r.violations, f"(longest {r.max_edge_length:.3f})")

# uniform chopping with a fixed segment size
hw, emb = triad_chopped(13, 6, mode="uniform", segment_size=4)
print("uniform sizes:", [hw.qubit_meta[q].size for q in emb.models[0]])

# K_8 splits into two K_4 blocks and one K_{4,4}
for b in decompose_complete(8, 4).blocks:
    print(b.kind, b.left, b.right or "", len(b.edges()), "edges")
