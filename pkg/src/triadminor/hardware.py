"""TRIAD hardware graphs for complete-graph minors.

Virtual construction
--------------------
Logical vertex ``i`` of ``K_n`` becomes a chain of ``n - 1`` virtual qubits
at positions ``1..n-1``.  Positions ``1..i`` face the smaller partners
``0..i-1`` in order, positions ``i+1..n-1`` face the larger ones.  For
``i < j`` the inter-chain coupler joins chain ``i`` at position ``j`` to
chain ``j`` at position ``i + 1``, so every virtual qubit carries exactly
one inter-chain coupler and at most two intra-chain ones (degree <= 3).

Layout
------
Pair ``(i, j)``, ``i < j``, owns the grid cell in row ``i``, column ``j``.
Chain ``i``'s qubit for partner ``j`` sits at ``(j, i + 0.25)``; chain
``j``'s qubit for partner ``i`` sits at ``(j + 0.25, i)``.  A chain
therefore runs up column ``i`` and then along row ``i``: consecutive
qubits are one unit apart, the bend is ``sqrt(0.75**2 + 1.25**2)`` and an
inter-chain coupler is ``0.25 * sqrt(2)``.

Chopping
--------
Contiguous runs of a chain's virtual qubits merge into one physical qubit
whose degree is its run length plus one or two neighbour couplers.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping, Sequence

from .embedding import MinorEmbedding
from .ising import Edge, Graph, _edge, complete_graph

INTRA = "intra_chain"
INTER = "inter_chain"

VIRTUAL_LENGTH_BOUND = 1.5
VIRTUAL_DEGREE_BOUND = 3


def chopped_length_bound(deg: int) -> float:
    return 1.5 * (deg - 1)


@dataclass(frozen=True)
class QubitMeta:
    chain: int
    first: int
    last: int

    @property
    def size(self) -> int:
        return self.last - self.first + 1


@dataclass(frozen=True)
class HardwareGraph:
    graph: Graph
    coords: tuple[tuple[float, float], ...] | None = None
    degree_bound: int | None = None
    qubit_meta: tuple[QubitMeta, ...] | None = None
    coupler_kind: Mapping[Edge, str] = field(default_factory=dict)

    def __post_init__(self):
        n = self.graph.vertex_count
        if self.coords is not None:
            coords = tuple((float(x), float(y)) for x, y in self.coords)
            if len(coords) != n:
                raise ValueError(f"{len(coords)} coordinates for {n} qubits")
            object.__setattr__(self, "coords", coords)
        if self.qubit_meta is not None and len(self.qubit_meta) != n:
            raise ValueError(f"{len(self.qubit_meta)} meta records for {n} qubits")
        kinds = {_edge(*e): k for e, k in self.coupler_kind.items()}
        object.__setattr__(self, "coupler_kind", MappingProxyType({e: kinds[e] for e in self.graph.edges if e in kinds}))

    @property
    def num_qubits(self) -> int:
        return self.graph.vertex_count

    @property
    def num_couplers(self) -> int:
        return len(self.graph.edges)

    def count_kind(self, kind: str) -> int:
        return sum(1 for k in self.coupler_kind.values() if k == kind)

    def chains(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for q, meta in enumerate(self.qubit_meta or ()):
            out.setdefault(meta.chain, []).append(q)
        for qs in out.values():
            qs.sort(key=lambda q: self.qubit_meta[q].first)
        return out


def _virtual_slot(n: int, i: int, k: int) -> tuple[float, float]:
    if k <= i:
        partner = k - 1
        return (i + 0.25, float(partner))
    return (float(k), i + 0.25)


def _inter_pairs(n: int):
    """``((i, j), (i, position), (j, position))`` for every logical edge ``i < j``."""
    for i in range(n):
        for j in range(i + 1, n):
            yield (i, j), (i, j), (j, i + 1)


def triad_virtual(n: int) -> tuple[HardwareGraph, MinorEmbedding]:
    """Virtual TRIAD hosting ``K_n`` and its canonical chain embedding."""
    if n < 2:
        raise ValueError(f"triad_virtual needs n >= 2, got {n}")
    L = n - 1

    def q(i, k):
        return i * L + (k - 1)

    kinds = {}
    for i in range(n):
        for k in range(1, L):
            kinds[(q(i, k), q(i, k + 1))] = INTRA
    tau = {}
    for e, a, b in _inter_pairs(n):
        c = _edge(q(*a), q(*b))
        kinds[c] = INTER
        tau[e] = c
    graph = Graph(n * L, tuple(kinds))
    coords = tuple(_virtual_slot(n, i, k) for i in range(n) for k in range(1, n))
    meta = tuple(QubitMeta(i, k, k) for i in range(n) for k in range(1, n))
    hw = HardwareGraph(graph, coords, VIRTUAL_DEGREE_BOUND, meta, kinds)
    models = tuple(tuple(q(i, k) for k in range(1, n)) for i in range(n))
    return hw, MinorEmbedding(complete_graph(n), hw, models, tau, f"triad-virtual n={n}")


def segments_per_chain(n: int, deg: int) -> int:
    """Physical qubits needed per chain, never fewer than one."""
    if deg < 3:
        raise ValueError(f"deg must be at least 3, got {deg}")
    return max(1, -(-(n - 3) // (deg - 2)))


def optimal_segment_sizes(n: int, deg: int) -> list[int]:
    """Run lengths for one chain of ``n - 1`` virtual qubits.

    Terminal runs hold at most ``deg - 1`` positions and interior runs at
    most ``deg - 2``.  Starting from full runs, the surplus is taken one
    position at a time from the longest run, leftmost first.
    """
    m = segments_per_chain(n, deg)
    total = n - 1
    if m == 1:
        return [total]
    sizes = [deg - 1] + [deg - 2] * (m - 2) + [deg - 1]
    for _ in range(sum(sizes) - total):
        longest = max(sizes)
        sizes[sizes.index(longest)] -= 1
    return sizes


def uniform_segment_sizes(n: int, deg: int, c: int) -> list[int]:
    if c < 1:
        raise ValueError(f"segment size must be at least 1, got {c}")
    total = n - 1
    sizes = [c] * (total // c) + ([total % c] if total % c else [])
    if len(sizes) > 1 and c + 2 > deg:
        raise ValueError(f"segment size {c} needs degree {c + 2} but deg is {deg}")
    if len(sizes) == 1 and sizes[0] > deg:
        raise ValueError(f"a single segment of {sizes[0]} positions exceeds deg {deg}")
    return sizes


def triad_chopped(n: int, deg: int, mode: str = "optimal",
                  segment_size: int | None = None) -> tuple[HardwareGraph, MinorEmbedding]:
    """Chopped TRIAD: every physical qubit has at most ``deg`` couplers.

    ``mode="optimal"`` uses the fewest physical qubits per chain;
    ``mode="uniform"`` cuts every chain into runs of ``segment_size``.
    Each physical qubit sits at the centroid of the virtual qubits it
    absorbs.
    """
    if deg < 3:
        raise ValueError(f"deg must be at least 3, got {deg}")
    if mode == "optimal":
        sizes = optimal_segment_sizes(n, deg)
    elif mode == "uniform":
        if segment_size is None:
            raise ValueError("uniform mode needs segment_size")
        sizes = uniform_segment_sizes(n, deg, segment_size)
    else:
        raise ValueError(f"unknown mode {mode!r}")

    if n < 2:
        raise ValueError(f"triad_chopped needs n >= 2, got {n}")
    m = len(sizes)
    starts = [1 + sum(sizes[:t]) for t in range(m)]
    # virtual position -> segment index, shared by all chains
    seg_of = [0] * n
    for t, (a, s) in enumerate(zip(starts, sizes)):
        for k in range(a, a + s):
            seg_of[k] = t

    kinds = {}
    for i in range(n):
        for t in range(m - 1):
            kinds[(i * m + t, i * m + t + 1)] = INTRA
    tau = {}
    for e, (i, k), (j, l) in _inter_pairs(n):
        c = _edge(i * m + seg_of[k], j * m + seg_of[l])
        kinds[c] = INTER
        tau[e] = c
    graph = Graph(n * m, tuple(kinds))

    coords = []
    meta = []
    for i in range(n):
        for a, s in zip(starts, sizes):
            pts = [_virtual_slot(n, i, k) for k in range(a, a + s)]
            coords.append((sum(p[0] for p in pts) / s, sum(p[1] for p in pts) / s))
            meta.append(QubitMeta(i, a, a + s - 1))
    hw = HardwareGraph(graph, tuple(coords), deg, tuple(meta), kinds)
    models = tuple(tuple(range(i * m, (i + 1) * m)) for i in range(n))
    ref = f"triad-chopped n={n} deg={deg} mode={mode}"
    if mode == "uniform":
        ref += f" segment-size={segment_size}"
    return hw, MinorEmbedding(complete_graph(n), hw, models, tau, ref)


@dataclass(frozen=True)
class ConstraintReport:
    max_degree: int
    degree_ok: bool
    max_edge_length: float
    length_ok: bool
    violations: tuple[tuple[tuple, str], ...] = ()

    @property
    def ok(self) -> bool:
        return self.degree_ok and self.length_ok


def check_physical(hw: HardwareGraph, deg_max: int, len_max: float) -> ConstraintReport:
    """Degree and Euclidean coupler-length check of a geometric layout.

    Crossing couplers are allowed.
    """
    if hw.coords is None:
        raise ValueError("hardware graph has no coordinates")
    g = hw.graph
    violations = []
    for q in g.vertices:
        d = g.degree(q)
        if d > deg_max:
            violations.append((("qubit", q), f"degree {d} exceeds {deg_max}"))
    longest = 0.0
    for u, v in g.edges:
        (x1, y1), (x2, y2) = hw.coords[u], hw.coords[v]
        length = math.hypot(x2 - x1, y2 - y1)
        longest = max(longest, length)
        if length > len_max:
            violations.append((("coupler", (u, v)), f"length {length:.6g} exceeds {len_max:g}"))
    max_deg = g.max_degree()
    return ConstraintReport(max_deg, max_deg <= deg_max, longest, longest <= len_max, tuple(violations))


CLIQUE = "clique"
BICLIQUE = "biclique"


@dataclass(frozen=True)
class Block:
    kind: str
    left: tuple[int, ...]
    right: tuple[int, ...] | None = None

    def edges(self) -> set[Edge]:
        if self.kind == CLIQUE:
            return {_edge(a, b) for x, a in enumerate(self.left) for b in self.left[x + 1:]}
        return {_edge(a, b) for a in self.left for b in self.right}


@dataclass(frozen=True)
class CompleteDecomposition:
    n: int
    c: int
    blocks: tuple[Block, ...]

    def edge_sets(self) -> list[set[Edge]]:
        return [b.edges() for b in self.blocks]


def decompose_complete(n: int, c: int) -> CompleteDecomposition:
    """Partition the edges of ``K_n`` into ``K_c`` and ``K_{c,c}`` blocks.

    ``n`` must be ``c * 2**k``.  Halves are split recursively; the
    bipartite part between two halves is cut into ``c``-sized groups.
    """
    if c < 1 or n < c or n % c or (n // c) & (n // c - 1):
        raise ValueError(f"n={n} is not c * 2**k for c={c}")

    blocks: list[Block] = []

    def split(vs: Sequence[int]):
        if len(vs) == c:
            blocks.append(Block(CLIQUE, tuple(vs)))
            return
        half = len(vs) // 2
        a, b = vs[:half], vs[half:]
        split(a)
        for x in range(0, half, c):
            for y in range(0, half, c):
                blocks.append(Block(BICLIQUE, tuple(a[x:x + c]), tuple(b[y:y + c])))
        split(b)

    split(list(range(n)))
    return CompleteDecomposition(n, c, tuple(blocks))
