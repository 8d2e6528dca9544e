"""Minor-embeddings: representation, verification, classification, contraction.

A minor-embedding of a logical graph ``G`` in a hardware graph ``U`` gives
each logical vertex a *vertex model* (a set of qubits inducing a connected
subgraph of ``U``, pairwise disjoint) and each logical edge a hardware
coupler ``tau[{i, j}]`` with one end in each of the two models.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import TYPE_CHECKING, Iterable, Mapping, Sequence

from .ising import Edge, Graph, _edge

if TYPE_CHECKING:
    from .hardware import HardwareGraph

SUBGRAPH = "subgraph"
TOPOLOGICAL_MINOR = "topological_minor"
GENERAL_MINOR = "general_minor"


@dataclass(frozen=True)
class MinorEmbedding:
    logical_graph: Graph
    hardware: "HardwareGraph"
    models: tuple[tuple[int, ...], ...]
    tau: Mapping[Edge, Edge] = field(default_factory=dict)
    hardware_ref: str = ""

    def __post_init__(self):
        object.__setattr__(self, "models", tuple(tuple(int(q) for q in m) for m in self.models))
        tau = {_edge(*e): _edge(*c) for e, c in self.tau.items()}
        object.__setattr__(self, "tau", MappingProxyType(dict(sorted(tau.items()))))

    def owner(self) -> dict[int, int]:
        """Qubit -> logical vertex, for qubits that belong to some model."""
        return {q: i for i, m in enumerate(self.models) for q in m}

    def used_qubits(self) -> list[int]:
        return sorted(q for m in self.models for q in m)


@dataclass(frozen=True)
class Violation:
    condition: str  # "reference" | "disjoint" | "connected" | "coupler"
    subject: tuple
    reason: str

    def __str__(self):
        kind, what = self.subject
        return f"{self.condition}: {kind} {what}: {self.reason}"


class InvalidEmbeddingError(ValueError):
    def __init__(self, violations: Sequence[Violation]):
        self.violations = list(violations)
        lines = "\n  ".join(str(v) for v in self.violations)
        super().__init__(f"embedding has {len(self.violations)} violation(s):\n  {lines}")


def _components(qubits: Iterable[int], hw: Graph) -> list[list[int]]:
    adj = hw._adjacency
    pending = set(qubits)
    comps = []
    for start in sorted(pending):
        if start not in pending:
            continue
        pending.discard(start)
        comp, queue = [start], deque([start])
        while queue:
            q = queue.popleft()
            for r in adj[q]:
                if r in pending:
                    pending.discard(r)
                    comp.append(r)
                    queue.append(r)
        comps.append(sorted(comp))
    return comps


def verify_embedding(emb: MinorEmbedding) -> list[Violation]:
    """Every way ``emb`` fails the definition of a minor-embedding.

    An empty list means the embedding is valid.  Unused hardware is
    ignored.  Bad references are reported, never raised.
    """
    G = emb.logical_graph
    hw = emb.hardware.graph
    out: list[Violation] = []

    if len(emb.models) != G.vertex_count:
        out.append(Violation("reference", ("graph", "models"),
                             f"{len(emb.models)} models for {G.vertex_count} logical vertices"))
    # first model wins a shared qubit; the overlap itself is reported
    owner: dict[int, int] = {}
    for i, model in enumerate(emb.models):
        if not model:
            out.append(Violation("connected", ("vertex", i), "vertex model is empty"))
            continue
        bad = [q for q in model if not 0 <= q < hw.vertex_count]
        if bad:
            out.append(Violation("reference", ("vertex", i), f"qubits {bad} are not in the hardware graph"))
        for q in model:
            if q in owner and owner[q] != i:
                out.append(Violation("disjoint", ("vertex", i),
                                     f"qubit {q} is shared with the model of vertex {owner[q]}"))
            elif q in owner:
                out.append(Violation("disjoint", ("vertex", i), f"qubit {q} listed twice"))
            owner.setdefault(q, i)
        good = [q for q in dict.fromkeys(model) if 0 <= q < hw.vertex_count]
        comps = _components(good, hw) if good else []
        if len(comps) > 1:
            out.append(Violation("connected", ("vertex", i),
                                 f"vertex model splits into {len(comps)} components: {comps}"))

    for e in G.edges:
        if e not in emb.tau:
            out.append(Violation("coupler", ("edge", e), "logical edge has no coupler assigned"))
    for e, c in emb.tau.items():
        i, j = e
        if not G.has_edge(i, j):
            out.append(Violation("reference", ("edge", e), "coupler assigned to a non-edge"))
            continue
        if not hw.has_edge(*c):
            out.append(Violation("coupler", ("edge", e), f"{c} is not a hardware coupler"))
            continue
        a, b = owner.get(c[0]), owner.get(c[1])
        if not ((a == i and b == j) or (a == j and b == i)):
            out.append(Violation("coupler", ("edge", e),
                                 f"coupler {c} does not join the models of {i} and {j}"))
    return out


def is_valid(emb: MinorEmbedding) -> bool:
    return not verify_embedding(emb)


def require_valid(emb: MinorEmbedding) -> None:
    violations = verify_embedding(emb)
    if violations:
        raise InvalidEmbeddingError(violations)


def _is_path(model: Sequence[int], hw: Graph) -> bool:
    members = set(model)
    inner = [sum(1 for r in hw.neighbors(q) if r in members) for q in model]
    edges = sum(inner) // 2
    return edges == len(model) - 1 and max(inner, default=0) <= 2


def classify_embedding(emb: MinorEmbedding) -> str:
    """``"subgraph"``, ``"topological_minor"`` or ``"general_minor"``."""
    require_valid(emb)
    if all(len(m) == 1 for m in emb.models):
        return SUBGRAPH
    hw = emb.hardware.graph
    if all(_is_path(m, hw) for m in emb.models):
        return TOPOLOGICAL_MINOR
    return GENERAL_MINOR


def contract(graph: Graph, partition: Mapping[int, int]) -> Graph:
    """Contract each partition class of ``graph`` to a single vertex.

    ``partition`` maps qubits to labels ``0..k-1``; qubits absent from it
    are dropped.  Edges inside a class vanish and parallel edges merge.
    """
    labels = sorted(set(partition.values()))
    if labels != list(range(len(labels))):
        raise ValueError(f"partition labels must be 0..k-1, got {labels}")
    classes: dict[int, list[int]] = {a: [] for a in labels}
    for q, a in partition.items():
        classes[a].append(q)
    for a, members in classes.items():
        if len(_components(members, graph)) > 1:
            raise ValueError(f"class {a} does not induce a connected subgraph")
    edges = set()
    for u, v in graph.edges:
        if u in partition and v in partition and partition[u] != partition[v]:
            edges.add(_edge(partition[u], partition[v]))
    return Graph(len(labels), tuple(edges))


def embedded_subgraph(emb: MinorEmbedding) -> Graph:
    """Hardware restricted to model-internal couplers and the tau couplers.

    Vertex labels are unchanged (unused qubits stay isolated).
    """
    hw = emb.hardware.graph
    owner = emb.owner()
    edges = [(u, v) for u, v in hw.edges if u in owner and owner.get(v) == owner[u]]
    edges.extend(emb.tau.values())
    return Graph(hw.vertex_count, tuple(set(edges)))


def embed_via_complete(G: Graph, deg: int, mode: str = "optimal", segment_size: int | None = None) -> MinorEmbedding:
    """Embed any graph through the chopped TRIAD for ``K_n``, ``n = |V(G)|``.

    The hardware keeps every coupler of the complete construction; ``tau``
    is restricted to the edges of ``G``.
    """
    from .hardware import HardwareGraph, QubitMeta, triad_chopped

    n = G.vertex_count
    if deg < 3:
        raise ValueError(f"deg must be at least 3, got {deg}")
    if n <= 1:
        hw = HardwareGraph(Graph(n), coords=((0.0, 0.0),) * n, degree_bound=deg,
                           qubit_meta=tuple(QubitMeta(i, 1, 0) for i in range(n)))
        return MinorEmbedding(G, hw, tuple((i,) for i in range(n)), {}, f"trivial n={n}")
    hw, full = triad_chopped(n, deg, mode=mode, segment_size=segment_size)
    tau = {e: full.tau[e] for e in G.edges}
    emb = MinorEmbedding(G, hw, full.models, tau, full.hardware_ref)
    require_valid(emb)
    return emb
