"""Reduce an Ising instance on ``G`` to one on the hardware, and back.

Each logical bias is spread evenly over its vertex model, each logical
coupling sits on its ``tau`` coupler, and every coupler inside a model is
ferromagnetic with the chain strength ``F_i < 0``.  When all chains are
uniform the embedded energy equals the logical energy plus
``aligned_offset = sum_i F_i * (couplers inside model i)``.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational, Real
from types import MappingProxyType
from typing import Mapping, Sequence

from .embedding import MinorEmbedding, require_valid
from .ising import (FLOAT_TOL, Edge, Graph, GroundStateResult, IsingInstance, Spins, _normalize,
                    energy, solve_exhaustive)

AUTO = "auto"
AUTO_SUFFICIENT = "auto_sufficient"  # long-form alias of AUTO


def auto_chain_strength(inst: IsingInstance, i: int):
    """``-(1 + |h_i| + sum_j |J_ij|)``: any chain cut costs more than it can gain."""
    total = 1 + abs(inst.h[i])
    for (u, v), w in inst.J.items():
        if i in (u, v):
            total += abs(w)
    return -total


def chain_strengths(inst: IsingInstance, policy="auto") -> tuple:
    """Per-vertex chain strength for ``policy`` = ``"auto"`` or a negative number."""
    if isinstance(policy, str) and policy in (AUTO, AUTO_SUFFICIENT):
        return tuple(auto_chain_strength(inst, i) for i in inst.graph.vertices)
    if isinstance(policy, bool) or not isinstance(policy, Real):
        raise ValueError(f"chain strength policy must be 'auto' or a number, got {policy!r}")
    if not policy < 0:
        raise ValueError(f"explicit chain strength must be negative (ferromagnetic), got {policy}")
    return (policy,) * inst.graph.vertex_count


@dataclass(frozen=True)
class EmbeddedIsing:
    instance: IsingInstance
    chain_couplers: Mapping[Edge, int]
    strengths: tuple
    embedding: MinorEmbedding
    aligned_offset: Real


def _split(h, k: int):
    if isinstance(h, Rational):
        return _normalize(Fraction(h) / k)
    return h / k


def _model_couplers(emb: MinorEmbedding) -> dict[Edge, int]:
    hw = emb.hardware.graph
    owner = emb.owner()
    return {(u, v): owner[u] for u, v in hw.edges if u in owner and owner.get(v) == owner[u]}


def embed_ising(inst: IsingInstance, emb: MinorEmbedding, policy="auto") -> EmbeddedIsing:
    if inst.graph != emb.logical_graph:
        raise ValueError("instance graph differs from the embedding's logical graph")
    require_valid(emb)
    F = chain_strengths(inst, policy)
    hw = emb.hardware.graph

    h = [0] * hw.vertex_count
    for i, model in enumerate(emb.models):
        share = _split(inst.h[i], len(model))
        for q in model:
            h[q] = share
    chains = _model_couplers(emb)
    J = {c: F[i] for c, i in chains.items()}
    for e, c in emb.tau.items():
        J[c] = inst.J[e]
    counts = [0] * len(F)
    for i in chains.values():
        counts[i] += 1
    offset = _normalize(sum((f * k for f, k in zip(F, counts)), 0))
    hw_inst = IsingInstance(Graph(hw.vertex_count, tuple(J)), h, J)
    return EmbeddedIsing(hw_inst, MappingProxyType(chains), F, emb, offset)


class ChainBreakError(ValueError):
    def __init__(self, vertex: int, values):
        self.vertex = vertex
        super().__init__(f"chain of logical vertex {vertex} is broken: spins {list(values)}")


def broken_chains(s_hw: Sequence[int], emb: MinorEmbedding) -> list[int]:
    return [i for i, m in enumerate(emb.models) if len({s_hw[q] for q in m}) > 1]


def unembed(s_hw: Sequence[int], emb: MinorEmbedding, mode: str = "strict") -> Spins:
    """Logical spins from hardware spins.

    ``strict`` refuses broken chains; ``majority`` takes the per-model
    majority with ties going to ``-1``.
    """
    if mode not in ("strict", "majority"):
        raise ValueError(f"unknown unembed mode {mode!r}")
    out = []
    for i, model in enumerate(emb.models):
        values = [s_hw[q] for q in model]
        if any(x not in (-1, 1) for x in values):
            raise ValueError(f"model of vertex {i} has non-spin values {values}")
        total = sum(values)
        if mode == "strict" and abs(total) != len(values):
            raise ChainBreakError(i, values)
        out.append(1 if total > 0 else -1)
    return tuple(out)


@dataclass(frozen=True)
class ReductionReport:
    original: GroundStateResult
    embedded: GroundStateResult
    aligned_offset: Real
    energy_match: bool
    broken_chains: tuple[int, ...]
    unembedded: Spins | None
    unembedded_energy: Real | None
    attains_min: bool

    @property
    def ok(self) -> bool:
        return self.energy_match and not self.broken_chains and self.attains_min


def _same(a, b, exact: bool) -> bool:
    return a == b if exact else abs(a - b) <= FLOAT_TOL


def reduction_check(inst: IsingInstance, emb: MinorEmbedding, policy="auto", *,
                    cap: int | None = None, workers: int = 1) -> ReductionReport:
    """Solve the original and embedded instances exhaustively and compare them."""
    emb_inst = embed_ising(inst, emb, policy)
    with ThreadPoolExecutor(max_workers=2) as pool:
        fut_orig = pool.submit(solve_exhaustive, inst, cap=cap, workers=workers)
        fut_emb = pool.submit(solve_exhaustive, emb_inst.instance, cap=cap, workers=workers)
        orig, embd = fut_orig.result(), fut_emb.result()
    exact = inst.is_exact and emb_inst.instance.is_exact
    match = _same(embd.min_energy, orig.min_energy + emb_inst.aligned_offset, exact)
    broken = tuple(broken_chains(embd.argmin, emb))
    logical = e_logical = None
    attains = False
    if not broken:
        logical = unembed(embd.argmin, emb, "strict")
        e_logical = energy(inst, logical)
        attains = _same(e_logical, orig.min_energy, exact)
    return ReductionReport(orig, embd, emb_inst.aligned_offset, match, broken, logical, e_logical, attains)
