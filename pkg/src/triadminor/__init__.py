"""TRIAD complete-graph-minor hardware graphs, minor-embeddings, and Ising reduction."""
from .embedding import (MinorEmbedding, Violation, classify_embedding, contract, embed_via_complete,
                        is_valid, verify_embedding)
from .hardware import (ConstraintReport, HardwareGraph, check_physical, decompose_complete, triad_chopped,
                       triad_virtual)
from .ising import Graph, GroundStateResult, IsingInstance, complete_graph, energy, solve_exhaustive
from .reduction import EmbeddedIsing, ReductionReport, embed_ising, reduction_check, unembed

__all__ = [
    "ConstraintReport", "EmbeddedIsing", "Graph", "GroundStateResult", "HardwareGraph", "IsingInstance",
    "MinorEmbedding", "ReductionReport", "Violation", "check_physical", "classify_embedding",
    "complete_graph", "contract", "decompose_complete", "embed_ising", "embed_via_complete", "energy",
    "is_valid", "reduction_check", "solve_exhaustive", "triad_chopped", "triad_virtual", "unembed",
    "verify_embedding",
]
