"""Graphs, Ising instances, and the exhaustive ground-state oracle.

Vertices are dense integer labels ``0..n-1``.  Spin assignments are plain
tuples of ``-1``/``+1`` indexed by vertex.

Energies are exact whenever every bias and coupling is an ``int`` or a
``fractions.Fraction``; any ``float`` switches the whole instance to
double precision with ties decided at ``FLOAT_TOL``.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from numbers import Rational, Real
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

import numpy as np

FLOAT_TOL = 1e-9
DEFAULT_SOLVER_CAP = 26
SOLVER_CAP_ENV = "TRIADMINOR_SOLVER_CAP"

# low vertices enumerated as one precomputed block per high-bit prefix
_BLOCK_BITS = 14

Edge = tuple[int, int]
Spins = tuple[int, ...]


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..vertex_count-1``."""

    vertex_count: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        n = self.vertex_count
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise ValueError(f"vertex_count must be a non-negative integer, got {n!r}")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if u < 0 or v >= n:
                raise ValueError(f"edge {(u, v)} has an endpoint outside 0..{n - 1}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge {(u, v)}")
            seen.add((u, v))
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "_lookup", frozenset(seen))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return cls(vertex_count, tuple((int(u), int(v)) for u, v in edges))

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    @property
    def edge_set(self) -> frozenset[Edge]:
        return self._lookup

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._lookup

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self._adjacency), default=0)

    @property
    def _adjacency(self) -> tuple[tuple[int, ...], ...]:
        cached = self.__dict__.get("_adj")
        if cached is None:
            adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
            for u, v in self.edges:
                adj[u].append(v)
                adj[v].append(u)
            cached = tuple(tuple(sorted(a)) for a in adj)
            object.__setattr__(self, "_adj", cached)
        return cached


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete_graph needs n >= 1, got {n}")
    return Graph(n, tuple(combinations(range(n), 2)))


def _check_value(x, what):
    if isinstance(x, bool) or not isinstance(x, Real):
        raise TypeError(f"{what} must be a real number, got {x!r}")
    if isinstance(x, float) and not math.isfinite(x):
        raise ValueError(f"{what} must be finite, got {x!r}")
    return x


@dataclass(frozen=True)
class IsingInstance:
    """Biases ``h`` (one per vertex) and couplings ``J`` (one per edge)."""

    graph: Graph
    h: tuple = ()
    J: Mapping[Edge, Real] = field(default_factory=dict)

    def __post_init__(self):
        g = self.graph
        h = tuple(self.h)
        if len(h) != g.vertex_count:
            raise ValueError(f"h has {len(h)} entries for {g.vertex_count} vertices")
        for i, x in enumerate(h):
            _check_value(x, f"h[{i}]")
        J = {}
        for e, x in self.J.items():
            key = _edge(*e)
            if key in J:
                raise ValueError(f"coupling for {key} given twice")
            J[key] = _check_value(x, f"J{key}")
        if set(J) != g.edge_set:
            missing = sorted(g.edge_set - set(J))
            extra = sorted(set(J) - g.edge_set)
            raise ValueError(f"J keys must match graph edges (missing {missing}, extra {extra})")
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "J", MappingProxyType({e: J[e] for e in g.edges}))

    @property
    def is_exact(self) -> bool:
        return all(isinstance(x, Rational) for x in self._values())

    def _values(self):
        yield from self.h
        yield from self.J.values()


def _check_spins(inst: IsingInstance, s: Sequence[int]) -> None:
    if len(s) != inst.graph.vertex_count:
        raise ValueError(f"assignment has {len(s)} spins for {inst.graph.vertex_count} vertices")
    for i, x in enumerate(s):
        if x not in (-1, 1):
            raise ValueError(f"spin {i} is {x!r}, expected -1 or +1")


def _normalize(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def energy(inst: IsingInstance, s: Sequence[int]):
    """Sum of ``h_i s_i`` over vertices plus ``J_ij s_i s_j`` over edges."""
    _check_spins(inst, s)
    total = sum(hi * si for hi, si in zip(inst.h, s))
    total += sum(Jij * s[i] * s[j] for (i, j), Jij in inst.J.items())
    return _normalize(total)


@dataclass(frozen=True)
class GroundStateResult:
    min_energy: Real
    argmin: Spins
    degeneracy: int


class SolverCapError(ValueError):
    pass


def solver_cap() -> int:
    value = os.environ.get(SOLVER_CAP_ENV)
    return int(value) if value else DEFAULT_SOLVER_CAP


def _index_to_spins(x: int, n: int) -> Spins:
    # vertex 0 is the most significant bit, so numeric order is lexicographic order
    return tuple(1 if (x >> (n - 1 - v)) & 1 else -1 for v in range(n))


def _spin_block(k: int, dtype) -> np.ndarray:
    idx = np.arange(1 << k, dtype=np.int64)
    shifts = np.arange(k - 1, -1, -1, dtype=np.int64)
    bits = (idx[:, None] >> shifts[None, :]) & 1
    return (2 * bits - 1).astype(dtype)


class _Enumerator:
    """Energies of all assignments, one block per prefix of high vertices."""

    def __init__(self, h: list, J: dict, n: int, dtype):
        self.n = n
        self.k = min(n, _BLOCK_BITS)
        self.hi = n - self.k
        self.dtype = dtype
        k, hi = self.k, self.hi
        self.low = _spin_block(k, dtype)
        h_low = np.array(h[hi:], dtype=dtype)
        J_low = np.zeros((k, k), dtype=dtype)
        self.cross = np.zeros((hi, k), dtype=dtype)
        self.high_pairs = []
        for (u, v), w in J.items():
            if u >= hi:
                J_low[u - hi, v - hi] = w
            elif v >= hi:
                self.cross[u, v - hi] += w
            else:
                self.high_pairs.append((u, v, w))
        self.h_high = h[:hi]
        self.h_low = h_low
        self.base = self.low @ h_low + ((self.low @ J_low) * self.low).sum(axis=1)

    @property
    def prefixes(self) -> int:
        return 1 << self.hi

    def block(self, p: int) -> np.ndarray:
        if self.hi == 0:
            return self.base
        s = [1 if (p >> (self.hi - 1 - v)) & 1 else -1 for v in range(self.hi)]
        const = sum(hv * sv for hv, sv in zip(self.h_high, s))
        const += sum(w * s[u] * s[v] for u, v, w in self.high_pairs)
        field_ = np.asarray(s, dtype=self.dtype) @ self.cross
        return self.base + self.low @ field_ + const


def _map_blocks(fn, count: int, workers: int):
    if workers <= 1 or count == 1:
        return [fn(p) for p in range(count)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, range(count)))


def solve_exhaustive(inst: IsingInstance, *, cap: int | None = None, workers: int = 1) -> GroundStateResult:
    """Exact minimum, lexicographically smallest minimizer, and degeneracy.

    All ``2**n`` assignments are enumerated.  The order is ``-1 < +1``
    compared vertex by vertex from vertex 0.  Output does not depend on
    ``workers``.
    """
    n = inst.graph.vertex_count
    cap = solver_cap() if cap is None else cap
    if n > cap:
        raise SolverCapError(f"{n} spins exceeds the exhaustive solver cap of {cap}")
    if n == 0:
        return GroundStateResult(0, (), 1)

    if inst.is_exact:
        scale = 1
        for x in inst._values():
            scale = math.lcm(scale, Fraction(x).denominator)
        h = [int(Fraction(x) * scale) for x in inst.h]
        J = {e: int(Fraction(x) * scale) for e, x in inst.J.items()}
        bound = sum(map(abs, h)) + sum(map(abs, J.values()))
        dtype = np.int64 if bound < 2**62 else object
        en = _Enumerator(h, J, n, dtype)

        def scan(p):
            e = en.block(p)
            m = e.min()
            hits = np.flatnonzero(e == m)
            return m, int(hits[0]), len(hits)

        parts = _map_blocks(scan, en.prefixes, workers)
        best = min(int(m) for m, _, _ in parts)
        first = None
        count = 0
        for p, (m, i, c) in enumerate(parts):
            if m == best:
                if first is None:
                    first = (p << en.k) | i
                count += c
        min_energy = _normalize(Fraction(best, scale))
    else:
        en = _Enumerator([float(x) for x in inst.h], {e: float(x) for e, x in inst.J.items()}, n, np.float64)
        best = min(_map_blocks(lambda p: en.block(p).min(), en.prefixes, workers))
        limit = best + FLOAT_TOL

        def scan(p):
            hits = np.flatnonzero(en.block(p) <= limit)
            return (int(hits[0]) if len(hits) else None), len(hits)

        first = None
        count = 0
        for p, (i, c) in enumerate(_map_blocks(scan, en.prefixes, workers)):
            if c and first is None:
                first = (p << en.k) | i
            count += c
        min_energy = float(best)
    return GroundStateResult(min_energy, _index_to_spins(first, n), count)
