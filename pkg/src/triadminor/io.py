"""Canonical JSON manifests.

Every file is ``{"artifact_kind": ..., "format_version": "1", "payload": ...}``
written with sorted keys and two-space indentation.  Floats use Python's
shortest round-trip ``repr``; non-integral fractions are written as exact
``"p/q"`` strings so that split biases survive a round trip.
"""
from __future__ import annotations

import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .embedding import MinorEmbedding
from .hardware import HardwareGraph, QubitMeta
from .ising import Graph, GroundStateResult, IsingInstance
from .reduction import EmbeddedIsing, ReductionReport

FORMAT_VERSION = "1"
KINDS = ("graph", "hardware", "embedding", "ising", "embedded_ising", "report")


class ManifestError(ValueError):
    pass


@dataclass(frozen=True)
class Manifest:
    artifact_kind: str
    payload: Any
    format_version: str = FORMAT_VERSION

    def dumps(self) -> str:
        doc = {"artifact_kind": self.artifact_kind, "format_version": self.format_version,
               "payload": self.payload}
        return json.dumps(doc, sort_keys=True, indent=2, allow_nan=False) + "\n"


def parse_manifest(text: str, expect: str | tuple[str, ...] | None = None) -> Manifest:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ManifestError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or set(doc) != {"artifact_kind", "format_version", "payload"}:
        raise ManifestError("manifest needs exactly artifact_kind, format_version and payload")
    kind = doc["artifact_kind"]
    if kind not in KINDS:
        raise ManifestError(f"unknown artifact_kind {kind!r}")
    if doc["format_version"] != FORMAT_VERSION:
        raise ManifestError(f"unsupported format_version {doc['format_version']!r}")
    if expect is not None:
        allowed = (expect,) if isinstance(expect, str) else expect
        if kind not in allowed:
            raise ManifestError(f"expected a {' or '.join(allowed)} manifest, got {kind}")
    return Manifest(kind, doc["payload"], doc["format_version"])


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def number(x):
    if isinstance(x, bool):
        raise ManifestError(f"expected a number, got {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return float(x)


def _num_in(x, what):
    if isinstance(x, str) and "/" in x:
        try:
            q = Fraction(x)
        except (ValueError, ZeroDivisionError):
            raise ManifestError(f"{what} must be a number, got {x!r}") from None
        return q.numerator if q.denominator == 1 else q
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise ManifestError(f"{what} must be a number, got {x!r}")
    if isinstance(x, float) and not math.isfinite(x):
        raise ManifestError(f"{what} must be finite")
    return x


def _int_in(x, what):
    if isinstance(x, bool) or not isinstance(x, int):
        raise ManifestError(f"{what} must be an integer, got {x!r}")
    return x


def _pair(x, what):
    if not isinstance(x, list) or len(x) != 2:
        raise ManifestError(f"{what} must be a two-element list, got {x!r}")
    return x


# graphs

def graph_to_json(g: Graph, names: list[str] | None = None) -> dict:
    out = {"vertex_count": g.vertex_count, "edges": [list(e) for e in g.edges]}
    if names is not None:
        out["names"] = list(names)
    return out


def graph_from_json(p: Any) -> Graph:
    """Decode a graph payload; edges may name vertices listed under ``names``."""
    if not isinstance(p, dict):
        raise ManifestError("graph payload must be an object")
    names = p.get("names")
    if names is not None:
        if not isinstance(names, list) or len(set(names)) != len(names):
            raise ManifestError("names must be a list of distinct labels")
        n = p.get("vertex_count", len(names))
        if n != len(names):
            raise ManifestError(f"vertex_count {n} disagrees with {len(names)} names")
        index = {name: i for i, name in enumerate(names)}
    else:
        n = _int_in(p.get("vertex_count"), "vertex_count")
        index = {}
    edges = []
    for e in p.get("edges", []):
        pair = []
        for x in _pair(e, "edge"):
            if isinstance(x, str):
                if x not in index:
                    raise ManifestError(f"unknown vertex name {x!r}")
                x = index[x]
            pair.append(_int_in(x, "edge endpoint"))
        edges.append(tuple(pair))
    try:
        return Graph(n, tuple(edges))
    except (ValueError, TypeError) as exc:
        raise ManifestError(f"invalid graph: {exc}") from None


# Ising instances

def ising_to_json(inst: IsingInstance) -> dict:
    return {"graph": graph_to_json(inst.graph),
            "h": [number(x) for x in inst.h],
            "J": [[u, v, number(w)] for (u, v), w in inst.J.items()]}


def ising_from_json(p: Any) -> IsingInstance:
    if not isinstance(p, dict):
        raise ManifestError("ising payload must be an object")
    g = graph_from_json(p.get("graph"))
    h = [_num_in(x, "h") for x in p.get("h", [])]
    J = {}
    for row in p.get("J", []):
        if not isinstance(row, list) or len(row) != 3:
            raise ManifestError(f"J entries are [u, v, value], got {row!r}")
        J[(_int_in(row[0], "J endpoint"), _int_in(row[1], "J endpoint"))] = _num_in(row[2], "J value")
    try:
        return IsingInstance(g, h, J)
    except (ValueError, TypeError) as exc:
        raise ManifestError(f"invalid Ising instance: {exc}") from None


# hardware

def hardware_to_json(hw: HardwareGraph) -> dict:
    qubits = []
    for q in hw.graph.vertices:
        rec: dict = {"id": q}
        if hw.coords is not None:
            rec["x"], rec["y"] = hw.coords[q]
        if hw.qubit_meta is not None:
            m = hw.qubit_meta[q]
            rec["chain"] = m.chain
            rec["positions"] = [m.first, m.last]
        qubits.append(rec)
    couplers = []
    for e in hw.graph.edges:
        rec = {"edge": list(e)}
        if e in hw.coupler_kind:
            rec["kind"] = hw.coupler_kind[e]
        couplers.append(rec)
    return {"degree_bound": hw.degree_bound, "qubits": qubits, "couplers": couplers}


def hardware_from_json(p: Any) -> HardwareGraph:
    if not isinstance(p, dict):
        raise ManifestError("hardware payload must be an object")
    qubits = p.get("qubits", [])
    if [q.get("id") for q in qubits] != list(range(len(qubits))):
        raise ManifestError("qubit ids must be 0..n-1 in order")
    coords = meta = None
    if qubits and all("x" in q for q in qubits):
        coords = tuple((_num_in(q["x"], "x"), _num_in(q["y"], "y")) for q in qubits)
    if qubits and all("chain" in q for q in qubits):
        meta = tuple(QubitMeta(_int_in(q["chain"], "chain"), *_pair(q["positions"], "positions"))
                     for q in qubits)
    edges, kinds = [], {}
    for c in p.get("couplers", []):
        e = tuple(_int_in(x, "coupler endpoint") for x in _pair(c.get("edge"), "coupler"))
        edges.append(e)
        if "kind" in c:
            kinds[e] = c["kind"]
    bound = p.get("degree_bound")
    try:
        return HardwareGraph(Graph(len(qubits), tuple(edges)), coords,
                             None if bound is None else _int_in(bound, "degree_bound"), meta, kinds)
    except (ValueError, TypeError) as exc:
        raise ManifestError(f"invalid hardware graph: {exc}") from None


# embeddings

def embedding_to_json(emb: MinorEmbedding, names: list[str] | None = None) -> dict:
    return {"logical_graph": graph_to_json(emb.logical_graph, names),
            "hardware_ref": emb.hardware_ref,
            "hardware": hardware_to_json(emb.hardware),
            "models": [list(m) for m in emb.models],
            "tau": [{"edge": list(e), "coupler": list(c)} for e, c in emb.tau.items()]}


def embedding_from_json(p: Any) -> MinorEmbedding:
    if not isinstance(p, dict):
        raise ManifestError("embedding payload must be an object")
    g = graph_from_json(p.get("logical_graph"))
    hw = hardware_from_json(p.get("hardware"))
    models = []
    for m in p.get("models", []):
        if not isinstance(m, list):
            raise ManifestError("each model is a list of qubits")
        models.append(tuple(_int_in(q, "model qubit") for q in m))
    tau = {}
    for rec in p.get("tau", []):
        e = tuple(_int_in(x, "tau edge") for x in _pair(rec.get("edge"), "tau edge"))
        c = tuple(_int_in(x, "tau coupler") for x in _pair(rec.get("coupler"), "tau coupler"))
        tau[e] = c
    return MinorEmbedding(g, hw, tuple(models), tau, str(p.get("hardware_ref", "")))


# embedded instances

def embedded_to_json(e: EmbeddedIsing) -> dict:
    return {"instance": ising_to_json(e.instance),
            "chain_couplers": [{"coupler": list(c), "chain": i} for c, i in e.chain_couplers.items()],
            "chain_strengths": [number(f) for f in e.strengths],
            "aligned_offset": number(e.aligned_offset),
            "embedding": embedding_to_json(e.embedding)}


def embedded_from_json(p: Any) -> EmbeddedIsing:
    if not isinstance(p, dict):
        raise ManifestError("embedded_ising payload must be an object")
    inst = ising_from_json(p.get("instance"))
    emb = embedding_from_json(p.get("embedding"))
    chains = {tuple(_pair(r["coupler"], "coupler")): _int_in(r["chain"], "chain")
              for r in p.get("chain_couplers", [])}
    strengths = tuple(_num_in(x, "chain strength") for x in p.get("chain_strengths", []))
    return EmbeddedIsing(inst, chains, strengths, emb, _num_in(p.get("aligned_offset"), "aligned_offset"))


# reports

def format_energy(x) -> str:
    if isinstance(x, float):
        return repr(x)
    return str(x)


def format_spins(s) -> str:
    return ",".join("+1" if x > 0 else "-1" for x in s)


def ground_state_to_json(r: GroundStateResult) -> dict:
    return {"report": "ground_state", "min_energy": number(r.min_energy),
            "argmin": list(r.argmin), "degeneracy": r.degeneracy}


def reduction_to_json(r: ReductionReport) -> dict:
    return {"report": "reduction",
            "ok": r.ok,
            "original": ground_state_to_json(r.original),
            "embedded": ground_state_to_json(r.embedded),
            "aligned_offset": number(r.aligned_offset),
            "energy_match": r.energy_match,
            "broken_chains": list(r.broken_chains),
            "unembedded": None if r.unembedded is None else list(r.unembedded),
            "unembedded_energy": None if r.unembedded_energy is None else number(r.unembedded_energy),
            "attains_min": r.attains_min}


def dumps(obj, **kw) -> str:
    """Canonical manifest text for any supported object."""
    if isinstance(obj, Graph):
        return Manifest("graph", graph_to_json(obj, kw.get("names"))).dumps()
    if isinstance(obj, IsingInstance):
        return Manifest("ising", ising_to_json(obj)).dumps()
    if isinstance(obj, HardwareGraph):
        return Manifest("hardware", hardware_to_json(obj)).dumps()
    if isinstance(obj, MinorEmbedding):
        return Manifest("embedding", embedding_to_json(obj, kw.get("names"))).dumps()
    if isinstance(obj, EmbeddedIsing):
        return Manifest("embedded_ising", embedded_to_json(obj)).dumps()
    if isinstance(obj, GroundStateResult):
        return Manifest("report", ground_state_to_json(obj)).dumps()
    if isinstance(obj, ReductionReport):
        return Manifest("report", reduction_to_json(obj)).dumps()
    raise TypeError(f"cannot serialize {type(obj).__name__}")


_DECODERS = {"graph": graph_from_json, "ising": ising_from_json, "hardware": hardware_from_json,
             "embedding": embedding_from_json, "embedded_ising": embedded_from_json}


def loads(text: str, expect: str | tuple[str, ...] | None = None):
    """Decode manifest text into the matching object (reports stay as dicts)."""
    m = parse_manifest(text, expect)
    decode = _DECODERS.get(m.artifact_kind)
    if decode is None:
        return m.payload
    try:
        return decode(m.payload)
    except ManifestError:
        raise
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise ManifestError(f"malformed {m.artifact_kind} payload: {exc}") from None
