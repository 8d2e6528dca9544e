"""Command-line interface.

Exit codes: 0 success, 1 verification or reduction check failed, 2 bad
usage or unreadable input.  ``-`` as a path means stdin/stdout.
"""
from __future__ import annotations

import argparse
import sys

from . import io
from .embedding import classify_embedding, embed_via_complete, verify_embedding
from .export import to_dot, to_svg
from .hardware import triad_chopped, triad_virtual
from .ising import SOLVER_CAP_ENV, solve_exhaustive
from .reduction import EmbeddedIsing, broken_chains, embed_ising, reduction_check

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _chain_strength(text: str):
    if text in ("auto", "auto_sufficient"):
        return "auto"
    try:
        value = int(text)
    except ValueError:
        try:
            value = float(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected 'auto' or a number, got {text!r}") from None
    if not value < 0:
        raise argparse.ArgumentTypeError(f"chain strength must be negative, got {text}")
    return value


def _load(path, expect):
    try:
        return io.loads(io.read_text(path), expect)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except io.ManifestError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _emit(path, text):
    if path is not None:
        io.write_text(path, text)


def cmd_gen(args, out):
    if args.kind == "triad-virtual":
        hw, emb = triad_virtual(args.n)
        line = (f"qubits={hw.num_qubits} couplers={hw.num_couplers} "
                f"max-degree={hw.graph.max_degree()} per-chain={args.n - 1}")
    else:
        if args.deg is None:
            raise UsageError("triad-chopped needs --deg")
        hw, emb = triad_chopped(args.n, args.deg, args.mode, args.segment_size)
        sizes = [hw.qubit_meta[q].size for q in emb.models[0]]
        line = (f"qubits={hw.num_qubits} per-chain={len(sizes)} sizes={','.join(map(str, sizes))} "
                f"couplers={hw.num_couplers} max-degree={hw.graph.max_degree()}")
    _emit(args.hardware, io.dumps(hw))
    _emit(args.embedding, io.dumps(emb))
    print(line, file=sys.stderr if "-" in (args.hardware, args.embedding) else out)
    return OK


def cmd_embed(args, out):
    try:
        m = io.parse_manifest(io.read_text(args.graph), "graph")
        g = io.graph_from_json(m.payload)
    except OSError as exc:
        raise UsageError(f"cannot read {args.graph}: {exc.strerror}") from None
    except io.ManifestError as exc:
        raise UsageError(f"{args.graph}: {exc}") from None
    emb = embed_via_complete(g, args.deg, args.mode, args.segment_size)
    violations = verify_embedding(emb)
    io.write_text(args.output, io.dumps(emb, names=m.payload.get("names")))
    msg = sys.stderr if args.output == "-" else out
    if violations:
        for v in violations:
            print(v, file=sys.stderr)
        return FAILED
    print(f"models={len(emb.models)} qubits={emb.hardware.num_qubits} tau={len(emb.tau)}", file=msg)
    return OK


def cmd_verify(args, out):
    emb = _load(args.embedding, "embedding")
    violations = verify_embedding(emb)
    if violations:
        print(f"INVALID: {len(violations)} violation(s)", file=out)
        for v in violations:
            print(f"  {v}", file=out)
        return FAILED
    print(f"OK: valid {classify_embedding(emb)} embedding of {emb.logical_graph.vertex_count} "
          f"vertices in {emb.hardware.num_qubits} qubits", file=out)
    return OK


def cmd_reduce(args, out):
    inst = _load(args.ising, "ising")
    emb = _load(args.embedding, "embedding")
    if inst.graph != emb.logical_graph:
        raise UsageError("the Ising instance and the embedding describe different graphs")
    e = embed_ising(inst, emb, args.chain_strength)
    io.write_text(args.output, io.dumps(e))
    msg = sys.stderr if args.output == "-" else out
    print(f"spins={e.instance.graph.vertex_count} couplers={len(e.instance.graph.edges)} "
          f"offset={io.format_energy(e.aligned_offset)}", file=msg)
    return OK


def cmd_solve(args, out):
    obj = _load(args.file, ("ising", "embedded_ising"))
    embedded = isinstance(obj, EmbeddedIsing)
    inst = obj.instance if embedded else obj
    r = solve_exhaustive(inst, cap=args.cap, workers=args.workers)
    print(f"min={io.format_energy(r.min_energy)} degeneracy={r.degeneracy} argmin={io.format_spins(r.argmin)}",
          file=out)
    if embedded:
        broken = broken_chains(r.argmin, obj.embedding)
        print(f"offset={io.format_energy(obj.aligned_offset)} "
              f"broken-chains={','.join(map(str, broken)) or 'none'}", file=out)
    _emit(args.output, io.dumps(r))
    return OK


def cmd_check(args, out):
    inst = _load(args.ising, "ising")
    emb = _load(args.embedding, "embedding")
    if inst.graph != emb.logical_graph:
        raise UsageError("the Ising instance and the embedding describe different graphs")
    r = reduction_check(inst, emb, args.chain_strength, cap=args.cap, workers=args.workers)
    fmt = io.format_energy
    detail = (f"E_min={fmt(r.original.min_energy)} E_emb_min={fmt(r.embedded.min_energy)} "
              f"offset={fmt(r.aligned_offset)}")
    if r.ok:
        print("OK: E_emb_min = E_min + offset", file=out)
    else:
        reasons = []
        if not r.energy_match:
            reasons.append("E_emb_min != E_min + offset")
        if r.broken_chains:
            reasons.append(f"broken chains {list(r.broken_chains)}")
        elif not r.attains_min:
            reasons.append("unembedded argmin misses E_min")
        print(f"FAIL: {'; '.join(reasons)}", file=out)
    print(detail, file=out)
    _emit(args.output, io.dumps(r))
    return OK if r.ok else FAILED


def cmd_export(args, out):
    obj = _load(args.file, ("graph", "hardware", "embedding"))
    text = to_dot(obj) if args.format == "dot" else to_svg(obj)
    io.write_text(args.output, text)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="triadminor", description=(
        "TRIAD complete-graph-minor hardware: generate, embed, verify, reduce and solve."))
    sub = p.add_subparsers(dest="command", required=True)

    def chop_flags(sp):
        sp.add_argument("--mode", choices=("optimal", "uniform"), default="optimal",
                        help="segment sizing for chopped chains (default: optimal)")
        sp.add_argument("--segment-size", type=int, help="positions per physical qubit in uniform mode")

    def solver_flags(sp):
        sp.add_argument("--cap", type=int, help=f"max spins for exhaustive solving (default 26, env {SOLVER_CAP_ENV})")
        sp.add_argument("--workers", type=int, default=1, help="solver threads; results do not depend on it")

    sp = sub.add_parser("gen", help="generate TRIAD hardware and its canonical K_n embedding")
    sp.add_argument("kind", choices=("triad-virtual", "triad-chopped"))
    sp.add_argument("--n", type=int, required=True, help="size of the complete graph")
    sp.add_argument("--deg", type=int, help="couplers allowed per physical qubit (triad-chopped)")
    chop_flags(sp)
    sp.add_argument("--hardware", metavar="PATH", help="write the hardware manifest here")
    sp.add_argument("--embedding", metavar="PATH", help="write the embedding manifest here")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("embed", help="embed a graph through the chopped TRIAD of its size")
    sp.add_argument("graph", help="graph manifest")
    sp.add_argument("--deg", type=int, required=True)
    chop_flags(sp)
    sp.add_argument("-o", "--output", default="-", help="embedding manifest (default stdout)")
    sp.set_defaults(func=cmd_embed)

    sp = sub.add_parser("verify", help="check an embedding against the minor-embedding definition")
    sp.add_argument("embedding")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("reduce", help="build the embedded Ising instance on hardware")
    sp.add_argument("ising")
    sp.add_argument("embedding")
    sp.add_argument("--chain-strength", type=_chain_strength, default="auto",
                    help="'auto' or a negative number (default auto)")
    sp.add_argument("-o", "--output", default="-", help="embedded_ising manifest (default stdout)")
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("solve", help="exhaustive ground state of an ising or embedded_ising file")
    sp.add_argument("file")
    solver_flags(sp)
    sp.add_argument("-o", "--output", help="also write a report manifest")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("check", help="verify the reduction by solving both sides exhaustively")
    sp.add_argument("ising")
    sp.add_argument("embedding")
    sp.add_argument("--chain-strength", type=_chain_strength, default="auto")
    solver_flags(sp)
    sp.add_argument("-o", "--output", help="also write a report manifest")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("export", help="render a graph, hardware or embedding as DOT or SVG")
    sp.add_argument("file")
    sp.add_argument("--format", choices=("dot", "svg"), required=True)
    sp.add_argument("-o", "--output", default="-")
    sp.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
