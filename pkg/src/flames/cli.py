"""Command-line front end.  Reports go to stdout as JSON, diagnostics to
stderr.

Exit codes: 0 success, 1 a checked contract failed, 2 bad input,
3 size bound exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import flame, flow, greedoid
from .digraph import FRACTIONAL, INTEGRAL, RootedDigraph, is_integral, normalize
from .errors import FlameError, SizeBoundError
from .textio import parse_graph

OK, VIOLATED, INPUT_ERROR, TOO_LARGE = 0, 1, 2, 3


def _fmt_vector(c) -> dict[str, str]:
    return {str(eid): str(x) for eid, x in sorted(c.items())}


class _Input:
    """A parsed and normalized input graph plus report bookkeeping."""

    def __init__(self, path: str, mode: str | None):
        data = Path(path).read_bytes()
        self.digest = hashlib.sha256(data).hexdigest()
        raw, cap = parse_graph(data.decode("utf-8"))
        if mode is None:
            mode = INTEGRAL if is_integral(cap) else FRACTIONAL
        if mode == INTEGRAL and not is_integral(cap):
            raise FlameError("integral mode needs integral capacities")
        self.raw = raw
        self.mode = mode
        self.graph, self.capacity, self.provenance, self.warnings = \
            normalize(raw, cap, mode)

    def load_vector(self, path: str) -> dict[int, Fraction]:
        """Read a vector on this graph's edges: either the JSON report of
        ``extract`` or a graph file with the same arcs."""
        text = Path(path).read_text(encoding="utf-8")
        if text.lstrip().startswith("{"):
            doc = json.loads(text)
            values = doc.get("result", doc).get("flame")
            if values is None:
                raise FlameError(f"{path}: no 'flame' vector in JSON")
            vec = {int(k): Fraction(v) for k, v in values.items()}
            for eid in vec:
                if not self.graph.has_edge(eid):
                    raise FlameError(f"{path}: unknown edge id {eid}")
            return {e.id: vec.get(e.id, Fraction(0)) for e in self.graph.edges}
        other, cap = parse_graph(text)
        arcs = [(e.tail, e.head) for e in other.edges]
        if arcs != [(e.tail, e.head) for e in self.raw.edges]:
            raise FlameError(f"{path}: arcs differ from the input graph")
        return normalize(other, cap, self.mode).capacity

    def vertex(self, v: str) -> str:
        if not self.graph.has_vertex(v):
            raise FlameError(f"unknown vertex {v!r}")
        return v


def _order(D: RootedDigraph, args) -> tuple[str, ...]:
    if args.order:
        order = tuple(s for s in args.order.split(",") if s)
        for v in order:
            if not D.has_vertex(v):
                raise FlameError(f"unknown vertex {v!r} in --order")
        return order
    order = list(D.non_root)
    if args.shuffle_seed is not None:
        random.Random(args.shuffle_seed).shuffle(order)
    return tuple(order)


def cmd_lambda(inp: _Input, args):
    lam = flow.all_connectivities(inp.graph, inp.capacity)
    return OK, {"lambda": {v: str(x) for v, x in lam.items()}}


def cmd_extract(inp: _Input, args):
    order = _order(inp.graph, args)
    f, trace = flame.extract_flame(inp.graph, inp.capacity, order)
    report = flame.verify(inp.graph, inp.capacity, f)
    payload = {"flame": _fmt_vector(f), "trace": trace.to_dict(),
               "report": report.to_dict()}
    if inp.mode == INTEGRAL:
        payload["kept_edges"] = sorted(
            eid for eid, x in f.items() for _ in range(int(x)))
    return (OK if report.ok else VIOLATED), payload


def cmd_verify(inp: _Input, args):
    f = inp.load_vector(args.against)
    report = flame.verify(inp.graph, inp.capacity, f)
    return (OK if report.ok else VIOLATED), report.to_dict()


def cmd_greedoid_check(inp: _Input, args):
    report = greedoid.check_greedoid_axioms(inp.graph, args.max_edges)
    good = (report.is_greedoid and report.accessible
            and report.basis_sizes == (int(report.connectivity_sum),))
    return (OK if good else VIOLATED), report.to_dict()


def cmd_decompose(inp: _Input, args):
    D = inp.graph
    x = flow.max_flow(D, inp.capacity, inp.vertex(args.sink))
    dec = flow.decompose(D, x)

    def piece(edges, w):
        walk = [D.edge(edges[0]).tail] + [D.edge(e).head for e in edges]
        return {"edges": list(edges), "vertices": walk, "weight": str(w)}

    return OK, {"sink": x.sink, "amount": str(x.amount),
                "flow": _fmt_vector(x.values),
                "paths": [piece(*p) for p in dec.paths],
                "cycles": [piece(*p) for p in dec.cycles]}


def cmd_augment(inp: _Input, args):
    D = inp.graph
    y = inp.load_vector(args.flame)
    u = inp.vertex(args.vertex)
    if args.fractional:
        step, grown = greedoid.fractional_augment(D, inp.capacity, y, u)
    else:
        if any(x not in (0, 1) for x in inp.capacity.values()):
            raise FlameError("edge augmentation needs unit capacities")
        H = {eid for eid, x in y.items() if x > 0}
        step = greedoid.find_augmenting_edge(D, H, u)
        grown = {e.id: Fraction(int(e.id in H or e.id == step.edge))
                 for e in D.edges}
    holds = flame.is_flame_fast(D, grown)
    return (OK if holds else VIOLATED), {
        "step": step.to_dict(), "flame": _fmt_vector(grown),
        "still_flame": holds}


COMMANDS = {
    "lambda": cmd_lambda,
    "extract": cmd_extract,
    "verify": cmd_verify,
    "greedoid-check": cmd_greedoid_check,
    "decompose": cmd_decompose,
    "augment": cmd_augment,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flames",
        description="Connectivity-preserving flames of rooted digraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("file", help="graph in root/arc text format")
        p.add_argument("--mode", choices=[INTEGRAL, FRACTIONAL],
                       help="default: integral iff all capacities are")
        return p

    add("lambda", "connectivity from the root to every vertex")
    p = add("extract", "peel the capacities down to a flame")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--order", help="comma-separated vertex order")
    group.add_argument("--shuffle-seed", type=int)
    p = add("verify", "check a candidate flame against the capacities")
    p.add_argument("--against", required=True,
                   help="graph file or extract JSON holding the candidate")
    p = add("greedoid-check", "exhaustive greedoid axiom check")
    p.add_argument("--max-edges", type=int, default=greedoid.DEFAULT_MAX_EDGES)
    p = add("decompose", "maximum flow and its path/cycle decomposition")
    p.add_argument("--sink", required=True)
    p = add("augment", "one augmentation step of a flame")
    p.add_argument("--flame", required=True)
    p.add_argument("--vertex", required=True)
    p.add_argument("--fractional", action="store_true")
    return parser


def run(argv: list[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        inp = _Input(args.file, args.mode)
        code, payload = COMMANDS[args.command](inp, args)
    except SizeBoundError as exc:
        print(f"flames: {exc}", file=sys.stderr)
        return TOO_LARGE
    except (FlameError, OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"flames: {exc}", file=sys.stderr)
        return INPUT_ERROR
    for w in inp.warnings:
        print(f"flames: warning: {w}", file=sys.stderr)
    report = {
        "command": args.command,
        "input_digest": inp.digest,
        "mode": inp.mode,
        "vertex_index": inp.graph.index,
        "order": list(_order(inp.graph, args)) if args.command == "extract" else None,
        "result": payload,
        "warnings": inp.warnings,
        "wall_time": round(time.perf_counter() - start, 6),
    }
    json.dump(report, stdout, indent=2)
    stdout.write("\n")
    return code


def main() -> None:
    sys.exit(run())
