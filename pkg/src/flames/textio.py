"""Line-oriented graph text format.

::

    # comment
    root r
    arc r a 1/2
    arc a v 0.5
    arc r v          # capacity defaults to 1

Edge ids are assigned 0, 1, 2, ... in file order.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Mapping

from .digraph import Capacity, Edge, RootedDigraph
from .errors import FlameError, GraphFormatError


def format_rational(x) -> str:
    """Lowest-terms ``p/q`` (or plain ``p`` when integral)."""
    return str(Fraction(x))


def parse_rational(text: str) -> Fraction:
    """Parse ``2``, ``0.5`` or ``p/q`` exactly; reject negatives."""
    try:
        x = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"malformed capacity {text!r}") from None
    if x < 0:
        raise ValueError(f"negative capacity {text!r}")
    return x


def parse_graph(text: str) -> tuple[RootedDigraph, Capacity]:
    root = None
    vertices: dict[str, None] = {}
    edges: list[Edge] = []
    cap: Capacity = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        keyword = fields[0]
        if root is None:
            if keyword != "root" or len(fields) != 2:
                raise GraphFormatError(
                    "first statement must be 'root <vertex-id>'", lineno)
            root = fields[1]
            vertices[root] = None
            continue
        if keyword == "root":
            raise GraphFormatError("'root' given more than once", lineno)
        if keyword != "arc":
            raise GraphFormatError(f"unknown statement {keyword!r}", lineno)
        if len(fields) not in (3, 4):
            raise GraphFormatError(
                "expected 'arc <tail> <head> [<capacity>]'", lineno)
        tail, head = fields[1], fields[2]
        if tail == head:
            raise GraphFormatError(f"loop at {tail!r} is not allowed", lineno)
        try:
            value = parse_rational(fields[3]) if len(fields) == 4 else Fraction(1)
        except ValueError as exc:
            raise GraphFormatError(str(exc), lineno) from None
        vertices.setdefault(tail)
        vertices.setdefault(head)
        eid = len(edges)
        edges.append(Edge(eid, tail, head))
        cap[eid] = value
    if root is None:
        raise GraphFormatError("missing 'root' statement")
    try:
        graph = RootedDigraph(tuple(vertices), root, tuple(edges))
    except FlameError as exc:
        raise GraphFormatError(str(exc)) from None
    return graph, cap


def read_graph(path: str | Path) -> tuple[RootedDigraph, Capacity]:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def format_graph(D: RootedDigraph, c: Mapping[int, Fraction] | None = None,
                 comment: str | None = None) -> str:
    """Serialize ``D``; edge ids must be 0..m-1 in order to round-trip."""
    lines = []
    if comment:
        lines.extend(f"# {s}" for s in comment.splitlines())
    lines.append(f"root {D.root}")
    for e in D.edges:
        x = Fraction(1) if c is None else Fraction(c.get(e.id, 0))
        lines.append(f"arc {e.tail} {e.head} {format_rational(x)}")
    return "\n".join(lines) + "\n"
