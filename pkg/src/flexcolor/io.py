"""Line-oriented text formats.

One document may mix any of these records, one per line, with ``#`` comments::

    V <n>                      vertex count (ids 0..n-1)
    E <u> <v>                  edge
    R <v> <w1> ... <wk>        clockwise rotation at v
    L <v> <c1> ... <ck>        color list of v
    DG <v> <d>                 ambient degree deg_G(v) of a configuration vertex
    K <k>                      list size parameter
    REQ <v> <c> [weight]       weighted request, weight defaults to 1
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .errors import InputError, ParseError
from .graph import Graph
from .plane import PlaneGraph, plane_graph


@dataclass
class Document:
    n: int | None = None
    edges: list[tuple[int, int]] = field(default_factory=list)
    rotation: dict[int, list[int]] = field(default_factory=dict)
    lists: dict[int, frozenset[int]] = field(default_factory=dict)
    ambient: dict[int, int] = field(default_factory=dict)
    k: int | None = None
    requests: dict[tuple[int, int], float] = field(default_factory=dict)

    def graph(self) -> Graph:
        if self.n is None:
            raise InputError("missing V record")
        return Graph.from_edges(self.n, self.edges)

    def plane(self) -> PlaneGraph:
        g = self.graph()
        if len(self.rotation) != g.n and any(g.adj[v] for v in range(g.n) if v not in self.rotation):
            raise InputError("every non-isolated vertex needs an R record")
        return plane_graph(g, self.rotation)

    def list_assignment(self, n: int | None = None) -> list[frozenset[int]]:
        n = self.n if n is None else n
        missing = [v for v in range(n) if v not in self.lists]
        if missing:
            raise InputError(f"no list for vertices {missing[:5]}")
        return [self.lists[v] for v in range(n)]

    def ambient_degrees(self) -> list[int]:
        g = self.graph()
        return [self.ambient.get(v, g.degree(v)) for v in range(g.n)]


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None
    if any(x < 0 for x in values):
        raise ParseError("values must be nonnegative", lineno)
    return values


def parse(text: str, doc: Document | None = None) -> Document:
    doc = doc or Document()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tag, *rest = line.split()
        if tag == "V":
            (n,) = _arity(rest, 1, lineno)
            if doc.n is not None and doc.n != n:
                raise ParseError("conflicting V records", lineno)
            doc.n = n
        elif tag == "E":
            u, v = _arity(rest, 2, lineno)
            if u == v:
                raise ParseError("self-loop", lineno)
            doc.edges.append((u, v))
        elif tag == "R":
            if not rest:
                raise ParseError("R needs a vertex", lineno)
            v, *order = _ints(rest, lineno)
            if v in doc.rotation:
                raise ParseError(f"second rotation for {v}", lineno)
            doc.rotation[v] = order
        elif tag == "L":
            if len(rest) < 2:
                raise ParseError("L needs a vertex and at least one color", lineno)
            v, *colors = _ints(rest, lineno)
            if len(set(colors)) != len(colors):
                raise ParseError("repeated color in list", lineno)
            doc.lists[v] = frozenset(colors)
        elif tag == "DG":
            v, d = _arity(rest, 2, lineno)
            doc.ambient[v] = d
        elif tag == "K":
            (doc.k,) = _arity(rest, 1, lineno)
        elif tag == "REQ":
            if len(rest) not in (2, 3):
                raise ParseError("REQ takes a vertex, a color and an optional weight", lineno)
            v, c = _ints(rest[:2], lineno)
            w = 1.0
            if len(rest) == 3:
                try:
                    w = float(rest[2])
                except ValueError:
                    raise ParseError(f"bad weight {rest[2]!r}", lineno) from None
                if not w >= 0:
                    raise ParseError("weights are nonnegative", lineno)
            doc.requests[(v, c)] = doc.requests.get((v, c), 0.0) + w
        else:
            raise ParseError(f"unknown record {tag!r}", lineno)
    if doc.n is not None:
        for u, v in doc.edges:
            if u >= doc.n or v >= doc.n:
                raise InputError(f"edge ({u}, {v}) outside 0..{doc.n - 1}")
    return doc


def _arity(rest: list[str], count: int, lineno: int) -> list[int]:
    if len(rest) != count:
        raise ParseError(f"expected {count} value(s), got {len(rest)}", lineno)
    return _ints(rest, lineno)


def load(*paths: str | Path) -> Document:
    """Parse one or more files into a single document."""
    doc = Document()
    for p in paths:
        try:
            text = Path(p).read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read {p}: {exc.strerror}") from None
        try:
            parse(text, doc)
        except ParseError as exc:
            raise ParseError(f"{p}: {exc}") from None
    return doc


def dump_graph(g: Graph, rotation=None) -> str:
    lines = [f"V {g.n}"]
    lines += [f"E {u} {v}" for u, v in g.sorted_edges()]
    if rotation is not None:
        lines += [f"R {v} " + " ".join(map(str, rot)) for v, rot in enumerate(rotation) if rot]
    return "\n".join(lines) + "\n"


def dump_plane(pg: PlaneGraph) -> str:
    return dump_graph(pg.graph, pg.rotation.rotation)


def dump_lists(lists) -> str:
    return "".join(f"L {v} " + " ".join(map(str, sorted(c))) + "\n" for v, c in enumerate(lists))


def dump_config(h: Graph, ambient, k: int) -> str:
    return dump_graph(h) + "".join(f"DG {v} {d}\n" for v, d in enumerate(ambient)) + f"K {k}\n"
