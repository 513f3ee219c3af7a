"""Test and benchmark instances: named small graphs and random plane graphs."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InputError
from .graph import Graph, connected_components, find_cycle
from .plane import PlaneGraph, from_coordinates, plane_graph


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def prism(n: int) -> Graph:
    e = [(i, (i + 1) % n) for i in range(n)]
    e += [(n + i, n + (i + 1) % n) for i in range(n)]
    e += [(i, n + i) for i in range(n)]
    return Graph.from_edges(2 * n, e)


def cube_plane() -> PlaneGraph:
    pts = [(-2, -2), (2, -2), (2, 2), (-2, 2), (-1, -1), (1, -1), (1, 1), (-1, 1)]
    e = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)]
    return from_coordinates(pts, e)


def cycle_plane(n: int) -> PlaneGraph:
    g = cycle(n)
    return plane_graph(g, [[(i - 1) % n, (i + 1) % n] if n > 2 else [1 - i] for i in range(n)])


def _relabel_plane(pg: PlaneGraph, keep: list[int]) -> PlaneGraph:
    index = {v: i for i, v in enumerate(keep)}
    g, _ = pg.graph.induced_subgraph(keep)
    rot = [[index[u] for u in pg.rotation.rotation[v] if u in index] for v in keep]
    return plane_graph(g, rot)


def delete_edges(pg: PlaneGraph, drop: set[tuple[int, int]]) -> PlaneGraph:
    """Remove edges; the rotation restricts, so the drawing stays plane."""
    g = pg.graph
    edges = [e for e in g.edges if e not in drop]
    h = Graph(g.n, frozenset(edges))
    rot = [[u for u in pg.rotation.rotation[v] if (min(u, v), max(u, v)) not in drop] for v in range(g.n)]
    return plane_graph(h, rot)


def random_c4c5_free_plane(n_points: int, seed: int, keep_largest: bool = True) -> PlaneGraph:
    """Delaunay triangulation of random points, thinned until no C4 or C5 remains.

    Short cycles are found deterministically and one of their edges (chosen by
    the seeded RNG) is deleted until none are left.
    """
    from scipy.spatial import Delaunay

    rng = np.random.default_rng(seed)
    pts = rng.random((n_points, 2))
    tri = Delaunay(pts)
    edges = set()
    for s in tri.simplices:
        a, b, c = (int(x) for x in s)
        for u, v in ((a, b), (b, c), (a, c)):
            edges.add((min(u, v), max(u, v)))
    pg = from_coordinates([tuple(p) for p in pts], sorted(edges))
    while True:
        cyc = find_cycle(pg.graph, 4) or find_cycle(pg.graph, 5)
        if cyc is None:
            break
        ring = [(min(cyc[i], cyc[(i + 1) % len(cyc)]), max(cyc[i], cyc[(i + 1) % len(cyc)])) for i in range(len(cyc))]
        pg = delete_edges(pg, {ring[int(rng.integers(len(ring)))]})
    if keep_largest:
        comps = connected_components(pg.graph)
        best = max(comps, key=len)
        pg = _relabel_plane(pg, best)
    return pg


def random_lists(g: Graph, k: int, palette: int, seed: int) -> list[frozenset[int]]:
    rng = np.random.default_rng(seed)
    return [frozenset(int(c) for c in rng.choice(palette, size=k, replace=False)) for _ in range(g.n)]


def _unit(angle: float) -> tuple[float, float]:
    return math.cos(angle), math.sin(angle)


@dataclass(frozen=True)
class Drawing:
    """A straight-line drawing; kept so tests can recount faces geometrically."""

    points: tuple[tuple[float, float], ...]
    edges: tuple[tuple[int, int], ...]

    def plane(self) -> PlaneGraph:
        return from_coordinates(self.points, self.edges)


def _central_face(pg: PlaneGraph, centre) -> int:
    target = frozenset(centre)
    return next(i for i, f in enumerate(pg.faces) if f.degree == 3 and f.vertices() == target)


def triangle_gadget(corners: Sequence[tuple[int, Sequence[tuple[int, int]]]]) -> tuple[PlaneGraph, int]:
    """A central triangle whose corners carry outward ear triangles and leaves.

    ``corners`` gives, for each of the three corners, its degree and a list of
    ears ``(deg_p, deg_q)``: an ear is a triangle ``x p q`` hung outside the
    centre, with ``p`` and ``q`` padded by leaves to the stated degrees.
    Returns the plane graph and the index of the central face.
    """
    drawing, centre = triangle_gadget_drawing(corners)
    pg = drawing.plane()
    if not pg.is_planar():
        raise InputError("gadget drawing is not plane")
    return pg, _central_face(pg, centre)


def triangle_gadget_drawing(corners) -> tuple[Drawing, tuple[int, int, int]]:
    if len(corners) != 3:
        raise InputError("a triangle has three corners")
    pts: list[tuple[float, float]] = []
    edges: list[tuple[int, int]] = []

    def add(p) -> int:
        pts.append(p)
        return len(pts) - 1

    centre = [add(_unit(math.pi / 2 + 2 * math.pi * i / 3)) for i in range(3)]
    edges += [(centre[0], centre[1]), (centre[1], centre[2]), (centre[0], centre[2])]

    def leaves(at: int, direction: float, count: int, spread: float, reach: float):
        x, y = pts[at]
        for j in range(count):
            a = direction + spread * ((j + 1) / (count + 1) - 0.5)
            dx, dy = _unit(a)
            edges.append((at, add((x + reach * dx, y + reach * dy))))

    for i, (degree, ears) in enumerate(corners):
        x = centre[i]
        pad = degree - 2 - 2 * len(ears)
        if pad < 0:
            raise InputError(f"corner {i} cannot hold {len(ears)} ears at degree {degree}")
        theta = math.pi / 2 + 2 * math.pi * i / 3
        slots = 2 * len(ears) + pad
        width = math.radians(100)
        step = width / max(slots, 1)
        angles = [theta - width / 2 + step * (s + 0.5) for s in range(slots)]
        cx, cy = pts[x]
        for e, (dp, dq) in enumerate(ears):
            ring = []
            for a, d in ((angles[2 * e], dp), (angles[2 * e + 1], dq)):
                if d < 2:
                    raise InputError("ear vertices have degree at least 2")
                dx, dy = _unit(a)
                p = add((cx + dx, cy + dy))
                edges.append((x, p))
                ring.append((p, a, d))
            edges.append((ring[0][0], ring[1][0]))
            for p, a, d in ring:
                leaves(p, a, d - 2, math.radians(40), 0.3)
        for s in range(2 * len(ears), slots):
            dx, dy = _unit(angles[s])
            edges.append((x, add((cx + dx, cy + dy))))
    return Drawing(tuple(pts), tuple(edges)), tuple(centre)


def enclosed_poor_face() -> tuple[PlaneGraph, int]:
    """A (3,4,4)-face with two vice 4-vertices and only 6-faces beside it.

    The graph is C4/C5-free. Each vice vertex carries a (4,4,5) ear. With no
    7+-face next to it, the face is topped up only by well vertices reaching
    it along nice paths: the two 5-vertices of the ears directly, and two
    5-vertices through the 3-vertex ``x`` below ``u``.
    """
    drawing, centre = enclosed_poor_face_drawing()
    pg = drawing.plane()
    if not pg.is_planar():
        raise InputError("drawing is not plane")
    return pg, _central_face(pg, centre)


def enclosed_poor_face_drawing() -> tuple[Drawing, tuple[int, int, int]]:
    named = {
        "u": (0.0, -1.0), "v": (-1.0, 0.0), "w": (1.0, 0.0),
        "a": (-1.6, 1.2), "p": (-0.6, 2.2), "q": (0.6, 2.2), "c": (1.6, 1.2),
        "b": (-2.2, -0.2), "r": (-2.4, -1.6), "s": (-1.2, -2.6), "x": (0.0, -2.2),
        "d": (2.2, -0.2), "t": (2.4, -1.6), "y": (1.2, -2.6),
    }
    links = [
        ("u", "v"), ("u", "w"), ("v", "w"), ("u", "x"),
        ("v", "a"), ("v", "b"), ("a", "b"), ("w", "c"), ("w", "d"), ("c", "d"),
        ("a", "p"), ("p", "q"), ("q", "c"),
        ("b", "r"), ("r", "s"), ("s", "x"),
        ("x", "y"), ("y", "t"), ("t", "d"),
    ]
    # outward leaves fix the degrees: a, c, s, y become 5-vertices, b, d 4-vertices
    leaves = {"a": 2, "c": 2, "b": 1, "d": 1, "s": 3, "y": 3, "p": 1, "q": 1, "r": 1, "t": 1}
    names = list(named)
    index = {k: i for i, k in enumerate(names)}
    pts = [named[k] for k in names]
    edges = [(index[a], index[b]) for a, b in links]
    for k, count in leaves.items():
        x, y = named[k]
        base = math.atan2(y + 0.4, x)
        for j in range(count):
            dx, dy = _unit(base + math.radians(30) * (j - (count - 1) / 2))
            pts.append((x + 0.4 * dx, y + 0.4 * dy))
            edges.append((index[k], len(pts) - 1))
    return Drawing(tuple(pts), tuple(edges)), (index["u"], index["v"], index["w"])
