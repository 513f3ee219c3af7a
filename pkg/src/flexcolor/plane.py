"""Combinatorial plane embeddings given as rotation systems.

A rotation lists each vertex's neighbours in clockwise order. Faces are traced
on darts: after arriving at ``v`` along ``u -> v`` we leave along
``v -> pred_v(u)``, the neighbour just before ``u`` in ``v``'s rotation.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import InputError
from .graph import Graph, connected_components


@dataclass(frozen=True)
class Face:
    walk: tuple[int, ...]
    # set only for the face around an isolated vertex, whose walk is empty
    isolated: int | None = None

    @property
    def degree(self) -> int:
        return len(self.walk)

    def vertices(self) -> frozenset[int]:
        if self.isolated is not None:
            return frozenset((self.isolated,))
        return frozenset(self.walk)

    def edges(self) -> list[tuple[int, int]]:
        w = self.walk
        if len(w) < 2:
            return []
        return [(w[i], w[(i + 1) % len(w)]) for i in range(len(w))]


@dataclass(frozen=True)
class RotationSystem:
    graph: Graph
    rotation: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.rotation) != self.graph.n:
            raise InputError("rotation must list every vertex")
        for v, rot in enumerate(self.rotation):
            if len(rot) != len(set(rot)) or set(rot) != set(self.graph.adj[v]):
                raise InputError(f"rotation at {v} is not a permutation of its neighbours")

    @classmethod
    def from_lists(cls, g: Graph, rotation: Mapping[int, Sequence[int]] | Sequence[Sequence[int]]):
        if isinstance(rotation, Mapping):
            rot = tuple(tuple(rotation.get(v, ())) for v in range(g.n))
        else:
            rot = tuple(tuple(r) for r in rotation)
        return cls(g, rot)

    def mirror(self) -> "RotationSystem":
        return RotationSystem(self.graph, tuple(tuple(reversed(r)) for r in self.rotation))


def _pred_table(rs: RotationSystem) -> dict[tuple[int, int], int]:
    pred = {}
    for v, rot in enumerate(rs.rotation):
        d = len(rot)
        for i, u in enumerate(rot):
            pred[(v, u)] = rot[(i - 1) % d]
    return pred


def faces(rs: RotationSystem) -> list[Face]:
    """Trace every face. Isolated vertices contribute one walk of length 0."""
    pred = _pred_table(rs)
    seen: set[tuple[int, int]] = set()
    out: list[Face] = []
    for v in range(rs.graph.n):
        if not rs.rotation[v]:
            out.append(Face((), isolated=v))
            continue
        for u in rs.rotation[v]:
            if (v, u) in seen:
                continue
            walk = []
            a, b = v, u
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append(a)
                a, b = b, pred[(b, a)]
            out.append(Face(tuple(walk)))
    return out


def validate_planarity(rs: RotationSystem) -> bool:
    """Genus-zero check: each component satisfies V - E + F = 2 on its own faces."""
    fs = faces(rs)
    g = rs.graph
    comp_of = {}
    comps = connected_components(g)
    for i, c in enumerate(comps):
        for v in c:
            comp_of[v] = i
    face_count = Counter()
    for v in range(g.n):
        if not g.adj[v]:
            face_count[comp_of[v]] += 1
    for f in fs:
        if f.walk:
            face_count[comp_of[f.walk[0]]] += 1
    for i, c in enumerate(comps):
        cset = set(c)
        e = sum(1 for a, b in g.edges if a in cset)
        if len(c) - e + face_count[i] != 2:
            return False
    return True


@dataclass(frozen=True)
class IncidenceCounts:
    # f_k(v): number of k-faces at v, counted with multiplicity along walks
    vertex_face_degrees: tuple[Counter, ...]
    # n_k(v): number of neighbours of degree k
    vertex_neighbor_degrees: tuple[Counter, ...]
    # n_k(f): number of vertices of degree k on f, with multiplicity
    face_vertex_degrees: tuple[Counter, ...]
    # least vertex degree on each face (None for an empty walk)
    face_min_degree: tuple[int | None, ...]

    def f(self, k: int, v: int) -> int:
        return self.vertex_face_degrees[v][k]

    def f3(self, v: int) -> int:
        return self.vertex_face_degrees[v][3]


@dataclass(frozen=True)
class PlaneGraph:
    rotation: RotationSystem
    faces: tuple[Face, ...] = field(init=False)
    dart_face: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        fs = tuple(faces(self.rotation))
        object.__setattr__(self, "faces", fs)
        dart = {}
        for i, f in enumerate(fs):
            for e in f.edges():
                dart[e] = i
        object.__setattr__(self, "dart_face", dart)

    @property
    def graph(self) -> Graph:
        return self.rotation.graph

    @property
    def n(self) -> int:
        return self.rotation.graph.n

    def degree(self, v: int) -> int:
        return self.rotation.graph.degree(v)

    def faces_at(self, v: int) -> list[int]:
        """Face ids met at ``v``, once per corner (so with multiplicity)."""
        if not self.rotation.rotation[v]:
            return [i for i, f in enumerate(self.faces) if f.isolated == v]
        return [self.dart_face[(v, u)] for u in self.rotation.rotation[v]]

    def faces_on_edge(self, u: int, v: int) -> tuple[int, int]:
        return self.dart_face[(u, v)], self.dart_face[(v, u)]

    def is_planar(self) -> bool:
        return validate_planarity(self.rotation)


def plane_graph(g: Graph, rotation) -> PlaneGraph:
    return PlaneGraph(RotationSystem.from_lists(g, rotation))


def incidence_counts(pg: PlaneGraph) -> IncidenceCounts:
    g = pg.graph
    deg = [len(a) for a in g.adj]
    vf = [Counter() for _ in range(g.n)]
    for f in pg.faces:
        for v in f.walk:
            vf[v][f.degree] += 1
        if f.isolated is not None:
            vf[f.isolated][0] += 1
    vn = [Counter(deg[u] for u in g.adj[v]) for v in range(g.n)]
    fv = tuple(Counter(deg[v] for v in f.walk) for f in pg.faces)
    fmin = tuple(min((deg[v] for v in f.walk), default=None) for f in pg.faces)
    return IncidenceCounts(tuple(vf), tuple(vn), fv, fmin)


def from_coordinates(points: Sequence[tuple[float, float]], edges) -> PlaneGraph:
    """Straight-line drawing: rotations are the clockwise angular order of neighbours."""
    g = Graph.from_edges(len(points), edges)
    rot = []
    for v in range(g.n):
        x0, y0 = points[v]
        nb = sorted(g.adj[v], key=lambda u: -math.atan2(points[u][1] - y0, points[u][0] - x0))
        rot.append(nb)
    return plane_graph(g, rot)
