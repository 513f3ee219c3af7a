"""Simple undirected graphs on dense integer vertex ids, plus the structural
predicates the rest of the package leans on."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InputError


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph with vertices ``0..n-1``."""

    n: int
    edges: frozenset[tuple[int, int]] = frozenset()
    adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise InputError("vertex count must be nonnegative")
        norm = set()
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for e in self.edges:
            u, v = e
            if u == v:
                raise InputError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"edge ({u}, {v}) out of range for n={self.n}")
            a, b = (u, v) if u < v else (v, u)
            norm.add((a, b))
            nbrs[a].add(b)
            nbrs[b].add(a)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "adj", tuple(frozenset(s) for s in nbrs))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        edges = [tuple(e) for e in edges]
        seen = set()
        for u, v in edges:
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InputError(f"parallel edge ({u}, {v})")
            seen.add(key)
        return cls(n, frozenset(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def _check(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise InputError(f"vertex {v!r} out of range for n={self.n}")

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return self.adj[v]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def adjacency_masks(self) -> list[int]:
        return [sum(1 << w for w in a) for a in self.adj]

    def induced_subgraph(self, s: Iterable[int]) -> tuple["Graph", list[int]]:
        """Return ``G[s]`` and the list mapping new ids to old ids.

        New ids follow the sorted order of ``s``.
        """
        old = vertex_set(self, s)
        index = {v: i for i, v in enumerate(old)}
        edges = [
            (index[u], index[v])
            for u, v in self.edges
            if u in index and v in index
        ]
        return Graph(len(old), frozenset(edges)), old

    def relabel_to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g


def vertex_set(g: Graph, s: Iterable[int]) -> list[int]:
    """Validate ``s`` against ``g`` and return it as a sorted duplicate-free list."""
    out = sorted(set(s))
    for v in out:
        g._check(v)
    return out


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    return g.induced_subgraph(s)


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def connected_components(g: Graph, within: Iterable[int] | None = None) -> list[list[int]]:
    """Components of ``g`` (or of ``g[within]``), each sorted, ordered by least vertex."""
    allowed = set(range(g.n)) if within is None else set(within)
    seen: set[int] = set()
    comps = []
    for s in sorted(allowed):
        if s in seen:
            continue
        stack = [s]
        seen.add(s)
        comp = []
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in g.adj[x]:
                if y in allowed and y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def find_cycle(g: Graph, length: int) -> list[int] | None:
    """Vertices of some cycle on exactly ``length`` vertices, in cyclic order, or None."""
    if length < 3:
        raise InputError("cycle length must be at least 3")
    if length > g.n:
        return None
    # Canonical start: the cycle's least vertex, so paths only visit larger ids.
    for start in range(g.n):
        stack = [(start, [start], 1 << start)]
        while stack:
            x, path, mask = stack.pop()
            for y in g.adj[x]:
                if y <= start or mask >> y & 1:
                    continue
                if len(path) + 1 == length:
                    if start in g.adj[y]:
                        return path + [y]
                    continue
                stack.append((y, path + [y], mask | (1 << y)))
    return None


def has_cycle_of_length(g: Graph, length: int) -> bool:
    """True iff ``g`` has a (not necessarily induced) cycle on exactly ``length`` vertices."""
    return find_cycle(g, length) is not None


def is_c4c5_free(g: Graph) -> bool:
    return not has_cycle_of_length(g, 4) and not has_cycle_of_length(g, 5)


def girth(g: Graph) -> float:
    best = float("inf")
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        for x in queue:
            for y in g.adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def bfs_distances(g: Graph, source: int, within: Iterable[int] | None = None) -> dict[int, int]:
    allowed = None if within is None else set(within)
    dist = {source: 0}
    queue = [source]
    for x in queue:
        for y in g.adj[x]:
            if y not in dist and (allowed is None or y in allowed):
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: tuple[int, ...]


def blocks(g: Graph) -> BlockDecomposition:
    """Block/cut-vertex decomposition (iterative Hopcroft-Tarjan).

    Bridges are two-vertex blocks and isolated vertices are one-vertex blocks.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    found: list[tuple[int, ...]] = []
    cuts: set[int] = set()
    t = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        if not g.adj[root]:
            disc[root] = t
            t += 1
            found.append((root,))
            continue
        disc[root] = low[root] = t
        t += 1
        edge_stack: list[tuple[int, int]] = []
        root_children = 0
        stack = [(root, -1, iter(sorted(g.adj[root])))]
        while stack:
            x, parent, it = stack[-1]
            advanced = False
            for y in it:
                if disc[y] == -1:
                    edge_stack.append((x, y))
                    disc[y] = low[y] = t
                    t += 1
                    if x == root:
                        root_children += 1
                    stack.append((y, x, iter(sorted(g.adj[y]))))
                    advanced = True
                    break
                if y != parent and disc[y] < disc[x]:
                    edge_stack.append((x, y))
                    low[x] = min(low[x], disc[y])
            if advanced:
                continue
            stack.pop()
            if not stack:
                break
            p = stack[-1][0]
            low[p] = min(low[p], low[x])
            if low[x] >= disc[p]:
                if p != root:
                    cuts.add(p)
                comp: set[int] = set()
                while edge_stack:
                    a, b = edge_stack.pop()
                    comp.update((a, b))
                    if (a, b) == (p, x):
                        break
                found.append(tuple(sorted(comp)))
        if root_children > 1:
            cuts.add(root)
    found.sort()
    return BlockDecomposition(tuple(found), tuple(sorted(cuts)))


def block_is_gallai(g: Graph, block: Sequence[int]) -> bool:
    """True iff ``g[block]`` is complete or an odd cycle."""
    k = len(block)
    bset = set(block)
    deg = [len(g.adj[v] & bset) for v in block]
    m = sum(deg) // 2
    if m == k * (k - 1) // 2:
        return True
    return k >= 3 and k % 2 == 1 and all(d == 2 for d in deg)


def _has_short_path(g: Graph, a: int, b: int) -> bool:
    """Is there a simple path from ``a`` to ``b`` with exactly 2 or 3 edges?"""
    na, nb = g.adj[a], g.adj[b]
    if na & nb:
        return True
    for x in na:
        if x == b:
            continue
        for y in g.adj[x]:
            if y != a and y != b and y in nb:
                return True
    return False


def is_p3p4_independent(g: Graph, s: Iterable[int]) -> bool:
    """No two members of ``s`` are joined by a path with 2 or 3 edges.

    Paths are simple; interior vertices are unrestricted. Adjacent members are
    allowed as long as no such path also joins them.
    """
    members = vertex_set(g, s)
    return all(not _has_short_path(g, a, b) for a, b in combinations(members, 2))


def p3p4_independent_sets(g: Graph, max_size: int, within: Iterable[int] | None = None) -> list[tuple[int, ...]]:
    """All (P3+P4)-independent sets of size ``0..max_size``, size-then-lex order."""
    verts = sorted(range(g.n) if within is None else set(within))
    ok = {(a, b): not _has_short_path(g, a, b) for a, b in combinations(verts, 2)}
    out: list[tuple[int, ...]] = [()]
    level = [(v,) for v in verts] if max_size >= 1 else []
    size = 1
    while level and size <= max_size:
        out.extend(level)
        if size == max_size:
            break
        nxt = []
        for t in level:
            for v in verts:
                if v <= t[-1]:
                    continue
                if all(ok[(u, v)] for u in t):
                    nxt.append(t + (v,))
        level = nxt
        size += 1
    return out
