"""List colouring: decision, enumeration, uniform sampling, greedy extension and
the degree criterion for connected graphs with lists at least as long as degrees.

A list assignment is a sequence (or mapping) giving one iterable of
nonnegative colour ids per vertex. Full colourings are tuples indexed by vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import _kernels as K
from .errors import InputError, InternalConsistencyError, UncolorableError
from .graph import Graph, bfs_distances, block_is_gallai, blocks, connected_components

Lists = tuple[frozenset[int], ...]
Coloring = tuple[int, ...]

DEFAULT_ENUM_CAP = 1_000_000


def as_lists(g: Graph, lists) -> Lists:
    if isinstance(lists, Mapping):
        raw = [lists.get(v, ()) for v in range(g.n)]
    else:
        raw = list(lists)
        if len(raw) != g.n:
            raise InputError(f"list assignment has {len(raw)} entries for {g.n} vertices")
    out = []
    for v, lst in enumerate(raw):
        s = frozenset(int(c) for c in lst)
        if any(c < 0 for c in s):
            raise InputError(f"negative colour in L({v})")
        out.append(s)
    return tuple(out)


def validate_coloring(g: Graph, lists, phi) -> bool:
    """Independent check: every vertex coloured from its list, no edge monochromatic."""
    lists = as_lists(g, lists)
    if len(phi) != g.n:
        return False
    for v in range(g.n):
        if phi[v] not in lists[v]:
            return False
    return all(phi[u] != phi[v] for u, v in g.edges)


def csr(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    indptr = np.zeros(g.n + 1, dtype=np.int64)
    idx: list[int] = []
    for v in range(g.n):
        nb = sorted(g.adj[v])
        idx.extend(nb)
        indptr[v + 1] = indptr[v] + len(nb)
    return indptr, np.array(idx, dtype=np.int64)


@dataclass
class _Encoded:
    indptr: np.ndarray
    indices: np.ndarray
    masks: np.ndarray
    palette: list[int]


def _encode(g: Graph, lists: Lists) -> _Encoded | None:
    palette = sorted(set().union(*lists)) if lists else []
    if len(palette) > K.MAX_COLORS:
        return None
    pos = {c: i for i, c in enumerate(palette)}
    masks = np.zeros(g.n, dtype=np.int64)
    for v, lst in enumerate(lists):
        m = 0
        for c in lst:
            m |= 1 << pos[c]
        masks[v] = m
    ip, ix = csr(g)
    return _Encoded(ip, ix, masks, palette)


def _colorable_py(g: Graph, lists: Lists) -> Coloring | None:
    # wide-palette fallback, same search order as the kernel
    color: dict[int, int] = {}

    def avail(v):
        used = {color[u] for u in g.adj[v] if u in color}
        return sorted(lists[v] - used)

    def rec():
        if len(color) == g.n:
            return True
        best, best_a = None, None
        for v in range(g.n):
            if v not in color:
                a = avail(v)
                if best_a is None or len(a) < len(best_a):
                    best, best_a = v, a
                    if not a:
                        return False
        for c in best_a:
            color[best] = c
            if rec():
                return True
            del color[best]
        return False

    return tuple(color[v] for v in range(g.n)) if rec() else None


def is_colorable(g: Graph, lists) -> Coloring | None:
    """A witness L-colouring, or None. Deterministic for a fixed input."""
    lists = as_lists(g, lists)
    if any(not lst for lst in lists):
        return None
    enc = _encode(g, lists)
    if enc is None:
        return _colorable_py(g, lists)
    color = np.full(g.n, -1, dtype=np.int64)
    if not K.colorable_kernel(enc.indptr, enc.indices, enc.masks, color):
        return None
    return tuple(enc.palette[int(c)] for c in color)


@dataclass
class Enumeration:
    colorings: list[Coloring]
    overflow: bool

    @property
    def count(self) -> int:
        return len(self.colorings)


def _enumerate_py(g: Graph, lists: Lists, cap: int) -> tuple[list[Coloring], bool]:
    out: list[Coloring] = []
    color = [-1] * g.n

    def rec(v):
        if v == g.n:
            out.append(tuple(color))
            return len(out) > cap
        used = {color[u] for u in g.adj[v] if u < v}
        for c in sorted(lists[v] - used):
            color[v] = c
            if rec(v + 1):
                return True
        color[v] = -1
        return False

    over = rec(0) if g.n else (out.append(()) or False)
    return out[:cap], over or len(out) > cap


def enumerate_colorings(g: Graph, lists, cap: int = DEFAULT_ENUM_CAP) -> Enumeration:
    """All L-colourings in lexicographic order (by vertex id, then colour), at most ``cap``."""
    lists = as_lists(g, lists)
    if cap < 0:
        raise InputError("cap must be nonnegative")
    if g.n == 0:
        return Enumeration([()] if cap else [], cap == 0)
    if any(not lst for lst in lists):
        return Enumeration([], False)
    enc = _encode(g, lists)
    if enc is None:
        cols, over = _enumerate_py(g, lists, cap)
        return Enumeration(cols, over)
    total = K.enumerate_kernel(enc.indptr, enc.indices, enc.masks, np.zeros((0, g.n), dtype=np.int64), -1)
    keep = min(total, cap)
    out = np.zeros((keep, g.n), dtype=np.int64)
    if keep:
        K.enumerate_kernel(enc.indptr, enc.indices, enc.masks, out, keep)
    pal = np.array(enc.palette, dtype=np.int64)
    rows = [tuple(int(x) for x in row) for row in pal[out]] if keep else []
    return Enumeration(rows, total > cap)


def count_colorings(g: Graph, lists) -> int:
    lists = as_lists(g, lists)
    if g.n == 0:
        return 1
    if any(not lst for lst in lists):
        return 0
    enc = _encode(g, lists)
    if enc is None:
        return len(_enumerate_py(g, lists, 10**12)[0])
    return int(K.enumerate_kernel(enc.indptr, enc.indices, enc.masks, np.zeros((0, g.n), dtype=np.int64), -1))


def make_rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def sample_uniform(g: Graph, lists, seed, cap: int = DEFAULT_ENUM_CAP) -> Coloring:
    """One L-colouring drawn uniformly: full enumeration, then an index draw."""
    en = enumerate_colorings(g, lists, cap)
    if en.overflow:
        raise InputError(f"more than {cap} colourings; raise the cap")
    if not en.colorings:
        raise UncolorableError("uncolorable")
    rng = make_rng(seed)
    return en.colorings[int(rng.integers(en.count))]


@dataclass
class GreedyResult:
    coloring: dict[int, int]
    stuck: int | None = None

    @property
    def ok(self) -> bool:
        return self.stuck is None


def greedy_extend(g: Graph, lists, partial: Mapping[int, int], order: Sequence[int]) -> GreedyResult:
    """Colour ``order`` one vertex at a time with the smallest free list colour."""
    lists = as_lists(g, lists)
    color = dict(partial)
    for v, c in color.items():
        g._check(v)
        if c not in lists[v]:
            raise InputError(f"precoloured {v} uses colour {c} outside its list")
    for u, v in g.edges:
        if u in color and v in color and color[u] == color[v]:
            raise InputError(f"precolouring is not proper on edge ({u}, {v})")
    for v in order:
        if v in color:
            continue
        used = {color[u] for u in g.adj[v] if u in color}
        free = lists[v] - used
        if not free:
            return GreedyResult(color, stuck=v)
        color[v] = min(free)
    return GreedyResult(color)


@dataclass
class DegreeCriterion:
    applicable: bool
    coloring: Coloring | None = None
    reason: str = ""
    detail: dict = field(default_factory=dict)


def _greedy_towards(g: Graph, lists: Lists, color: dict[int, int], region: set[int], roots: Iterable[int]) -> None:
    """Colour ``region`` farthest-from-``roots`` first; each vertex still has an
    uncoloured neighbour nearer the roots when its turn comes."""
    roots = list(roots)
    dist: dict[int, int] = {}
    queue = []
    for r in roots:
        dist[r] = 0
        queue.append(r)
    allowed = region | set(roots)
    for x in queue:
        for y in sorted(g.adj[x]):
            if y in allowed and y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    order = sorted((v for v in region), key=lambda v: (-dist[v], v))
    for v in order:
        used = {color[u] for u in g.adj[v] if u in color}
        free = lists[v] - used
        if not free:
            raise InternalConsistencyError(f"degree criterion construction stuck at {v}")
        color[v] = min(free)


def _color_tight_block(g: Graph, lists: Lists, color: dict[int, int], block: list[int]) -> None:
    """Colour a 2-connected block that is neither complete nor an odd cycle,
    where each block vertex has at least as many free colours as block neighbours."""
    bset = set(block)

    def free(v):
        return lists[v] - {color[u] for u in g.adj[v] if u in color}

    free_lists = {v: free(v) for v in block}
    for v in block:
        if len(free_lists[v]) > len(g.adj[v] & bset):
            _greedy_towards(g, lists, color, bset - {v}, [v])
            color[v] = min(free(v))
            return
    # Two adjacent vertices with different lists: colour one with a colour the
    # other lacks; the other then has slack in the (connected) rest of the block.
    for x in block:
        for y in sorted(g.adj[x] & bset):
            extra = free_lists[x] - free_lists[y]
            if extra:
                color[x] = min(extra)
                rest = bset - {x}
                _greedy_towards(g, lists, color, rest - {y}, [y])
                fy = free(y)
                color[y] = min(fy)
                return
    # All lists equal, so the block is r-regular.
    common = sorted(free_lists[block[0]])
    r = len(common)
    if r == 2:
        # even cycle: alternate two colours around it
        start = block[0]
        prev, cur = None, start
        i = 0
        while cur not in color:
            color[cur] = common[i % 2]
            nxt = [u for u in sorted(g.adj[cur] & bset) if u != prev and u not in color]
            prev, cur = cur, (nxt[0] if nxt else start)
            i += 1
        return
    # Brooks-style: nonadjacent x, y with common neighbour z and block - x - y connected.
    for z in block:
        nb = sorted(g.adj[z] & bset)
        for i, x in enumerate(nb):
            for y in nb[i + 1:]:
                if y in g.adj[x]:
                    continue
                rest = bset - {x, y}
                if len(connected_components(g, rest)) != 1:
                    continue
                color[x] = color[y] = common[0]
                _greedy_towards(g, lists, color, rest - {z}, [z])
                fz = free(z)
                color[z] = min(fz)
                return
    raise InternalConsistencyError("no Brooks triple in a non-Gallai regular block")


def degree_criterion_colorable(g: Graph, lists) -> DegreeCriterion:
    """Constructive degree criterion.

    Requires a connected graph with |L(u)| >= deg(u). Colourable when some vertex
    has a spare colour, or some block is neither complete nor an odd cycle;
    otherwise reports the criterion inapplicable (which is not a verdict).
    """
    lists = as_lists(g, lists)
    for v in range(g.n):
        if len(lists[v]) < g.degree(v):
            raise InputError(f"|L({v})| = {len(lists[v])} < deg = {g.degree(v)}")
    if g.n == 0:
        return DegreeCriterion(False, reason="empty graph")
    if len(connected_components(g)) != 1:
        raise InputError("degree criterion needs a connected graph")
    color: dict[int, int] = {}
    slack = [v for v in range(g.n) if len(lists[v]) > g.degree(v)]
    if slack:
        root = slack[0]
        _greedy_towards(g, lists, color, set(range(g.n)) - {root}, [root])
        color[root] = min(lists[root] - {color[u] for u in g.adj[root]})
        return DegreeCriterion(True, tuple(color[v] for v in range(g.n)), "slack", {"vertex": root})
    for b in blocks(g).blocks:
        if not block_is_gallai(g, b):
            bset = set(b)
            _greedy_towards(g, lists, color, set(range(g.n)) - bset, b)
            _color_tight_block(g, lists, color, list(b))
            return DegreeCriterion(True, tuple(color[v] for v in range(g.n)), "block", {"block": list(b)})
    return DegreeCriterion(False, reason="every block is complete or an odd cycle")


def brute_force_colorable(g: Graph, lists) -> bool:
    """Reference oracle by exhaustive product over lists (tiny inputs only)."""
    from itertools import product

    lists = as_lists(g, lists)
    for phi in product(*[sorted(l) for l in lists]):
        if all(phi[u] != phi[v] for u, v in g.edges):
            return True
    return False


def bfs_order(g: Graph, root: int) -> list[int]:
    d = bfs_distances(g, root)
    return sorted(d, key=lambda v: (d[v], v))
