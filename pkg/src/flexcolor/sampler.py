"""Recursive sampling of L-colourings with flexibility guarantees.

The graph is peeled into reducible pieces Y_1, Y_2, ... (each reducible with
respect to the graph that remains when it is removed). A sample colours the
pieces in reverse peel order. Piece Y_i gets lists L' = L minus the colours
of already coloured neighbours, and receives a colouring drawn uniformly from
all L'-colourings of G[Y_i].

With b the largest piece, every pair (v, c) with c in L(v) comes out with
probability at least eps = (1/k)^(b+k-2). Every small (P3+P4)-independent S
avoids a colour c with probability at least delta^|S|, where delta = (1/k)^b.
The estimators here measure both with one-sided Clopper-Pearson bounds.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np
from scipy.stats import beta

from .catalog import CatalogEntry, catalog_entries, match_configuration
from .coloring import Coloring, as_lists, enumerate_colorings, validate_coloring
from .errors import HypothesisViolated, InputError, InternalConsistencyError
from .graph import Graph, is_p3p4_independent
from .reducibility import (
    EmbeddedConfig,
    Limits,
    ReductionCertificate,
    check_reducible,
    replay_certificate,
)

DEFAULT_B = 138
GENERIC_LIMIT = 8
DEFAULT_CONFIDENCE = 0.99

# named RNG streams, folded into the seed's spawn key
STREAMS = {"sample": 1, "marginals": 2, "avoid": 3, "request": 4, "falsify": 5}


def stream_rng(seed: int, stream: str, index: int = 0) -> np.random.Generator:
    """Generator for sample ``index`` of a named stream. Streams and indices never collide."""
    ss = np.random.SeedSequence(int(seed) & (2**64 - 1), spawn_key=(STREAMS[stream], int(index)))
    return np.random.default_rng(ss)


@dataclass(frozen=True)
class FlexParams:
    k: int = 4
    b: int = DEFAULT_B

    def __post_init__(self):
        if self.k < 3 or self.b < 1:
            raise InputError("need k >= 3 and b >= 1")

    @property
    def delta(self) -> Fraction:
        return Fraction(1, self.k) ** self.b

    @property
    def eps(self) -> Fraction:
        return Fraction(1, self.k) ** (self.b + self.k - 2)

    def to_dict(self) -> dict:
        return {"k": self.k, "b": self.b, "delta": str(self.delta), "eps": str(self.eps)}


# ---------------------------------------------------------------- peeling


@dataclass
class Peel:
    z: tuple[int, ...]
    y: tuple[int, ...]
    certificate: ReductionCertificate
    source: str

    def to_dict(self) -> dict:
        return {"z_size": len(self.z), "y": list(self.y), "source": self.source, "mode": self.certificate.mode}


@dataclass
class ReductionTrace:
    k: int
    peels: list[Peel] = field(default_factory=list)

    @property
    def effective_b(self) -> int:
        return max((len(p.y) for p in self.peels), default=1)

    def params(self) -> FlexParams:
        return FlexParams(self.k, self.effective_b)

    def validate(self, g: Graph, b: int | None = None) -> None:
        """Z_{i+1} = Z_i minus Y_i, Y_i inside Z_i, certificates replay and hold."""
        z = set(range(g.n))
        for i, p in enumerate(self.peels):
            if set(p.z) != z or not set(p.y) <= z or not p.y:
                raise InternalConsistencyError(f"peel {i} does not follow the previous one")
            if b is not None and len(p.y) > b:
                raise InternalConsistencyError(f"peel {i} exceeds the size bound")
            if not p.certificate.reducible or not replay_certificate(p.certificate):
                raise InternalConsistencyError(f"peel {i} certificate does not replay")
            cfg = local_config(g, p.z, p.y, self.k)
            if cfg.H.edges != p.certificate.config.H.edges or cfg.ambient_degree != p.certificate.config.ambient_degree:
                raise InternalConsistencyError(f"peel {i} certificate is for a different subgraph")
            z -= set(p.y)
        if z:
            raise InternalConsistencyError("trace leaves vertices unpeeled")

    def summary(self) -> dict:
        sizes = Counter(len(p.y) for p in self.peels)
        return {
            "peels": len(self.peels),
            "effective_b": self.effective_b,
            "size_histogram": {str(s): sizes[s] for s in sorted(sizes)},
            "sources": dict(Counter(p.source.split(":")[0] for p in self.peels)),
        }


def local_config(g: Graph, z: Sequence[int], y: Sequence[int], k: int) -> EmbeddedConfig:
    """G[Y] with ambient degrees taken in G[Z]."""
    zset = set(z)
    h, old = g.induced_subgraph(y)
    deg = tuple(len(g.adj[v] & zset) for v in old)
    return EmbeddedConfig(h, deg, k, name="Y")


def _connected_sets(g: Graph, z: set[int], size: int) -> list[tuple[int, ...]]:
    """All connected vertex sets of the given size inside z, in lexicographic order.

    Each set is generated once, from its least vertex, by the usual
    exclusive-neighbourhood extension.
    """
    out: list[tuple[int, ...]] = []

    def extend(sub: set[int], ext: set[int], near: set[int], root: int) -> None:
        if len(sub) == size:
            out.append(tuple(sorted(sub)))
            return
        ext = set(ext)
        while ext:
            w = min(ext)
            ext.discard(w)
            fresh = {u for u in g.adj[w] if u in z and u > root and u not in sub and u not in near}
            extend(sub | {w}, ext | fresh, near | fresh | {w}, root)

    for root in sorted(z):
        ext = {u for u in g.adj[root] if u in z and u > root}
        extend({root}, ext, ext | {root}, root)
    out.sort()
    return out


class _CertCache:
    def __init__(self):
        self.store: dict = {}

    def get(self, cfg: EmbeddedConfig, mode: str, limits: Limits) -> ReductionCertificate:
        key = (cfg.H.edges, cfg.H.n, cfg.ambient_degree, cfg.k, mode)
        if key not in self.store:
            self.store[key] = check_reducible(cfg, mode, limits)
        return self.store[key]


_CACHE = _CertCache()
_CATALOG: list[tuple[CatalogEntry, EmbeddedConfig]] | None = None


def _catalog() -> list[tuple[CatalogEntry, EmbeddedConfig]]:
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = [(e, e.build()) for e in catalog_entries()]
    return _CATALOG


def _mode_for(mode: str, size: int, limits: Limits) -> str:
    if mode == "auto":
        return "exhaustive" if size <= limits.max_vertices else "strategy"
    return mode


def find_reducible(
    g: Graph,
    z: Sequence[int],
    k: int = 4,
    b: int = DEFAULT_B,
    mode: str = "auto",
    generic_limit: int = GENERIC_LIMIT,
    limits: Limits | None = None,
    use_catalog: bool = True,
) -> tuple[tuple[int, ...], ReductionCertificate, str]:
    """First certified reducible Y inside G[z]: catalogue matches first, then
    connected sets by size and lexicographic order."""
    limits = limits or Limits(falsify_samples=0)
    zset = set(z)
    if not zset:
        raise InputError("z must be nonempty")
    for v in zset:
        g._check(v)
    zdeg = {v: len(g.adj[v] & zset) for v in zset}
    if use_catalog:
        for entry, pat in _catalog():
            if pat.n > min(b, len(zset)) or pat.k != k:
                continue
            for occ in match_configuration(g, [zdeg.get(v, -1) for v in range(g.n)], pat, zset):
                y = tuple(sorted(occ.values()))
                cfg = local_config(g, z, y, k)
                cert = _CACHE.get(cfg, _mode_for(mode, len(y), limits), limits)
                if cert.reducible:
                    return y, cert, f"catalog:{entry.id}"
    examined = 0
    for size in range(1, min(b, generic_limit, len(zset)) + 1):
        for y in _connected_sets(g, zset, size):
            ys = set(y)
            # cheap necessary condition: deg_Y + k - deg_Z >= 2 everywhere
            if any(len(g.adj[v] & ys) + k - zdeg[v] < 2 for v in y):
                continue
            examined += 1
            cfg = local_config(g, z, y, k)
            cert = _CACHE.get(cfg, _mode_for(mode, size, limits), limits)
            if cert.reducible:
                return y, cert, "generic"
    raise HypothesisViolated(
        "no reducible subgraph found",
        {"z_size": len(zset), "b": b, "generic_limit": generic_limit, "candidates_checked": examined},
    )


def peel(g: Graph, k: int = 4, b: int = DEFAULT_B, mode: str = "auto", generic_limit: int = GENERIC_LIMIT, limits: Limits | None = None, use_catalog: bool = True) -> ReductionTrace:
    """Deterministic peel sequence; depends only on the graph and k."""
    z = list(range(g.n))
    trace = ReductionTrace(k)
    while z:
        y, cert, src = find_reducible(g, z, k, b, mode, generic_limit, limits, use_catalog)
        trace.peels.append(Peel(tuple(z), y, cert, src))
        ys = set(y)
        z = [v for v in z if v not in ys]
    return trace


# ---------------------------------------------------------------- sampling


class FlexSampler:
    """Samples from the recursive distribution for fixed (G, L, trace)."""

    def __init__(self, g: Graph, lists, trace: ReductionTrace, check_sizes: bool = True):
        self.g = g
        self.lists = as_lists(g, lists)
        self.trace = trace
        if check_sizes:
            for v, lst in enumerate(self.lists):
                if len(lst) < trace.k:
                    raise InputError(f"list at {v} has {len(lst)} < k = {trace.k} colours")
        self._subs = []
        for p in trace.peels:
            h, old = g.induced_subgraph(p.y)
            ys = set(p.y)
            outside = [[u for u in g.adj[v] if u not in ys and u in set(p.z)] for v in old]
            self._subs.append((h, old, outside))
        self._memo: dict = {}

    def _reduced(self, i: int, color: dict[int, int]) -> tuple[frozenset, ...]:
        h, old, outside = self._subs[i]
        return tuple(self.lists[v] - {color[u] for u in outside[j]} for j, v in enumerate(old))

    def _options(self, i: int, lp: tuple[frozenset, ...]) -> list[Coloring]:
        key = (i, lp)
        got = self._memo.get(key)
        if got is None:
            h = self._subs[i][0]
            en = enumerate_colorings(h, lp)
            if en.overflow:
                raise InputError("piece has too many colourings to enumerate")
            got = en.colorings
            if not got:
                raise InternalConsistencyError(f"piece {i} has no colouring from its reduced lists")
            self._memo[key] = got
        return got

    def sample(self, rng: np.random.Generator) -> Coloring:
        color: dict[int, int] = {}
        for i in range(len(self._subs) - 1, -1, -1):
            old = self._subs[i][1]
            opts = self._options(i, self._reduced(i, color))
            pick = opts[int(rng.integers(len(opts)))]
            for j, v in enumerate(old):
                color[v] = pick[j]
        return tuple(color[v] for v in range(self.g.n))

    def exact_distribution(self, max_states: int = 10**6) -> dict[Coloring, Fraction]:
        """The sampler's full output distribution, by expanding every branch."""
        states: dict[tuple, Fraction] = {(): Fraction(1)}
        order: list[int] = []
        for i in range(len(self._subs) - 1, -1, -1):
            old = self._subs[i][1]
            nxt: dict[tuple, Fraction] = {}
            for partial, p in states.items():
                color = dict(zip(order, partial))
                opts = self._options(i, self._reduced(i, color))
                share = p / len(opts)
                for o in opts:
                    key = partial + tuple(o)
                    nxt[key] = nxt.get(key, Fraction(0)) + share
            order.extend(old)
            states = nxt
            if len(states) > max_states:
                raise InputError("distribution too large to expand")
        out = {}
        for partial, p in states.items():
            color = dict(zip(order, partial))
            out[tuple(color[v] for v in range(self.g.n))] = p
        return out

    def max_piece_colorings(self) -> int:
        return max((len(x) for x in self._memo.values()), default=0)


def sample_flexible(g: Graph, lists, params: FlexParams | None = None, seed: int = 0, trace: ReductionTrace | None = None, index: int = 0):
    """One sample and the trace that produced it."""
    k = params.k if params else 4
    b = params.b if params else DEFAULT_B
    trace = trace or peel(g, k, b)
    sampler = FlexSampler(g, lists, trace)
    col = sampler.sample(stream_rng(seed, "sample", index))
    if not validate_coloring(g, sampler.lists, col):
        raise InternalConsistencyError("sampled colouring failed validation")
    return col, trace


# ------------------------------------------------------------- estimation


def clopper_pearson_lower(x: int, n: int, confidence: float = DEFAULT_CONFIDENCE) -> float:
    """One-sided lower confidence bound for a binomial proportion."""
    if n <= 0:
        raise InputError("n must be positive")
    if x <= 0:
        return 0.0
    return float(beta.ppf(1.0 - confidence, x, n - x + 1))


def _params_for(trace: ReductionTrace, params: FlexParams | None) -> FlexParams:
    return params if params is not None else trace.params()


@dataclass
class MarginalReport:
    samples: int
    confidence: float
    params: FlexParams
    counts: dict[tuple[int, int], int]
    lower: dict[tuple[int, int], float]
    trace: ReductionTrace
    # most L'-colourings of one piece seen while sampling; the analysis assumes at most k^b
    piece_colorings: int = 0

    @property
    def certified(self) -> list[tuple[int, int]]:
        e = float(self.params.eps)
        return sorted(k for k, lb in self.lower.items() if lb >= e)

    @property
    def zero(self) -> list[tuple[int, int]]:
        return sorted(k for k, c in self.counts.items() if c == 0)

    @property
    def all_certified(self) -> bool:
        return len(self.certified) == len(self.lower)

    def to_dict(self) -> dict:
        return {
            "samples": self.samples,
            "confidence": self.confidence,
            "params": self.params.to_dict(),
            "trace": self.trace.summary(),
            "pairs": [
                {"v": v, "c": c, "count": self.counts[(v, c)], "lower": self.lower[(v, c)], "meets_eps": self.lower[(v, c)] >= float(self.params.eps)}
                for v, c in sorted(self.counts)
            ],
            "zero_pairs": [list(p) for p in self.zero],
            "all_certified": self.all_certified,
            "piece_colorings": {"realized_max": self.piece_colorings, "bound": self.params.k ** self.params.b},
        }


def draw(sampler: FlexSampler, samples: int, seed: int, stream: str) -> list[Coloring]:
    if samples < 1:
        raise InputError("samples must be at least 1")
    return [sampler.sample(stream_rng(seed, stream, i)) for i in range(samples)]


def estimate_marginals(g: Graph, lists, params: FlexParams | None = None, samples: int = 10_000, seed: int = 0, confidence: float = DEFAULT_CONFIDENCE, trace: ReductionTrace | None = None) -> MarginalReport:
    lists = as_lists(g, lists)
    k = params.k if params else 4
    trace = trace or peel(g, k, params.b if params else DEFAULT_B)
    sampler = FlexSampler(g, lists, trace)
    counts = {(v, c): 0 for v in range(g.n) for c in lists[v]}
    for col in draw(sampler, samples, seed, "marginals"):
        if not validate_coloring(g, lists, col):
            raise InternalConsistencyError("sampled colouring failed validation")
        for v, c in enumerate(col):
            counts[(v, c)] += 1
    lower = {key: clopper_pearson_lower(x, samples, confidence) for key, x in counts.items()}
    return MarginalReport(samples, confidence, _params_for(trace, params), counts, lower, trace, sampler.max_piece_colorings())


@dataclass
class AvoidanceReport:
    s: tuple[int, ...]
    color: int
    samples: int
    hits: int
    lower: float
    target: Fraction
    confidence: float

    @property
    def meets(self) -> bool:
        return self.lower >= float(self.target)

    def to_dict(self) -> dict:
        return {"S": list(self.s), "c": self.color, "samples": self.samples, "avoided": self.hits, "lower": self.lower, "target": str(self.target), "meets": self.meets}


def estimate_independent_avoidance(g: Graph, lists, params: FlexParams | None, s: Sequence[int], color: int, samples: int = 10_000, seed: int = 0, confidence: float = DEFAULT_CONFIDENCE, trace: ReductionTrace | None = None) -> AvoidanceReport:
    k = params.k if params else 4
    s = tuple(sorted(set(s)))
    if len(s) > k - 2 or not is_p3p4_independent(g, s):
        raise InputError(f"{list(s)} is not a (P3+P4)-independent set of size <= {k - 2}")
    trace = trace or peel(g, k, params.b if params else DEFAULT_B)
    p = _params_for(trace, params)
    target = p.delta ** len(s)
    if not s:
        return AvoidanceReport(s, color, samples, samples, 1.0, target, confidence)
    sampler = FlexSampler(g, lists, trace)
    hits = sum(all(col[v] != color for v in s) for col in draw(sampler, samples, seed, "avoid"))
    return AvoidanceReport(s, color, samples, hits, clopper_pearson_lower(hits, samples, confidence), target, confidence)


@dataclass
class RequestResult:
    coloring: Coloring
    satisfied: float
    total: float
    params: FlexParams
    samples: int

    @property
    def ratio(self) -> float | None:
        return None if self.total == 0 else self.satisfied / self.total

    @property
    def clears(self) -> bool:
        return self.satisfied >= float(self.params.eps) * self.total

    def to_dict(self) -> dict:
        return {
            "coloring": list(self.coloring),
            "satisfied": self.satisfied,
            "total": self.total,
            "ratio": "vacuous" if self.ratio is None else self.ratio,
            "eps": str(self.params.eps),
            "clears_eps": self.clears,
            "samples": self.samples,
        }


def normalize_request(g: Graph, lists, w) -> dict[tuple[int, int], float]:
    """Weights keyed by (v, c). Accepts a mapping (v, c) -> weight or v -> c."""
    lists = as_lists(g, lists)
    out: dict[tuple[int, int], float] = {}
    items = w.items() if isinstance(w, Mapping) else w
    for key, val in items:
        if isinstance(key, tuple):
            (v, c), wt = key, float(val)
        else:
            v, c, wt = key, val, 1.0
        g._check(v)
        if c not in lists[v]:
            raise InputError(f"colour {c} is not in L({v})")
        if wt < 0:
            raise InputError("weights must be nonnegative")
        out[(v, c)] = out.get((v, c), 0.0) + wt
    return out


def satisfy_weighted_request(g: Graph, lists, params: FlexParams | None, w, samples: int = 100, seed: int = 0, trace: ReductionTrace | None = None) -> RequestResult:
    lists = as_lists(g, lists)
    weights = normalize_request(g, lists, w)
    k = params.k if params else 4
    trace = trace or peel(g, k, params.b if params else DEFAULT_B)
    sampler = FlexSampler(g, lists, trace)
    total = sum(weights.values())
    best, best_val = None, -1.0
    for col in draw(sampler, samples, seed, "request"):
        val = sum(weights.get((v, c), 0.0) for v, c in enumerate(col))
        if val > best_val:
            best, best_val = col, val
    return RequestResult(best, best_val, total, _params_for(trace, params), samples)


def exact_marginals(dist: Mapping[Coloring, Fraction]) -> dict[tuple[int, int], Fraction]:
    out: dict[tuple[int, int], Fraction] = {}
    for col, p in dist.items():
        for v, c in enumerate(col):
            out[(v, c)] = out.get((v, c), Fraction(0)) + p
    return out
