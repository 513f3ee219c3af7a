"""Certification of (P3+P4, k)-reducibility.

An embedded configuration is an induced subgraph H together with the ambient
degrees deg_G(v). Its size profile is deg_H + (k - deg_G). Two checks make up
reducibility:

* FIX: for every v, H is colourable from every list assignment whose sizes
  follow the profile with v's entry replaced by 1.
* FORB: for every (P3+P4)-independent S of H with |S| <= k - 2 (S empty
  included), H is colourable from every assignment of sizes profile - 1_S.

Each size profile is settled in one of two ways. Exhaustive mode searches all
list systems up to colour renaming (see ``_kernels.find_bad_system_kernel``).
Strategy mode searches for a replayable proof built from three moves:

* ``PRECOLOR_SET(S)``: colour H[S] first. Valid when some ordering of S has
  each budget exceeding the number of earlier neighbours in S. Every
  uncoloured z then loses |N(z) & S| from its budget.
* ``GREEDY(v)``: postpone v to the very end. Valid when its budget exceeds its
  degree among uncoloured vertices. Postponed vertices are coloured in reverse.
* ``DEGREE_BLOCK(C)``: colour a connected C by the degree criterion. Valid when
  every budget in C is at least the degree inside C, and either some vertex
  has strict slack or some block of H[C] is neither complete nor an odd cycle.

Budgets are lower bounds on the true list sizes under every concrete
assignment, so an accepted proof covers all assignments of the profile.
Independence of S is judged inside H; reports carry ``independence_scope="H"``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from . import _kernels as K
from .coloring import as_lists, csr, degree_criterion_colorable, enumerate_colorings, is_colorable
from .errors import InputError
from .graph import (
    Graph,
    block_is_gallai,
    blocks,
    connected_components,
    is_p3p4_independent,
    p3p4_independent_sets,
)

GREEDY = "GREEDY"
PRECOLOR_SET = "PRECOLOR_SET"
DEGREE_BLOCK = "DEGREE_BLOCK"

HOLDS = "holds"
FAILS = "fails"
BUDGET = "budget_exceeded"
UNPROVEN = "unproven"

DEFAULT_MAX_VERTICES = 6
DEFAULT_MAX_SYSTEMS = 10**7
DEFAULT_STRATEGY_NODES = 20_000
DEFAULT_FALSIFY_SAMPLES = 10_000


@dataclass(frozen=True)
class EmbeddedConfig:
    H: Graph
    ambient_degree: tuple[int, ...]
    k: int = 4
    labels: tuple[str, ...] | None = None
    name: str = ""

    def __post_init__(self):
        if self.k < 3:
            raise InputError("k must be at least 3")
        deg = tuple(int(d) for d in self.ambient_degree)
        object.__setattr__(self, "ambient_degree", deg)
        if len(deg) != self.H.n:
            raise InputError("one ambient degree per vertex of H is required")
        for v in range(self.H.n):
            if deg[v] < self.H.degree(v):
                raise InputError(f"deg_G({v}) = {deg[v]} is below deg_H({v}) = {self.H.degree(v)}")
        if self.labels is not None and len(self.labels) != self.H.n:
            raise InputError("one label per vertex is required")

    @property
    def n(self) -> int:
        return self.H.n

    def delta(self, v: int) -> int:
        return self.k - self.ambient_degree[v]

    def profile(self) -> tuple[int, ...]:
        return tuple(self.H.degree(v) + self.delta(v) for v in range(self.H.n))

    def forb_sane(self) -> bool:
        return all(p >= 2 for p in self.profile())

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def vertex(self, label: str) -> int:
        if self.labels is None:
            return int(label)
        return self.labels.index(label)


def size_profile_fix(cfg: EmbeddedConfig, v: int) -> tuple[int, ...]:
    """Profile (deg_H + delta) with v's entry set to 1."""
    if not (isinstance(v, int) and 0 <= v < cfg.n):
        raise InputError(f"{v!r} is not a vertex of H")
    p = list(cfg.profile())
    p[v] = 1
    return tuple(p)


def size_profile_forb(cfg: EmbeddedConfig, s: Iterable[int]) -> tuple[int, ...]:
    p = list(cfg.profile())
    for v in set(s):
        cfg.H._check(v)
        p[v] -= 1
    return tuple(p)


def forb_sets(cfg: EmbeddedConfig) -> list[tuple[int, ...]]:
    return p3p4_independent_sets(cfg.H, cfg.k - 2)


# ---------------------------------------------------------------- exhaustive


@dataclass
class ExhaustiveOutcome:
    status: str
    lists: tuple[tuple[int, ...], ...] | None = None
    nodes: int = 0
    core: tuple[int, ...] = ()


def _core(H: Graph, f: Sequence[int]) -> list[int]:
    """Drop vertices whose size exceeds their remaining degree, until none do."""
    alive = set(range(H.n))
    deg = {v: H.degree(v) for v in alive}
    queue = [v for v in alive if f[v] > deg[v]]
    while queue:
        v = queue.pop()
        if v not in alive:
            continue
        alive.remove(v)
        for u in H.adj[v]:
            if u in alive:
                deg[u] -= 1
                if f[u] > deg[u]:
                    queue.append(u)
    return sorted(alive)


def exhaustive_profile(
    H: Graph,
    f: Sequence[int],
    max_vertices: int = DEFAULT_MAX_VERTICES,
    max_systems: int = DEFAULT_MAX_SYSTEMS,
) -> ExhaustiveOutcome:
    """Is H colourable from every assignment with |L(v)| = f(v)?

    On failure the returned lists are a concrete uncolourable assignment.
    """
    f = [int(x) for x in f]
    if len(f) != H.n:
        raise InputError("profile length differs from vertex count")
    if H.n > max_vertices:
        return ExhaustiveOutcome(BUDGET)
    fresh = iter(range(10**6, 10**9))

    def lift(partial: dict[int, list[int]]):
        out = []
        for v in range(H.n):
            if v in partial:
                out.append(tuple(sorted(partial[v])))
            else:
                out.append(tuple(next(fresh) for _ in range(max(f[v], 0))))
        return tuple(out)

    for v in range(H.n):
        if f[v] <= 0:
            return ExhaustiveOutcome(FAILS, lift({v: []}))
    core = _core(H, f)
    nodes = 0
    for comp in connected_components(H, core):
        sub, old = H.induced_subgraph(comp)
        demand = np.array([f[v] for v in old], dtype=np.int64)
        total = int(demand.sum())
        if total > K.MAX_COLORS:
            return ExhaustiveOutcome(BUDGET, nodes=nodes, core=tuple(core))
        ip, ix = csr(sub)
        classes = np.zeros(total + 1, dtype=np.int64)
        status, ncls, used = K.find_bad_system_kernel(ip, ix, demand, max_systems - nodes, classes)
        nodes += int(used)
        if status == 2:
            return ExhaustiveOutcome(BUDGET, nodes=nodes, core=tuple(core))
        if status == 1:
            partial: dict[int, list[int]] = {v: [] for v in old}
            for c in range(int(ncls)):
                for i, v in enumerate(old):
                    if (int(classes[c]) >> i) & 1:
                        partial[v].append(c)
            return ExhaustiveOutcome(FAILS, lift(partial), nodes, tuple(core))
    return ExhaustiveOutcome(HOLDS, nodes=nodes, core=tuple(core))


def raw_profile_check(H: Graph, f: Sequence[int]) -> bool:
    """Reference oracle: every f-assignment over the universe {0..sum f - 1}."""
    from itertools import product

    if any(x <= 0 for x in f):
        return False
    universe = range(sum(f))
    choices = [list(combinations(universe, x)) for x in f]
    for lists in product(*choices):
        if is_colorable(H, lists) is None:
            return False
    return True


# ------------------------------------------------------------------ strategy


@dataclass(frozen=True)
class Step:
    kind: str
    vertices: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"kind": self.kind, "vertices": list(self.vertices)}


@dataclass
class StrategyProof:
    steps: list[Step] = field(default_factory=list)

    def to_dict(self) -> list[dict]:
        return [s.to_dict() for s in self.steps]

    @classmethod
    def from_dict(cls, data) -> "StrategyProof":
        return cls([Step(d["kind"], tuple(d["vertices"])) for d in data])


@dataclass
class Validation:
    ok: bool
    step: int | None = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def greedy_colorable_order(H: Graph, s: Sequence[int], budget) -> list[int] | None:
    """An order of s in which each budget beats the number of earlier neighbours in s,
    or None. Built back to front, peeling a vertex whose budget beats its degree in
    what is left."""
    left = set(s)
    back = []
    while left:
        pick = None
        for v in sorted(left):
            if budget[v] > len(H.adj[v] & left):
                pick = v
                break
        if pick is None:
            return None
        back.append(pick)
        left.remove(pick)
    return back[::-1]


def _degree_block_ok(H: Graph, c: set[int], budget) -> bool:
    if not c:
        return False
    if len(connected_components(H, c)) != 1:
        return False
    sub, old = H.induced_subgraph(c)
    slack = False
    for i, v in enumerate(old):
        d = sub.degree(i)
        if budget[v] < d:
            return False
        if budget[v] > d:
            slack = True
    if slack:
        return True
    return any(not block_is_gallai(sub, b) for b in blocks(sub).blocks)


def validate_strategy(proof: StrategyProof, cfg_or_graph, profile: Sequence[int]) -> Validation:
    """Replay the budget arithmetic of a proof against a size profile."""
    H = cfg_or_graph.H if isinstance(cfg_or_graph, EmbeddedConfig) else cfg_or_graph
    if len(profile) != H.n:
        return Validation(False, None, "profile length differs from vertex count")
    U = set(range(H.n))
    b = [int(x) for x in profile]
    for i, step in enumerate(proof.steps):
        vs = tuple(step.vertices)
        if not vs or len(set(vs)) != len(vs):
            return Validation(False, i, "empty or repeated vertex set")
        if any(not (isinstance(v, int) and 0 <= v < H.n) for v in vs):
            return Validation(False, i, "vertex out of range")
        if not set(vs) <= U:
            return Validation(False, i, "step touches an already coloured vertex")
        if step.kind == GREEDY:
            if len(vs) != 1:
                return Validation(False, i, "GREEDY takes one vertex")
            v = vs[0]
            if b[v] < len(H.adj[v] & U) + 1:
                return Validation(False, i, f"budget {b[v]} at {v} does not beat its degree")
            U.remove(v)
            continue
        if step.kind == PRECOLOR_SET:
            if greedy_colorable_order(H, vs, b) is None:
                return Validation(False, i, "H[S] is not colourable for every list of these budgets")
        elif step.kind == DEGREE_BLOCK:
            if not _degree_block_ok(H, set(vs), b):
                return Validation(False, i, "degree criterion hypotheses fail")
        else:
            return Validation(False, i, f"unknown step kind {step.kind!r}")
        sset = set(vs)
        U -= sset
        for z in U:
            b[z] -= len(H.adj[z] & sset)
    if U:
        return Validation(False, len(proof.steps), f"{len(U)} vertices left uncoloured")
    return Validation(True)


class _Budget(Exception):
    pass


@dataclass
class StrategyOutcome:
    proof: StrategyProof | None
    status: str
    nodes: int


def find_strategy(H: Graph, profile: Sequence[int], node_limit: int = DEFAULT_STRATEGY_NODES) -> StrategyOutcome:
    """Search for a strategy proof of a size profile.

    Postponing a vertex with spare budget never hurts, so that move is applied
    to a fixpoint first. Components are then solved separately, the degree
    criterion is tried on each, and otherwise single vertices are precoloured
    (short ones first) or non-Gallai blocks are coloured, with memoised failures.
    """
    failed: set = set()
    count = [0]

    def deg_in(v, U):
        return len(H.adj[v] & U)

    def solve(U: frozenset, b: dict) -> list[Step] | None:
        U = set(U)
        steps: list[Step] = []
        changed = True
        while changed:
            changed = False
            for v in sorted(U):
                if b[v] >= deg_in(v, U) + 1:
                    steps.append(Step(GREEDY, (v,)))
                    U.remove(v)
                    changed = True
        if not U:
            return steps
        if any(b[v] <= 0 for v in U):
            return None
        key = (frozenset(U), tuple(b[v] for v in sorted(U)))
        if key in failed:
            return None
        count[0] += 1
        if count[0] > node_limit:
            raise _Budget
        comps = connected_components(H, U)
        if len(comps) > 1:
            for comp in comps:
                sub = solve(frozenset(comp), b)
                if sub is None:
                    failed.add(key)
                    return None
                steps.extend(sub)
            return steps
        cset = set(comps[0])
        if _degree_block_ok(H, cset, b):
            steps.append(Step(DEGREE_BLOCK, tuple(sorted(cset))))
            return steps
        moves: list[tuple[int, ...]] = []
        short = [v for v in sorted(cset) if b[v] < deg_in(v, cset)]
        tight = [v for v in sorted(cset) if b[v] == deg_in(v, cset)]
        moves.extend((v,) for v in short)
        sub, old = H.induced_subgraph(cset)
        for blk in blocks(sub).blocks:
            bl = tuple(old[i] for i in blk)
            if len(bl) < len(cset) and not block_is_gallai(sub, blk) and _degree_block_ok(H, set(bl), b):
                moves.append(bl)
        moves.extend((v,) for v in tight)
        for mv in moves:
            mset = set(mv)
            nb = dict(b)
            rest = cset - mset
            for z in rest:
                nb[z] -= len(H.adj[z] & mset)
            res = solve(frozenset(rest), nb)
            if res is not None:
                kind = PRECOLOR_SET if len(mv) == 1 else DEGREE_BLOCK
                return steps + [Step(kind, mv)] + res
        failed.add(key)
        return None

    b0 = {v: int(profile[v]) for v in range(H.n)}
    try:
        res = solve(frozenset(range(H.n)), b0)
    except _Budget:
        return StrategyOutcome(None, BUDGET, count[0])
    if res is None:
        return StrategyOutcome(None, FAILS, count[0])
    return StrategyOutcome(StrategyProof(res), HOLDS, count[0])


def execute_strategy(proof: StrategyProof, H: Graph, lists) -> tuple[int, ...]:
    """Colour H from concrete lists by following a proof (soundness witness)."""
    lists = as_lists(H, lists)
    color: dict[int, int] = {}
    deferred: list[int] = []

    def free(v):
        return lists[v] - {color[u] for u in H.adj[v] if u in color}

    for step in proof.steps:
        if step.kind == GREEDY:
            deferred.append(step.vertices[0])
            continue
        if step.kind == PRECOLOR_SET:
            budget = {v: len(free(v)) for v in step.vertices}
            order = greedy_colorable_order(H, step.vertices, budget)
            if order is None:
                raise InputError("precolour step not executable on these lists")
            for v in order:
                color[v] = min(free(v))
            continue
        sub, old = H.induced_subgraph(step.vertices)
        res = degree_criterion_colorable(sub, [free(v) for v in old])
        if not res.applicable:
            raise InputError("degree step not executable on these lists")
        for i, v in enumerate(old):
            color[v] = res.coloring[i]
    for v in reversed(deferred):
        fv = free(v)
        if not fv:
            raise InputError(f"postponed vertex {v} has no colour left")
        color[v] = min(fv)
    return tuple(color[v] for v in range(H.n))


def falsify(H: Graph, f: Sequence[int], samples: int, rng: np.random.Generator):
    """Random list systems over small palettes; returns an uncolourable one or None."""
    if any(x <= 0 for x in f):
        return tuple(tuple() if x <= 0 else tuple(range(x)) for x in f)
    top = max(f)
    for _ in range(samples):
        pal = int(rng.integers(top, top + 3))
        lists = tuple(tuple(sorted(int(c) for c in rng.choice(pal, size=x, replace=False))) for x in f)
        if is_colorable(H, lists) is None:
            return lists
    return None


# ------------------------------------------------------------- certificates


@dataclass
class ProfileEvidence:
    key: tuple[int, ...]
    profile: tuple[int, ...]
    status: str
    proof: StrategyProof | None = None
    nodes: int = 0
    counterexample: tuple[tuple[int, ...], ...] | None = None

    def to_dict(self, cfg: EmbeddedConfig | None = None) -> dict:
        d = {
            "key": list(self.key),
            "profile": list(self.profile),
            "status": self.status,
            "nodes": self.nodes,
        }
        if cfg is not None and cfg.labels:
            d["key_labels"] = [cfg.label(v) for v in self.key]
        if self.proof is not None:
            d["proof"] = self.proof.to_dict()
        if self.counterexample is not None:
            d["counterexample"] = [list(x) for x in self.counterexample]
        return d


def _combine(statuses: Iterable[str]) -> str:
    st = set(statuses)
    for s in (FAILS, BUDGET, UNPROVEN):
        if s in st:
            return s
    return HOLDS


@dataclass
class CheckResult:
    condition: str
    mode: str
    entries: list[ProfileEvidence]

    @property
    def status(self) -> str:
        return _combine(e.status for e in self.entries)

    @property
    def counterexample(self) -> ProfileEvidence | None:
        return next((e for e in self.entries if e.status == FAILS), None)

    def to_dict(self, cfg=None) -> dict:
        return {
            "condition": self.condition,
            "mode": self.mode,
            "status": self.status,
            "entries": [e.to_dict(cfg) for e in self.entries],
        }


@dataclass
class Limits:
    max_vertices: int = DEFAULT_MAX_VERTICES
    max_systems: int = DEFAULT_MAX_SYSTEMS
    strategy_nodes: int = DEFAULT_STRATEGY_NODES
    falsify_samples: int = DEFAULT_FALSIFY_SAMPLES
    seed: int = 0


def _settle(H: Graph, key, f, mode: str, limits: Limits, rng) -> ProfileEvidence:
    f = tuple(f)
    if mode == "exhaustive":
        out = exhaustive_profile(H, f, limits.max_vertices, limits.max_systems)
        return ProfileEvidence(tuple(key), f, out.status, nodes=out.nodes, counterexample=out.lists)
    if mode != "strategy":
        raise InputError(f"unknown mode {mode!r}")
    st = find_strategy(H, f, limits.strategy_nodes)
    if st.status == HOLDS:
        return ProfileEvidence(tuple(key), f, HOLDS, st.proof, st.nodes)
    bad = falsify(H, f, limits.falsify_samples, rng) if limits.falsify_samples else None
    if bad is not None:
        return ProfileEvidence(tuple(key), f, FAILS, nodes=st.nodes, counterexample=bad)
    return ProfileEvidence(tuple(key), f, UNPROVEN, nodes=st.nodes)


def check_fix(cfg: EmbeddedConfig, mode: str = "exhaustive", limits: Limits | None = None, stop_early: bool = True) -> CheckResult:
    limits = limits or Limits()
    rng = np.random.default_rng([limits.seed, 0])
    entries = []
    for v in range(cfg.n):
        ev = _settle(cfg.H, (v,), size_profile_fix(cfg, v), mode, limits, rng)
        entries.append(ev)
        if stop_early and ev.status == FAILS:
            break
    return CheckResult("FIX", mode, entries)


def check_forb(
    cfg: EmbeddedConfig,
    mode: str = "exhaustive",
    limits: Limits | None = None,
    sets: Iterable[Sequence[int]] | None = None,
    stop_early: bool = True,
) -> CheckResult:
    limits = limits or Limits()
    rng = np.random.default_rng([limits.seed, 1])
    if sets is None:
        sets = forb_sets(cfg)
    else:
        sets = [tuple(sorted(s)) for s in sets]
        for s in sets:
            if len(s) > cfg.k - 2 or not is_p3p4_independent(cfg.H, s):
                raise InputError(f"{s} is not a small (P3+P4)-independent set")
    entries = []
    for s in sets:
        ev = _settle(cfg.H, s, size_profile_forb(cfg, s), mode, limits, rng)
        entries.append(ev)
        if stop_early and ev.status == FAILS:
            break
    return CheckResult("FORB", mode, entries)


@dataclass
class ReductionCertificate:
    config: EmbeddedConfig
    mode: str
    fix: CheckResult
    forb: CheckResult
    independence_scope: str = "H"

    @property
    def status(self) -> str:
        return _combine([self.fix.status, self.forb.status])

    @property
    def reducible(self) -> bool:
        return self.status == HOLDS

    @property
    def counterexample(self) -> ProfileEvidence | None:
        return self.fix.counterexample or self.forb.counterexample

    def to_dict(self) -> dict:
        cfg = self.config
        return {
            "name": cfg.name,
            "k": cfg.k,
            "vertices": cfg.n,
            "edges": [list(e) for e in cfg.H.sorted_edges()],
            "ambient_degree": list(cfg.ambient_degree),
            "labels": list(cfg.labels) if cfg.labels else None,
            "profile": list(cfg.profile()),
            "forb_sane": cfg.forb_sane(),
            "independence_scope": self.independence_scope,
            "mode": self.mode,
            "status": self.status,
            "fix": self.fix.to_dict(cfg),
            "forb": self.forb.to_dict(cfg),
        }


def check_reducible(cfg: EmbeddedConfig, mode: str = "exhaustive", limits: Limits | None = None) -> ReductionCertificate:
    limits = limits or Limits()
    fix = check_fix(cfg, mode, limits)
    forb = check_forb(cfg, mode, limits)
    return ReductionCertificate(cfg, mode, fix, forb)


def replay_certificate(cert: ReductionCertificate) -> Validation:
    """Independent replay: every strategy proof validates, every counterexample is uncolourable."""
    H = cert.config.H
    for chk in (cert.fix, cert.forb):
        for e in chk.entries:
            if e.status == HOLDS and cert.mode == "strategy":
                if e.proof is None:
                    return Validation(False, None, f"{chk.condition} {e.key}: proof missing")
                v = validate_strategy(e.proof, H, e.profile)
                if not v:
                    return Validation(False, v.step, f"{chk.condition} {e.key}: {v.message}")
            if e.status == FAILS:
                if not confirm_counterexample(H, e.profile, e.counterexample):
                    return Validation(False, None, f"{chk.condition} {e.key}: counterexample is colourable")
    return Validation(True)


def confirm_counterexample(H: Graph, profile: Sequence[int], lists) -> bool:
    """Lists have the profile's sizes (or are empty where the size is <= 0) and
    yield no colouring, judged by full enumeration."""
    if lists is None or len(lists) != H.n:
        return False
    for v, lst in enumerate(lists):
        want = max(int(profile[v]), 0)
        if len(set(lst)) != want:
            return False
    return enumerate_colorings(H, lists, cap=1).count == 0
