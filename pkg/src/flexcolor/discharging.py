"""Exact-rational discharging audit on concrete plane graphs.

Every vertex starts with ``d(v) - 2`` and every face with ``-2``; on a
connected plane graph these sum to ``-4``. Rules R0-R6 move charge from
vertices to incident faces (snapshot ``ch1``), then R7 and R8 feed poor
triangles from large faces and from well vertices (snapshot ``ch2``).

Rules R0-R6 are evaluated as a decision table over (vertex, face)
incidences. For each incidence we collect every clause whose guard matches
under some labelling of the face's vertices. Zero matches is a *gap* and no
charge moves. Several matches with different amounts is an *overlap*, which is
resolved by the larger amount. Both are reported as diagnostics rather than
silently decided.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import permutations

from .plane import PlaneGraph

ZERO = Fraction(0)
TWELFTH = Fraction(1, 12)
SIXTH = Fraction(1, 6)
THIRD = Fraction(1, 3)
HALF = Fraction(1, 2)
TWO_THIRDS = Fraction(2, 3)
THREE_QUARTERS = Fraction(3, 4)
FIVE_SIXTHS = Fraction(5, 6)
ONE = Fraction(1)
FOUR_THIRDS = Fraction(4, 3)
TWO = Fraction(2)

EULER_TOTAL = Fraction(-4)
HIGH = 13  # degrees from here on are handled by R0/R1 only


def vid(v: int) -> str:
    return f"v{v}"


def fid(f: int) -> str:
    return f"f{f}"


def fmt(x: Fraction) -> str:
    return str(x)


# --- taxonomy --------------------------------------------------------------


@dataclass(frozen=True)
class VertexClass:
    vertex: int
    degree: int
    f3: int
    f33: int
    f34: int
    f3b: int
    f4b: int
    fbb: int
    f44: int
    bad: bool
    vice: bool
    dangerous: bool
    n_b: int
    N_b: tuple[int, ...]
    varpi: int = 0
    # known only once R0-R6 have run
    well: bool | None = None

    def to_dict(self) -> dict:
        return {
            "vertex": self.vertex,
            "degree": self.degree,
            "f3": self.f3,
            "f33": self.f33,
            "f34": self.f34,
            "f3b": self.f3b,
            "f4b": self.f4b,
            "fbb": self.fbb,
            "f44": self.f44,
            "bad": self.bad,
            "vice": self.vice,
            "dangerous": self.dangerous,
            "n_b": self.n_b,
            "N_b": list(self.N_b),
            "varpi": self.varpi,
            "well": self.well,
        }


@dataclass(frozen=True)
class FaceClass:
    face: int
    degree: int
    # sorted vertex degrees, only for 3-faces
    shape: tuple[int, ...] | None
    poor: bool
    worse: bool
    worst: bool
    xi: int

    def to_dict(self) -> dict:
        return {
            "face": self.face,
            "degree": self.degree,
            "shape": list(self.shape) if self.shape else None,
            "poor": self.poor,
            "worse": self.worse,
            "worst": self.worst,
            "xi": self.xi,
        }


@dataclass(frozen=True)
class NicePath:
    start: int
    end: int
    internal: tuple[int, ...]
    kind: str  # "i": towards a 3-vertex, "ii": towards a 4-vertex through vice vertices

    @property
    def vertices(self) -> tuple[int, ...]:
        return (self.start, *self.internal, self.end)

    @property
    def length(self) -> int:
        return len(self.internal) + 1


@dataclass(frozen=True)
class Taxonomy:
    vertices: tuple[VertexClass, ...]
    faces: tuple[FaceClass, ...]
    # vertex pairs lying together on some (4,4,4)-face
    quad_pairs: frozenset[frozenset[int]]
    paths: tuple[tuple[NicePath, ...], ...]

    def __iter__(self):
        yield self.vertices
        yield self.faces


def _others(walk: tuple[int, ...], v: int) -> tuple[int, int]:
    a, b = (x for x in walk if x != v)
    return a, b


def _triangles(pg: PlaneGraph) -> list[int]:
    return [i for i, f in enumerate(pg.faces) if f.degree == 3]


def _neighbour_faces(pg: PlaneGraph, i: int) -> set[int]:
    out = set()
    for a, b in pg.faces[i].edges():
        j = pg.dart_face[(b, a)]
        if j != i:
            out.add(j)
    return out


def _quad_pairs(pg: PlaneGraph) -> frozenset[frozenset[int]]:
    deg = pg.graph.degree
    pairs = set()
    for i in _triangles(pg):
        w = pg.faces[i].walk
        if all(deg(x) == 4 for x in w):
            pairs.update(frozenset(p) for p in ((w[0], w[1]), (w[1], w[2]), (w[0], w[2])))
    return frozenset(pairs)


def _nice_paths(pg: PlaneGraph, v: int, vice: list[bool], quad: frozenset) -> list[NicePath]:
    g = pg.graph
    d = g.degree
    out = []

    def quad_ok(seq) -> bool:
        return all(
            frozenset((a, b)) in quad for a, b in zip(seq, seq[1:]) if d(a) == 4 and d(b) == 4
        )

    for u in sorted(g.adj[v]):
        if d(u) == 3:
            out.append(NicePath(v, u, (), "i"))
        elif d(u) == 4 and quad_ok((v, u)):
            out.append(NicePath(v, u, (), "ii"))
    for x in sorted(g.adj[v]):
        for u in sorted(g.adj[x]):
            if u == v:
                continue
            if d(u) == 3 and d(x) == 3:
                out.append(NicePath(v, u, (x,), "i"))
            elif d(u) == 4 and vice[x] and quad_ok((v, x, u)):
                out.append(NicePath(v, u, (x,), "ii"))
    return out


def classify(pg: PlaneGraph) -> Taxonomy:
    """Vertex and face classes. Deterministic, and a pure function of the embedding."""
    g = pg.graph
    n = g.n
    deg = [g.degree(v) for v in range(n)]
    tri = _triangles(pg)
    at: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for i in tri:
        w = pg.faces[i].walk
        for v in w:
            a, b = _others(w, v)
            at[v].append((a, b))

    f3 = [len(at[v]) for v in range(n)]

    def pair_degrees(v):
        return [tuple(sorted((deg[a], deg[b]))) for a, b in at[v]]

    f33 = [sum(1 for p in pair_degrees(v) if p == (3, 3)) for v in range(n)]
    f34 = [sum(1 for p in pair_degrees(v) if p == (3, 4)) for v in range(n)]
    bad = [
        4 <= deg[v] <= 12
        and f33[v] + f34[v] == (deg[v] - 2) // 2
        and f3[v] == deg[v] // 2
        for v in range(n)
    ]
    vice = [deg[v] == 4 and f3[v] == 2 for v in range(n)]
    dangerous = [5 <= deg[v] <= 12 and f33[v] == (deg[v] - 3) // 2 for v in range(n)]
    # in the subscripts below "b" is a bad vertex of degree at least 5
    big_bad = [bad[v] and deg[v] >= 5 for v in range(n)]

    def count(v, test):
        return sum(1 for a, b in at[v] if test(a, b) or test(b, a))

    f3b = [count(v, lambda a, b: deg[a] == 3 and big_bad[b]) for v in range(n)]
    f4b = [count(v, lambda a, b: deg[a] == 4 and big_bad[b]) for v in range(n)]
    fbb = [count(v, lambda a, b: big_bad[a] and big_bad[b]) for v in range(n)]
    f44 = [count(v, lambda a, b: deg[a] == 4 and deg[b] == 4) for v in range(n)]

    quad = _quad_pairs(pg)
    paths = tuple(tuple(_nice_paths(pg, v, vice, quad)) for v in range(n))
    verts = []
    for v in range(n):
        nb = tuple(sorted(u for u in g.adj[v] if bad[u]))
        verts.append(
            VertexClass(
                vertex=v,
                degree=deg[v],
                f3=f3[v],
                f33=f33[v],
                f34=f34[v],
                f3b=f3b[v],
                f4b=f4b[v],
                fbb=fbb[v],
                f44=f44[v],
                bad=bad[v],
                vice=vice[v],
                dangerous=dangerous[v],
                n_b=len(nb),
                N_b=nb,
                varpi=len(paths[v]),
            )
        )

    shapes: dict[int, tuple[int, ...]] = {i: tuple(sorted(deg[x] for x in pg.faces[i].walk)) for i in tri}
    poor = {i for i, s in shapes.items() if s == (3, 4, 4)}
    face_cls = []
    for i, f in enumerate(pg.faces):
        s = shapes.get(i)
        xi = 0
        if f.degree >= 6:
            xi = len(_neighbour_faces(pg, i) & poor)
        face_cls.append(
            FaceClass(
                face=i,
                degree=f.degree,
                shape=s,
                poor=i in poor,
                worse=s is not None and s[0] == 3 and s[1] == 4,
                worst=s is not None and s[0] == 3 and s[1] == 3,
                xi=xi,
            )
        )
    return Taxonomy(tuple(verts), tuple(face_cls), quad, paths)


def nice_paths_from(pg: PlaneGraph, v: int, taxonomy: Taxonomy | None = None) -> list[NicePath]:
    """Nice paths of length at most 2 starting at ``v``; their number is varpi(v)."""
    tax = taxonomy or classify(pg)
    return list(tax.paths[v])


# --- ledger ----------------------------------------------------------------


@dataclass(frozen=True)
class Transfer:
    source: str
    target: str
    amount: Fraction
    rule: str

    def to_dict(self) -> dict:
        return {"source": self.source, "target": self.target, "amount": fmt(self.amount), "rule": self.rule}


# Every diagnostic carries one of these categories; docs/rule_gaps.md triages each.
GAP_CATEGORIES = (
    "low-degree-vertex",
    "mid-vertex-beside-low-degree",
    "short-face",
    "r8-mixed-internals",
    "r8-large-group",
)
OVERLAP_CATEGORIES = ("r0-several-high", "r2.1-two-non-vice", "r4.1-two-bad", "r5.1-two-bad", "clause-conflict")


@dataclass(frozen=True)
class Diagnostic:
    kind: str  # "gap" or "overlap"
    category: str
    rule: str
    vertex: int | None
    face: int | None
    message: str

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "category": self.category,
            "rule": self.rule,
            "vertex": self.vertex,
            "face": self.face,
            "message": self.message,
        }


@dataclass
class ChargeLedger:
    initial: dict[str, Fraction]
    transfers: list[Transfer] = field(default_factory=list)
    diagnostics: list[Diagnostic] = field(default_factory=list)
    ch1: dict[str, Fraction] | None = None
    ch2: dict[str, Fraction] | None = None
    taxonomy: Taxonomy | None = None
    # R7 intake per poor face
    r7_intake: dict[int, Fraction] = field(default_factory=dict)

    @classmethod
    def start(cls, pg: PlaneGraph) -> "ChargeLedger":
        init = {vid(v): Fraction(pg.degree(v) - 2) for v in range(pg.n)}
        init.update({fid(i): Fraction(-2) for i in range(len(pg.faces))})
        return cls(init)

    def current(self) -> dict[str, Fraction]:
        cur = dict(self.initial)
        for t in self.transfers:
            cur[t.source] -= t.amount
            cur[t.target] += t.amount
        return cur

    def move(self, source: str, target: str, amount: Fraction, rule: str) -> None:
        if amount:
            self.transfers.append(Transfer(source, target, amount, rule))

    def note(self, kind: str, category: str, rule: str, vertex: int | None, face: int | None, message: str) -> None:
        self.diagnostics.append(Diagnostic(kind, category, rule, vertex, face, message))

    def total(self, snapshot: str) -> Fraction:
        return sum(getattr(self, snapshot).values(), ZERO)

    def gaps(self) -> list[Diagnostic]:
        return [d for d in self.diagnostics if d.kind == "gap"]

    def overlaps(self) -> list[Diagnostic]:
        return [d for d in self.diagnostics if d.kind == "overlap"]

    def received(self, face: int, rules: tuple[str, ...] | None = None) -> Fraction:
        t = fid(face)
        return sum((x.amount for x in self.transfers if x.target == t and (rules is None or x.rule in rules)), ZERO)

    def to_dict(self) -> dict:
        keys = list(self.initial)
        return {
            "elements": {
                k: {
                    "initial": fmt(self.initial[k]),
                    "ch1": fmt(self.ch1[k]) if self.ch1 else None,
                    "ch2": fmt(self.ch2[k]) if self.ch2 else None,
                }
                for k in keys
            },
            "totals": {
                s: fmt(sum(getattr(self, s).values(), ZERO)) if getattr(self, s) is not None else None
                for s in ("initial", "ch1", "ch2")
            },
            "transfers": [t.to_dict() for t in self.transfers],
            "diagnostics": [d.to_dict() for d in self.diagnostics],
        }


# --- rules R0-R6 -----------------------------------------------------------


def _mid(d: int) -> bool:
    return 5 <= d <= 12


def _triangle_candidates(walk, deg, cls) -> dict[int, list[tuple[str, Fraction]]]:
    """Every clause of R0-R6 (except R3) that names a vertex of this 3-face."""
    cand: dict[int, list[tuple[str, Fraction]]] = {v: [] for v in walk}
    bad = {v: cls[v].bad for v in walk}
    vice = {v: cls[v].vice for v in walk}
    dang = {v: cls[v].dangerous for v in walk}

    if any(deg[v] >= HIGH for v in walk):
        for v1, v2, v3 in permutations(walk):
            if deg[v1] >= HIGH:
                cand[v1].append(("R0", FOUR_THIRDS))
                cand[v2].append(("R0", THIRD))
                cand[v3].append(("R0", THIRD))
        return cand

    for v in walk:
        if deg[v] == 3:
            cand[v].append(("R1", THIRD))

    for v1 in walk:
        if deg[v1] != 4:
            continue
        fired = False
        for v2, v3 in permutations([x for x in walk if x != v1]):
            if deg[v2] == 4 and deg[v3] == 3 and not vice[v1]:
                cand[v1].append(("R2.1", ONE))
                cand[v2].append(("R2.1", TWO_THIRDS))
                fired = True
            if deg[v2] == 4 and _mid(deg[v3]):
                for vi, vo in ((v1, v2), (v2, v1)):
                    if bad[vi] and not vice[vo]:
                        cand[vi].append(("R2.2", HALF))
                        cand[vo].append(("R2.2", FIVE_SIXTHS))
                        fired = True
        if not fired:
            cand[v1].append(("R2.3", TWO_THIRDS))

    for v1 in walk:
        rest = [x for x in walk if x != v1]
        if not all(_mid(deg[x]) for x in rest):
            continue
        if deg[v1] == 3:
            hi, lo, plain = TWO_THIRDS, ONE, FIVE_SIXTHS
            rule = "R4"
        elif deg[v1] == 4:
            hi, lo, plain = HALF, FIVE_SIXTHS, TWO_THIRDS
            rule = "R5"
        else:
            continue
        if any(bad[x] for x in rest):
            for vi in rest:
                if bad[vi]:
                    other = rest[0] if rest[1] == vi else rest[1]
                    cand[vi].append((rule + ".1", hi))
                    cand[other].append((rule + ".1", lo))
        else:
            for x in rest:
                cand[x].append((rule + ".2", plain))

    if all(_mid(deg[v]) for v in walk):
        bd = [v for v in walk if bad[v] and dang[v]]
        # "exactly one" and "two" are read as exact counts; three falls to R6.3
        if len(bd) == 1:
            for v in walk:
                cand[v].append(("R6.1", HALF if v in bd else THREE_QUARTERS))
        elif len(bd) == 2:
            for v in walk:
                cand[v].append(("R6.2", HALF if v in bd else ONE))
        else:
            for v in walk:
                cand[v].append(("R6.3", TWO_THIRDS))
    return cand


def _resolve(ledger: ChargeLedger, v: int, face: int, options: list[tuple[str, Fraction]]):
    amounts = {a for _, a in options}
    # on equal amounts a named clause beats the R2.3 fallback
    best = max(options, key=lambda o: (o[1], o[0] != "R2.3", o[0]))
    if len(amounts) > 1:
        rules = {r for r, _ in options}
        category = {
            frozenset({"R0"}): "r0-several-high",
            frozenset({"R2.1"}): "r2.1-two-non-vice",
            frozenset({"R4.1"}): "r4.1-two-bad",
            frozenset({"R5.1"}): "r5.1-two-bad",
        }.get(frozenset(rules), "clause-conflict")
        detail = ", ".join(sorted({f"{r}={a}" for r, a in options}))
        ledger.note("overlap", category, best[0], v, face, f"conflicting clauses {detail}; larger amount used")
    return best


def _apply_triangle(pg: PlaneGraph, ledger: ChargeLedger, i: int, cls) -> None:
    walk = pg.faces[i].walk
    deg = {v: pg.degree(v) for v in walk}
    cand = _triangle_candidates(walk, deg, cls)
    chosen: dict[int, tuple[str, Fraction]] = {}
    for v in walk:
        if cand[v]:
            chosen[v] = _resolve(ledger, v, i, cand[v])

    if all(deg[v] < HIGH for v in walk):
        low = [v for v in walk if 3 <= deg[v] <= 4]
        top = [v for v in walk if _mid(deg[v])]
        if len(low) == 2 and len(top) == 1:
            v3 = top[0]
            amount = TWO - chosen[low[0]][1] - chosen[low[1]][1]
            if v3 in chosen:
                ledger.note("overlap", "clause-conflict", "R3", v3, i, "R3 and another clause both name this vertex")
            chosen[v3] = ("R3", amount)

    for v in walk:
        if v in chosen:
            rule, amount = chosen[v]
            ledger.move(vid(v), fid(i), amount, rule)
        else:
            category = "low-degree-vertex" if deg[v] <= 2 else "mid-vertex-beside-low-degree"
            ledger.note("gap", category, "R0-R6", v, i, f"{deg[v]}-vertex on a 3-face of shape {tuple(sorted(deg.values()))}")


def _apply_large(pg: PlaneGraph, ledger: ChargeLedger, i: int) -> None:
    f = pg.faces[i]
    for v in f.walk:
        d = pg.degree(v)
        if d == 3 or (d >= 4 and f.degree >= 6):
            ledger.move(vid(v), fid(i), THIRD, "R1")
        else:
            category = "low-degree-vertex" if d <= 2 else "short-face"
            ledger.note("gap", category, "R1", v, i, f"{d}-vertex on a {f.degree}-face")


# --- rules R7-R8 -----------------------------------------------------------


def _apply_r7(pg: PlaneGraph, ledger: ChargeLedger, tax: Taxonomy) -> None:
    for i, fc in enumerate(tax.faces):
        if not fc.poor:
            continue
        intake = ZERO
        for j in sorted(_neighbour_faces(pg, i)):
            g = tax.faces[j]
            if g.degree >= 7:
                assert g.xi >= 1, "R7 source without a poor neighbour"
                amount = (Fraction(g.degree, 3) - 2) / g.xi
                ledger.move(fid(j), fid(i), amount, "R7")
                intake += amount
        ledger.r7_intake[i] = intake


def _apply_r8(pg: PlaneGraph, ledger: ChargeLedger, tax: Taxonomy) -> None:
    by_end: dict[int, list[NicePath]] = defaultdict(list)
    for v, ps in enumerate(tax.paths):
        if tax.vertices[v].well:
            for p in ps:
                by_end[p.end].append(p)
    for i, fc in enumerate(tax.faces):
        if not fc.poor or ledger.r7_intake.get(i, ZERO) >= THIRD:
            continue
        on_f = set(pg.faces[i].walk)
        internals: dict[int, set[tuple[int, ...]]] = defaultdict(set)
        for u in sorted(on_f):
            for p in by_end[u]:
                if p.start in on_f or any(x in on_f for x in p.internal):
                    continue
                internals[p.start].add(tuple(sorted(p.internal)))
        groups: dict[tuple[int, ...], list[int]] = defaultdict(list)
        for v in sorted(internals):
            if len(internals[v]) == 1:
                groups[next(iter(internals[v]))].append(v)
            else:
                ledger.note("gap", "r8-mixed-internals", "R8", v, i, "well vertex reaches the face through different internal vertices")
        for key in sorted(groups):
            members = groups[key]
            if len(members) > 2:
                ledger.note("gap", "r8-large-group", "R8", None, i, f"{len(members)} well vertices share internals {list(key)}")
                continue
            for v in members:
                ledger.move(vid(v), fid(i), Fraction(1, 6 * len(members)), "R8")


def apply_rules(pg: PlaneGraph, ledger: ChargeLedger | None = None) -> ChargeLedger:
    """Run R0-R6, snapshot ch1, mark well vertices, run R7 then R8, snapshot ch2."""
    ledger = ledger or ChargeLedger.start(pg)
    tax = classify(pg)
    for i, f in enumerate(pg.faces):
        if f.degree == 3:
            _apply_triangle(pg, ledger, i, tax.vertices)
        elif f.degree:
            _apply_large(pg, ledger, i)
    ledger.ch1 = ledger.current()
    verts = tuple(replace(c, well=ledger.ch1[vid(c.vertex)] >= TWELFTH) for c in tax.vertices)
    tax = replace(tax, vertices=verts)
    ledger.taxonomy = tax
    _apply_r7(pg, ledger, tax)
    _apply_r8(pg, ledger, tax)
    ledger.ch2 = ledger.current()
    return ledger


# --- audit -----------------------------------------------------------------


@dataclass(frozen=True)
class AuditReport:
    totals: dict[str, Fraction]
    conserved: bool
    negative: tuple[str, ...]
    corollary_violations: tuple[dict, ...]
    claim_failures: tuple[dict, ...]
    gaps: int
    overlaps: int
    reducible: dict | None = None

    @property
    def all_nonnegative(self) -> bool:
        return not self.negative

    def to_dict(self) -> dict:
        return {
            "totals": {k: fmt(v) for k, v in self.totals.items()},
            "conserved": self.conserved,
            "negative": list(self.negative),
            "corollary_violations": list(self.corollary_violations),
            "claim_failures": list(self.claim_failures),
            "gaps": self.gaps,
            "overlaps": self.overlaps,
            "reducible": self.reducible,
        }


def corollary_violations(tax: Taxonomy) -> list[dict]:
    """Structural bounds that hold on hosts free of the catalog configurations."""
    out = []
    for c in tax.vertices:
        if c.degree < 3:
            continue
        lhs = c.f33 + c.f34 + c.f3b + c.fbb
        if lhs > c.degree // 2 - 1:
            out.append({"vertex": c.vertex, "part": 1, "value": lhs, "bound": c.degree // 2 - 1})
        if c.dangerous and (c.f3b or c.fbb):
            out.append({"vertex": c.vertex, "part": 2, "value": c.f3b + c.fbb, "bound": 0})
        if c.dangerous and c.degree % 2 == 1 and (c.f34 or c.f4b):
            out.append({"vertex": c.vertex, "part": "2-odd", "value": c.f34 + c.f4b, "bound": 0})
    return out


def claim_failures(pg: PlaneGraph, ledger: ChargeLedger) -> list[dict]:
    """Spot checks on ch1 for the two 5+-vertex classes with a 1/6 floor."""
    tax = ledger.taxonomy
    out = []
    for c in tax.vertices:
        ch = ledger.ch1[vid(c.vertex)]
        if c.degree >= 5 and not c.dangerous and ch < SIXTH:
            out.append({"claim": "non-dangerous", "vertex": c.vertex, "ch1": fmt(ch)})
    for i, fc in enumerate(tax.faces):
        if fc.degree != 3:
            continue
        walk = pg.faces[i].walk
        for v in walk:
            if pg.degree(v) < 5:
                continue
            u, w = _others(walk, v)
            for a, b in ((u, w), (w, u)):
                if pg.degree(a) == 4 and tax.vertices[a].bad and pg.degree(b) >= 4:
                    ch = ledger.ch1[vid(v)]
                    if ch < SIXTH:
                        out.append({"claim": "bad-4-neighbour", "vertex": v, "face": i, "ch1": fmt(ch)})
    return out


def audit(pg: PlaneGraph, ledger: ChargeLedger | None = None, probe_reducible: bool = False) -> AuditReport:
    """Conservation, negativity and structural checks on an applied ledger.

    With ``probe_reducible`` an instance that ends with a negative charge is
    also searched for a reducible configuration, pairing the two outcomes.
    """
    if ledger is None or ledger.ch2 is None:
        ledger = apply_rules(pg, ledger)
    totals = {s: ledger.total(s) for s in ("initial", "ch1", "ch2")}
    negative = tuple(k for k, x in ledger.ch2.items() if x < 0)
    reducible = None
    if probe_reducible and negative:
        reducible = _probe(pg)
    return AuditReport(
        totals=totals,
        conserved=all(t == EULER_TOTAL for t in totals.values()),
        negative=negative,
        corollary_violations=tuple(corollary_violations(ledger.taxonomy)),
        claim_failures=tuple(claim_failures(pg, ledger)),
        gaps=len(ledger.gaps()),
        overlaps=len(ledger.overlaps()),
        reducible=reducible,
    )


def _probe(pg: PlaneGraph) -> dict | None:
    from .errors import HypothesisViolated
    from .sampler import find_reducible

    g = pg.graph
    try:
        y, cert, source = find_reducible(g, list(range(g.n)), 4, 138)
    except HypothesisViolated:
        return None
    return {"vertices": sorted(y), "source": source, "status": cert.status}
