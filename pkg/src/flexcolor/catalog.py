"""Named configurations rebuilt from their textual descriptions.

Every builder returns an :class:`EmbeddedConfig` whose vertices carry string
labels and ambient degrees. The drawings these shapes come from are not
available, so adjacency is reconstructed from degree, face and path lists;
each entry records ``reconstructed_from_prose`` and exposes remaining
ambiguities as parameters.

Conventions used throughout: ``u*`` are 3-vertices, ``v*`` are 4-vertices,
``w*`` are bad vertices of degree 5..12. A bad vertex of degree d brings
along the neighbours on its floor((d-2)/2) worst/worse triangles; a dangerous
vertex of degree d brings the 3-vertices of its floor((d-3)/2) worst
triangles.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Iterable, Sequence
from urllib.parse import parse_qsl

from .errors import InputError
from .graph import Graph, is_c4c5_free
from .reducibility import EmbeddedConfig

CLOSURES = ("worst", "worse", "mixed")


class Builder:
    def __init__(self):
        self.labels: list[str] = []
        self.deg: list[int] = []
        self.edges: set[tuple[int, int]] = set()
        self.roles: dict[str, str] = {}

    def add(self, label: str, degree: int, role: str = "") -> str:
        if label in self.labels:
            raise InputError(f"duplicate vertex {label}")
        self.labels.append(label)
        self.deg.append(int(degree))
        if role:
            self.roles[label] = role
        return label

    def has(self, label: str) -> bool:
        return label in self.labels

    def idx(self, label: str) -> int:
        return self.labels.index(label)

    def edge(self, a: str, b: str) -> None:
        i, j = self.idx(a), self.idx(b)
        if i == j:
            raise InputError(f"loop at {a}")
        self.edges.add((min(i, j), max(i, j)))

    def path(self, *vs: str) -> None:
        for a, b in zip(vs, vs[1:]):
            self.edge(a, b)

    def triangle(self, a: str, b: str, c: str) -> None:
        self.path(a, b, c, a)

    def bad(self, label: str, d: int, closure: str = "worst") -> str:
        """A bad vertex with its worst/worse triangle neighbours."""
        if not 5 <= d <= 12:
            raise InputError(f"bad vertex degree {d} outside 5..12")
        if closure not in CLOSURES:
            raise InputError(f"closure must be one of {CLOSURES}")
        self.add(label, d, "bad")
        for i in range((d - 2) // 2):
            p = self.add(f"{label}.a{i + 1}", 3)
            other = 3 if closure == "worst" or (closure == "mixed" and i % 2 == 0) else 4
            q = self.add(f"{label}.b{i + 1}", other)
            self.triangle(label, p, q)
        return label

    def dangerous_tail(self, label: str, d: int) -> None:
        """3-vertices of the worst triangles at an existing dangerous vertex."""
        for i in range((d - 3) // 2):
            p = self.add(f"{label}.a{i + 1}", 3)
            q = self.add(f"{label}.b{i + 1}", 3)
            self.triangle(label, p, q)

    def flex(self, label: str, d: int) -> str:
        """A vertex of degree 3, 4, or a dangerous one of degree 5..12 with its tail."""
        if d in (3, 4):
            return self.add(label, d)
        if not 5 <= d <= 12:
            raise InputError(f"degree {d} must be 3, 4 or 5..12")
        self.add(label, d, "dangerous")
        self.dangerous_tail(label, d)
        return label

    def build(self, name: str, k: int = 4) -> EmbeddedConfig:
        g = Graph(len(self.labels), frozenset(self.edges))
        return EmbeddedConfig(g, tuple(self.deg), k, tuple(self.labels), name)


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    lemma: str
    params: tuple[tuple[str, object], ...]
    bound: int
    builder: Callable[[], EmbeddedConfig] = field(compare=False, repr=False)
    reconstructed_from_prose: bool = True
    note: str = ""

    def build(self) -> EmbeddedConfig:
        cfg = self.builder()
        if cfg.n > self.bound:
            raise InputError(f"{self.id} has {cfg.n} vertices, above its bound {self.bound}")
        return cfg


# ------------------------------------------------------------------ stalks

STALK_TAGS = "abcdefghijklm"
# neighbours of the root each stalk occupies
STALK_ROOT_DEGREE = dict(a=1, b=1, c=2, d=2, e=2, f=2, g=2, h=2, i=2, j=2, k=2, l=2, m=1)
SET_A = frozenset("abcdefghjl")
SET_B = frozenset("abcdel")
SET_C = frozenset("bcel")
SET_D = frozenset("abcefghjl")
SET_K = frozenset("ik")


@dataclass(frozen=True)
class StalkKind:
    tag: str
    bad_degrees: tuple[int, ...] = ()
    identify: bool = False
    closure: str = "worst"

    def __post_init__(self):
        if self.tag not in STALK_TAGS or len(self.tag) != 1:
            raise InputError(f"unknown stalk tag {self.tag!r}")
        need = {"f": 1, "g": 1, "h": 2, "i": 1, "j": 1}.get(self.tag, 0)
        if len(self.bad_degrees) not in (0, need):
            raise InputError(f"stalk ({self.tag}) takes {need} bad degrees")
        if self.identify and self.tag not in "jklm":
            raise InputError(f"stalk ({self.tag}) allows no identification")
        for d in self.bad_degrees:
            if not 5 <= d <= 12:
                raise InputError(f"bad degree {d} outside 5..12")

    def degrees(self) -> tuple[int, ...]:
        need = {"f": 1, "g": 1, "h": 2, "i": 1, "j": 1}.get(self.tag, 0)
        return self.bad_degrees or (5,) * need


def add_stalk(b: Builder, root: str, kind: StalkKind, prefix: str) -> None:
    """Attach a stalk of the given kind to ``root``; new labels start with ``prefix``."""
    t = kind.tag
    ws = [f"{prefix}w{i + 1}" for i in range(len(kind.degrees()))]
    for w, d in zip(ws, kind.degrees()):
        b.bad(w, d, kind.closure)
    u = lambda i: f"{prefix}u{i}"
    v = lambda i: f"{prefix}v{i}"
    if t == "a":
        b.add(u(1), 3)
        b.edge(root, u(1))
    elif t == "b":
        b.add(u(1), 3), b.add(u(2), 3)
        b.path(root, u(1), u(2))
    elif t == "c":
        b.add(u(1), 3), b.add(u(2), 3)
        b.triangle(root, u(1), u(2))
    elif t == "d":
        b.add(u(1), 3), b.add(v(1), 4)
        b.triangle(root, u(1), v(1))
    elif t == "e":
        b.add(u(1), 3), b.add(u(2), 3), b.add(v(1), 4)
        b.path(root, u(1), u(2))
        b.path(root, v(1), u(1))
    elif t == "f":
        b.add(u(1), 3)
        b.triangle(root, u(1), ws[0])
    elif t == "g":
        b.add(u(1), 3), b.add(u(2), 3)
        b.path(root, u(1), u(2))
        b.path(root, ws[0], u(1))
    elif t == "h":
        b.triangle(root, ws[0], ws[1])
    elif t == "i":
        b.add(v(1), 4)
        b.triangle(root, v(1), ws[0])
    elif t == "j":
        b.add(v(1), 4), b.add(v(3), 4), b.add(u(1), 3)
        b.triangle(root, ws[0], v(1))
        mid = v(1) if kind.identify else b.add(v(2), 4)
        if not kind.identify:
            b.edge(v(1), mid)
        b.triangle(mid, v(3), u(1))
    elif t == "k":
        b.add(v(1), 4), b.add(v(2), 4), b.add(v(4), 4), b.add(u(1), 3)
        b.triangle(root, v(1), v(2))
        mid = v(1) if kind.identify else b.add(v(3), 4)
        if not kind.identify:
            b.edge(v(1), mid)
        b.triangle(mid, v(4), u(1))
    elif t == "l":
        b.add(v(1), 4), b.add(v(2), 4), b.add(v(4), 4), b.add(v(6), 4)
        b.add(u(1), 3), b.add(u(2), 3)
        b.triangle(root, v(1), v(2))
        m1 = v(1) if kind.identify else b.add(v(3), 4)
        m2 = v(2) if kind.identify else b.add(v(5), 4)
        if not kind.identify:
            b.edge(v(1), m1)
            b.edge(v(2), m2)
        b.triangle(m1, v(4), u(1))
        b.triangle(m2, v(6), u(2))
    elif t == "m":
        b.add(v(1), 4), b.add(v(3), 4), b.add(u(1), 3)
        b.edge(root, v(1))
        mid = v(1) if kind.identify else b.add(v(2), 4)
        if not kind.identify:
            b.edge(v(1), mid)
        b.triangle(mid, v(3), u(1))


def build_stalk(kind: StalkKind | str, root_degree: int | None = None) -> EmbeddedConfig:
    """A single stalk on its own. The root's degree defaults to the neighbours it uses."""
    if isinstance(kind, str):
        kind = StalkKind(kind)
    b = Builder()
    rd = STALK_ROOT_DEGREE[kind.tag] if root_degree is None else root_degree
    b.add("v", rd, "root")
    add_stalk(b, "v", kind, "")
    return b.build(f"stalk/{kind.tag}")


def validate_combination(tags: Sequence[str], root_degree: int) -> int:
    """Check a stalk multiset against the admissible mixes; returns the required |L(v)|."""
    if not 5 <= root_degree <= 12:
        raise InputError("the root must have degree 5..12")
    tags = list(tags)
    for t in tags:
        if t not in STALK_TAGS:
            raise InputError(f"unknown stalk tag {t!r}")
    used = sum(STALK_ROOT_DEGREE[t] for t in tags)
    if used > root_degree:
        raise InputError(f"stalks use {used} neighbours of a degree-{root_degree} root")
    list_size = used + 4 - root_degree
    specials = [t for t in tags if t not in SET_A]
    rest = frozenset(t for t in tags if t in SET_A)
    if not specials:
        need = 3
    elif len(specials) == 1 and specials[0] == "i" and rest <= SET_B:
        need = 3
    elif len(specials) == 1 and specials[0] == "k" and rest <= SET_C:
        need = 3
    elif len(specials) == 1 and specials[0] == "m" and rest <= SET_D:
        need = 3
    elif len(specials) == 1 and specials[0] in SET_K and not (specials[0] == "k" and "d" in rest):
        need = 4
    else:
        raise InputError(f"stalk combination {sorted(tags)} is not admissible")
    if list_size < need:
        raise InputError(f"root list size {list_size} is below the required {need}")
    return need


def build_stalk_combination(kinds: Sequence[StalkKind | str], root_degree: int) -> EmbeddedConfig:
    kinds = [StalkKind(k) if isinstance(k, str) else k for k in kinds]
    validate_combination([k.tag for k in kinds], root_degree)
    b = Builder()
    b.add("v", root_degree, "root")
    for i, kind in enumerate(kinds):
        add_stalk(b, "v", kind, f"s{i + 1}.")
    cfg = b.build("combination/" + "".join(k.tag for k in kinds))
    worst = max([d for k in kinds for d in k.degrees()] or [5])
    if cfg.n > (2 * worst - 1) * (root_degree // 2) + 1:
        raise InputError("combination exceeds its size bound")
    return cfg


# ------------------------------------------------------------ lemma builders


def lemma38() -> EmbeddedConfig:
    b = Builder()
    for name, d in (("u", 3), ("v", 4), ("u1", 3), ("v1", 4), ("v2", 4), ("v3", 4)):
        b.add(name, d)
    b.edge("u", "v")
    b.triangle("v", "v1", "v2")
    b.triangle("v2", "v3", "u1")
    return b.build("lemma3.8")


def lemma32(case: int, t: int = 2, dw: Sequence[int] = (5, 5), closure: str = "worst") -> EmbeddedConfig:
    b = Builder()
    dw = list(dw) + [5] * (2 - len(dw))
    if case == 1:
        b.add("v", 4)
        b.bad("w1", dw[0], closure), b.bad("w2", dw[1], closure)
        b.triangle("v", "w1", "w2")
    elif case == 2:
        b.add("v", 6)
        b.add("u1", 3), b.add("u2", 3), b.add("u3", 3)
        b.triangle("v", "u1", "u2")
        b.bad("w1", dw[0], closure)
        b.triangle("v", "u3", "w1")
    elif case in (3, 4):
        if not 2 <= t <= 6:
            raise InputError("t must lie in 2..6")
        b.add("v", 2 * t)
        worst = t - 1 if case == 3 else t - 2
        for i in range(worst):
            b.add(f"u{2 * i + 1}", 3), b.add(f"u{2 * i + 2}", 3)
            b.triangle("v", f"u{2 * i + 1}", f"u{2 * i + 2}")
        if case == 4:
            b.bad("w1", dw[0], closure), b.bad("w2", dw[1], closure)
            b.triangle("v", "w1", "w2")
    elif case in (5, 6):
        b.add("v", 5 if case == 5 else 6)
        b.add("u1", 3)
        b.bad("w1", dw[0], closure)
        b.triangle("v", "u1", "w1")
        pairs = [(2, 3)] if case == 5 else [(2, 3), (4, 5)]
        for p, q in pairs:
            b.add(f"u{p}", 3), b.add(f"u{q}", 3)
            b.path("v", f"u{p}", f"u{q}")
    else:
        raise InputError("case must be 1..6")
    return b.build(f"lemma3.2/{case}")


def _face_gadget(b: Builder) -> None:
    b.add("u", 3), b.add("v", 4), b.add("w", 4)
    b.triangle("u", "v", "w")


def lemma33(xdeg: Sequence[int] = (3, 3, 3, 3)) -> EmbeddedConfig:
    """Degrees of v2, v3, w2, w3 are the parameters."""
    if len(xdeg) != 4:
        raise InputError("four degrees (v2, v3, w2, w3) are required")
    b = Builder()
    _face_gadget(b)
    b.add("v1", 4), b.add("w1", 4)
    for name, d in zip(("v2", "v3", "w2", "w3"), xdeg):
        b.flex(name, d)
    b.triangle("v1", "v2", "v3")
    b.triangle("w1", "w2", "w3")
    # the 6-face v w w1 w3 v3 v1
    b.path("v", "w", "w1", "w3", "v3", "v1", "v")
    return b.build("lemma3.3")


def lemma34(xdeg: Sequence[int] = (3, 3, 3)) -> EmbeddedConfig:
    """Degrees of x2, x3, x4 are the parameters."""
    if len(xdeg) != 3:
        raise InputError("three degrees (x2, x3, x4) are required")
    b = Builder()
    _face_gadget(b)
    b.add("x1", 4), b.add("x5", 3)
    for name, d in zip(("x2", "x3", "x4"), xdeg):
        b.flex(name, d)
    b.triangle("x1", "x2", "x3")
    # the 6-face u w x1 x3 x4 x5
    b.path("u", "w", "x1", "x3", "x4", "x5", "u")
    return b.build("lemma3.4")


def lemma35(xdeg: Sequence[int] = (3, 3, 3), d5: int = 5) -> EmbeddedConfig:
    """Degrees of x2, x3, x4 and the odd degree of the dangerous x5."""
    if len(xdeg) != 3:
        raise InputError("three degrees (x2, x3, x4) are required")
    if d5 % 2 == 0 or not 5 <= d5 <= 11:
        raise InputError("x5 must have odd degree in 5..11")
    b = Builder()
    _face_gadget(b)
    b.add("x1", 4), b.add("x6", 4)
    for name, d in zip(("x2", "x3", "x4"), xdeg):
        b.flex(name, d)
    b.add("x5", d5, "dangerous")
    b.dangerous_tail("x5", d5)
    b.triangle("x1", "x2", "x3")
    b.triangle("x4", "x5", "x6")
    b.path("u", "w", "x1", "x3", "x4", "x5", "u")
    return b.build("lemma3.5")


def _z(b: Builder, name: str, z: int, closure: str) -> str:
    if z == 4:
        return b.add(name, 4)
    return b.bad(name, z, closure)


def lemma37(case: int, dw: int = 5, z: int = 4, dz: Sequence[int] = (5, 5), identify: bool = False, closure: str = "worst") -> EmbeddedConfig:
    """``w`` is bad and dangerous of odd degree ``dw`` and adjacent to ``v``.

    ``z`` selects a 4-vertex (4) or a bad vertex of that degree for the
    z-role in cases 1 and 2; ``dz`` are the bad degrees in cases 3 and 4.
    """
    if dw % 2 == 0 or not 5 <= dw <= 11:
        raise InputError("d(w) must be odd in 5..11")
    if z != 4 and not 5 <= z <= 12:
        raise InputError("z must be 4 or a bad degree 5..12")
    b = Builder()
    b.add("w", dw, "bad")
    b.dangerous_tail("w", dw)
    if case == 1:
        b.add("v", 5)
        b.add("u1", 3), b.add("u2", 3)
        _z(b, "z1", z, closure)
        b.edge("v", "u2")
        b.triangle("v", "u1", "z1")
    elif case == 2:
        b.add("v", 6)
        b.add("u1", 3), b.add("u2", 3), b.add("v1", 4)
        _z(b, "z2", z, closure)
        b.triangle("v", "u1", "v1")
        b.triangle("v", "u2", "z2")
    elif case == 3:
        b.add("v", 6)
        b.add("u1", 3), b.add("u2", 3)
        b.bad("w1", dz[0], closure), b.bad("w2", dz[1], closure)
        b.triangle("v", "u1", "w1")
        b.triangle("v", "u2", "w2")
    elif case == 4:
        b.add("v", 6)
        b.add("u1", 3), b.add("u2", 3), b.add("v1", 4)
        b.bad("w1", dz[0], closure)
        b.triangle("v", "u1", "u2")
        b.triangle("v", "v1", "w1")
    elif case in (5, 6):
        b.add("v", 6)
        b.add("u1", 3), b.add("u2", 3)
        b.triangle("v", "u1", "u2")
        chains = [("v1", "v2", "v3", "u3")]
        if case == 6:
            chains.append(("v4", "v5", "v6", "u4"))
        for a, m, c, u in chains:
            b.add(a, 4), b.add(c, 4), b.add(u, 3)
            mid = a if identify else b.add(m, 4)
            if not identify:
                b.edge(a, mid)
            b.edge("v", a)
            b.triangle(mid, c, u)
        # case 6: a (4,4,v)-face; case 5: the (4,b,v)-face v v1 w
        if case == 6:
            b.triangle("v", "v1", "v4")
        else:
            b.edge("v1", "w")
    else:
        raise InputError("case must be 1..6")
    b.edge("v", "w")
    return b.build(f"lemma3.7/{case}")


# Small shapes in which every two-vertex (P3+P4)-independent set is a pendant
# edge. Each entry lists (label, degree) pairs and edges by label.
LEMMA36_SHAPES: dict[str, tuple[tuple[tuple[str, int], ...], tuple[tuple[str, str], ...]]] = {
    "t1": ((("u1", 3), ("v1", 4), ("v2", 4), ("u2", 3),), (("u1", "v1"), ("u1", "v2"), ("v1", "v2"), ("v2", "u2"),)),
    "t2": ((("v1", 4), ("u1", 3), ("v2", 4), ("u2", 3), ("u3", 3),), (("v1", "u1"), ("v1", "v2"), ("v1", "u2"), ("v1", "u3"), ("u1", "v2"),)),
    "t3": ((("u1", 3), ("v1", 4), ("u2", 3), ("v2", 4), ("u3", 3), ("u4", 3),), (("u1", "v1"), ("v1", "u2"), ("v1", "v2"), ("u2", "v2"), ("v2", "u3"), ("v2", "u4"), ("u3", "u4"),)),
    "t4": ((("v1", 4), ("v2", 4), ("v3", 4), ("u1", 3), ("v4", 4), ("u2", 3), ("u3", 3),), (("v1", "v2"), ("v1", "v3"), ("v1", "v4"), ("v1", "u2"), ("v2", "v3"), ("v3", "u1"), ("v3", "u3"), ("v4", "u2"),)),
    "t5": ((("v1", 4), ("v2", 4), ("v3", 4), ("u1", 3), ("v4", 4), ("u2", 3), ("v5", 4), ("u3", 3),), (("v1", "v2"), ("v1", "v3"), ("v1", "u3"), ("v2", "v3"), ("v2", "u1"), ("v2", "v4"), ("v3", "u2"), ("v3", "v5"), ("u1", "v4"), ("u2", "v5"),)),
    "t6": ((("v1", 4), ("v2", 4), ("u1", 3), ("v3", 4), ("v4", 4), ("u2", 3), ("u3", 3), ("u4", 3), ("u5", 3),), (("v1", "v2"), ("v1", "u1"), ("v1", "v3"), ("v1", "v4"), ("v2", "u1"), ("v3", "v4"), ("v3", "u2"), ("v3", "u3"), ("v4", "u4"), ("v4", "u5"), ("u2", "u3"),)),
}


def lemma36(shape: str) -> EmbeddedConfig:
    if shape not in LEMMA36_SHAPES:
        raise InputError(f"unknown shape {shape!r}; known: {sorted(LEMMA36_SHAPES)}")
    verts, edges = LEMMA36_SHAPES[shape]
    b = Builder()
    for name, d in verts:
        b.add(name, d)
    for a, c in edges:
        b.edge(a, c)
    return b.build(f"lemma3.6/{shape}")


# ---------------------------------------------------------------- registry

BOUNDS = {"3.1": 138, "3.2": 29, "3.3": 49, "3.4": 37, "3.5": 45, "3.6": 9, "3.7": 37, "3.8": 6}


def _ints(s) -> tuple[int, ...]:
    if isinstance(s, (tuple, list)):
        return tuple(int(x) for x in s)
    return tuple(int(x) for x in str(s).split(",") if x)


def _entry_id(base: str, params: dict) -> str:
    if not params:
        return base
    def fmt(x):
        return ",".join(str(i) for i in x) if isinstance(x, tuple) else str(x)
    return base + "?" + "&".join(f"{k}={fmt(v)}" for k, v in params.items())


def make_entry(base: str, **params) -> CatalogEntry:
    """Catalogue entry from a base id such as ``lemma3.2/3`` and builder parameters."""
    if base.startswith("stalk/"):
        tag = base.split("/", 1)[1]
        kind = StalkKind(tag, _ints(params.get("w", ())), bool(int(params.get("identify", 0))), params.get("closure", "worst"))
        return CatalogEntry(_entry_id(base, params), "3.1", tuple(params.items()), BOUNDS["3.1"], lambda: build_stalk(kind))
    if base.startswith("combination/"):
        tags = base.split("/", 1)[1]
        dv = int(params.get("dv", 5))
        return CatalogEntry(_entry_id(base, params), "3.1", tuple(params.items()), BOUNDS["3.1"], lambda: build_stalk_combination(list(tags), dv))
    if not base.startswith("lemma3."):
        raise InputError(f"unknown catalogue id {base!r}")
    lemma, _, case = base[len("lemma"):].partition("/")
    if lemma not in BOUNDS:
        raise InputError(f"unknown lemma {lemma!r}")
    closure = params.get("closure", "worst")
    p = dict(params)
    if lemma == "3.8":
        fn = lemma38
    elif lemma == "3.2":
        c = int(case)
        fn = lambda: lemma32(c, int(p.get("t", 2)), _ints(p.get("w", "5,5")), closure)
    elif lemma == "3.3":
        fn = lambda: lemma33(_ints(p.get("x", "3,3,3,3")))
    elif lemma == "3.4":
        fn = lambda: lemma34(_ints(p.get("x", "3,3,3")))
    elif lemma == "3.5":
        fn = lambda: lemma35(_ints(p.get("x", "3,3,3")), int(p.get("d5", 5)))
    elif lemma == "3.6":
        fn = lambda: lemma36(case)
    elif lemma == "3.7":
        c = int(case)
        fn = lambda: lemma37(c, int(p.get("dw", 5)), int(p.get("z", 4)), _ints(p.get("w", "5,5")), bool(int(p.get("identify", 0))), closure)
    else:
        raise InputError(f"lemma {lemma} has no standalone builder; use combination/<tags>")
    return CatalogEntry(_entry_id(base, params), lemma, tuple(params.items()), BOUNDS[lemma], fn)


def get_entry(entry_id: str) -> CatalogEntry:
    base, _, query = entry_id.partition("?")
    params = dict(parse_qsl(query, keep_blank_values=True)) if query else {}
    return make_entry(base, **params)


def catalog_entries() -> list[CatalogEntry]:
    """The full re-certification grid, in a fixed order."""
    out = [make_entry("lemma3.8")]
    for w in ((5, 5), (6, 6), (5, 12), (11, 12)):
        out.append(make_entry("lemma3.2/1", w=w))
    for w in (5, 6, 12):
        out.append(make_entry("lemma3.2/2", w=(w,)))
    for t in range(2, 7):
        out.append(make_entry("lemma3.2/3", t=t))
    for t in range(2, 7):
        out.append(make_entry("lemma3.2/4", t=t, w=(5, 6)))
    for case in (5, 6):
        for w in (5, 6, 12):
            out.append(make_entry(f"lemma3.2/{case}", w=(w,)))
    for x in ((3, 3, 3, 3), (4, 4, 4, 4), (3, 4, 4, 3), (5, 5, 5, 5), (6, 6, 6, 6), (3, 12, 4, 11), (12, 12, 12, 12)):
        out.append(make_entry("lemma3.3", x=x))
    for x in ((3, 3, 3), (4, 4, 4), (5, 5, 5), (6, 6, 6), (3, 12, 4), (11, 11, 11), (12, 12, 12)):
        out.append(make_entry("lemma3.4", x=x))
    for x, d5 in (((3, 3, 3), 5), ((4, 4, 4), 7), ((5, 6, 5), 9), ((12, 12, 12), 11), ((3, 4, 6), 11)):
        out.append(make_entry("lemma3.5", x=x, d5=d5))
    for shape in sorted(LEMMA36_SHAPES):
        out.append(make_entry(f"lemma3.6/{shape}"))
    for dw in (5, 7, 9, 11):
        for z in (4, 5, 6):
            out.append(make_entry("lemma3.7/1", dw=dw, z=z))
            out.append(make_entry("lemma3.7/2", dw=dw, z=z))
        out.append(make_entry("lemma3.7/3", dw=dw, w=(5, 6)))
        out.append(make_entry("lemma3.7/4", dw=dw, w=(5,)))
        for case in (5, 6):
            for ident in (0, 1):
                out.append(make_entry(f"lemma3.7/{case}", dw=dw, identify=ident))
    return out


# ---------------------------------------------------------------- matching


def match_configuration(g: Graph, ambient_degrees: Sequence[int] | None, entry: CatalogEntry | EmbeddedConfig, within: Iterable[int] | None = None) -> list[dict[int, int]]:
    """Induced occurrences of an entry's pattern in ``g``.

    An occurrence maps pattern vertex -> host vertex, preserves adjacency and
    non-adjacency, and sends each vertex to a host vertex whose degree equals
    the pattern's ambient degree. Occurrences on the same host vertex set are
    reported once (the lexicographically least mapping). Ordered by sorted
    host vertex tuple.
    """
    from networkx.algorithms.isomorphism import GraphMatcher

    cfg = entry.build() if isinstance(entry, CatalogEntry) else entry
    host_deg = list(ambient_degrees) if ambient_degrees is not None else [g.degree(v) for v in range(g.n)]
    allowed = set(range(g.n)) if within is None else set(within)
    host = g.induced_subgraph(allowed)[0].relabel_to_networkx()
    old = sorted(allowed)
    for i, v in enumerate(old):
        host.nodes[i]["d"] = host_deg[v]
    pat = cfg.H.relabel_to_networkx()
    for v in range(cfg.n):
        pat.nodes[v]["d"] = cfg.ambient_degree[v]
    gm = GraphMatcher(host, pat, node_match=lambda a, b: a["d"] == b["d"])
    best: dict[tuple[int, ...], tuple[int, ...]] = {}
    for iso in gm.subgraph_isomorphisms_iter():
        inv = [0] * cfg.n
        for h, p in iso.items():
            inv[p] = old[h]
        key = tuple(sorted(inv))
        cand = tuple(inv)
        if key not in best or cand < best[key]:
            best[key] = cand
    return [dict(enumerate(best[k])) for k in sorted(best)]


def brute_force_matches(g: Graph, ambient_degrees: Sequence[int], cfg: EmbeddedConfig) -> set[tuple[int, ...]]:
    """Host vertex sets of induced, degree-respecting occurrences (slow oracle)."""
    out = set()
    for image in permutations(range(g.n), cfg.n):
        if any(ambient_degrees[image[p]] != cfg.ambient_degree[p] for p in range(cfg.n)):
            continue
        ok = all(
            (q in cfg.H.adj[p]) == (image[q] in g.adj[image[p]])
            for p in range(cfg.n)
            for q in range(p + 1, cfg.n)
        )
        if ok:
            out.add(tuple(sorted(image)))
    return out


def check_shape(cfg: EmbeddedConfig) -> list[str]:
    """Structural sanity of a built configuration; returns problems found."""
    problems = []
    if not is_c4c5_free(cfg.H):
        problems.append("contains C4 or C5")
    for v in range(cfg.n):
        if cfg.H.degree(v) > cfg.ambient_degree[v]:
            problems.append(f"{cfg.label(v)} exceeds its degree")
    return problems
