"""Independent recounts used by the discharging tests and the acceptance gate.

Nothing here calls into the rule engine. Triangles come from point geometry,
flags from their textbook definitions, and rule amounts from a per-shape case
table written directly against the rule list.
"""

from __future__ import annotations

from fractions import Fraction as F
from itertools import combinations, product

T = F(1, 3)


# --- colourings ---------------------------------------------------------------


def proper_list_coloring(edges, lists, col) -> bool:
    """Every vertex uses a colour from its list and no edge is monochromatic."""
    if len(col) != len(lists):
        return False
    return all(c in lists[v] for v, c in enumerate(col)) and all(col[a] != col[b] for a, b in edges)


def all_colorings(edges, lists):
    """Every proper L-colouring, by the full Cartesian product."""
    return [col for col in product(*(sorted(x) for x in lists)) if all(col[a] != col[b] for a, b in edges)]


def colorable_by_product(edges, lists) -> bool:
    return any(all(col[a] != col[b] for a, b in edges) for col in product(*(sorted(x) for x in lists)))


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _strictly_inside(p, a, b, c):
    s = [_cross(a, b, p), _cross(b, c, p), _cross(c, a, p)]
    return all(x > 0 for x in s) or all(x < 0 for x in s)


def geometric_triangles(points, edges):
    """Facial 3-cycles of a straight-line drawing, with multiplicity.

    A 3-cycle is a face on its inside when no vertex lies strictly inside it,
    and on its outside when every other vertex does.
    """
    adj = {v: set() for v in range(len(points))}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    out = []
    for a, b, c in combinations(range(len(points)), 3):
        if b in adj[a] and c in adj[a] and c in adj[b]:
            inside = [v for v in range(len(points)) if v not in (a, b, c) and _strictly_inside(points[v], points[a], points[b], points[c])]
            if not inside:
                out.append((a, b, c))
            if len(inside) == len(points) - 3:
                out.append((a, b, c))
    return out


def recount_flags(points, edges):
    """Per-vertex f3, bad, vice, dangerous and per-triangle degree shapes."""
    n = len(points)
    deg = [0] * n
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    tris = geometric_triangles(points, edges)
    f3 = [0] * n
    f33 = [0] * n
    f3_4minus = [0] * n  # faces (3, x, v) with x of degree 3 or 4
    for t in tris:
        for v in t:
            f3[v] += 1
            o = sorted(deg[x] for x in t if x != v)
            if o == [3, 3]:
                f33[v] += 1
            if o[0] == 3 and o[1] <= 4:
                f3_4minus[v] += 1
    flags = []
    for v in range(n):
        d = deg[v]
        flags.append(
            {
                "f3": f3[v],
                "f33": f33[v],
                "bad": 4 <= d <= 12 and f3_4minus[v] == (d - 2) // 2 and f3[v] == d // 2,
                "vice": d == 4 and f3[v] == 2,
                "dangerous": 5 <= d <= 12 and f33[v] == (d - 3) // 2,
            }
        )
    shapes = sorted(tuple(sorted(deg[x] for x in t)) for t in tris)
    return deg, flags, shapes


def triangle_amounts(walk, deg, bad, vice, dangerous):
    """What each corner of a 3-face pays under R0-R6, or None where the rules
    give no single answer (a gap or an overlap)."""
    d = {v: deg[v] for v in walk}
    if any(x <= 2 for x in d.values()):
        return None
    high = [v for v in walk if d[v] >= 13]
    if len(high) == 1:
        return {v: F(4, 3) if v in high else T for v in walk}
    if high:
        return None
    three = [v for v in walk if d[v] == 3]
    four = [v for v in walk if d[v] == 4]
    mid = [v for v in walk if 5 <= d[v] <= 12]
    out = {v: T for v in three}
    if len(mid) == 3:
        bd = [v for v in walk if bad[v] and dangerous[v]]
        if len(bd) == 1:
            return {v: F(1, 2) if v in bd else F(3, 4) for v in walk}
        if len(bd) == 2:
            return {v: F(1, 2) if v in bd else F(1) for v in walk}
        return {v: F(2, 3) for v in walk}
    if len(mid) == 2:
        low = (three + four)[0]
        b = [v for v in mid if bad[v]]
        if len(b) == 2:
            return None
        if d[low] == 3:
            pay_bad, pay_other, plain = F(2, 3), F(1), F(5, 6)
            out[low] = T
        else:
            pay_bad, pay_other, plain = F(1, 2), F(5, 6), F(2, 3)
            out[low] = F(2, 3)
        for v in mid:
            out[v] = (pay_bad if v in b else pay_other) if b else plain
        return out
    # at most one 5..12 vertex: the 4-vertices follow R2 and the big one R3
    if len(four) == 2:
        x, y = four
        if len(three) == 1:
            nv = [v for v in four if not vice[v]]
            if len(nv) == 2:
                return None
            if nv:
                out[nv[0]] = F(1)
                out[[v for v in four if v not in nv][0]] = F(2, 3)
            else:
                out[x] = out[y] = F(2, 3)
        else:
            r22 = [(i, o) for i, o in ((x, y), (y, x)) if bad[i] and not vice[o]]
            if len(r22) == 2:
                return None
            if r22:
                i, o = r22[0]
                out[i], out[o] = F(1, 2), F(5, 6)
            else:
                out[x] = out[y] = F(2, 3)
    else:
        for v in four:
            out[v] = F(2, 3)
    for v in mid:
        out[v] = 2 - sum(out[u] for u in walk if u != v)
    return out


def face_amounts(walk, deg):
    """R1 on a face of degree at least 4, per corner; None marks a corner the rules skip."""
    out = {}
    for v in walk:
        if deg[v] == 3 or (deg[v] >= 4 and len(walk) >= 6):
            if out.get(v, 0) is not None:
                out[v] = out.get(v, 0) + T
        else:
            out[v] = None
    return out


def oracle_ch1(pg, flags):
    """ch1 by the case table, or None where some incidence is undetermined."""
    deg = [pg.degree(v) for v in range(pg.n)]
    bad = [f["bad"] for f in flags]
    vice = [f["vice"] for f in flags]
    dang = [f["dangerous"] for f in flags]
    ch = {v: F(deg[v] - 2) for v in range(pg.n)}
    undetermined = set()
    for face in pg.faces:
        if not face.walk:
            continue
        if face.degree == 3:
            amounts = triangle_amounts(face.walk, deg, bad, vice, dang)
        else:
            amounts = face_amounts(face.walk, deg)
        if amounts is None:
            undetermined.update(face.walk)
            continue
        for v, a in amounts.items():
            if a is None:
                undetermined.add(v)
            else:
                ch[v] -= a
    return ch, undetermined


# --- frozen vectors -----------------------------------------------------------

EAR = [(3, 3)]

# corners for the central triangle, and what it receives: (corner degree, amount, rule)
VECTORS = {
    "r2.1": ([(3, []), (4, []), (4, EAR)], [(3, T, "R1"), (4, F(2, 3), "R2.1"), (4, F(1), "R2.1")]),
    "r3-33x": ([(3, []), (3, []), (7, [])], [(3, T, "R1"), (3, T, "R1"), (7, F(4, 3), "R3")]),
    "r3-34x": ([(3, []), (4, []), (7, [])], [(3, T, "R1"), (4, F(2, 3), "R2.3"), (7, F(1), "R3")]),
    "444": ([(4, []), (4, []), (4, [])], [(4, F(2, 3), "R2.3")] * 3),
    "r2.2": ([(4, EAR), (4, []), (6, [])], [(4, F(1, 2), "R2.2"), (4, F(5, 6), "R2.2"), (6, F(2, 3), "R3")]),
    "r2.3": ([(4, []), (4, []), (6, [])], [(4, F(2, 3), "R2.3"), (4, F(2, 3), "R2.3"), (6, F(2, 3), "R3")]),
    "r4.1": ([(3, []), (5, EAR), (5, [])], [(3, T, "R1"), (5, F(2, 3), "R4.1"), (5, F(1), "R4.1")]),
    "r4.2": ([(3, []), (5, []), (5, [])], [(3, T, "R1"), (5, F(5, 6), "R4.2"), (5, F(5, 6), "R4.2")]),
    "r5.1": ([(4, []), (5, EAR), (5, [])], [(4, F(2, 3), "R2.3"), (5, F(1, 2), "R5.1"), (5, F(5, 6), "R5.1")]),
    "r5.2": ([(4, []), (5, []), (5, [])], [(4, F(2, 3), "R2.3"), (5, F(2, 3), "R5.2"), (5, F(2, 3), "R5.2")]),
    "r6.1": ([(5, EAR), (5, []), (5, [])], [(5, F(1, 2), "R6.1"), (5, F(3, 4), "R6.1"), (5, F(3, 4), "R6.1")]),
    "r6.2": ([(5, EAR), (5, EAR), (5, [])], [(5, F(1, 2), "R6.2"), (5, F(1, 2), "R6.2"), (5, F(1), "R6.2")]),
    "r6.3": ([(5, EAR), (5, EAR), (5, EAR)], [(5, F(2, 3), "R6.3")] * 3),
    "r0": ([(13, []), (3, []), (4, [])], [(3, T, "R0"), (4, T, "R0"), (13, F(4, 3), "R0")]),
}

# hand-built local instances for the flag recount; none of them triggers an overlap
DRAWINGS = [
    [(3, []), (4, []), (4, EAR)],
    [(3, []), (4, EAR), (4, EAR)],
    [(3, []), (3, []), (7, [(3, 3), (3, 3)])],
    [(5, EAR)] * 3,
    [(4, EAR), (4, []), (6, [])],
    [(13, []), (3, []), (4, [])],
    [(3, []), (5, EAR), (5, [])],
    [(4, []), (5, EAR), (5, [])],
    [(4, [(4, 4)]), (4, []), (5, [])],
    [(6, [(3, 3), (3, 4)]), (5, []), (4, [])],
    [(7, [(3, 3), (3, 3)]), (4, []), (3, [])],
]
