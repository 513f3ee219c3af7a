import math
from fractions import Fraction as F

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flexcolor import discharging as D
from flexcolor import io
from flexcolor.instances import (
    cube_plane,
    cycle_plane,
    enclosed_poor_face,
    enclosed_poor_face_drawing,
    random_c4c5_free_plane,
    triangle_gadget,
    triangle_gadget_drawing,
)
from flexcolor.plane import from_coordinates
from oracles import DRAWINGS, EAR, VECTORS, T, oracle_ch1, recount_flags

def central_receipts(corners):
    pg, f = triangle_gadget(corners)
    ledger = D.apply_rules(pg)
    by_degree = sorted(
        (pg.degree(int(t.source[1:])), t.amount, t.rule)
        for t in ledger.transfers
        if t.target == D.fid(f) and t.source.startswith("v")
    )
    return pg, f, ledger, by_degree


# --- the K3 vector -----------------------------------------------------------


def test_k3_is_conserved_with_gaps():
    pg = cycle_plane(3)
    ledger = D.apply_rules(pg)
    rep = D.audit(pg, ledger)
    assert rep.conserved
    assert all(t == D.EULER_TOTAL for t in rep.totals.values())
    assert len(ledger.gaps()) == 6
    assert all(ledger.ch2[D.fid(i)] < 0 for i in range(2))
    assert not rep.all_nonnegative


# --- classification ----------------------------------------------------------


def test_vice_vertex():
    pg, _ = triangle_gadget([(4, EAR), (5, []), (6, [])])
    tax = D.classify(pg)
    assert tax.vertices[0].vice
    assert tax.vertices[0].f3 == 2


def test_dangerous_five_vertex():
    pg, _ = triangle_gadget([(5, EAR), (6, []), (6, [])])
    c = D.classify(pg).vertices[0]
    assert c.f33 == 1 and c.dangerous
    assert c.bad  # f3 = 2 and one (3,3) triangle


def test_k3_has_no_worse_flags():
    tax = D.classify(cycle_plane(3))
    assert not any(f.poor or f.worse or f.worst for f in tax.faces)
    assert [f.shape for f in tax.faces] == [(2, 2, 2)] * 2


def test_face_flags_on_gadgets():
    pg, f = triangle_gadget([(3, []), (4, []), (4, [])])
    fc = D.classify(pg).faces[f]
    assert fc.poor and fc.worse and not fc.worst
    pg, f = triangle_gadget([(3, []), (3, []), (7, [])])
    fc = D.classify(pg).faces[f]
    assert fc.worst and not fc.worse


def test_classification_is_a_pure_function():
    pg, _ = enclosed_poor_face()
    a = D.classify(pg)
    b = D.classify(pg)
    reparsed = io.parse(io.dump_plane(pg)).plane()
    c = D.classify(reparsed)
    assert a == b
    assert [v.to_dict() for v in a.vertices] == [v.to_dict() for v in c.vertices]


def test_nice_paths():
    # corners: x = vice 4-vertex with a (4,4) ear, b = plain 4-vertex, c = 5-vertex
    pg, f = triangle_gadget([(4, [(4, 4)]), (4, []), (5, [])])
    x, b, c = 0, 1, 2  # corners are numbered first
    tax = D.classify(pg)
    assert tax.vertices[x].vice
    ear = sorted(u for u in pg.graph.adj[x] if u not in (b, c))
    p = ear[0]
    assert {frozenset((x, p))} <= tax.quad_pairs
    from_c = D.nice_paths_from(pg, c, tax)
    assert any(q.end == p and q.internal == (x,) and q.kind == "ii" for q in from_c)
    # b and x share only the (4,4,5) centre, so b cannot walk through x
    from_b = D.nice_paths_from(pg, b, tax)
    assert not any(q.internal == (x,) for q in from_b)
    assert tax.vertices[c].varpi == len(from_c)


def test_nice_path_to_three_vertex():
    pg, _ = triangle_gadget([(3, []), (3, []), (7, [])])
    paths = D.nice_paths_from(pg, 2)
    assert {q.end for q in paths if not q.internal} == {0, 1}
    assert all(q.kind == "i" for q in paths if q.end in (0, 1))


# --- per-shape vectors on the central triangle ---------------------------------

@pytest.mark.parametrize("name", sorted(VECTORS))
def test_central_face_vector(name):
    corners, expected = VECTORS[name]
    pg, f, ledger, got = central_receipts(corners)
    assert got == sorted(expected)
    assert sum(a for _, a, _ in got) == 2
    assert ledger.ch1[D.fid(f)] == 0
    assert not [d for d in ledger.overlaps() if d.face == f]


def test_poor_face_one_non_vice():
    # 1/3 + 2/3 + 1 brings the (3,4,4)-face from -1 to 0
    pg, f, ledger, _ = central_receipts([(3, []), (4, []), (4, EAR)])
    assert ledger.received(f, ("R1", "R2.1")) == 2


def test_poor_face_two_non_vice_is_an_overlap():
    pg, f, ledger, _ = central_receipts([(3, []), (4, []), (4, [])])
    cats = {d.category for d in ledger.overlaps() if d.face == f}
    assert cats == {"r2.1-two-non-vice"}
    assert set(cats) <= set(D.OVERLAP_CATEGORIES)


def test_poor_face_two_vice_takes_r7():
    pg, f, ledger, got = central_receipts([(3, []), (4, EAR), (4, EAR)])
    assert sum(a for _, a, _ in got) == F(5, 3)
    assert ledger.ch1[D.fid(f)] == F(-1, 3)
    tax = ledger.taxonomy
    r7 = [t for t in ledger.transfers if t.rule == "R7" and t.target == D.fid(f)]
    assert r7
    for t in r7:
        src = tax.faces[int(t.source[1:])]
        assert src.degree >= 7 and src.xi >= 1
        assert t.amount == (F(src.degree, 3) - 2) / src.xi
    assert ledger.r7_intake[f] == sum(t.amount for t in r7)
    assert ledger.ch2[D.fid(f)] >= 0


def test_worst_face_with_a_four_vertex_stays_negative():
    # (3,3,4) collects 1/3 + 1/3 + 2/3 and, not being poor, gets nothing later
    pg, f, ledger, got = central_receipts([(3, []), (3, []), (4, [])])
    assert sum(a for _, a, _ in got) == F(4, 3)
    assert ledger.ch1[D.fid(f)] == F(-2, 3)


def test_enclosed_poor_face_is_topped_up_by_r8():
    pg, f = enclosed_poor_face()
    ledger = D.apply_rules(pg)
    assert ledger.ch1[D.fid(f)] == F(-1, 3)
    assert ledger.r7_intake.get(f, 0) == 0
    r8 = [t for t in ledger.transfers if t.rule == "R8" and t.target == D.fid(f)]
    assert sorted(t.amount for t in r8) == [F(1, 12)] * 4
    assert ledger.ch2[D.fid(f)] == 0
    assert D.audit(pg, ledger).conserved


def test_six_face_collects_a_third_per_corner():
    ring = [(2 * math.cos(i * math.pi / 3), 2 * math.sin(i * math.pi / 3)) for i in range(6)]
    pts = ring + [(3 * x, 3 * y) for x, y in ring]
    edges = [(i, (i + 1) % 6) for i in range(6)] + [(i, i + 6) for i in range(6)]
    pg = from_coordinates(pts, edges)
    ledger = D.apply_rules(pg)
    inner = next(i for i, face in enumerate(pg.faces) if face.degree == 6)
    assert ledger.received(inner, ("R1",)) == 6 * T
    assert ledger.ch2[D.fid(inner)] == 0


def test_cube_faces_have_no_rule():
    pg = cube_plane()
    ledger = D.apply_rules(pg)
    assert D.audit(pg, ledger).conserved
    cats = {d.category for d in ledger.gaps()}
    assert cats <= set(D.GAP_CATEGORIES)


def test_girth_six_fragment_keeps_charge():
    lat = nx.hexagonal_lattice_graph(3, 3)
    nodes = sorted(lat.nodes)
    index = {v: i for i, v in enumerate(nodes)}
    pts = [lat.nodes[v]["pos"] for v in nodes]
    edges = [(index[a], index[b]) for a, b in lat.edges]
    pg = from_coordinates(pts, edges)
    ledger = D.apply_rules(pg)
    assert D.audit(pg, ledger).conserved
    for v in range(pg.n):
        d = pg.degree(v)
        if d >= 3:
            assert ledger.ch2[D.vid(v)] >= d - 2 - F(d, 3)
    for i, face in enumerate(pg.faces):
        if all(pg.degree(v) >= 3 for v in face.walk):
            assert ledger.ch2[D.fid(i)] >= 0


# --- independent recount -------------------------------------------------------

def _drawings():
    out = [triangle_gadget_drawing(c)[0] for c in DRAWINGS]
    out.append(enclosed_poor_face_drawing()[0])
    return out


@pytest.mark.parametrize("drawing", _drawings(), ids=lambda d: f"n{len(d.points)}")
def test_flags_and_ch1_match_recount(drawing):
    pg = drawing.plane()
    deg, flags, shapes = recount_flags(drawing.points, drawing.edges)
    tax = D.classify(pg)
    for v, c in enumerate(tax.vertices):
        assert c.degree == deg[v]
        assert (c.f3, c.f33, c.bad, c.vice, c.dangerous) == tuple(flags[v][k] for k in ("f3", "f33", "bad", "vice", "dangerous"))
    assert sorted(f.shape for f in tax.faces if f.shape) == shapes
    ledger = D.apply_rules(pg)
    ch, undetermined = oracle_ch1(pg, flags)
    for v in range(pg.n):
        if v not in undetermined:
            assert ledger.ch1[D.vid(v)] == ch[v], v


@settings(max_examples=40, deadline=None)
@given(st.integers(6, 40), st.integers(0, 10**6))
def test_charge_is_conserved(n, seed):
    pg = random_c4c5_free_plane(n, seed)
    ledger = D.apply_rules(pg)
    rep = D.audit(pg, ledger)
    assert rep.conserved
    assert {d.category for d in ledger.gaps()} <= set(D.GAP_CATEGORIES)
    assert {d.category for d in ledger.overlaps()} <= set(D.OVERLAP_CATEGORIES)
    # rules only ever move charge between existing elements
    assert set(ledger.ch2) == set(ledger.ch1)


@settings(max_examples=25, deadline=None)
@given(st.integers(6, 40), st.integers(0, 10**6))
def test_rule_table_matches_on_random_hosts(n, seed):
    pg = random_c4c5_free_plane(n, seed)
    tax = D.classify(pg)
    flags = [{"bad": c.bad, "vice": c.vice, "dangerous": c.dangerous} for c in tax.vertices]
    ch, undetermined = oracle_ch1(pg, flags)
    ledger = D.apply_rules(pg)
    for v in range(pg.n):
        if v not in undetermined:
            assert ledger.ch1[D.vid(v)] == ch[v]


def test_well_marks_follow_ch1():
    pg, _ = enclosed_poor_face()
    ledger = D.apply_rules(pg)
    for c in ledger.taxonomy.vertices:
        assert c.well == (ledger.ch1[D.vid(c.vertex)] >= F(1, 12))


def test_audit_probes_a_negative_host():
    pg, f = triangle_gadget([(3, []), (3, []), (4, [])])
    rep = D.audit(pg, probe_reducible=True)
    assert D.fid(f) in rep.negative
    assert rep.reducible is not None
    assert rep.reducible["status"] == "holds"
    clean = D.audit(enclosed_poor_face()[0], probe_reducible=True)
    if not clean.negative:
        assert clean.reducible is None
