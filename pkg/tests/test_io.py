import pytest
from hypothesis import given

from conftest import graphs
from flexcolor import io
from flexcolor.errors import InputError, ParseError
from flexcolor.instances import cube_plane, random_c4c5_free_plane


def test_parse_mixed_document():
    doc = io.parse(
        """
        # a path with lists
        V 3
        E 0 1
        E 1 2   # trailing comment
        L 0 1 2
        L 1 2 3
        L 2 1 3
        DG 1 4
        K 3
        REQ 0 1
        REQ 2 3 0.5
        REQ 2 3 0.25
        """
    )
    assert doc.n == 3 and doc.edges == [(0, 1), (1, 2)]
    assert doc.list_assignment() == [frozenset({1, 2}), frozenset({2, 3}), frozenset({1, 3})]
    assert doc.ambient_degrees() == [1, 4, 1]
    assert doc.k == 3
    assert doc.requests == {(0, 1): 1.0, (2, 3): 0.75}


@pytest.mark.parametrize(
    "text, line",
    [
        ("V 2\nE 0 x\n", 2),
        ("V 2\nE 0\n", 2),
        ("V 2\n\nE 1 1\n", 3),
        ("V 2\nQ 1\n", 2),
        ("V 2\nL 0\n", 2),
        ("V 2\nL 0 1 1\n", 2),
        ("V 2\nR 0 1\nR 0 1\n", 3),
        ("V 2\nREQ 0 1 -1\n", 2),
        ("V 2\nREQ 0 1 heavy\n", 2),
        ("V 2\nV 3\n", 2),
        ("V -1\n", 1),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as err:
        io.parse(text)
    assert err.value.line == line
    assert f"line {line}" in str(err.value)


def test_edge_out_of_range():
    with pytest.raises(InputError):
        io.parse("V 2\nE 0 2\n")


def test_missing_records():
    with pytest.raises(InputError):
        io.parse("E 0 1\n").graph()
    with pytest.raises(InputError):
        io.parse("V 2\nL 0 1\n").list_assignment()
    with pytest.raises(InputError):
        io.parse("V 3\nE 0 1\nE 1 2\nR 1 0 2\n").plane()


def test_load_names_the_file(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("V 2\nE 0 z\n")
    with pytest.raises(ParseError) as err:
        io.load(p)
    assert "g.txt" in str(err.value) and "line 2" in str(err.value)
    with pytest.raises(InputError):
        io.load(tmp_path / "missing.txt")


def test_load_merges_files(tmp_path):
    (tmp_path / "g").write_text("V 2\nE 0 1\n")
    (tmp_path / "l").write_text("L 0 1 2\nL 1 2 3\n")
    doc = io.load(tmp_path / "g", tmp_path / "l")
    assert doc.graph().m == 1 and len(doc.list_assignment()) == 2


@given(graphs(max_n=9))
def test_graph_round_trip(g):
    back = io.parse(io.dump_graph(g)).graph()
    assert back.n == g.n and sorted(back.edges) == sorted(g.edges)


@pytest.mark.parametrize("seed", range(5))
def test_plane_round_trip(seed):
    pg = random_c4c5_free_plane(20, seed)
    back = io.parse(io.dump_plane(pg)).plane()
    assert back.rotation.rotation == pg.rotation.rotation
    assert sorted(f.degree for f in back.faces) == sorted(f.degree for f in pg.faces)


def test_lists_and_config_round_trip():
    pg = cube_plane()
    lists = [frozenset({v, v + 1, v + 2}) for v in range(pg.n)]
    doc = io.parse(io.dump_graph(pg.graph) + io.dump_lists(lists))
    assert doc.list_assignment() == lists
    doc = io.parse(io.dump_config(pg.graph, [3] * 6 + [5, 5], 4))
    assert doc.ambient_degrees() == [3] * 6 + [5, 5] and doc.k == 4
