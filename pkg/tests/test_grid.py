import json

import pytest
from hypothesis import given, settings, strategies as st

from epgclique.grid import (EpgPath, EpgRepresentation, GridEdge, GridPoint, RepresentationError,
                            Segment, Shape, bend_index, derive_graph, grid_edges_of,
                            parse_representation, serialize_representation)

from helpers import brute_adjacency, representations


def test_parse_single_horizontal():
    rep = parse_representation('{"paths":[{"id":1,"kind":"H","row":0,"c1":0,"c2":3}]}')
    assert len(rep) == 1
    assert rep.paths[0].h == Segment("H", 0, 0, 3)
    assert rep.paths[0].v is None


def test_parse_bend_shape_and_segments():
    rep = parse_representation(
        '{"paths":[{"id":2,"kind":"bend","corner":[2,2],"h_end":0,"v_end":4}]}')
    p = rep.paths[0]
    assert p.shape is Shape.NW
    assert p.h == Segment("H", 2, 0, 2)
    assert p.v == Segment("V", 2, 2, 4)


@pytest.mark.parametrize("text, fragment", [
    ('{"paths":[{"id":3,"kind":"H","row":0,"c1":5,"c2":5}]}', "empty segment"),
    ('{"paths":[{"id":3,"kind":"V","col":0,"r1":4,"r2":2}]}', "empty segment"),
    ('{"paths":[{"id":3,"kind":"bend","corner":[1,1],"h_end":1,"v_end":3}]}', "empty segment"),
    ('{"paths":[{"id":1,"kind":"H","row":0,"c1":0,"c2":1},'
     '{"id":1,"kind":"V","col":0,"r1":0,"r2":1}]}', "duplicate id"),
    ('{"grid":{"width":3,"height":3},"paths":[{"id":1,"kind":"H","row":0,"c1":0,"c2":3}]}',
     "out of bounds"),
    ('{"paths":[{"id":1,"kind":"H","row":-1,"c1":0,"c2":3}]}', "negative"),
    ('{"paths":[{"id":1,"kind":"Z"}]}', "unknown kind"),
    ('{"paths":[{"id":1,"kind":"H","row":0,"c1":0}]}', "missing key"),
    ('{"paths": [', "syntax error"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(RepresentationError, match=fragment):
        parse_representation(text)


def test_syntax_error_reports_position():
    with pytest.raises(RepresentationError) as err:
        parse_representation('{"paths":\n  [1,,]}')
    assert "line 2" in str(err.value)


def test_semantic_error_names_entry():
    with pytest.raises(RepresentationError, match=r"paths\[1\]"):
        parse_representation('{"paths":[{"id":1,"kind":"H","row":0,"c1":0,"c2":1},'
                             '{"id":2,"kind":"H","row":0,"c1":4,"c2":4}]}')


def test_serialize_empty():
    assert serialize_representation(EpgRepresentation(())) == '{"paths":[]}'


def test_serialize_bend_key_order():
    rep = EpgRepresentation((EpgPath.bent(2, (2, 2), 0, 4),))
    entry = json.loads(serialize_representation(rep))["paths"][0]
    assert list(entry) == ["id", "kind", "corner", "h_end", "v_end"]
    assert entry == {"id": 2, "kind": "bend", "corner": [2, 2], "h_end": 0, "v_end": 4}


def test_serialize_sun3_idempotent(sun3):
    once = serialize_representation(parse_representation(serialize_representation(sun3)))
    twice = serialize_representation(parse_representation(once))
    assert once == twice


def test_serialize_keeps_grid():
    rep = EpgRepresentation((EpgPath.horizontal(0, 1, 0, 2),), grid=(4, 3))
    back = parse_representation(serialize_representation(rep))
    assert back == rep and back.grid == (4, 3)


@given(representations())
def test_parse_serialize_roundtrip(rep):
    assert parse_representation(serialize_representation(rep)) == rep


def test_grid_edges_examples():
    assert grid_edges_of(EpgPath.horizontal(0, 0, 0, 3)) == {
        GridEdge("H", 0, 0), GridEdge("H", 1, 0), GridEdge("H", 2, 0)}
    assert grid_edges_of(EpgPath.bent(0, (2, 2), 0, 4)) == {
        GridEdge("H", 0, 2), GridEdge("H", 1, 2), GridEdge("V", 2, 2), GridEdge("V", 2, 3)}
    assert grid_edges_of(EpgPath.vertical(0, 5, 1, 2)) == {GridEdge("V", 5, 1)}


def test_adjacency_by_overlap():
    rep = EpgRepresentation((EpgPath.horizontal(1, 0, 0, 3), EpgPath.horizontal(2, 0, 2, 5)))
    assert derive_graph(rep).has_edge(1, 2)


def test_point_touch_is_not_adjacency():
    rep = EpgRepresentation((EpgPath.horizontal(1, 0, 0, 2), EpgPath.horizontal(2, 0, 2, 5)))
    assert not derive_graph(rep).has_edge(1, 2)


def test_sun3_graph(sun3):
    g = derive_graph(sun3)
    assert g.adj == {k: frozenset(v) for k, v in brute_adjacency(sun3).items()}
    assert set(g.edges()) == {(2, 3), (2, 5), (3, 5), (1, 2), (1, 3), (3, 4), (4, 5), (2, 6), (5, 6)}
    assert {v: len(g.neighbors(v)) for v in (1, 4, 6)} == {1: 2, 4: 2, 6: 2}


@st.composite
def touching_pairs(draw):
    """Two paths meeting at a grid point without sharing a grid edge."""
    c = draw(st.integers(1, 5))
    r = draw(st.integers(1, 5))
    a = EpgPath.bent(1, (c, r), c + draw(st.integers(1, 3)), r + draw(st.integers(1, 3)))
    other = draw(st.sampled_from(["west", "south", "cross", "corner"]))
    if other == "west":
        b = EpgPath.horizontal(2, r, c - draw(st.integers(1, c)), c)
    elif other == "south":
        b = EpgPath.vertical(2, c, r - draw(st.integers(1, r)), r)
    elif other == "cross":
        b = EpgPath.bent(2, (c, r), c - draw(st.integers(1, c)), r - draw(st.integers(1, r)))
    else:
        b = EpgPath.bent(2, (c + 1, r + 1), c, r + 3)
    return EpgRepresentation((a, b))


@given(touching_pairs())
def test_point_touch_property(rep):
    a, b = rep.paths
    assert not (grid_edges_of(a) & grid_edges_of(b))
    assert not derive_graph(rep).has_edge(1, 2)


@settings(max_examples=200)
@given(representations(max_paths=60, size=8))
def test_derive_graph_matches_pairwise_oracle(rep):
    g = derive_graph(rep)
    brute = brute_adjacency(rep)
    assert g.adj == {k: frozenset(v) for k, v in brute.items()}
    for u in g.vertices:
        assert u not in g.neighbors(u)
        for v in g.neighbors(u):
            assert u in g.neighbors(v)


def test_bend_index():
    assert bend_index(EpgRepresentation((EpgPath.horizontal(0, 0, 0, 2),))) == {}


def test_bend_index_sun3(sun3):
    assert bend_index(sun3) == {GridPoint(2, 2): {Shape.NW: [2], Shape.NE: [3]}}


def test_bend_index_groups_sorted():
    rep = EpgRepresentation((EpgPath.bent(9, (1, 1), 3, 3), EpgPath.bent(4, (1, 1), 2, 2)))
    assert bend_index(rep) == {GridPoint(1, 1): {Shape.NE: [4, 9]}}


def test_shape_antipode_involution():
    assert Shape.NE.antipode is Shape.SW
    assert Shape.NW.antipode is Shape.SE
    for s in Shape:
        assert s.antipode.antipode is s


def test_twins_allowed():
    rep = EpgRepresentation((EpgPath.horizontal(1, 0, 0, 2), EpgPath.horizontal(2, 0, 0, 2)))
    assert derive_graph(rep).has_edge(1, 2)


def test_bounds_inferred():
    rep = EpgRepresentation((EpgPath.bent(1, (3, 1), 0, 4),))
    assert rep.bounds == (4, 5)


def test_dot_export(sun3):
    dot = derive_graph(sun3).to_dot()
    assert dot.startswith("graph G {")
    assert sum(" -- " in line for line in dot.splitlines()) == 9
