import itertools

from hypothesis import given, settings

from epgclique.claws import (STEMS, exact_mono_claws, hot_stems, is_missing, missing_shapes,
                             paths_with_two_edges, triple)
from epgclique.grid import (Direction, EpgPath, EpgRepresentation, GridPoint, Shape, derive_graph,
                            grid_edges_of, two_edge_paths_brute)
from epgclique.interval import AA, BA, base_coloring
from epgclique.verify import enumerate_cliques_repr

from helpers import brute_adjacency, representations

X = GridPoint(2, 2)
N, E, S, W = Direction.N, Direction.E, Direction.S, Direction.W


def all_aa(rep):
    return {p.id: AA for p in rep.paths}


def test_triples():
    assert {str(e) for e in triple(X, N)} == {"V(2,2)", "H(2,2)", "H(1,2)"}
    assert {str(e) for e in triple(X, W)} == {"H(1,2)", "V(2,2)", "V(2,1)"}


def test_two_edge_paths_sun3(sun3):
    assert paths_with_two_edges(sun3, X, N) == {2, 3, 5}
    assert paths_with_two_edges(sun3, X, S) == {5}


def test_two_edge_paths_empty_point(sun3):
    assert paths_with_two_edges(sun3, GridPoint(7, 7), N) == set()


@settings(max_examples=150)
@given(representations(max_paths=20, size=5))
def test_two_edge_paths_match_scan(rep):
    for x in itertools.product(range(6), range(6)):
        x = GridPoint(*x)
        for d in STEMS:
            assert paths_with_two_edges(rep, x, d) == two_edge_paths_brute(rep, triple(x, d))


def test_is_missing():
    one = EpgRepresentation((EpgPath.bent(1, (2, 2), 4, 4),))
    two = EpgRepresentation((EpgPath.bent(1, (2, 2), 4, 4), EpgPath.bent(2, (2, 2), 3, 3)))
    assert is_missing(one, X, Shape.NW, {1: AA})
    assert not is_missing(one, X, Shape.NE, {1: AA})
    assert is_missing(two, X, Shape.NE, {1: AA, 2: BA})


def test_hot_stems_sun3(sun3):
    assert hot_stems(sun3, None, X, base_coloring(sun3)) == set()
    assert hot_stems(sun3, None, X, all_aa(sun3)) == {N}


def test_hot_needs_both_bend_shapes():
    rep = EpgRepresentation((EpgPath.bent(1, (2, 2), 4, 4), EpgPath.horizontal(2, 2, 0, 4)))
    assert hot_stems(rep, None, X, all_aa(rep)) == set()


def test_straight_pair_may_bend_elsewhere():
    rep = EpgRepresentation((
        EpgPath.bent(1, (2, 2), 4, 4),
        EpgPath.bent(2, (2, 2), 0, 4),
        EpgPath.bent(3, (4, 2), 0, 0),  # horizontal arm runs through (2, 2)
    ))
    assert hot_stems(rep, None, X, all_aa(rep)) == {N}


def test_exact_sun3(sun3):
    g = derive_graph(sun3)
    assert exact_mono_claws(sun3, g, X, all_aa(sun3)) == {N}
    assert exact_mono_claws(sun3, g, X, base_coloring(sun3)) == set()


def test_attempted_non_maximal_claw_is_maximal():
    # Two bends and a long straight path sharing an edge with both arms: the
    # two-edge set still cannot be extended (a single-bend path adjacent to all
    # three would need two edges of the triple itself).
    rep = EpgRepresentation((
        EpgPath.bent(1, (2, 2), 5, 5),
        EpgPath.bent(2, (2, 2), 0, 5),
        EpgPath.horizontal(3, 2, 0, 5),
        EpgPath.vertical(4, 2, 3, 5),
        EpgPath.bent(5, (2, 4), 4, 3),
    ))
    g = derive_graph(rep)
    members = paths_with_two_edges(rep, X, N)
    assert members == {1, 2, 3}
    brute = brute_adjacency(rep)
    outside = [w for w in brute if w not in members and members <= brute[w]]
    assert outside == []
    assert exact_mono_claws(rep, g, X, all_aa(rep)) == hot_stems(rep, g, X, all_aa(rep)) == {N}


@settings(max_examples=150)
@given(representations(max_paths=25, size=5))
def test_exact_equals_hot(rep):
    # subset property from the definition, and in fact equality: a two-edge
    # set with all three pairs covered is always a maximal clique
    g = derive_graph(rep)
    for coloring in (all_aa(rep), base_coloring(rep)):
        for x in rep.crossing.bends:
            exact = exact_mono_claws(rep, g, x, coloring)
            hot = hot_stems(rep, g, x, coloring)
            assert exact <= hot
            assert exact == hot


@settings(max_examples=150)
@given(representations(max_paths=25, size=5))
def test_claw_cliques_are_hot_under_all_aa(rep):
    aa = all_aa(rep)
    for c in enumerate_cliques_repr(rep):
        if c.kind == "claw":
            assert c.witness.stem in hot_stems(rep, None, c.witness.center, aa)


@settings(max_examples=150)
@given(representations(max_paths=25, size=5))
def test_two_missing_shapes_bound_hot_stems(rep):
    for coloring in (all_aa(rep), base_coloring(rep)):
        for x in rep.crossing.bends:
            missing = missing_shapes(rep, x, coloring)
            if len(missing) < 2:
                continue
            present = [s for s in Shape if s not in missing]
            hot = hot_stems(rep, None, x, coloring)
            if len(present) == 2 and present[0].antipode == present[1]:
                assert hot == set()
            else:
                assert len(hot) <= 1


@settings(max_examples=100)
@given(representations(max_paths=25, size=5))
def test_no_path_holds_whole_triple(rep):
    for p in rep.paths:
        edges = grid_edges_of(p)
        for x in itertools.product(range(6), range(6)):
            for d in STEMS:
                assert len(edges & set(triple(GridPoint(*x), d))) <= 2
