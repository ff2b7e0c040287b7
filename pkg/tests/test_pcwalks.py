"""Shortest properly colored fixed-end walks vs exhaustive enumeration."""

from hypothesis import given, settings

from conftest import mg, multigraphs

from ecpostman import (
    ColoredMultigraph,
    min_pc_walk,
    normalize,
    pc_walk_minima,
    shortest_pc_walks_from,
)
from ecpostman.pcwalks import ShortestWalkFinder, check_walk_witness


def test_triangle_fixed_values(triangle):
    # frozen from exhaustive enumeration of walks up to 4 edges
    table = shortest_pc_walks_from(triangle, 0, 1)
    assert table[(2, 2)][0] == 2
    assert [e for e in table[(2, 2)][1].edges] == [0, 1]
    assert table[(0, 3)][0] == 3
    assert table[(0, 3)][1].vertices == (0, 1, 2, 0)


def test_triangle_matches_enumeration(triangle):
    for u in range(3):
        for c1 in range(1, 4):
            table = shortest_pc_walks_from(triangle, u, c1)
            brute = pc_walk_minima(triangle, u, c1)
            assert {key: w for key, (w, _) in table.items()} == brute


def test_single_edge_walk(triangle):
    hit = min_pc_walk(triangle, 0, 1, 1, 1)
    assert hit is not None
    weight, walk = hit
    assert weight == 1 and walk.edges == (0,)


def test_no_incident_color_gives_empty_table(triangle):
    assert shortest_pc_walks_from(triangle, 0, 5) == {}


def test_disconnected_target_absent():
    g = mg(6, 3, [(0, 1, 1, 1), (1, 2, 2, 1), (2, 0, 3, 1), (3, 4, 1, 1), (4, 5, 2, 1), (5, 3, 3, 1)])
    assert min_pc_walk(g, 0, 1, 3, 1) is None


def test_closed_walk_to_source_needs_two_edges():
    g = mg(2, 2, [(0, 1, 1, 1), (0, 1, 2, 1)])
    hit = min_pc_walk(g, 0, 1, 0, 2)
    assert hit is not None and hit[1].num_edges == 2


def test_finder_caches_tables(triangle):
    finder = ShortestWalkFinder(triangle)
    t1 = finder.table(0, 1)
    t2 = finder.table(0, 1)
    assert t1 is t2


@given(multigraphs(max_n=6, max_m=8))
@settings(max_examples=120, deadline=None)
def test_matches_enumeration_and_witnesses(g):
    finder = ShortestWalkFinder(g)
    for u in range(g.n):
        for c1 in range(1, g.k + 1):
            table = finder.table(u, c1)
            brute = pc_walk_minima(g, u, c1)
            assert set(table) == set(brute)
            for (v, c2), (w, walk) in table.items():
                assert w == brute[(v, c2)]
                assert check_walk_witness(g, u, c1, v, c2, w, walk) is None


@given(multigraphs(max_n=5, max_m=6))
@settings(max_examples=80, deadline=None)
def test_adding_an_edge_never_hurts(g):
    base = ShortestWalkFinder(g)
    extra = [(e.u, e.v, e.color, e.weight) for e in g.edges]
    extra.append((0, g.n - 1, 1, 0))
    bigger = ColoredMultigraph(g.n, g.k, extra)
    more = ShortestWalkFinder(bigger)
    for u in range(g.n):
        for c1 in range(1, g.k + 1):
            before = base.table(u, c1)
            after = more.table(u, c1)
            for key, (w, _) in before.items():
                assert key in after
                assert after[key][0] <= w


def test_works_on_normalized_multigraphs():
    g = mg(3, 2, [(0, 1, 1, 2), (0, 1, 2, 3), (1, 2, 1, 1)])
    gn, _ = normalize(g)
    finder = ShortestWalkFinder(gn)
    for u in range(gn.n):
        for c1 in range(1, gn.k + 1):
            table = finder.table(u, c1)
            brute = pc_walk_minima(gn, u, c1)
            assert {key: w for key, (w, _) in table.items()} == brute
