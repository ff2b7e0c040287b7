"""Shared fixtures, generators and invariant checkers for the test suite."""

from __future__ import annotations

import pytest
from hypothesis import assume
from hypothesis import strategies as st

from ecpostman import ColoredMultigraph, PCWalk, color_degrees, is_connected


def mg(n: int, k: int, edges) -> ColoredMultigraph:
    return ColoredMultigraph(n, k, edges)


@pytest.fixture
def triangle() -> ColoredMultigraph:
    # ab:1, bc:2, ca:3, unit weights; already a properly colored Euler trail
    return mg(3, 3, [(0, 1, 1, 1), (1, 2, 2, 1), (2, 0, 3, 1)])


@pytest.fixture
def house() -> ColoredMultigraph:
    # two odd vertices; optimum 11 doubles the two cheap edges, never bc (w=5)
    return mg(4, 3, [(0, 1, 1, 1), (1, 2, 2, 5), (2, 0, 3, 1), (1, 3, 3, 1), (3, 2, 1, 1)])


@pytest.fixture
def single_color_path() -> ColoredMultigraph:
    return mg(3, 1, [(0, 1, 1, 1), (1, 2, 1, 1)])


@pytest.fixture
def bowtie() -> ColoredMultigraph:
    # two triangles sharing vertex 0, spokes colored 1/3, rims colored 2
    return mg(
        5,
        3,
        [
            (0, 1, 1, 1),
            (1, 2, 2, 1),
            (2, 0, 3, 1),
            (0, 3, 1, 1),
            (3, 4, 2, 1),
            (4, 0, 3, 1),
        ],
    )


@st.composite
def multigraphs(
    draw,
    min_n: int = 2,
    max_n: int = 5,
    max_k: int = 3,
    max_m: int = 7,
    max_w: int = 3,
    connected: bool = False,
) -> ColoredMultigraph:
    n = draw(st.integers(min_n, max_n))
    k = draw(st.integers(1, max_k))
    m = draw(st.integers(1, max_m))
    edges = []
    for _ in range(m):
        u = draw(st.integers(0, n - 1))
        v = draw(st.integers(0, n - 2))
        if v >= u:
            v += 1
        edges.append((u, v, draw(st.integers(1, k)), draw(st.integers(0, max_w))))
    g = ColoredMultigraph(n, k, edges)
    if connected:
        assume(is_connected(g))
    return g


def walk_addition_violation(
    before: ColoredMultigraph, after: ColoredMultigraph, walk: PCWalk
) -> str | None:
    """Check the degree effects of duplicating one walk's edges.

    For d'(u) = d(u) - 2*d_c(u): transitions through a vertex never
    decrease it, so only walk end-vertices can lose ground, and only in
    their end colors: a closed walk with end colors (i, j) raises d'(u)
    by >= 2 for colors off {i, j}, keeps it >= 0 for i != j, and drops
    it by at most 2 when i == j == c; an open end with color i drops
    d'(u) by at most 1 for c == i and raises it by >= 1 otherwise.
    Returns a description of the first violated bound, else None.
    """
    open_walk = not walk.closed
    first_v, last_v = walk.vertices[0], walk.vertices[-1]
    for u in range(before.n):
        pb = color_degrees(before, u)
        pa = color_degrees(after, u)
        parity_flips = pa.degree % 2 != pb.degree % 2
        should_flip = open_walk and u in (first_v, last_v)
        if parity_flips != should_flip:
            return f"vertex {u}: parity flip {parity_flips}, expected {should_flip}"
        for c in range(1, before.k + 1):
            delta = (pa.degree - 2 * pa.count(c)) - (pb.degree - 2 * pb.count(c))
            if u not in (first_v, last_v):
                if delta < 0:
                    return f"vertex {u} color {c}: non-endpoint decreased by {-delta}"
            elif not open_walk:
                i, j = walk.first_color, walk.last_color
                if c not in (i, j) and delta < 2:
                    return f"vertex {u} color {c}: closed-end increase {delta} < 2"
                if c in (i, j) and i != j and delta < 0:
                    return f"vertex {u} color {c}: closed-end decreased by {-delta}"
                if i == j == c and delta < -2:
                    return f"vertex {u} color {c}: closed-end decreased by {-delta} > 2"
            else:
                end_color = walk.first_color if u == first_v else walk.last_color
                if c == end_color:
                    if delta < -1:
                        return f"vertex {u} color {c}: open-end decreased by {-delta}"
                elif delta < 1:
                    return f"vertex {u} color {c}: open-end increase {delta} too small"
    return None
