"""End-to-end postman solver for edge-colored multigraphs.

Pipeline: reject vertices seeing a single color, normalize (simple
graph, odd color count), build the auxiliary matching graph, find a
minimum-weight perfect matching, duplicate the witness walk of every
matched non-artificial edge, extract a properly colored Euler trail of
the duplicated graph, contract it back to the original multigraph and
re-verify everything before returning. Absence of a perfect matching is
the infeasibility criterion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .auxgraph import MatchingGraph, build_matching_graph, validate_matching_structure
from .euler import check_pc_euler, pc_euler_trail, verify_pc_closed_walk
from .graph import (
    ColoredMultigraph,
    GraphError,
    InvariantError,
    NormalizationMap,
    PCWalk,
    contract_walk,
    has_single_color_vertex,
    is_connected,
    normalize,
)
from .matching import min_weight_perfect_matching
from .pcwalks import ShortestWalkFinder

INFEASIBLE_DISCONNECTED = "disconnected"
INFEASIBLE_SINGLE_COLOR = "single-color-vertex"
INFEASIBLE_NO_MATCHING = "no-perfect-matching"


@dataclass(frozen=True)
class Solution:
    """Solver output; multiplicities index the original edges.

    For optimal solutions: total_weight = sum(q_e * w_e) over the
    original edges = original graph weight + matching_weight, and the
    walk is a properly colored closed walk traversing edge e exactly
    multiplicities[e] >= 1 times.
    """

    status: str  # "optimal" | "infeasible"
    reason: str | None
    total_weight: int | float
    matching_weight: int | float
    multiplicities: tuple[int, ...]
    walk: PCWalk | None

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


def _infeasible(reason: str) -> Solution:
    return Solution("infeasible", reason, 0, 0, (), None)


def apply_matching(
    g_norm: ColoredMultigraph,
    mg: MatchingGraph,
    pairs: tuple[tuple[int, int], ...],
) -> tuple[ColoredMultigraph, tuple[int, ...]]:
    """Duplicate witness-walk edges for every matched non-artificial edge.

    Returns the duplicated graph plus, per new-graph edge id, the
    normalized edge id it copies (identity on the original range).
    """
    rows = [(e.u, e.v, e.color, e.weight) for e in g_norm.edges]
    origin = list(range(len(g_norm.edges)))
    for pair in sorted(pairs):
        edge = mg.edge_by_pair.get(pair)
        if edge is None:
            raise InvariantError(f"matched pair {pair} is not an auxiliary edge")
        if edge.artificial:
            continue
        witness = mg.witnesses[edge.signature]
        for eid in witness.edges:
            e = g_norm.edges[eid]
            rows.append((e.u, e.v, e.color, e.weight))
            origin.append(eid)
    return ColoredMultigraph(g_norm.n, g_norm.k, rows), tuple(origin)


def edge_multiplicities(g: ColoredMultigraph, walk: PCWalk) -> tuple[int, ...]:
    """Per-edge traversal counts of a covering walk; zero counts are bugs."""
    counts = [0] * len(g.edges)
    for eid in walk.edges:
        counts[eid] += 1
    for eid, c in enumerate(counts):
        if c == 0:
            raise InvariantError(f"solution walk never traverses edge {eid}")
    return tuple(counts)


def solve(g: ColoredMultigraph, verify: bool = True) -> Solution:
    """Solve the postman problem on an edge-colored multigraph exactly.

    Returns an optimal Solution or an infeasible one (disconnected
    input, a vertex incident to one color only, or no perfect matching
    in the auxiliary graph). Internal verification failures raise
    InvariantError rather than returning silently wrong answers; pass
    verify=False only for benchmarking.
    """
    if g.n == 0 or not g.edges:
        raise GraphError("solver needs a graph with at least one edge")
    if not is_connected(g):
        return _infeasible(INFEASIBLE_DISCONNECTED)
    if has_single_color_vertex(g) is not None:
        return _infeasible(INFEASIBLE_SINGLE_COLOR)

    g_norm, nmap = normalize(g)
    finder = ShortestWalkFinder(g_norm)
    mg = build_matching_graph(g_norm, finder)
    matching = min_weight_perfect_matching(mg.as_matching_instance())
    if matching is None:
        return _infeasible(INFEASIBLE_NO_MATCHING)

    if verify:
        structure = validate_matching_structure(mg, matching.pairs)
        if not structure.ok:
            raise InvariantError(
                "matching structure validation failed: " + "; ".join(structure.failures)
            )

    duplicated, origin = apply_matching(g_norm, mg, matching.pairs)
    feasibility = check_pc_euler(duplicated)
    if not feasibility.feasible:
        raise InvariantError(
            f"duplicated graph lost trail feasibility: {feasibility.reason} "
            f"at vertex {feasibility.vertex}"
        )
    trail = pc_euler_trail(duplicated)

    norm_walk = PCWalk(
        vertices=trail.vertices,
        edges=tuple(origin[eid] for eid in trail.edges),
        first_color=trail.first_color,
        last_color=trail.last_color,
        weight=trail.weight,
    )
    walk = contract_walk(nmap, norm_walk)

    if verify:
        report = verify_pc_closed_walk(g, walk, require_cover=True)
        if not report.ok:
            raise InvariantError(f"solution walk failed verification: {report.failure}")

    q = edge_multiplicities(g, walk)
    total = sum(c * e.weight for c, e in zip(q, g.edges))
    if verify and total != g.total_weight() + matching.weight:
        raise InvariantError(
            f"weight accounting broken: tour {total} != "
            f"{g.total_weight()} + {matching.weight}"
        )
    return Solution("optimal", None, total, matching.weight, q, walk)
