"""Clique algorithms that exploit a representation.

Three algorithms, in increasing cost:

* stab_weight_scan: the heaviest set of pieces through a single point.  Any
  clique K has a vertex whose pieces are stabbed by points covering all of K,
  and splitting K across the 2t piece ends of that vertex shows the scan is a
  2t-approximation.
* approx_clique_t: for every vertex and every pair of its piece start points,
  the stabbed sets form two cliques, and some optimal clique splits across
  such a pair; solving each co-bipartite subinstance exactly gives a
  t-approximation.
* exact_clique_2track: on two tracks every clique is covered by one stab
  point per track, so trying all endpoint pairs is exact.

All three take the representation's intersection graph as ground truth and
return deterministic results.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import WrongKindError
from .graph import Graph, Label, induced_subgraph
from .representation import (
    Coord,
    Kind,
    Representation,
    intersection_graph,
    piece_contains,
)
from .solvers import CliqueResult, CoBipartitePartition, max_weight_clique_cobipartite


@dataclass(frozen=True)
class StabPoint:
    """A point on one of the representation's lines or circles."""

    site: int
    coordinate: Coord


class ColoredOrientation:
    """For every edge, one witnessing direction and color.

    Edge {u, v} directed u -> v with color i records that the start point of
    u's i-th piece lies inside a piece of v.  Exactly one witness is stored
    per edge.
    """

    def __init__(self, assignments: Mapping[tuple[Label, Label], tuple[Label, int]]):
        self._assign: dict[tuple[Label, Label], tuple[Label, int]] = {}
        for (u, v), (src, color) in assignments.items():
            key = (u, v) if u < v else (v, u)
            if src not in key:
                raise ValueError(f"source {src} is not an endpoint of {key}")
            self._assign[key] = (src, color)

    def edges(self) -> tuple[tuple[Label, Label], ...]:
        return tuple(sorted(self._assign))

    def source(self, u: Label, v: Label) -> Label:
        key = (u, v) if u < v else (v, u)
        return self._assign[key][0]

    def color(self, u: Label, v: Label) -> int:
        key = (u, v) if u < v else (v, u)
        return self._assign[key][1]

    def out_neighbors(self, u: Label, color: int | None = None) -> frozenset[Label]:
        out = set()
        for (a, b), (src, col) in self._assign.items():
            if src == u and (color is None or col == color):
                out.add(b if src == a else a)
        return frozenset(out)

    def in_neighbors(self, u: Label, color: int | None = None) -> frozenset[Label]:
        inc = set()
        for (a, b), (src, col) in self._assign.items():
            if u in (a, b) and src != u and (color is None or col == color):
                inc.add(src)
        return frozenset(inc)


def _piece_start(rep: Representation, v: Label, position: int) -> StabPoint:
    p = rep.pieces[v][position]
    return StabPoint(p.site, p.lo)


def _stabbed(rep: Representation, point: StabPoint) -> tuple[Label, ...]:
    """All vertices having a piece through the point, in label order."""
    out = []
    for v in rep.sorted_vertices:
        for p in rep.pieces[v]:
            if rep.kind.tracked and p.site != point.site:
                continue
            if piece_contains(p, point.coordinate, rep.kind, rep.circumference_of(p.site)):
                out.append(v)
                break
    return tuple(out)


def orient_and_color(rep: Representation) -> ColoredOrientation:
    """Assign every intersecting pair a direction and color.

    Two closed pieces that intersect always contain one another's start
    point on at least one side, so a witness exists for every edge.  When
    both endpoints could serve as source, the lexicographically smaller
    vertex wins, and for a fixed source the smallest witnessing color wins.
    """
    g = intersection_graph(rep)
    assignments: dict[tuple[Label, Label], tuple[Label, int]] = {}
    for u, v in g.sorted_edges:
        witness = None
        for src, dst in ((u, v), (v, u)):
            for pos in range(rep.t):
                start = _piece_start(rep, src, pos)
                for q in rep.pieces[dst]:
                    if rep.kind.tracked and q.site != start.site:
                        continue
                    if piece_contains(
                        q, start.coordinate, rep.kind, rep.circumference_of(q.site)
                    ):
                        witness = (src, pos + 1)
                        break
                if witness:
                    break
            if witness:
                break
        if witness is None:
            raise RuntimeError(f"no orientation witness for edge {u}-{v}; this is a bug")
        assignments[(u, v)] = witness
    return ColoredOrientation(assignments)


def _weights_or_unit(rep: Representation, weights: Mapping[Label, int] | None) -> Mapping[Label, int]:
    if weights is None:
        return {v: 1 for v in rep.vertices}
    return weights


def stab_weight_scan(
    rep: Representation, weights: Mapping[Label, int] | None = None
) -> tuple[StabPoint, CliqueResult]:
    """Heaviest stabbed set over all piece endpoints, in linear candidate count.

    Ties break toward the smallest (site, coordinate) point.  The stabbed set
    is pairwise intersecting, hence a clique of the intersection graph, and
    its weight is at least OPT / 2t.
    """
    weights = _weights_or_unit(rep, weights)
    points = sorted(
        {
            (p.site, c)
            for vec in rep.pieces.values()
            for p in vec
            for c in (p.lo, p.hi)
        }
    )
    best_point = StabPoint(1, 0)
    best_members: tuple[Label, ...] = ()
    best_weight = 0
    for site, coord in points:
        point = StabPoint(site, coord)
        members = _stabbed(rep, point)
        w = sum(weights[v] for v in members)
        if w > best_weight:
            best_point = point
            best_members = members
            best_weight = w
    return best_point, CliqueResult(frozenset(best_members), best_weight)


def _solve_cobipartite_candidates(
    g: Graph,
    candidates: Iterable[tuple[frozenset[Label], frozenset[Label]]],
    weights: Mapping[Label, int],
) -> CliqueResult:
    """Best clique over co-bipartite subinstances, with a shared tie-break.

    Candidates are solved without the lexicographic refinement and compared
    by (weight, member order); only the winner is re-solved refined.
    Subinstances whose total weight cannot beat the incumbent are skipped.
    """
    best = None
    best_key = None
    best_parts = None
    for side_a, side_b in candidates:
        if best is not None and sum(weights[v] for v in side_a | side_b) < best.weight:
            continue
        sub = induced_subgraph(g, side_a | side_b)
        res = max_weight_clique_cobipartite(
            sub, CoBipartitePartition(side_a, side_b), weights, refine=False
        )
        key = (-res.weight, res.sorted_members)
        if best_key is None or key < best_key:
            best = res
            best_key = key
            best_parts = (sub, side_a, side_b)
    if best is None:
        return CliqueResult(frozenset(), 0)
    sub, side_a, side_b = best_parts
    return max_weight_clique_cobipartite(
        sub, CoBipartitePartition(side_a, side_b), weights, refine=True
    )


def approx_clique_t(
    rep: Representation, weights: Mapping[Label, int] | None = None
) -> CliqueResult:
    """t-approximate maximum-weight clique from piece start points.

    For every vertex u and every pair of its piece start points, the two
    stabbed sets are cliques; the best exact solution over these co-bipartite
    subinstances is within a factor t of optimal, and exact for t = 1.
    """
    weights = _weights_or_unit(rep, weights)
    g = intersection_graph(rep)

    def candidates():
        seen = set()
        for u in rep.sorted_vertices:
            for i in range(rep.t):
                for j in range(i, rep.t):
                    side_a = frozenset(_stabbed(rep, _piece_start(rep, u, i)))
                    side_b = frozenset(_stabbed(rep, _piece_start(rep, u, j))) - side_a
                    key = (side_a, side_b)
                    if key in seen:
                        continue
                    seen.add(key)
                    yield key

    return _solve_cobipartite_candidates(g, candidates(), weights)


def exact_clique_2track(
    rep: Representation, weights: Mapping[Label, int] | None = None
) -> CliqueResult:
    """Exact maximum-weight clique of a 2-track representation.

    Any clique is stabbed by one point per track (on a line, the leftmost
    right end of the pieces in play), so trying every pair of piece endpoints
    and solving the co-bipartite remainder exactly is exact.  Raises
    WrongKindError unless the representation is a 2-track one.
    """
    if rep.kind is not Kind.TRACK or rep.t != 2:
        raise WrongKindError(f"need a 2-track representation, got {rep.kind.value} with t={rep.t}")
    weights = _weights_or_unit(rep, weights)
    g = intersection_graph(rep)
    points = sorted(
        {
            (p.site, c)
            for vec in rep.pieces.values()
            for p in vec
            for c in (p.lo, p.hi)
        }
    )
    stabbed_sets: list[frozenset[Label]] = []
    seen = set()
    for site, coord in points:
        s = frozenset(_stabbed(rep, StabPoint(site, coord)))
        if s and s not in seen:
            seen.add(s)
            stabbed_sets.append(s)

    def candidates():
        yield frozenset(), frozenset()
        for i, side_a in enumerate(stabbed_sets):
            for side_b in stabbed_sets[i:]:
                yield side_a, side_b - side_a

    return _solve_cobipartite_candidates(g, candidates(), weights)
