"""Deterministic test corpora: small graphs up to isomorphism and seeded
random instances.

The random generators all consume a caller-supplied random.Random so that a
fixed seed reproduces the exact same instances; they draw values in a fixed
documented order and never touch the global RNG.
"""

from __future__ import annotations

import random
from typing import Iterable

import networkx as nx

from .graph import Graph, Label
from .representation import Kind, Piece, Representation
from .solvers import CoBipartitePartition


def small_graph_corpus() -> tuple[Graph, ...]:
    """One representative per isomorphism class with 2..5 vertices and at
    least one edge: 1 + 3 + 10 + 33 = 47 graphs, in atlas order."""
    out = []
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if not 2 <= n <= 5 or g.number_of_edges() == 0:
            continue
        verts = [Label("x", i + 1) for i in range(n)]
        edges = [(Label("x", u + 1), Label("x", v + 1)) for u, v in sorted(map(sorted, g.edges()))]
        out.append(Graph(verts, edges))
    return tuple(out)


def random_original_graph(
    rng: random.Random, n_min: int = 2, n_max: int = 7, edge_probability: float = 0.5
) -> Graph:
    """A random graph on x1..xn with at least one edge.

    Draws n, then one coin per vertex pair in lexicographic order, then (only
    when every coin came up empty) one forced edge.
    """
    n = rng.randint(n_min, n_max)
    verts = [Label("x", i) for i in range(1, n + 1)]
    pairs = [(verts[i], verts[j]) for i in range(n) for j in range(i + 1, n)]
    edges = [p for p in pairs if rng.random() < edge_probability]
    if not edges:
        edges = [pairs[rng.randrange(len(pairs))]]
    return Graph(verts, edges)


def random_weights(
    rng: random.Random, vertices: Iterable[Label], max_weight: int = 10
) -> dict[Label, int]:
    """Positive integer weights drawn in label order."""
    return {v: rng.randint(1, max_weight) for v in sorted(vertices)}


def random_representation(
    rng: random.Random, kind: Kind, t: int, n: int
) -> Representation:
    """A random representation of x1..xn with t pieces per vertex.

    Linear pieces start in [0, 3n+5] with length up to n+2; circular pieces
    live on circles of circumference between n+4 and 3n+6 and may wrap or
    degenerate to a point.  Draw order: circumferences first, then pieces by
    vertex and site.
    """
    if kind is Kind.CIRCULAR_TRACK:
        circs = tuple(rng.randint(n + 4, 3 * n + 6) for _ in range(t))
    elif kind is Kind.CIRCULAR_INTERVAL:
        circs = (rng.randint(n + 4, 3 * n + 6),)
    else:
        circs = ()
    pieces: dict[Label, list[Piece]] = {}
    for i in range(1, n + 1):
        vec = []
        for pos in range(1, t + 1):
            site = pos if kind.tracked else 1
            if kind.circular:
                L = circs[pos - 1] if kind is Kind.CIRCULAR_TRACK else circs[0]
                lo = rng.randrange(L)
                hi = (lo + rng.randrange(L)) % L
            else:
                lo = rng.randint(0, 3 * n + 5)
                hi = lo + rng.randint(0, n + 2)
            vec.append(Piece(lo, hi, site))
        pieces[Label("x", i)] = vec
    return Representation(kind, t, pieces, circs)


def random_cobipartite_instance(
    rng: random.Random, n_min: int = 2, n_max: int = 14, cross_probability: float = 0.5
) -> tuple[Graph, CoBipartitePartition]:
    """A graph whose vertex set splits into two cliques, plus that split.

    Draws n, the size of the first side, then one coin per cross pair.
    """
    n = rng.randint(n_min, n_max)
    split = rng.randint(1, n - 1)
    side_a = [Label("x", i) for i in range(1, split + 1)]
    side_b = [Label("x", i) for i in range(split + 1, n + 1)]
    edges = [(side_a[i], side_a[j]) for i in range(split) for j in range(i + 1, split)]
    edges += [(side_b[i], side_b[j]) for i in range(len(side_b)) for j in range(i + 1, len(side_b))]
    for u in side_a:
        for v in side_b:
            if rng.random() < cross_probability:
                edges.append((u, v))
    g = Graph(side_a + side_b, edges)
    return g, CoBipartitePartition(frozenset(side_a), frozenset(side_b))
