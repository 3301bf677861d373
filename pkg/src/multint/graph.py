"""Labeled simple graphs and the handful of operations the constructions need.

Vertices carry structured labels (a family tag plus a positive index) so that
graphs produced by subdivision or by the hardness gadget keep track of where
each vertex came from.  Graphs are immutable once built; every operation
returns a new Graph.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import (
    BadSubdivisionArityError,
    DuplicateLabelError,
    OracleSizeExceededError,
    SelfLoopError,
    UnknownEndpointError,
    UnknownLabelError,
)

# Family tags, by role:
#   "x"              original vertices
#   "a".."d"         subdivision vertices (one letter per position on the path)
#   "xo"/"xe"        odd/even column vertices of the gadget
#   "A".."D"         gadget path vertices
FAMILIES = ("x", "a", "b", "c", "d", "xo", "xe", "A", "B", "C", "D")

_LABEL_RE = re.compile(r"^(xo|xe|[xabcdABCD])([1-9][0-9]*)$")


@dataclass(frozen=True, order=True)
class Label:
    """A vertex label: family tag plus 1-based index, e.g. Label("x", 3) = "x3".

    Labels order by (family, index) with the family compared as a string,
    which gives a fixed total order used for every deterministic tie-break
    in the package.
    """

    family: str
    index: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown label family {self.family!r}")
        if not isinstance(self.index, int) or self.index < 1:
            raise ValueError(f"label index must be a positive integer, got {self.index!r}")

    def __str__(self) -> str:
        return f"{self.family}{self.index}"

    def __repr__(self) -> str:
        return f"Label({self.family!r}, {self.index})"

    @classmethod
    def parse(cls, text: str) -> "Label":
        m = _LABEL_RE.match(text)
        if m is None:
            raise ValueError(f"cannot parse vertex label {text!r}")
        return cls(m.group(1), int(m.group(2)))


@dataclass(frozen=True)
class EdgeIndex:
    """One edge of an all-original graph in the canonical edge indexing.

    k is the 1-based rank of the edge in lexicographic order of its endpoint
    index pair (left, right), with left < right.
    """

    k: int
    left: int
    right: int


class Graph:
    """Immutable undirected simple graph over Label vertices.

    Self-loops and unknown endpoints are rejected; listing the same edge twice
    (in either orientation) collapses to a single edge.
    """

    __slots__ = ("_vertices", "_sorted", "_adj", "_edges")

    def __init__(self, vertices: Iterable[Label], edges: Iterable[tuple[Label, Label]]):
        verts: list[Label] = list(vertices)
        seen: set[Label] = set()
        for v in verts:
            if v in seen:
                raise DuplicateLabelError(f"vertex {v} listed more than once")
            seen.add(v)
        self._vertices = frozenset(seen)
        self._sorted = tuple(sorted(seen))
        adj: dict[Label, set[Label]] = {v: set() for v in verts}
        edge_set: set[frozenset[Label]] = set()
        for u, v in edges:
            if u not in self._vertices:
                raise UnknownEndpointError(f"edge endpoint {u} is not a vertex")
            if v not in self._vertices:
                raise UnknownEndpointError(f"edge endpoint {v} is not a vertex")
            if u == v:
                raise SelfLoopError(f"self-loop at {u}")
            edge_set.add(frozenset((u, v)))
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: frozenset(nb) for v, nb in adj.items()}
        self._edges = frozenset(edge_set)

    @property
    def vertices(self) -> frozenset[Label]:
        return self._vertices

    @property
    def sorted_vertices(self) -> tuple[Label, ...]:
        return self._sorted

    @property
    def edges(self) -> frozenset[frozenset[Label]]:
        return self._edges

    @property
    def sorted_edges(self) -> tuple[tuple[Label, Label], ...]:
        """Edges as (u, v) pairs with u < v, sorted."""
        return tuple(sorted(tuple(sorted(e)) for e in self._edges))

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def neighbors(self, v: Label) -> frozenset[Label]:
        if v not in self._adj:
            raise UnknownLabelError(f"no vertex {v}")
        return self._adj[v]

    def degree(self, v: Label) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: Label, v: Label) -> bool:
        return v in self._adj.get(u, frozenset())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def edge_index(self) -> tuple[EdgeIndex, ...]:
        """Canonical 1-based indexing of the edges between original vertices.

        Edge k joins x_left and x_right with left < right; edges are ranked
        lexicographically by (left, right).
        """
        pairs = []
        for e in self._edges:
            u, v = sorted(e)
            if u.family == "x" and v.family == "x":
                pairs.append((u.index, v.index))
        pairs.sort()
        return tuple(EdgeIndex(k, l, r) for k, (l, r) in enumerate(pairs, start=1))


def build_graph(
    vertices: Iterable[Label | str], edges: Iterable[tuple[Label | str, Label | str]]
) -> Graph:
    """Validating constructor; accepts labels or plain strings like "x3"."""

    def coerce(v: Label | str) -> Label:
        return Label.parse(v) if isinstance(v, str) else v

    return Graph([coerce(v) for v in vertices], [(coerce(u), coerce(v)) for u, v in edges])


def complete_graph(n: int) -> Graph:
    verts = [Label("x", i) for i in range(1, n + 1)]
    edges = [(verts[i], verts[j]) for i in range(n) for j in range(i + 1, n)]
    return Graph(verts, edges)


def cycle_graph(n: int) -> Graph:
    verts = [Label("x", i) for i in range(1, n + 1)]
    edges = [(verts[i], verts[(i + 1) % n]) for i in range(n)]
    return Graph(verts, edges)


def path_graph(n: int) -> Graph:
    verts = [Label("x", i) for i in range(1, n + 1)]
    edges = [(verts[i], verts[i + 1]) for i in range(n - 1)]
    return Graph(verts, edges)


def complement(g: Graph) -> Graph:
    verts = g.sorted_vertices
    edges = [
        (verts[i], verts[j])
        for i in range(len(verts))
        for j in range(i + 1, len(verts))
        if not g.has_edge(verts[i], verts[j])
    ]
    return Graph(verts, edges)


def induced_subgraph(g: Graph, keep: Iterable[Label]) -> Graph:
    keep_set = set(keep)
    missing = keep_set - g.vertices
    if missing:
        raise UnknownLabelError(f"not vertices of the graph: {sorted(missing)}")
    edges = [(u, v) for u, v in g.sorted_edges if u in keep_set and v in keep_set]
    return Graph(sorted(keep_set), edges)


_SUBDIV_POSITIONS = {2: ("a", "b"), 3: ("a", "b", "c"), 4: ("a", "b", "c", "d")}


def subdivide(g: Graph, w: int) -> Graph:
    """Replace every edge of g by a path through w new vertices.

    Edge k (in the canonical edge indexing) becomes the path
    x_left - a_k - b_k [- c_k [- d_k]] - x_right.  The input graph must use
    only original ("x") labels.
    """
    if w not in _SUBDIV_POSITIONS:
        raise BadSubdivisionArityError(f"w must be 2, 3 or 4, got {w}")
    for v in g.sorted_vertices:
        if v.family != "x":
            raise UnknownLabelError(f"can only subdivide graphs on original vertices, found {v}")
    positions = _SUBDIV_POSITIONS[w]
    verts: list[Label] = list(g.sorted_vertices)
    edges: list[tuple[Label, Label]] = []
    for e in g.edge_index():
        chain = [Label(pos, e.k) for pos in positions]
        verts.extend(chain)
        path = [Label("x", e.left), *chain, Label("x", e.right)]
        edges.extend(zip(path, path[1:]))
    return Graph(verts, edges)


def is_independent_set(g: Graph, members: Iterable[Label]) -> bool:
    ms = list(members)
    for v in ms:
        if v not in g.vertices:
            raise UnknownLabelError(f"no vertex {v}")
    return not any(g.has_edge(ms[i], ms[j]) for i in range(len(ms)) for j in range(i + 1, len(ms)))


def is_clique(g: Graph, members: Iterable[Label]) -> bool:
    ms = list(members)
    for v in ms:
        if v not in g.vertices:
            raise UnknownLabelError(f"no vertex {v}")
    return all(g.has_edge(ms[i], ms[j]) for i in range(len(ms)) for j in range(i + 1, len(ms)))


DEFAULT_ORACLE_LIMIT = 30


def check_oracle_limit(n: int, oracle_limit: int | None) -> None:
    limit = DEFAULT_ORACLE_LIMIT if oracle_limit is None else oracle_limit
    if n > limit:
        raise OracleSizeExceededError(f"{n} vertices exceeds the brute-force limit {limit}")


def _weight_vector(g: Graph, weights: Mapping[Label, int]) -> tuple[tuple[Label, ...], list[int]]:
    verts = g.sorted_vertices
    wts = []
    for v in verts:
        if v not in weights:
            raise UnknownLabelError(f"no weight for vertex {v}")
        wv = weights[v]
        if not isinstance(wv, int) or wv < 0:
            raise ValueError(f"weight of {v} must be a nonnegative integer, got {wv!r}")
        wts.append(wv)
    return verts, wts


def _mis_weight(adj: list[int], wts: list[int], active: int) -> int:
    """Maximum total weight of an independent set inside the 'active' bitmask.

    Branches on a maximum-degree vertex until every remaining component is a
    path or a cycle, which are then solved by dynamic programming.  Weight
    only; the caller reconstructs the set.
    """
    total = 0
    # Strip isolated vertices greedily; they always enter the optimum.
    mask = active
    best_v = -1
    best_deg = 0
    remaining = 0
    m = mask
    while m:
        low = m & (-m)
        i = low.bit_length() - 1
        m ^= low
        deg = bin(adj[i] & active).count("1")
        if deg == 0:
            total += wts[i]
            mask ^= 1 << i
        else:
            remaining |= 1 << i
            if deg > best_deg:
                best_deg = deg
                best_v = i
    if not remaining:
        return total
    if best_deg >= 3:
        v = best_v
        without = _mis_weight(adj, wts, remaining & ~(1 << v))
        with_v = wts[v] + _mis_weight(adj, wts, remaining & ~(adj[v] | (1 << v)))
        return total + max(without, with_v)
    # All degrees are 1 or 2: paths and cycles.
    todo = remaining
    while todo:
        comp = _component(adj, todo)
        todo &= ~comp
        total += _path_or_cycle_mis(adj, wts, comp)
    return total


def _component(adj: list[int], mask: int) -> int:
    start = mask & (-mask)
    comp = start
    frontier = start
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & (-f)
            f ^= low
            nxt |= adj[low.bit_length() - 1]
        nxt &= mask & ~comp
        comp |= nxt
        frontier = nxt
    return comp


def _path_or_cycle_mis(adj: list[int], wts: list[int], comp: int) -> int:
    order: list[int] = []
    endpoint = -1
    m = comp
    while m:
        low = m & (-m)
        i = low.bit_length() - 1
        m ^= low
        if bin(adj[i] & comp).count("1") == 1:
            endpoint = i
    if endpoint >= 0:
        # Path: walk from one end.
        prev = -1
        cur = endpoint
        while cur >= 0:
            order.append(cur)
            nxt = -1
            nb = adj[cur] & comp
            while nb:
                low = nb & (-nb)
                j = low.bit_length() - 1
                nb ^= low
                if j != prev:
                    nxt = j
            prev, cur = cur, nxt
        return _path_mis([wts[i] for i in order])
    # Cycle: branch on the smallest vertex.
    v = (comp & (-comp)).bit_length() - 1
    without = _mis_weight(adj, wts, comp & ~(1 << v))
    with_v = wts[v] + _mis_weight(adj, wts, comp & ~(adj[v] | (1 << v)))
    return max(without, with_v)


def _path_mis(ws: list[int]) -> int:
    take, skip = 0, 0
    for w in ws:
        take, skip = skip + w, max(take, skip)
    return max(take, skip)


def graph_to_json_dict(g: Graph) -> dict:
    return {
        "vertices": [str(v) for v in g.sorted_vertices],
        "edges": [[str(u), str(v)] for u, v in g.sorted_edges],
    }


def graph_from_json_dict(data: dict) -> Graph:
    try:
        raw_vertices = data["vertices"]
        raw_edges = data["edges"]
    except (KeyError, TypeError) as exc:
        raise ValueError("graph JSON needs 'vertices' and 'edges' keys") from exc
    verts = [Label.parse(s) for s in raw_vertices]
    edges = []
    for pair in raw_edges:
        if len(pair) != 2:
            raise ValueError(f"edge must have two endpoints, got {pair!r}")
        edges.append((Label.parse(pair[0]), Label.parse(pair[1])))
    return Graph(verts, edges)


def graph_to_edgelist(g: Graph) -> str:
    """Plain-text edge list, one 'u v' line per edge.

    Isolated vertices are written on a line of their own so nothing is lost.
    """
    lines = [str(v) for v in g.sorted_vertices if g.degree(v) == 0]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges)
    return "\n".join(lines) + ("\n" if lines else "")


def graph_from_edgelist(text: str) -> Graph:
    verts: list[Label] = []
    seen: set[Label] = set()
    edges = []

    def note(v: Label) -> None:
        if v not in seen:
            seen.add(v)
            verts.append(v)

    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        parts = stripped.split()
        if len(parts) == 1:
            note(Label.parse(parts[0]))
        elif len(parts) == 2:
            u, v = Label.parse(parts[0]), Label.parse(parts[1])
            note(u)
            note(v)
            edges.append((u, v))
        else:
            raise ValueError(f"line {lineno}: expected one or two labels, got {stripped!r}")
    return Graph(verts, edges)


def graph_to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f'  "{v}";' for v in g.sorted_vertices)
    lines.extend(f'  "{u}" -- "{v}";' for u, v in g.sorted_edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def max_independent_set_bruteforce(
    g: Graph,
    weights: Mapping[Label, int] | None = None,
    oracle_limit: int | None = None,
) -> tuple[frozenset[Label], int]:
    """Maximum-weight independent set by exhaustive branch and bound.

    Returns (members, weight).  Among all optima the lexicographically least
    label set is returned, found by fixing vertices one at a time in label
    order and re-solving the remainder.  Raises OracleSizeExceededError when
    the graph is larger than the limit (default 30 vertices).
    """
    check_oracle_limit(g.n, oracle_limit)
    if weights is None:
        weights = {v: 1 for v in g.vertices}
    verts, wts = _weight_vector(g, weights)
    index = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for u, v in g.sorted_edges:
        adj[index[u]] |= 1 << index[v]
        adj[index[v]] |= 1 << index[u]
    full = (1 << len(verts)) - 1
    opt = _mis_weight(adj, wts, full)
    chosen: list[Label] = []
    chosen_w = 0
    alive = full
    for i, v in enumerate(verts):
        if chosen_w == opt:
            break
        if not (alive >> i) & 1:
            continue
        rest = alive & ~(adj[i] | (1 << i))
        if chosen_w + wts[i] + _mis_weight(adj, wts, rest) == opt:
            chosen.append(v)
            chosen_w += wts[i]
            alive = rest
        else:
            alive &= ~(1 << i)
    return frozenset(chosen), opt
