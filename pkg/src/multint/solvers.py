"""Exact maximum-weight clique solvers.

Two engines live here: a branch-and-bound oracle for arbitrary graphs
(exponential, guarded by a size limit) and a polynomial solver for
co-bipartite inputs that reduces to bipartite maximum-weight independent set,
solved by max-flow / min-cut.

Every solver breaks ties between equal-weight optima the same way: the
lexicographically least label set wins, where sets compare as their sorted
label sequences (so a set beats its proper supersets).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping

from .errors import NotBipartitePartitionError, NotCoBipartiteError
from .graph import Graph, Label, check_oracle_limit, is_clique


@dataclass(frozen=True)
class CliqueResult:
    members: frozenset[Label]
    weight: int

    @property
    def sorted_members(self) -> tuple[Label, ...]:
        return tuple(sorted(self.members))


@dataclass(frozen=True)
class CoBipartitePartition:
    """Two vertex sets, each of which must induce a clique."""

    side_a: frozenset[Label]
    side_b: frozenset[Label]


def _weights_for(g: Graph, weights: Mapping[Label, int] | None) -> Mapping[Label, int]:
    if weights is None:
        return {v: 1 for v in g.vertices}
    for v in g.sorted_vertices:
        if v not in weights:
            raise ValueError(f"no weight for vertex {v}")
        if not isinstance(weights[v], int) or weights[v] < 0:
            raise ValueError(f"weight of {v} must be a nonnegative integer")
    return weights


def max_weight_clique_bruteforce(
    g: Graph,
    weights: Mapping[Label, int] | None = None,
    oracle_limit: int | None = None,
) -> CliqueResult:
    """Branch-and-bound maximum-weight clique over all vertex subsets.

    Cliques are enumerated in lexicographic order of their sorted label
    sequences and the incumbent is only replaced on a strict weight
    improvement, so the first optimum found is the lexicographically least
    one; pruning at bound <= incumbent keeps that property.  Bounds: greedy
    coloring of the candidate set at node entry, running weight sum in the
    extension loop.
    """
    check_oracle_limit(g.n, oracle_limit)
    weights = _weights_for(g, weights)
    verts = g.sorted_vertices
    n = len(verts)
    index = {v: i for i, v in enumerate(verts)}
    adj = [0] * n
    for u, v in g.sorted_edges:
        adj[index[u]] |= 1 << index[v]
        adj[index[v]] |= 1 << index[u]
    wts = [weights[v] for v in verts]

    best_members: tuple[int, ...] = ()
    best_weight = 0

    def weight_sum(mask: int) -> int:
        total = 0
        while mask:
            low = mask & (-mask)
            total += wts[low.bit_length() - 1]
            mask ^= low
        return total

    def color_bound(mask: int) -> int:
        # Greedy coloring; a clique takes at most one vertex per color class,
        # so the per-class maxima bound any clique weight inside mask.
        bound = 0
        rest = mask
        while rest:
            cls = 0
            cls_max = 0
            avail = rest
            while avail:
                low = avail & (-avail)
                i = low.bit_length() - 1
                if not (adj[i] & cls):
                    cls |= low
                    if wts[i] > cls_max:
                        cls_max = wts[i]
                avail ^= low
            rest &= ~cls
            bound += cls_max
        return bound

    def dfs(members: tuple[int, ...], cur: int, cand: int) -> None:
        nonlocal best_members, best_weight
        if cur > best_weight:
            best_weight = cur
            best_members = members
        if not cand:
            return
        if cur + color_bound(cand) <= best_weight:
            return
        remaining = weight_sum(cand)
        while cand:
            if cur + remaining <= best_weight:
                return
            low = cand & (-cand)
            i = low.bit_length() - 1
            cand ^= low
            remaining -= wts[i]
            dfs(members + (i,), cur + wts[i], cand & adj[i])

    dfs((), 0, (1 << n) - 1)
    return CliqueResult(frozenset(verts[i] for i in best_members), best_weight)


class _Dinic:
    """Plain integer max-flow on an adjacency-list residual network."""

    def __init__(self, n: int):
        self.n = n
        self.to: list[int] = []
        self.cap: list[int] = []
        self.head: list[list[int]] = [[] for _ in range(n)]

    def add_edge(self, u: int, v: int, cap: int) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(cap)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def _bfs(self, s: int, t: int) -> bool:
        self.level = [-1] * self.n
        self.level[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for e in self.head[u]:
                v = self.to[e]
                if self.cap[e] > 0 and self.level[v] < 0:
                    self.level[v] = self.level[u] + 1
                    q.append(v)
        return self.level[t] >= 0

    def _dfs(self, u: int, t: int, pushed: int) -> int:
        if u == t:
            return pushed
        while self.it[u] < len(self.head[u]):
            e = self.head[u][self.it[u]]
            v = self.to[e]
            if self.cap[e] > 0 and self.level[v] == self.level[u] + 1:
                got = self._dfs(v, t, min(pushed, self.cap[e]))
                if got > 0:
                    self.cap[e] -= got
                    self.cap[e ^ 1] += got
                    return got
            self.it[u] += 1
        return 0

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        while self._bfs(s, t):
            self.it = [0] * self.n
            while True:
                got = self._dfs(s, t, 1 << 62)
                if got == 0:
                    break
                flow += got
        return flow

    def reachable(self, s: int) -> set[int]:
        seen = {s}
        q = deque([s])
        while q:
            u = q.popleft()
            for e in self.head[u]:
                v = self.to[e]
                if self.cap[e] > 0 and v not in seen:
                    seen.add(v)
                    q.append(v)
        return seen


def _bipartite_mwis(
    left: tuple[Label, ...],
    right: tuple[Label, ...],
    cross: list[tuple[Label, Label]],
    weights: Mapping[Label, int],
) -> tuple[frozenset[Label], int]:
    """Max-weight independent set of a bipartite graph via min vertex cut.

    The classic network: source -> each left vertex at its weight, each right
    vertex -> sink at its weight, infinite capacity across every edge.  The
    min cut picks a vertex cover; everything else is the independent set.
    """
    total = sum(weights[v] for v in left) + sum(weights[v] for v in right)
    node = {}
    for i, v in enumerate(left):
        node[v] = 1 + i
    for i, v in enumerate(right):
        node[v] = 1 + len(left) + i
    sink = 1 + len(left) + len(right)
    net = _Dinic(sink + 1)
    inf = total + 1
    for v in left:
        net.add_edge(0, node[v], weights[v])
    for v in right:
        net.add_edge(node[v], sink, weights[v])
    for u, v in cross:
        net.add_edge(node[u], node[v], inf)
    cut = net.max_flow(0, sink)
    reach = net.reachable(0)
    members = frozenset(
        [v for v in left if node[v] in reach] + [v for v in right if node[v] not in reach]
    )
    weight = total - cut
    got = sum(weights[v] for v in members)
    if got != weight:
        raise RuntimeError(f"flow witness weight {got} disagrees with cut value {weight}")
    return members, weight


def _bipartite_mwis_refined(
    left: tuple[Label, ...],
    right: tuple[Label, ...],
    cross: list[tuple[Label, Label]],
    weights: Mapping[Label, int],
) -> tuple[frozenset[Label], int]:
    """Lexicographically least optimum, by committing vertices in label order.

    Each step re-solves the remaining instance once, so this costs at most
    n + 1 flow computations.
    """
    adj: dict[Label, set[Label]] = {v: set() for v in left + right}
    for u, v in cross:
        adj[u].add(v)
        adj[v].add(u)

    def solve(avail: frozenset[Label]) -> int:
        sub_left = tuple(v for v in left if v in avail)
        sub_right = tuple(v for v in right if v in avail)
        sub_cross = [(u, v) for u, v in cross if u in avail and v in avail]
        return _bipartite_mwis(sub_left, sub_right, sub_cross, weights)[1]

    alive = frozenset(left) | frozenset(right)
    opt = solve(alive)
    chosen: list[Label] = []
    chosen_w = 0
    for v in sorted(alive):
        if chosen_w == opt:
            break
        if v not in alive:
            continue
        rest = alive - adj[v] - {v}
        if chosen_w + weights[v] + solve(rest) == opt:
            chosen.append(v)
            chosen_w += weights[v]
            alive = rest
        else:
            alive = alive - {v}
    return frozenset(chosen), opt


def max_weight_independent_set_bipartite(
    g: Graph,
    left: frozenset[Label] | set[Label],
    right: frozenset[Label] | set[Label],
    weights: Mapping[Label, int] | None = None,
) -> tuple[frozenset[Label], int]:
    """Maximum-weight independent set of a bipartite graph, in polynomial time.

    (left, right) must partition the vertices with every edge crossing;
    otherwise NotBipartitePartitionError.  Ties go to the lexicographically
    least optimum.
    """
    left_f = frozenset(left)
    right_f = frozenset(right)
    if left_f & right_f:
        raise NotBipartitePartitionError("partition sides overlap")
    if left_f | right_f != g.vertices:
        raise NotBipartitePartitionError("partition does not cover the vertex set")
    for u, v in g.sorted_edges:
        if (u in left_f) == (v in left_f):
            raise NotBipartitePartitionError(f"edge {u}-{v} does not cross the partition")
    weights = _weights_for(g, weights)
    lt = tuple(sorted(left_f))
    rt = tuple(sorted(right_f))
    cross = [(u, v) if u in left_f else (v, u) for u, v in g.sorted_edges]
    return _bipartite_mwis_refined(lt, rt, cross, weights)


def max_weight_clique_cobipartite(
    g: Graph,
    partition: CoBipartitePartition,
    weights: Mapping[Label, int] | None = None,
    refine: bool = True,
) -> CliqueResult:
    """Maximum-weight clique of g restricted to side_a | side_b.

    Both sides must induce cliques (NotCoBipartiteError otherwise); vertices
    of g outside the partition are ignored.  A clique here is an independent
    set of the bipartite graph formed by the non-edges across the partition,
    so one max-flow computation solves it exactly.

    refine=False skips the lexicographic tie-break refinement and returns the
    (still deterministic) cut witness directly; callers that solve many
    subinstances use it and refine only the winner.
    """
    a = frozenset(partition.side_a)
    b = frozenset(partition.side_b)
    if a & b:
        raise NotCoBipartiteError("partition sides overlap")
    missing = (a | b) - g.vertices
    if missing:
        raise NotCoBipartiteError(f"partition uses unknown vertices: {sorted(missing)}")
    for side in (a, b):
        if not is_clique(g, side):
            raise NotCoBipartiteError("a partition side does not induce a clique")
    weights = _weights_for(g, weights)
    lt = tuple(sorted(a))
    rt = tuple(sorted(b))
    cross = [(u, v) for u in lt for v in rt if not g.has_edge(u, v)]
    if refine:
        members, weight = _bipartite_mwis_refined(lt, rt, cross, weights)
    else:
        members, weight = _bipartite_mwis(lt, rt, cross, weights)
    if not is_clique(g, members):
        raise RuntimeError("co-bipartite solver produced a non-clique; this is a bug")
    return CliqueResult(members, weight)
