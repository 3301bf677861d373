"""Explicit representations for complements of subdivided graphs.

Every constructor here takes a graph g on original vertices x1..xn with at
least one edge, subdivides each edge into a short path, and emits pieces
whose intersection graph is exactly the complement of that subdivision.
Coordinates are closed-form in n, m, the edge rank k and the endpoint
indices, so construction is linear in the output size.

Throughout, edge k joins x_l and x_r with l < r in the canonical edge
indexing; the subdivision path is x_l - a_k - b_k (- c_k - d_k) - x_r.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import EmptyEdgeSetError
from .graph import Graph, Label
from .representation import Coord, Kind, Piece, Representation

__all__ = [
    "rep_co_subd4_2interval",
    "rep_co_subd2_unit3interval",
    "rep_co_subd2_3track",
    "rep_co_subd2_unit4track",
    "rep_co_subd2_unit2circular_interval",
    "rep_co_subd2_2circular_track",
    "k5_unit_2circular_track",
]


def _check_input(g: Graph) -> None:
    for v in g.sorted_vertices:
        if v.family != "x":
            raise ValueError(f"constructions take graphs on original vertices, found {v}")
    indices = sorted(v.index for v in g.sorted_vertices)
    if indices != list(range(1, g.n + 1)):
        raise ValueError(f"original vertices must be x1..x{g.n}, got {indices}")
    if g.m == 0:
        raise EmptyEdgeSetError("construction needs at least one edge")


def _unit_grid(n: int, m: int, min_slots: int = 0) -> tuple[Coord, Coord]:
    """Anchor step c and per-edge slot width d for the unit constructions.

    The unit layouts place length-m^2 pieces on staircases whose anchors
    advance by c per vertex index and by d per edge rank, with m * d = c.
    Windows of width m^2 must span a whole staircase, which needs
    c * (n - 1) <= m^2.  Dense graphs (n <= m + 1) satisfy that with the
    plain integer grid c = m, d = 1.  Sparser graphs get an exact rational
    grid with c = m^2 / K for a fine enough K; min_slots lets a caller pick
    an even finer K in that case, e.g. to keep a circumference integral.
    """
    if n <= m + 1:
        return m, 1
    K = max(n - 1, min_slots)
    return Fraction(m * m, K), Fraction(m, K)


def rep_co_subd4_2interval(g: Graph) -> Representation:
    """2-interval representation of the complement of the 4-subdivision."""
    _check_input(g)
    n, m = g.n, g.m
    pieces: dict[Label, list[Piece]] = {}
    for i in range(1, n + 1):
        pieces[Label("x", i)] = [
            Piece(m * i, m * n + m * i),
            Piece(4 * m * n + m * i + 1, 5 * m * n + m * i + 1),
        ]
    for e in g.edge_index():
        k, l, r = e.k, e.left, e.right
        pieces[Label("a", k)] = [
            Piece(0, m * (l - 1) + k - 1),
            Piece(m * n + m * l + 1, 4 * m * n + m - m * l - k + 1),
        ]
        pieces[Label("b", k)] = [
            Piece(m * (l - 1) + k, m * n + m - k),
            Piece(4 * m * n + m - m * l - k + 2, 5 * m * n + k),
        ]
        pieces[Label("c", k)] = [
            Piece(m * n + m - k + 1, 3 * m * n + m - m * r - k + 1),
            Piece(5 * m * n + k + 1, 5 * m * n + m * r + k),
        ]
        pieces[Label("d", k)] = [
            Piece(3 * m * n + m - m * r - k + 2, 4 * m * n + m * r),
            Piece(5 * m * n + m * r + k + 1, 6 * m * n + m + 1),
        ]
    return Representation(Kind.INTERVAL, 2, pieces)


def rep_co_subd2_unit3interval(g: Graph) -> Representation:
    """Unit 3-interval representation of the complement of the 2-subdivision.

    Every interval has length exactly m^2.  Dense graphs (n <= m + 1) sit on
    the integer grid; sparser graphs use the rational grid from _unit_grid
    so that each length-m^2 window still spans a whole anchor staircase.
    """
    _check_input(g)
    n, m = g.n, g.m
    X = m * m
    c, d = _unit_grid(n, m)
    pieces: dict[Label, list[Piece]] = {}
    for i in range(1, n + 1):
        pieces[Label("x", i)] = [
            Piece(c * i + 2 * X + 2 * d, c * i + 3 * X + 2 * d),
            Piece(c * i + 4 * X + c + 3 * d, c * i + 5 * X + c + 3 * d),
            Piece(17 * X, 18 * X),
        ]
    for e in g.edge_index():
        k, l, r = e.k, e.left, e.right
        pieces[Label("a", k)] = [
            Piece(c * (l - 1) + k * d + X + d, c * (l - 1) + k * d + 2 * X + d),
            Piece(c * l + k * d + 5 * X + c + 3 * d, c * l + k * d + 6 * X + c + 3 * d),
            Piece(15 * X, 16 * X),
        ]
        pieces[Label("b", k)] = [
            Piece(c * (l - 1) + k * d, c * (l - 1) + k * d + X),
            Piece(c * r + k * d + 3 * X + 2 * d, c * r + k * d + 4 * X + 2 * d),
            Piece(c * l + k * d + 6 * X + c + 4 * d, c * l + k * d + 7 * X + c + 4 * d),
        ]
    return Representation(Kind.INTERVAL, 3, pieces)


def rep_co_subd2_3track(g: Graph) -> Representation:
    """3-track representation of the complement of the 2-subdivision."""
    _check_input(g)
    n, m = g.n, g.m
    pieces: dict[Label, list[Piece]] = {}
    for i in range(1, n + 1):
        pieces[Label("x", i)] = [
            Piece(i + 1, n + i + 1, 1),
            Piece(0, i, 2),
            Piece(m + i + 1, m + n + 2, 3),
        ]
    for e in g.edge_index():
        k, l, r = e.k, e.left, e.right
        pieces[Label("a", k)] = [
            Piece(0, l, 1),
            Piece(l + 1, n + k, 2),
            Piece(0, m + 1 - k, 3),
        ]
        pieces[Label("b", k)] = [
            Piece(n + r + 2, 2 * n + 3, 1),
            Piece(n + k + 1, m + n + 2, 2),
            Piece(m + 2 - k, m + r, 3),
        ]
    return Representation(Kind.TRACK, 3, pieces)


def rep_co_subd2_unit4track(g: Graph) -> Representation:
    """Unit 4-track representation of the complement of the 2-subdivision.

    Every interval has length exactly m^2; dense graphs use the integer
    grid, sparse ones the rational grid (see _unit_grid).  Tracks 3 and 4
    mirror each other: the chains a_k before b_k on one, b_k before a_k on
    the other, with all originals stacked on a common interval.
    """
    _check_input(g)
    n, m = g.n, g.m
    X = m * m
    c, d = _unit_grid(n, m)
    pieces: dict[Label, list[Piece]] = {}
    for i in range(1, n + 1):
        pieces[Label("x", i)] = [
            Piece(c * i + X + d, c * i + 2 * X + d, 1),
            Piece(c * i + X + d, c * i + 2 * X + d, 2),
            Piece(5 * X, 6 * X, 3),
            Piece(5 * X, 6 * X, 4),
        ]
    for e in g.edge_index():
        k, l, r = e.k, e.left, e.right
        pieces[Label("a", k)] = [
            Piece(c * (l - 1) + k * d, c * (l - 1) + k * d + X, 1),
            Piece(c * l + k * d + 2 * X + d, c * l + k * d + 3 * X + d, 2),
            Piece(k * d, k * d + X, 3),
            Piece(k * d + X + d, k * d + 2 * X + d, 4),
        ]
        pieces[Label("b", k)] = [
            Piece(c * r + k * d + 2 * X + d, c * r + k * d + 3 * X + d, 1),
            Piece(c * (r - 1) + k * d, c * (r - 1) + k * d + X, 2),
            Piece(k * d + X + d, k * d + 2 * X + d, 3),
            Piece(k * d, k * d + X, 4),
        ]
    return Representation(Kind.TRACK, 4, pieces)


def rep_co_subd2_unit2circular_interval(g: Graph) -> Representation:
    """Unit 2-circular-interval representation of the complement of the
    2-subdivision.

    Every arc has clockwise length exactly m^2; the second a_k arcs pass
    through the origin.  The circumference is 6m^2 + 2c + 4d for the grid
    step c and slot width d, so dense graphs (n <= m + 1, integer grid) sit
    on a circle of circumference exactly 6m^2 + 2m + 4.  Sparse graphs need
    c * (n - 1) <= m^2, which caps the circumference strictly below that, so
    they use the rational grid; its K is padded to 2m^2 + 4m when possible,
    which keeps the circumference at the integer 6m^2 + 1.
    """
    _check_input(g)
    n, m = g.n, g.m
    X = m * m
    c, d = _unit_grid(n, m, min_slots=2 * m * (m + 2))
    circumference = 6 * X + 2 * c + 4 * d
    pieces: dict[Label, list[Piece]] = {}
    for i in range(1, n + 1):
        pieces[Label("x", i)] = [
            Piece(c * i + 2 * X + 2 * d, c * i + 3 * X + 2 * d),
            Piece(c * i + 4 * X + c + 3 * d, c * i + 5 * X + c + 3 * d),
        ]
    for e in g.edge_index():
        k, l, r = e.k, e.left, e.right
        pieces[Label("a", k)] = [
            Piece(c * (l - 1) + k * d + X + d, c * (l - 1) + k * d + 2 * X + d),
            Piece(c * l + k * d + 5 * X + c + 3 * d, c * l + k * d + 6 * X + c + 3 * d),
        ]
        pieces[Label("b", k)] = [
            Piece(c * (l - 1) + k * d, c * (l - 1) + k * d + X),
            Piece(c * r + k * d + 3 * X + 2 * d, c * r + k * d + 4 * X + 2 * d),
        ]
    return Representation(Kind.CIRCULAR_INTERVAL, 2, pieces, (circumference,))


def rep_co_subd2_2circular_track(g: Graph) -> Representation:
    """2-circular-track representation of the complement of the 2-subdivision.

    Both circles have circumference 2n + 2m + 2.  On the first circle the
    originals form a staircase [i, i+n], a_k starts just past x_{l(k)} and
    reaches into a slot zone where the a ends and b starts alternate in edge
    order, and b_k wraps through the origin to stop just short of x_{r(k)};
    the second circle mirrors this with the roles of a_k / b_k and of
    l(k) / r(k) swapped.  Per circle, a_j meets b_k exactly when j > k
    (respectively j < k), so the two circles together realize every a-b pair
    except a_k with its own b_k.
    """
    _check_input(g)
    n, m = g.n, g.m
    circumference = 2 * n + 2 * m + 2
    pieces: dict[Label, list[Piece]] = {}
    for i in range(1, n + 1):
        pieces[Label("x", i)] = [Piece(i, i + n, 1), Piece(i, i + n, 2)]
    for e in g.edge_index():
        k, l, r = e.k, e.left, e.right
        pieces[Label("a", k)] = [
            Piece(l + n + 1, 2 * n + 2 * k, 1),
            Piece(2 * n + 2 * k + 1, l - 1, 2),
        ]
        pieces[Label("b", k)] = [
            Piece(2 * n + 2 * k + 1, r - 1, 1),
            Piece(r + n + 1, 2 * n + 2 * k, 2),
        ]
    return Representation(Kind.CIRCULAR_TRACK, 2, pieces, (circumference, circumference))


def k5_unit_2circular_track() -> Representation:
    """Unit 2-circular-track representation of K5 without a 2-point transversal.

    Both circles have circumference 10 and carry five arcs of length 2 that
    meet end to end, so each circle alone induces a 5-cycle; the two cyclic
    vertex orders are chosen so the union of the two 5-cycles is K5.
    """
    order_1 = (1, 2, 3, 4, 5)
    order_2 = (1, 3, 5, 2, 4)
    arc_1 = {order_1[p]: Piece(2 * p, 2 * p + 2, 1) for p in range(5)}
    arc_2 = {order_2[p]: Piece(2 * p, 2 * p + 2, 2) for p in range(5)}
    pieces = {Label("x", i): [arc_1[i], arc_2[i]] for i in range(1, 6)}
    return Representation(Kind.CIRCULAR_TRACK, 2, pieces, (10, 10))
