"""The Q(w, l) gadget family and unit representations of its complement.

Q(w, l) is a bounded-degree bipartite-ish graph on 10wl + w vertices: two
column families xo (w(l+1) vertices) and xe (wl vertices) wired to two rails
A and B of 2wl vertices each, plus chains A_i - C_i - D_i - B_{i+1} gluing
the rails together.  Its complement has unit 2-interval and unit 3-track
representations, built below with a free spacing parameter N that defaults
to the vertex count.

Index terms that would fall outside a family's declared range are dropped,
so the chain term D_i - B_{i+1} only exists for i < 2wl.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, Label
from .representation import Kind, Piece, Representation

__all__ = ["QParams", "build_q", "rep_co_q_unit2interval", "rep_co_q_unit3track"]


def _default_spacing(w: int, l: int) -> int:
    return 10 * w * l + w


@dataclass(frozen=True)
class QParams:
    """Gadget size (w, l >= 1) and the coordinate spacing N.

    The spacing must be large enough for the representation formulas to
    realize the complement exactly; the default, the vertex count of
    Q(w, l), always is.
    """

    w: int
    l: int
    spacing: int = field(default=0)

    def __post_init__(self) -> None:
        if self.w < 1 or self.l < 1:
            raise ValueError(f"need w >= 1 and l >= 1, got w={self.w}, l={self.l}")
        if self.spacing == 0:
            object.__setattr__(self, "spacing", _default_spacing(self.w, self.l))
        elif self.spacing < 1:
            raise ValueError(f"spacing must be positive, got {self.spacing}")

    @property
    def vertex_count(self) -> int:
        return 10 * self.w * self.l + self.w


def build_q(params: QParams) -> Graph:
    """The gadget graph Q(w, l).

    Vertex families: xo_1..xo_{w(l+1)}, xe_1..xe_{wl}, and A, B, C, D each
    indexed 1..2wl.  Every vertex has degree at most 4.
    """
    w, l = params.w, params.l
    wl = w * l
    verts: list[Label] = []
    verts.extend(Label("xo", i) for i in range(1, w * (l + 1) + 1))
    verts.extend(Label("xe", i) for i in range(1, wl + 1))
    for fam in ("A", "B", "C", "D"):
        verts.extend(Label(fam, i) for i in range(1, 2 * wl + 1))

    edges: list[tuple[Label, Label]] = []

    def add(u: Label, vfam: str, vidx: int) -> None:
        if 1 <= vidx <= 2 * wl:
            edges.append((u, Label(vfam, vidx)))

    for i in range(1, wl + 1):
        add(Label("xo", i), "A", 2 * i - 1)
        add(Label("xo", i), "A", 2 * i)
    for i in range(w + 1, w * (l + 1) + 1):
        add(Label("xo", i), "B", 2 * (i - w) - 2)
        add(Label("xo", i), "B", 2 * (i - w) - 1)
    for i in range(1, wl + 1):
        add(Label("xe", i), "A", 2 * i - 2)
        add(Label("xe", i), "A", 2 * i - 1)
        add(Label("xe", i), "B", 2 * i - 1)
        add(Label("xe", i), "B", 2 * i)
    for i in range(1, 2 * wl + 1):
        edges.append((Label("A", i), Label("C", i)))
        edges.append((Label("C", i), Label("D", i)))
        add(Label("D", i), "B", i + 1)
    return Graph(verts, edges)


def rep_co_q_unit2interval(params: QParams) -> Representation:
    """Unit 2-interval representation of the complement of Q(w, l).

    All intervals have length 6N where N is the spacing.
    """
    w = params.w
    wl = params.w * params.l
    n = params.spacing
    pieces: dict[Label, list[Piece]] = {}
    for i in range(1, w * (params.l + 1) + 1):
        pieces[Label("xo", i)] = [
            Piece(4 * i + 6 * n + 1, 4 * i + 12 * n + 1),
            Piece(24 * n + 11 - 4 * i + 4 * w, 30 * n + 11 - 4 * i + 4 * w),
        ]
    for i in range(1, wl + 1):
        pieces[Label("xe", i)] = [
            Piece(4 * i + 6 * n - 1, 4 * i + 12 * n - 1),
            Piece(24 * n + 9 - 4 * i, 30 * n + 9 - 4 * i),
        ]
    for i in range(1, 2 * wl + 1):
        pieces[Label("A", i)] = [
            Piece(2 * i, 2 * i + 6 * n),
            Piece(2 * i + 12 * n + 4, 2 * i + 18 * n + 4),
        ]
        pieces[Label("B", i)] = [
            Piece(18 * n + 6 - 2 * i, 24 * n + 6 - 2 * i),
            Piece(30 * n + 10 - 2 * i, 36 * n + 10 - 2 * i),
        ]
        pieces[Label("C", i)] = [
            Piece(2 * i + 6 * n + 2, 2 * i + 12 * n + 2),
            Piece(30 * n + 8 - 2 * i, 36 * n + 8 - 2 * i),
        ]
        pieces[Label("D", i)] = [
            Piece(2 * i, 2 * i + 6 * n),
            Piece(24 * n + 6 - 2 * i, 30 * n + 6 - 2 * i),
        ]
    return Representation(Kind.INTERVAL, 2, pieces)


def rep_co_q_unit3track(params: QParams) -> Representation:
    """Unit 3-track representation of the complement of Q(w, l).

    Tracks 1 and 2 use even coordinates (twice the natural spacing grid) so
    that all three tracks share the interval length 4N; doubling a track's
    coordinates changes no intersection on it.
    """
    w = params.w
    wl = params.w * params.l
    n = params.spacing
    pieces: dict[Label, list[Piece]] = {}
    for i in range(1, w * (params.l + 1) + 1):
        pieces[Label("xo", i)] = [
            Piece(4 * i - 4 * w + 4 * n, 4 * i - 4 * w + 8 * n, 1),
            Piece(4 * i + 4 * n + 2, 4 * i + 8 * n + 2, 2),
            Piece(2 * i, 2 * i + 4 * n, 3),
        ]
    for i in range(1, wl + 1):
        pieces[Label("xe", i)] = [
            Piece(4 * i + 4 * n + 2, 4 * i + 8 * n + 2, 1),
            Piece(4 * i + 4 * n, 4 * i + 8 * n, 2),
            Piece(12 * n + 5 - 2 * i, 16 * n + 5 - 2 * i, 3),
        ]
    for i in range(1, 2 * wl + 1):
        pieces[Label("A", i)] = [
            Piece(2 * i + 8 * n + 8, 2 * i + 12 * n + 8, 1),
            Piece(2 * i, 2 * i + 4 * n, 2),
            Piece(i + 4 * n + 2, i + 8 * n + 2, 3),
        ]
        pieces[Label("B", i)] = [
            Piece(2 * i, 2 * i + 4 * n, 1),
            Piece(2 * i + 4 * w + 8 * n + 8, 2 * i + 4 * w + 12 * n + 8, 2),
            Piece(8 * n + 3 - i, 12 * n + 3 - i, 3),
        ]
        pieces[Label("C", i)] = [
            Piece(2 * i + 4 * n + 6, 2 * i + 8 * n + 6, 1),
            Piece(2 * i + 4 * w + 8 * n + 10, 2 * i + 4 * w + 12 * n + 10, 2),
            Piece(i + 8 * n + 3, i + 12 * n + 3, 3),
        ]
        pieces[Label("D", i)] = [
            Piece(2 * i + 8 * n + 8, 2 * i + 12 * n + 8, 1),
            Piece(2 * i + 4 * w + 4 * n + 8, 2 * i + 4 * w + 8 * n + 8, 2),
            Piece(4 * n + 1 - i, 8 * n + 1 - i, 3),
        ]
    return Representation(Kind.TRACK, 3, pieces)
