"""Multiple-interval and multiple-arc representations.

A representation assigns every vertex exactly t pieces.  Pieces live on a
single line (interval), on t separate lines (track), on a single circle
(circular-interval) or on t separate circles (circular-track).  Intervals and
arcs are closed, so sharing a single endpoint already counts as intersecting.

Arcs are stored as [lo, hi] read clockwise with coordinates reduced modulo
the circumference; hi < lo means the arc passes through the origin, and
lo == hi is a single point.  A full circle is not representable.

Coordinates are exact: plain ints on the usual grid, fractions.Fraction when
a construction needs a finer rational grid.  Fractions that happen to be
integers are normalized back to int, and serialization keeps both lossless.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import LabelSetMismatchError, RepresentationError, UnknownLabelError
from .graph import Graph, Label

Coord = Union[int, Fraction]


def exact(value: Coord) -> Coord:
    """Collapse integral fractions to int, leave everything else alone."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


class Kind(enum.Enum):
    INTERVAL = "interval"
    TRACK = "track"
    CIRCULAR_INTERVAL = "circular-interval"
    CIRCULAR_TRACK = "circular-track"

    @property
    def circular(self) -> bool:
        return self in (Kind.CIRCULAR_INTERVAL, Kind.CIRCULAR_TRACK)

    @property
    def tracked(self) -> bool:
        """Whether pieces on different sites can never intersect."""
        return self in (Kind.TRACK, Kind.CIRCULAR_TRACK)


@dataclass(frozen=True)
class Piece:
    """One closed interval or arc, tagged with the line/circle it lives on."""

    lo: Coord
    hi: Coord
    site: int = 1

    def length(self, circumference: Coord | None = None) -> Coord:
        if circumference is None:
            return exact(self.hi - self.lo)
        return exact((self.hi - self.lo) % circumference)


class Representation:
    """Immutable t-piece representation of a vertex set.

    pieces maps each label to a tuple of exactly t pieces.  For the track
    kinds the i-th piece of every vertex must sit on site i; for the interval
    kinds every piece has site 1.  Circular coordinates are reduced modulo
    the relevant circumference at construction.
    """

    __slots__ = ("_kind", "_t", "_circumferences", "_pieces", "_sorted")

    def __init__(
        self,
        kind: Kind,
        t: int,
        pieces: Mapping[Label, Iterable[Piece]],
        circumferences: Iterable[Coord] = (),
    ):
        if t < 1:
            raise RepresentationError(f"t must be at least 1, got {t}")
        circs = tuple(exact(c) for c in circumferences)
        if kind.circular:
            expected = t if kind is Kind.CIRCULAR_TRACK else 1
            if len(circs) != expected:
                raise RepresentationError(
                    f"{kind.value} representation needs {expected} circumference(s), got {len(circs)}"
                )
            if any(c <= 0 for c in circs):
                raise RepresentationError("circumferences must be positive")
        elif circs:
            raise RepresentationError(f"{kind.value} representation takes no circumferences")
        normalized: dict[Label, tuple[Piece, ...]] = {}
        for label in pieces:
            vec = tuple(pieces[label])
            if len(vec) != t:
                raise RepresentationError(f"{label} has {len(vec)} pieces, expected t = {t}")
            fixed = []
            for pos, p in enumerate(vec, start=1):
                site = p.site
                if kind.tracked:
                    if site != pos:
                        raise RepresentationError(
                            f"{label}: piece {pos} has site {site}, tracks require site {pos}"
                        )
                elif site != 1:
                    raise RepresentationError(f"{label}: {kind.value} pieces must have site 1")
                if kind.circular:
                    L = circs[site - 1] if kind is Kind.CIRCULAR_TRACK else circs[0]
                    p = Piece(exact(p.lo % L), exact(p.hi % L), site)
                else:
                    if p.lo > p.hi:
                        raise RepresentationError(
                            f"{label}: interval [{p.lo}, {p.hi}] has lo > hi"
                        )
                    p = Piece(exact(p.lo), exact(p.hi), site)
                fixed.append(p)
            normalized[label] = tuple(fixed)
        self._kind = kind
        self._t = t
        self._circumferences = circs
        self._pieces = normalized
        self._sorted = tuple(sorted(normalized))

    @property
    def kind(self) -> Kind:
        return self._kind

    @property
    def t(self) -> int:
        return self._t

    @property
    def circumferences(self) -> tuple[Coord, ...]:
        return self._circumferences

    @property
    def pieces(self) -> Mapping[Label, tuple[Piece, ...]]:
        return self._pieces

    @property
    def vertices(self) -> frozenset[Label]:
        return frozenset(self._pieces)

    @property
    def sorted_vertices(self) -> tuple[Label, ...]:
        return self._sorted

    @property
    def n(self) -> int:
        return len(self._pieces)

    def circumference_of(self, site: int) -> Coord | None:
        if not self._kind.circular:
            return None
        if self._kind is Kind.CIRCULAR_TRACK:
            return self._circumferences[site - 1]
        return self._circumferences[0]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Representation):
            return NotImplemented
        return (
            self._kind is other._kind
            and self._t == other._t
            and self._circumferences == other._circumferences
            and self._pieces == other._pieces
        )

    def __repr__(self) -> str:
        return f"Representation(kind={self._kind.value}, t={self._t}, n={self.n})"


def pieces_intersect(p: Piece, q: Piece, kind: Kind, circumference: Coord | None = None) -> bool:
    """Whether two closed pieces share a point.

    For the track kinds pieces on different sites never intersect.  For the
    circular kinds the caller passes the circumference of the circle both
    pieces live on.
    """
    if kind.tracked and p.site != q.site:
        return False
    if not kind.circular:
        return max(p.lo, q.lo) <= min(p.hi, q.hi)
    L = circumference
    if L is None:
        raise ValueError("circular intersection needs a circumference")
    # Unroll arcs onto the line ([lo, hi + L] when the arc wraps) and test the
    # three shifts that cover the circular identification.
    a, b = p.lo, p.hi if p.hi >= p.lo else p.hi + L
    c, d = q.lo, q.hi if q.hi >= q.lo else q.hi + L
    return any(max(a, c + s) <= min(b, d + s) for s in (-L, 0, L))


def piece_contains(
    p: Piece, coordinate: Coord, kind: Kind, circumference: Coord | None = None
) -> bool:
    """Whether the piece covers the given coordinate on its own site."""
    if not kind.circular:
        return p.lo <= coordinate <= p.hi
    L = circumference
    if L is None:
        raise ValueError("circular containment needs a circumference")
    return (coordinate - p.lo) % L <= (p.hi - p.lo) % L


def intersection_graph(rep: Representation) -> Graph:
    """The graph whose edges are exactly the intersecting vertex pairs."""
    verts = rep.sorted_vertices
    edges = []
    for i, u in enumerate(verts):
        pu = rep.pieces[u]
        for v in verts[i + 1 :]:
            pv = rep.pieces[v]
            hit = False
            for p in pu:
                for q in pv:
                    if rep.kind.tracked and p.site != q.site:
                        continue
                    if pieces_intersect(p, q, rep.kind, rep.circumference_of(p.site)):
                        hit = True
                        break
                if hit:
                    break
            if hit:
                edges.append((u, v))
    return Graph(verts, edges)


def is_unit(rep: Representation) -> Coord | None:
    """The common piece length when all pieces have one, otherwise None."""
    lengths = {
        p.length(rep.circumference_of(p.site))
        for vec in rep.pieces.values()
        for p in vec
    }
    if len(lengths) == 1:
        return exact(lengths.pop())
    return None


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    missing_edges: tuple[tuple[Label, Label], ...]
    extra_edges: tuple[tuple[Label, Label], ...]
    unit_length: Coord | None


def verify_representation(rep: Representation, target: Graph) -> VerificationReport:
    """Compare the intersection graph of rep against a target graph.

    missing_edges are target edges the representation fails to realize,
    extra_edges are intersections the target does not have.  Raises
    LabelSetMismatchError when the vertex sets differ.
    """
    if rep.vertices != target.vertices:
        raise LabelSetMismatchError(
            f"representation has {rep.n} vertices, target has {target.n}, or labels differ"
        )
    got = intersection_graph(rep)
    missing = tuple(sorted(tuple(sorted(e)) for e in target.edges - got.edges))
    extra = tuple(sorted(tuple(sorted(e)) for e in got.edges - target.edges))
    return VerificationReport(
        ok=not missing and not extra,
        missing_edges=missing,
        extra_edges=extra,
        unit_length=is_unit(rep),
    )


def restrict_representation(rep: Representation, keep: Iterable[Label]) -> Representation:
    keep_set = set(keep)
    missing = keep_set - rep.vertices
    if missing:
        raise UnknownLabelError(f"not vertices of the representation: {sorted(missing)}")
    return Representation(
        rep.kind,
        rep.t,
        {v: rep.pieces[v] for v in sorted(keep_set)},
        rep.circumferences,
    )


def coord_to_json(value: Coord):
    """ints stay ints, proper fractions become "p/q" strings."""
    value = exact(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return value


def coord_from_json(value) -> Coord:
    if isinstance(value, bool):
        raise ValueError(f"bad coordinate: {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return exact(Fraction(value))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad coordinate {value!r}: {exc}") from exc
    raise ValueError(f"bad coordinate: {value!r} (expected int or 'p/q' string)")


def representation_to_json_dict(rep: Representation) -> dict:
    data: dict = {"kind": rep.kind.value, "t": rep.t}
    if rep.kind.circular:
        data["circumferences"] = [coord_to_json(c) for c in rep.circumferences]
    data["pieces"] = {
        str(v): [
            {"lo": coord_to_json(p.lo), "hi": coord_to_json(p.hi), "site": p.site}
            for p in rep.pieces[v]
        ]
        for v in rep.sorted_vertices
    }
    return data


def representation_from_json_dict(data: dict) -> Representation:
    try:
        kind = Kind(data["kind"])
        t = data["t"]
        raw_pieces = data["pieces"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"bad representation JSON: {exc}") from exc
    circs = [coord_from_json(c) for c in data.get("circumferences", ())]
    if not isinstance(raw_pieces, dict):
        raise ValueError("representation JSON 'pieces' must be an object")
    pieces = {}
    for name, vec in raw_pieces.items():
        label = Label.parse(name)
        try:
            pieces[label] = [
                Piece(coord_from_json(p["lo"]), coord_from_json(p["hi"]), int(p.get("site", 1)))
                for p in vec
            ]
        except (KeyError, TypeError, AttributeError) as exc:
            raise ValueError(f"bad piece list for {name}: {exc!r}") from exc
    return Representation(kind, int(t), pieces, circs)
