"""Walks of LR words through the diagonally triangulated integer grid.

The grid with lattice points removed is the abelian cover of the
E-triangulated once-punctured torus: horizontal edges (slope 0/1), vertical
edges (1/0) and diagonals of slope 1/1 cut each unit square into a lower
triangle (below the diagonal) and an upper one.

A crossing is a directed edge: an edge plus the side the curve crosses
towards. Positive means upward for horizontal edges, rightward for
vertical edges and towards the upper-left for diagonals. The triangle a
crossing enters is the one on its positive (resp. negative) side; letter L
leaves that triangle through the edge at the left endpoint of the entry
edge, R through the edge at the right endpoint.

Crossing points are placed so that the polyline follows the curve's turns:
a crossing sitting between two turns about the same vertex lies one third
of the way from that vertex, the end crossings lean towards the vertex
they share with their only neighbour, and every other crossing is the
edge midpoint. All coordinates are exact (integers scaled by 6).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from . import _kernels
from .errors import StartEndMismatch, WordSyntaxError

Point = tuple[int, int]


class EdgeKind(enum.IntEnum):
    HORIZONTAL = 0
    VERTICAL = 1
    DIAGONAL = 2


class Orientation(enum.IntEnum):
    POSITIVE = 0
    NEGATIVE = 1


_DIRECTION = {EdgeKind.HORIZONTAL: (1, 0), EdgeKind.VERTICAL: (0, 1), EdgeKind.DIAGONAL: (1, 1)}
_NORMAL = {EdgeKind.HORIZONTAL: (0, 1), EdgeKind.VERTICAL: (1, 0), EdgeKind.DIAGONAL: (-1, 1)}
# third vertices (offsets from base) of the two triangles on each kind of edge
_APEXES = {
    EdgeKind.HORIZONTAL: ((1, 1), (0, -1)),
    EdgeKind.VERTICAL: ((1, 1), (-1, 0)),
    EdgeKind.DIAGONAL: ((0, 1), (1, 0)),
}


@dataclass(frozen=True)
class DirectedEdge:
    base: Point
    kind: EdgeKind
    orientation: Orientation = Orientation.POSITIVE

    @property
    def code(self) -> int:
        return 2 * int(self.kind) + int(self.orientation)

    @classmethod
    def from_state(cls, x: int, y: int, code: int) -> "DirectedEdge":
        kind, side = divmod(code, 2)
        return cls((x, y), EdgeKind(kind), Orientation(side))

    @property
    def endpoints(self) -> tuple[Point, Point]:
        (x, y), (dx, dy) = self.base, _DIRECTION[self.kind]
        return (x, y), (x + dx, y + dy)

    @property
    def normal(self) -> Point:
        nx, ny = _NORMAL[self.kind]
        return (nx, ny) if self.orientation is Orientation.POSITIVE else (-nx, -ny)

    def reversed(self) -> "DirectedEdge":
        return DirectedEdge(self.base, self.kind, Orientation(1 - self.orientation))

    def translated(self, v: Point) -> "DirectedEdge":
        return DirectedEdge((self.base[0] + v[0], self.base[1] + v[1]), self.kind, self.orientation)

    def apex(self) -> Point:
        """Vertex of the entered triangle opposite this edge."""
        (a, b), (nx, ny) = self.endpoints, self.normal
        for dx, dy in _APEXES[self.kind]:
            c = (self.base[0] + dx, self.base[1] + dy)
            if (2 * c[0] - a[0] - b[0]) * nx + (2 * c[1] - a[1] - b[1]) * ny > 0:
                return c
        raise AssertionError("unreachable")

    def sides(self) -> tuple[Point, Point]:
        """(left endpoint, right endpoint) seen along the crossing direction."""
        a, b = self.endpoints
        nx, ny = self.normal
        # a is on the left iff normal x (a - midpoint) > 0
        if nx * (2 * a[1] - a[1] - b[1]) - ny * (2 * a[0] - a[0] - b[0]) > 0:
            return a, b
        return b, a


DEFAULT_START = DirectedEdge((0, 0), EdgeKind.HORIZONTAL, Orientation.POSITIVE)


def edge_between(u: Point, v: Point) -> tuple[Point, EdgeKind]:
    if v < u:
        u, v = v, u
    d = (v[0] - u[0], v[1] - u[1])
    for kind, direction in _DIRECTION.items():
        if d == direction:
            return u, kind
    raise ValueError(f"{u} and {v} are not joined by a grid edge")


def step_geometric(edge: DirectedEdge, letter: str) -> DirectedEdge:
    """One walker step computed from the geometry (the reference for the
    kernels' transition table)."""
    left, right = edge.sides()
    apex = edge.apex()
    keep, other = (left, right) if letter == "L" else (right, left)
    base, kind = edge_between(apex, keep)
    out = DirectedEdge(base, kind)
    a, b = out.endpoints
    nx, ny = out.normal
    # leave the current triangle: point away from its remaining vertex
    if nx * (a[0] + b[0] - 2 * other[0]) + ny * (a[1] + b[1] - 2 * other[1]) > 0:
        return out
    return out.reversed()


def shared_vertex(e: DirectedEdge, f: DirectedEdge) -> Point:
    common = set(e.endpoints) & set(f.endpoints)
    if len(common) != 1:
        raise ValueError(f"{e} and {f} are not adjacent edges of one triangle")
    return common.pop()


def _point6(edge: DirectedEdge, toward: Point | None) -> Point:
    a, b = edge.endpoints
    if toward is None:
        return (3 * (a[0] + b[0]), 3 * (a[1] + b[1]))
    o = b if toward == a else a
    return (2 * (2 * toward[0] + o[0]), 2 * (2 * toward[1] + o[1]))


@dataclass(frozen=True)
class LatticePath:
    letters: str
    crossings: tuple[DirectedEdge, ...]
    _poly6: tuple[Point, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_poly6", tuple(self._compute_polyline6()))

    def _compute_polyline6(self):
        cs = self.crossings
        n = len(cs)
        if n == 0:
            return
        if n == 1:
            yield _point6(cs[0], None)
            return
        shared = [shared_vertex(cs[i], cs[i + 1]) for i in range(n - 1)]
        for i, edge in enumerate(cs):
            before = shared[i - 1] if i > 0 else None
            after = shared[i] if i < n - 1 else None
            if before is None or after is None:
                yield _point6(edge, before or after)
            elif before == after:
                yield _point6(edge, before)
            else:
                yield _point6(edge, None)

    @property
    def polyline(self) -> tuple[tuple[Fraction, Fraction], ...]:
        return tuple((Fraction(x, 6), Fraction(y, 6)) for x, y in self._poly6)

    @property
    def start(self) -> DirectedEdge:
        return self.crossings[0]

    @property
    def end(self) -> DirectedEdge:
        return self.crossings[-1]

    def pivot(self, i: int) -> Point:
        """The vertex the curve turns about at step i (0-based letter index)."""
        return shared_vertex(self.crossings[i], self.crossings[i + 1])

    def translated(self, v: Point) -> "LatticePath":
        return LatticePath(self.letters, tuple(c.translated(v) for c in self.crossings))


def _check_letters(letters: str) -> None:
    bad = set(letters) - {"L", "R"}
    if bad:
        raise WordSyntaxError(f"walker letters must be L or R, got {sorted(bad)}")


def trace(letters: str, start: DirectedEdge = DEFAULT_START) -> LatticePath:
    _check_letters(letters)
    states = _kernels.trace_states(letters, start.base[0], start.base[1], start.code)
    return LatticePath(letters, tuple(DirectedEdge.from_state(*s) for s in states))


def winding_number(path: LatticePath, center: Point) -> int:
    """Signed complete turns of the path's polyline about ``center``.

    Counter-clockwise is positive. For an open path the total turning angle
    is truncated towards zero, so closed loops get their exact winding
    number and open arcs count only the full turns they make.
    """
    xs = [p[0] for p in path._poly6]
    ys = [p[1] for p in path._poly6]
    return _kernels.winding_turns(xs, ys, 6 * center[0], 6 * center[1])


def deck_translation(letters: str, start: DirectedEdge = DEFAULT_START) -> Point:
    """Lattice vector carrying the start crossing to the end crossing.

    Raises ``StartEndMismatch`` when one period does not close up in the
    torus, which happens whenever the word's lift to the 6-fold cover needs
    several periods (e.g. ``L^3 R``); see :func:`closing_power`.
    """
    if not letters:
        raise WordSyntaxError("empty word")
    end = trace(letters, start).end
    if end.kind != start.kind or end.orientation != start.orientation:
        raise StartEndMismatch(
            f"{letters}: walk ends on a {end.kind.name.lower()} "
            f"{end.orientation.name.lower()} crossing, start was "
            f"{start.kind.name.lower()} {start.orientation.name.lower()}"
        )
    return (end.base[0] - start.base[0], end.base[1] - start.base[1])


def closing_power(letters: str, start: DirectedEdge = DEFAULT_START) -> int:
    """Smallest j >= 1 such that ``letters * j`` ends on a translate of start."""
    _check_letters(letters)
    code = start.code
    for j in range(1, 7):
        code = _kernels.trace_states(letters, 0, 0, code)[-1][2]
        if code == start.code:
            return j
    raise AssertionError("the edge-type action has order dividing 6")
