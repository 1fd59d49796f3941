"""Contacts between cells.

Two same-level cells can only meet if their lattice squares touch.  Edge
neighbors meet along a scaled copy of ``C_A ∩ C_B`` for the digit sets of the
facing sides; corner neighbors meet at most in the shared corner, which lies in
both cells iff the two extreme digits involved are in D.  By self-similarity
this 8-entry table answers every same-level query, and cross-level queries
reduce to it by looking at the fine cell's lattice neighbors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .core import (
    DIRECTIONS,
    Direction,
    GscSpec,
    Point,
    Side,
    Word,
    boundary_digit_set,
    check_word,
    corner_in_F,
    grid_to_word,
    word_to_grid,
)
from .radix import Cardinality, intersect_class, singleton_value


@dataclass(frozen=True)
class Contact:
    """Intersection class of two cells; ``point`` is set for singletons."""

    tag: Cardinality
    point: Point | None = None

    @property
    def empty(self) -> bool:
        return self.tag is Cardinality.EMPTY

    def __str__(self) -> str:
        if self.tag is Cardinality.SINGLETON:
            return f"Singleton({self.point})"
        return str(self.tag)


EMPTY = Contact(Cardinality.EMPTY)
MULTIPLE = Contact(Cardinality.MULTIPLE)

# facing sides for the four edge directions, (side of first cell, side of second)
_EDGE_SIDES = {
    Direction.RIGHT: (Side.RIGHT, Side.LEFT),
    Direction.LEFT: (Side.LEFT, Side.RIGHT),
    Direction.UP: (Side.TOP, Side.BOTTOM),
    Direction.DOWN: (Side.BOTTOM, Side.TOP),
}


@lru_cache(maxsize=256)
def neighbor_table(spec: GscSpec) -> dict[Direction, Contact]:
    """Contact of a cell with its same-level neighbor in each direction.

    Singleton points are in the first cell's unit coordinates.
    """
    table = {}
    for d in DIRECTIONS:
        if d.is_corner:
            # the shared corner is (1,1) for UP_RIGHT seen from the first cell
            mine = ((d.dx + 1) // 2, (d.dy + 1) // 2)
            theirs = (1 - mine[0], 1 - mine[1])
            if corner_in_F(spec, mine) and corner_in_F(spec, theirs):
                table[d] = Contact(Cardinality.SINGLETON, Point.of(*mine))
            else:
                table[d] = EMPTY
            continue
        s1, s2 = _EDGE_SIDES[d]
        A, B = boundary_digit_set(spec, s1), boundary_digit_set(spec, s2)
        if not A or not B:
            table[d] = EMPTY
            continue
        tag = intersect_class(A, B, spec.n_base)
        if tag is Cardinality.SINGLETON:
            v = singleton_value(A, B, spec.n_base)
            if d.dx:
                pt = Point(Fraction((d.dx + 1) // 2), v)
            else:
                pt = Point(v, Fraction((d.dy + 1) // 2))
            table[d] = Contact(tag, pt)
        else:
            table[d] = Contact(tag)
    return table


def _absolute(contact: Contact, gx: int, gy: int, level: int, n_base: int) -> Contact:
    if contact.tag is not Cardinality.SINGLETON:
        return contact
    scale = n_base**level
    p = contact.point
    return Contact(contact.tag, Point((gx + p.x) / scale, (gy + p.y) / scale))


def merge_contacts(contacts) -> Contact:
    """Union of several intersections: singletons at one point stay a singleton."""
    point = None
    for c in contacts:
        if c.tag is Cardinality.MULTIPLE:
            return MULTIPLE
        if c.tag is Cardinality.SINGLETON:
            if point is not None and point != c.point:
                return MULTIPLE
            point = c.point
    return EMPTY if point is None else Contact(Cardinality.SINGLETON, point)


def cells_intersection_class(spec: GscSpec, i: Word, j: Word) -> Contact:
    """Classify ``phi_i(F) ∩ phi_j(F)``, with singleton points in absolute
    coordinates.  A cell against itself or one of its ancestors is Multiple by
    convention (every cell has at least two points)."""
    i, j = check_word(spec, i), check_word(spec, j)
    if len(i) > len(j):
        i, j = j, i
    if j[: len(i)] == i:
        return MULTIPLE
    table = neighbor_table(spec)
    n = spec.n_base
    level = len(j)
    gx, gy = word_to_grid(spec, j)
    ix, iy = word_to_grid(spec, i)
    shift = n ** (level - len(i))
    found = []
    for d in DIRECTIONS:
        qx, qy = gx + d.dx, gy + d.dy
        if qx // shift != ix or qy // shift != iy:
            continue
        if grid_to_word(spec, qx, qy, level) is None:
            continue
        found.append(_absolute(table[d], gx, gy, level, n))
    return merge_contacts(found)


def position_neighbor(spec: GscSpec, w: Word, t: Direction) -> Word | None:
    """The word ``w(t)``: the same-level cell in position ``t`` next to ``w``
    that actually meets it, or None."""
    w = check_word(spec, w)
    if not w or neighbor_table(spec)[t].empty:
        return None
    gx, gy = word_to_grid(spec, w)
    return grid_to_word(spec, gx + t.dx, gy + t.dy, len(w))
