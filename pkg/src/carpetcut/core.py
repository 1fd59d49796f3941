"""Carpet specifications, words over the digit set, and lattice geometry.

A carpet F(N, D) is the attractor of the maps ``x -> (x + d) / N`` for
``d`` in ``D``.  A word ``w = d_1 ... d_k`` names the level-k cell
``phi_w(F)``, which sits in the lattice square with lower-left corner
``sum_j d_j N^(k-j)`` (componentwise) at scale ``N^-k``.

Words are plain tuples of ``(a, b)`` digit pairs.  All geometry is exact:
integers for lattice coordinates and :class:`fractions.Fraction` for points.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import (
    BadBase,
    DigitOutOfRange,
    DuplicateDigit,
    EmptyDigitSet,
    EmptyWord,
    InvalidWord,
    LevelMismatch,
    TrivialDigitSet,
)

Digit = tuple[int, int]
Word = tuple[Digit, ...]


def digit_key(d: Digit) -> tuple[int, int]:
    """Row-major sort key: bottom row first, left to right."""
    return (d[1], d[0])


class Point(NamedTuple):
    """An exact point of the unit square."""

    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x, y) -> "Point":
        return cls(Fraction(x), Fraction(y))

    def __str__(self) -> str:
        return f"{self.x},{self.y}"


@dataclass(frozen=True)
class GscSpec:
    """A validated pair (N, D).  Build instances with :func:`validate_spec`."""

    n_base: int
    digits: tuple[Digit, ...]
    name: str | None = field(default=None, compare=False)

    @cached_property
    def digit_set(self) -> frozenset[Digit]:
        return frozenset(self.digits)

    @cached_property
    def rank(self) -> dict[Digit, int]:
        return {d: r for r, d in enumerate(self.digits)}

    @property
    def size(self) -> int:
        return len(self.digits)

    def __contains__(self, d) -> bool:
        return d in self.digit_set

    def __str__(self) -> str:
        if self.name:
            return self.name
        body = " ".join(f"{a},{b}" for a, b in self.digits)
        return f"N={self.n_base} D={{{body}}}"

    def to_json(self) -> dict:
        return {"n": self.n_base, "digits": [list(d) for d in self.digits]}


def validate_spec(n_base: int, digits: Iterable[Sequence[int]], name: str | None = None) -> GscSpec:
    if not isinstance(n_base, int) or n_base < 2:
        raise BadBase(f"base must be an integer >= 2, got {n_base!r}")
    seen: set[Digit] = set()
    for raw in digits:
        a, b = (int(v) for v in raw)
        if not (0 <= a < n_base and 0 <= b < n_base):
            raise DigitOutOfRange(f"digit {(a, b)} outside [0, {n_base - 1}]^2")
        if (a, b) in seen:
            raise DuplicateDigit(f"digit {(a, b)} listed twice")
        seen.add((a, b))
    if not seen:
        raise EmptyDigitSet("digit set is empty")
    if not 1 < len(seen) < n_base * n_base:
        raise TrivialDigitSet(f"need 1 < |D| < {n_base * n_base}, got |D| = {len(seen)}")
    return GscSpec(n_base, tuple(sorted(seen, key=digit_key)), name)


def spec_from_json(doc: dict, name: str | None = None) -> GscSpec:
    return validate_spec(doc["n"], doc["digits"], name=name)


# -- words -------------------------------------------------------------------


def check_word(spec: GscSpec, w: Sequence[Digit]) -> Word:
    w = tuple(tuple(d) for d in w)
    for d in w:
        if d not in spec.digit_set:
            raise InvalidWord(f"letter {d} is not a digit of {spec}")
    return w  # type: ignore[return-value]


def words(spec: GscSpec, level: int) -> Iterator[Word]:
    """All words of a given length in canonical (lexicographic by rank) order."""
    if level == 0:
        yield ()
        return
    for head in words(spec, level - 1):
        for d in spec.digits:
            yield head + (d,)


def word_key(spec: GscSpec, w: Word) -> tuple[int, ...]:
    return tuple(spec.rank[d] for d in w)


def format_word(w: Word) -> str:
    return "".join(f"({a},{b})" for a, b in w) or "()"


def parse_word(text: str) -> Word:
    """Inverse of :func:`format_word`; also accepts ``a,b|c,d``."""
    text = text.strip()
    if text in ("", "()"):
        return ()
    if "|" in text or not text.startswith("("):
        parts = text.split("|")
    else:
        parts = [p for p in text.replace(")", "").split("(") if p]
    out = []
    for p in parts:
        a, b = p.split(",")
        out.append((int(a), int(b)))
    return tuple(out)


def word_to_grid(spec: GscSpec, w: Word) -> tuple[int, int]:
    n = spec.n_base
    x = y = 0
    for a, b in check_word(spec, w):
        x = x * n + a
        y = y * n + b
    return x, y


def grid_to_word(spec: GscSpec, x: int, y: int, level: int) -> Word | None:
    """The level-``level`` word at lattice position (x, y), or None if the
    position is outside the square or uses a letter not in D."""
    n = spec.n_base
    side = n**level
    if not (0 <= x < side and 0 <= y < side):
        return None
    out = []
    for _ in range(level):
        d = (x % n, y % n)
        if d not in spec.digit_set:
            return None
        out.append(d)
        x //= n
        y //= n
    return tuple(reversed(out))


# -- directions --------------------------------------------------------------


class Direction(enum.Enum):
    """The eight neighbor positions of a lattice square, as (dx, dy)."""

    UP = (0, 1)
    DOWN = (0, -1)
    LEFT = (-1, 0)
    RIGHT = (1, 0)
    UP_LEFT = (-1, 1)
    UP_RIGHT = (1, 1)
    DOWN_LEFT = (-1, -1)
    DOWN_RIGHT = (1, -1)

    @property
    def dx(self) -> int:
        return self.value[0]

    @property
    def dy(self) -> int:
        return self.value[1]

    @property
    def is_corner(self) -> bool:
        return self.dx != 0 and self.dy != 0

    @property
    def opposite(self) -> "Direction":
        return _BY_OFFSET[(-self.dx, -self.dy)]

    @property
    def arrow(self) -> str:
        return _ARROWS[self]

    @classmethod
    def from_offset(cls, dx: int, dy: int) -> "Direction":
        return _BY_OFFSET[(dx, dy)]

    def __str__(self) -> str:
        return self.arrow


_BY_OFFSET = {d.value: d for d in Direction}
_ARROWS = {
    Direction.UP: "↑",
    Direction.DOWN: "↓",
    Direction.LEFT: "←",
    Direction.RIGHT: "→",
    Direction.UP_LEFT: "↖",
    Direction.UP_RIGHT: "↗",
    Direction.DOWN_LEFT: "↙",
    Direction.DOWN_RIGHT: "↘",
}
DIRECTIONS: tuple[Direction, ...] = tuple(Direction)


class Relation(NamedTuple):
    kind: str  # "same" | "edge" | "corner" | "far"
    direction: Direction | None = None

    def reverse(self) -> "Relation":
        if self.direction is None:
            return self
        return Relation(self.kind, self.direction.opposite)


def relative_position(spec: GscSpec, i: Word, j: Word) -> Relation:
    """Where the square of ``j`` sits as seen from the square of ``i``."""
    if len(i) != len(j):
        raise LevelMismatch(f"levels differ: {len(i)} vs {len(j)}")
    xi, yi = word_to_grid(spec, i)
    xj, yj = word_to_grid(spec, j)
    dx, dy = xj - xi, yj - yi
    if dx == 0 and dy == 0:
        return Relation("same")
    if max(abs(dx), abs(dy)) > 1:
        return Relation("far")
    d = Direction.from_offset(dx, dy)
    return Relation("corner" if d.is_corner else "edge", d)


# -- static boundary geometry ------------------------------------------------


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    TOP = "top"
    BOTTOM = "bottom"


def boundary_digit_set(spec: GscSpec, side: Side | str) -> frozenset[int]:
    """Digits of the 1-D self-similar set that F leaves on one side of the
    unit square, e.g. ``{b : (N-1, b) in D}`` for the right side."""
    side = Side(side)
    top = spec.n_base - 1
    if side is Side.LEFT:
        return frozenset(b for a, b in spec.digits if a == 0)
    if side is Side.RIGHT:
        return frozenset(b for a, b in spec.digits if a == top)
    if side is Side.BOTTOM:
        return frozenset(a for a, b in spec.digits if b == 0)
    return frozenset(a for a, b in spec.digits if b == top)


def corner_in_F(spec: GscSpec, corner: tuple[int, int]) -> bool:
    """Whether the unit-square corner ``corner`` (entries 0/1) lies in F.

    A corner has a single base-N address, the constant extreme digit.
    """
    cx, cy = corner
    if cx not in (0, 1) or cy not in (0, 1):
        raise ValueError(f"not a corner of the unit square: {corner}")
    top = spec.n_base - 1
    return (cx * top, cy * top) in spec.digit_set


def fixed_point(spec: GscSpec, w: Word) -> Point:
    """Fixed point of ``phi_w``: solves ``p = (G + p) / N^k`` for grid G."""
    if not w:
        raise EmptyWord("the empty word has no unique fixed point")
    gx, gy = word_to_grid(spec, w)
    denom = spec.n_base ** len(w) - 1
    return Point(Fraction(gx, denom), Fraction(gy, denom))


def apply_word(spec: GscSpec, w: Word, p: Point) -> Point:
    """``phi_w(p)``."""
    gx, gy = word_to_grid(spec, w)
    scale = spec.n_base ** len(w)
    return Point((gx + p.x) / scale, (gy + p.y) / scale)


def address_point(spec: GscSpec, preperiod: Word, period: Word) -> Point:
    """The point coded by the infinite word ``preperiod period period ...``."""
    return apply_word(spec, preperiod, fixed_point(spec, period))
