"""A finite-state view of ``Γ_k`` minus the cells around one point.

Delete the level-k cells ``C`` (the *center*, one to four mutually adjacent
cells) and look at ``E_k``, the union of the remaining level-k cells.  Only
cells meeting the center can ever be involved in later merges, so we keep

* the *window*: positions next to the center whose cells exist and meet it,
  each labelled with its component of ``E_k`` (a *block*);
* per block, whether the component holds a whole level-1 subtree;
* counters of components that no longer touch the window (*frozen*).

Passing to level k+1 splits each center cell into children.  The chosen ones
form the new center; the rest (*siblings*) are new cells of ``E_(k+1)``.
Children of a live cell u stay in u's component (Γ_1 is connected, so the
children of u are too).  Siblings may glue blocks together.  Two children of
distinct old window cells touching each other never need a merge: their
parents touch, and so already share a block.  A child of a non-window cell
cannot meet the new center, which sits inside cells it misses.

Positions are integer lattice offsets at the current level, translated so the
center's bounding box starts at the origin.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .adjacency import neighbor_table
from .core import DIRECTIONS, Digit, GscSpec
from .errors import InvalidDigit

Pos = tuple[int, int]
FROZEN = -1


def _pos_key(p: Pos) -> tuple[int, int]:
    return (p[1], p[0])


@dataclass(frozen=True)
class WindowState:
    center: tuple[Pos, ...]
    window: tuple[tuple[Pos, int], ...]
    has_subtree: tuple[bool, ...]
    frozen_with_subtree: int = 0
    frozen_any: int = 0
    # true only for the level-0 state, whose siblings are level-1 subtrees
    root: bool = field(default=False)

    @property
    def blocks(self) -> int:
        return len(self.has_subtree)

    @property
    def sep(self) -> bool:
        """Two level-1 subtrees lie in different components."""
        live = sum(self.has_subtree)
        if self.frozen_with_subtree >= 2:
            return True
        if self.frozen_with_subtree >= 1 and live >= 1:
            return True
        return live >= 2

    @property
    def components(self) -> int:
        """Components of ``E_k`` (exact up to the frozen-counter cap)."""
        return self.frozen_any + self.blocks

    def __str__(self) -> str:
        cells = " ".join(f"{x},{y}:{b}" for (x, y), b in self.window)
        flags = "".join("S" if f else "-" for f in self.has_subtree)
        return (
            f"center={self.center} window=[{cells}] subtree={flags} "
            f"frozen={self.frozen_with_subtree}/{self.frozen_any}"
        )


ROOT = WindowState(center=((0, 0),), window=(), has_subtree=(), root=True)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass(frozen=True)
class StepResult:
    state: WindowState
    # old block -> new block, or FROZEN
    block_map: tuple[int, ...]
    # translation subtracted from the scaled coordinates
    shift: Pos


def step_cells(spec: GscSpec, state: WindowState, choices, cap: int = 2) -> StepResult:
    """Advance one level.  ``choices`` lists (center cell, digit) pairs; the
    chosen children become the new center.  Every center cell must be used."""
    n = spec.n_base
    digits = spec.digit_set
    table = neighbor_table(spec)
    live_dirs = [d for d in DIRECTIONS if not table[d].empty]

    old_center = set(state.center)
    new_center = set()
    for c, d in choices:
        if d not in digits:
            raise InvalidDigit(f"{d} is not a digit of {spec}")
        new_center.add((n * c[0] + d[0], n * c[1] + d[1]))
    window = dict(state.window)
    nb = state.blocks

    siblings = sorted(
        (
            (n * cx + a, n * cy + b)
            for cx, cy in old_center
            for a, b in spec.digits
            if (n * cx + a, n * cy + b) not in new_center
        ),
        key=_pos_key,
    )
    sib_index = {p: nb + k for k, p in enumerate(siblings)}

    def lookup(q: Pos) -> int | None:
        node = sib_index.get(q)
        if node is not None:
            return node
        parent = (q[0] // n, q[1] // n)
        if parent in window and (q[0] % n, q[1] % n) in digits:
            return window[parent]
        return None

    uf = _UnionFind(nb + len(siblings))
    for s in siblings:
        for d in live_dirs:
            other = lookup((s[0] + d.dx, s[1] + d.dy))
            if other is not None:
                uf.union(sib_index[s], other)

    flags = list(state.has_subtree) + [state.root] * len(siblings)

    live = {}
    for c in new_center:
        for d in live_dirs:
            q = (c[0] + d.dx, c[1] + d.dy)
            if q in new_center or q in live:
                continue
            node = lookup(q)
            if node is not None:
                live[q] = uf.find(node)

    ox = min(x for x, _ in new_center)
    oy = min(y for _, y in new_center)
    label: dict[int, int] = {}
    new_window = []
    for q in sorted(live, key=lambda p: _pos_key((p[0] - ox, p[1] - oy))):
        root = live[q]
        if root not in label:
            label[root] = len(label)
        new_window.append(((q[0] - ox, q[1] - oy), label[root]))

    new_flags = [False] * len(label)
    groups: dict[int, bool] = {}
    for node in range(nb + len(siblings)):
        r = uf.find(node)
        groups[r] = groups.get(r, False) or flags[node]
    frozen_sub, frozen_any = state.frozen_with_subtree, state.frozen_any
    for r, sub in groups.items():
        if r in label:
            new_flags[label[r]] = new_flags[label[r]] or sub
        else:
            frozen_any += 1
            frozen_sub += int(sub)

    block_map = tuple(label.get(uf.find(b), FROZEN) for b in range(nb))
    new_state = WindowState(
        center=tuple(sorted(((x - ox, y - oy) for x, y in new_center), key=_pos_key)),
        window=tuple(new_window),
        has_subtree=tuple(new_flags),
        frozen_with_subtree=min(frozen_sub, 2),
        frozen_any=min(frozen_any, cap),
        root=False,
    )
    return StepResult(new_state, block_map, (ox, oy))


def window_step(spec: GscSpec, s: WindowState, next_digit: Digit) -> WindowState:
    """Single-cell transition: delete the ``next_digit`` child of the center."""
    if len(s.center) != 1:
        raise ValueError("window_step needs a single-cell center")
    return step_cells(spec, s, [(s.center[0], tuple(next_digit))]).state


def window_initial(spec: GscSpec, i1: Digit) -> WindowState:
    """State after deleting the level-1 cell ``i1``."""
    return window_step(spec, ROOT, i1)


def run_word(spec: GscSpec, word) -> WindowState:
    s = ROOT
    for d in word:
        s = window_step(spec, s, d)
    return s
