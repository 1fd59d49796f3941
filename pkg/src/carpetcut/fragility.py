"""Connectedness and fragility of a carpet.

F is connected iff ``Γ_1`` is.  A connected F is fragile when D splits as
``D_1 ⊔ D_2`` with the two unions of level-1 cells meeting in one point p.
Every crossing pair then meets in ``{p}`` or not at all, so p is the payload
of some pairwise Singleton contact.  For each such candidate we drop the pairs
that touch only at p and ask whether what remains is disconnected; any
component of it can serve as ``D_1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .adjacency import Contact, cells_intersection_class
from .core import Digit, GscSpec, Point, Word, format_word, words
from .errors import DisconnectedCarpet
from .hata import build_hata
from .radix import Cardinality


@dataclass(frozen=True)
class FragilityWitness:
    point: Point
    parts: tuple[tuple[Word, ...], tuple[Word, ...]]

    def __str__(self) -> str:
        left = " ".join(format_word(w) for w in self.parts[0])
        right = " ".join(format_word(w) for w in self.parts[1])
        return f"point={self.point} parts={left} / {right}"

    @property
    def digit_parts(self) -> tuple[tuple[Digit, ...], tuple[Digit, ...]]:
        """The split as digits (level-1 witnesses only)."""
        return tuple(w[0] for w in self.parts[0]), tuple(w[0] for w in self.parts[1])


def is_connected_gsc(spec: GscSpec) -> bool:
    return build_hata(spec, 1).is_connected


def pair_contacts(spec: GscSpec, level: int = 1) -> dict[tuple[Word, Word], Contact]:
    """Non-Empty contacts between distinct cells of one level, keyed by
    canonically ordered word pairs."""
    G = build_hata(spec, level)
    out = {}
    for u, v in G.edges.tolist():
        a, b = G.word(u), G.word(v)
        out[(a, b)] = cells_intersection_class(spec, a, b)
    return out


def _components(nodes: list[Word], edges, order: dict[Word, int]) -> list[list[Word]]:
    parent = {w: w for w in nodes}

    def find(w):
        while parent[w] != w:
            parent[w] = parent[parent[w]]
            w = parent[w]
        return w

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb, key=order.get)] = min(ra, rb, key=order.get)
    groups: dict[Word, list[Word]] = {}
    for w in nodes:
        groups.setdefault(find(w), []).append(w)
    return sorted(groups.values(), key=lambda g: order[g[0]])


def fragility_witness(spec: GscSpec, level: int = 1) -> FragilityWitness | None:
    """Least-point witness of a single-point split of the level-``level``
    cells, or None.  Level 1 is the definition; deeper levels exist to test
    that they never find a split level 1 misses."""
    if not is_connected_gsc(spec):
        raise DisconnectedCarpet(f"{spec} is not connected")
    nodes = list(words(spec, level))
    order = {w: k for k, w in enumerate(nodes)}
    contacts = pair_contacts(spec, level)
    candidates = sorted(
        {c.point for c in contacts.values() if c.tag is Cardinality.SINGLETON},
        key=lambda p: (p.x, p.y),
    )
    for p in candidates:
        kept = [pair for pair, c in contacts.items() if not (c.tag is Cardinality.SINGLETON and c.point == p)]
        groups = _components(nodes, kept, order)
        if len(groups) < 2:
            continue
        first = tuple(groups[0])
        rest = tuple(sorted((w for g in groups[1:] for w in g), key=order.get))
        return FragilityWitness(p, (first, rest))
    return None


def verify_witness(spec: GscSpec, witness: FragilityWitness) -> bool:
    """Recheck every crossing pair directly: all Empty or Singleton(point),
    at least one Singleton."""
    touched = False
    for a in witness.parts[0]:
        for b in witness.parts[1]:
            c = cells_intersection_class(spec, a, b)
            if c.tag is Cardinality.MULTIPLE:
                return False
            if c.tag is Cardinality.SINGLETON:
                if c.point != witness.point:
                    return False
                touched = True
    return touched


def brute_force_fragile(spec: GscSpec) -> bool:
    """Scan all 2^(|D|-1) splits of D (with the least digit on the left)."""
    digits = spec.digits
    table = {}
    for a, b in combinations(digits, 2):
        table[a, b] = table[b, a] = cells_intersection_class(spec, (a,), (b,))
    rest = digits[1:]
    for r in range(len(rest)):
        for chosen in combinations(rest, r):
            left = (digits[0],) + chosen
            right = [d for d in rest if d not in chosen]
            points, bad = set(), False
            for a in left:
                for b in right:
                    c = table[a, b]
                    if c.tag is Cardinality.MULTIPLE:
                        bad = True
                        break
                    if c.tag is Cardinality.SINGLETON:
                        points.add(c.point)
                if bad:
                    break
            if not bad and len(points) == 1:
                return True
    return False
