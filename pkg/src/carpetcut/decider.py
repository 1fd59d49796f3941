"""Deciding whether a carpet has cut points, and testing single points.

For a connected non-fragile carpet, F has cut points iff every ``Γ_n``
(n >= 2) has an essential cut vertex.  Whether a word is essential is a
property of its window state (see :mod:`carpetcut.window`), and there are
finitely many states, so the sets of essential-witnessing states reachable at
depth n form an eventually periodic sequence which we compute exactly.

When every bit is true we look for a word ω whose powers stay essential
forever.  The fixed point of ``φ_ω`` has only the address ``ω^∞`` (the cell of
``ωω`` misses every other cell of ``|ω|`` letters), so the window states
along that address describe ``F`` minus the point, and the point is a cut
point.  Where the explicit graph is small we also produce the four-condition
repetition certificate on the components of ``Γ_|ω| - ω``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from math import lcm

from .adjacency import cells_intersection_class
from .core import (
    DIRECTIONS,
    GscSpec,
    Point,
    Word,
    address_point,
    check_word,
    fixed_point,
    format_word,
    grid_to_word,
    word_to_grid,
)
from .errors import (
    BadPartition,
    DisconnectedInput,
    FragileInput,
    Inconclusive,
    LevelTooLarge,
    PointNotInCarpet,
    PreconditionUnverified,
)
from .fragility import FragilityWitness, fragility_witness, is_connected_gsc
from .hata import build_hata
from .radix import expansions, zip_expansions
from .window import FROZEN, ROOT, WindowState, step_cells, window_step

DEFAULT_M = 3**8 + 3
# frozen components are counted exactly up to this value in point tests
POINT_FROZEN_CAP = 9
MAX_OMEGA_LENGTH = 8
CERTIFICATE_MAX_VERTICES = 5000


def max_depth() -> int:
    return int(os.environ.get("CARPETCUT_MAX_DEPTH", DEFAULT_M))


def _require_connected(spec: GscSpec) -> None:
    if not is_connected_gsc(spec):
        raise DisconnectedInput(f"{spec} is not connected")


# -- essential bits ------------------------------------------------------------


def essential_exists_at_depth(spec: GscSpec, allow_fragile: bool = False) -> tuple[list[bool], list[bool]]:
    """Bits ``b_n`` (n = 1, 2, ...) telling whether ``Γ_n`` has an essential
    cut vertex, as an eventually periodic (preperiod, period) pair.

    Only sep-true states are kept: once two subtrees share a component they
    never separate again, so sep-false states have no sep-true descendants.
    Fragile carpets are refused unless ``allow_fragile`` (the bits are still
    well defined for them; only their meaning for cut points changes).
    """
    _require_connected(spec)
    if not allow_fragile and fragility_witness(spec) is not None:
        raise FragileInput(f"{spec} is fragile")
    frontier = frozenset(s for s in (window_step(spec, ROOT, d) for d in spec.digits) if s.sep)
    seen: dict[frozenset, int] = {}
    bits: list[bool] = []
    limit = max_depth()
    while frontier not in seen:
        if len(bits) >= limit:
            raise Inconclusive(f"no repetition within {limit} levels")
        seen[frontier] = len(bits)
        bits.append(bool(frontier))
        frontier = frozenset(
            t for s in frontier for d in spec.digits if (t := window_step(spec, s, d)).sep
        )
    start = seen[frontier]
    return bits[:start], bits[start:]


def bit_at(bits: tuple[list[bool], list[bool]], n: int) -> bool:
    pre, per = bits
    if n <= len(pre):
        return pre[n - 1]
    return per[(n - 1 - len(pre)) % len(per)]


# -- addresses and point tests ----------------------------------------------


@dataclass(frozen=True)
class EventuallyPeriodicAddress:
    preperiod: Word
    period: Word

    def __post_init__(self):
        if not self.period:
            raise ValueError("period must be non-empty")

    def letter(self, k: int):
        """Letter k (0-based)."""
        if k < len(self.preperiod):
            return self.preperiod[k]
        return self.period[(k - len(self.preperiod)) % len(self.period)]

    def point(self, spec: GscSpec) -> Point:
        return address_point(spec, self.preperiod, self.period)

    def __str__(self) -> str:
        return f"{format_word(self.preperiod)}[{format_word(self.period)}]"


def addresses_of(spec: GscSpec, p: Point) -> list[EventuallyPeriodicAddress]:
    """Every address of ``p`` with all letters in D, canonical and sorted."""
    p = Point.of(*p)
    out = set()
    for xs in expansions(p.x, spec.n_base):
        for ys in expansions(p.y, spec.n_base):
            pre, per = zip_expansions(xs, ys)
            if all(d in spec.digit_set for d in pre + per):
                out.add(EventuallyPeriodicAddress(tuple(pre), tuple(per)))
    return sorted(out, key=lambda a: (len(a.preperiod), a.preperiod, a.period))


@dataclass(frozen=True)
class PointReport:
    point: Point
    addresses: tuple[EventuallyPeriodicAddress, ...]
    components: int
    frozen: int
    persistent_blocks: int
    cycle_start: int
    cycle_length: int

    @property
    def is_cut_point(self) -> bool:
        return self.components >= 2


def _periodic_points(f: tuple[int, ...]) -> int:
    count = 0
    for b in range(len(f)):
        x = b
        for _ in range(len(f)):
            x = f[x]
            if x == FROZEN or x == b:
                break
        count += x == b
    return count


def point_components(spec: GscSpec, p) -> PointReport:
    """Count the components of ``F`` minus ``p`` for an eventually periodic p.

    The center follows the cells containing p (one per address, up to four).
    After the joint (state, schedule phase, address offsets) repeats, the
    block map of one round is iterated: each of its periodic blocks is a
    component that never freezes and never merges with another.
    """
    p = Point.of(*p)
    addrs = addresses_of(spec, p)
    if not addrs:
        raise PointNotInCarpet(f"{p} is not in {spec}")
    _require_connected(spec)
    n = spec.n_base
    pre_len = max(len(a.preperiod) for a in addrs)
    period = lcm(*(len(a.period) for a in addrs))
    offsets = [(0, 0)] * len(addrs)
    state = ROOT
    seen: dict = {}
    maps: list[tuple[int, ...]] = []
    k = 0
    while True:
        if k >= pre_len:
            key = (state, (k - pre_len) % period, tuple(offsets))
            if key in seen:
                start = seen[key]
                break
            seen[key] = k
        letters = [a.letter(k) for a in addrs]
        res = step_cells(spec, state, list(zip(offsets, letters)), cap=POINT_FROZEN_CAP)
        ox, oy = res.shift
        offsets = [(n * x + d[0] - ox, n * y + d[1] - oy) for (x, y), d in zip(offsets, letters)]
        maps.append(res.block_map)
        state = res.state
        k += 1
    f = tuple(range(state.blocks))
    for m in maps[start:]:
        f = tuple(FROZEN if b == FROZEN else m[b] for b in f)
    persistent = _periodic_points(f)
    return PointReport(p, tuple(addrs), state.frozen_any + persistent, state.frozen_any, persistent, start, k - start)


def is_cut_point(spec: GscSpec, p) -> bool:
    return point_components(spec, p).is_cut_point


@dataclass(frozen=True)
class Candidate:
    digit: tuple[int, int]
    point: Point
    is_cut_point: bool


def unique_cutpoint_candidates(spec: GscSpec) -> list[Candidate]:
    """Fixed points of the level-1 maps, each tested.  When F has exactly
    one cut point it is among these."""
    out = []
    for d in spec.digits:
        pt = fixed_point(spec, (d,))
        out.append(Candidate(d, pt, is_cut_point(spec, pt)))
    return out


# -- repetition certificate ---------------------------------------------------


def _neighbors_of(spec: GscSpec, i: Word) -> list[Word]:
    gx, gy = word_to_grid(spec, i)
    out = []
    for d in DIRECTIONS:
        w = grid_to_word(spec, gx + d.dx, gy + d.dy, len(i))
        if w is not None:
            out.append(w)
    return out


def check_repetition_certificate(spec: GscSpec, i: Word, lam, lam_prime) -> bool:
    """Check the four conditions that make every power of ``i`` an essential
    cut vertex (and the fixed point of ``φ_i`` a cut point)."""
    i = check_word(spec, i)
    n = len(i)
    lam = {check_word(spec, w) for w in lam}
    lam_prime = {check_word(spec, w) for w in lam_prime}
    for w in lam | lam_prime:
        if len(w) != n:
            raise BadPartition(f"{format_word(w)} has length {len(w)}, expected {n}")
    if i in lam or i in lam_prime:
        raise BadPartition("the partition must not contain i")
    # (1) a partition of D^n minus i
    if lam & lam_prime or len(lam) + len(lam_prime) != spec.size**n - 1:
        return False
    if not lam or not lam_prime:
        return False
    # (2) the two unions are disjoint: only lattice neighbors can meet
    for w in lam:
        gx, gy = word_to_grid(spec, w)
        for d in DIRECTIONS:
            q = grid_to_word(spec, gx + d.dx, gy + d.dy, n)
            if q in lam_prime and not cells_intersection_class(spec, w, q).empty:
                return False
    # (3) each image under φ_i avoids one of the two sides
    near = _neighbors_of(spec, i)

    def touches(images, side) -> bool:
        return any(
            not cells_intersection_class(spec, j, i + w).empty for j in near if j in side for w in images
        )

    for images in (lam, lam_prime):
        if touches(images, lam) and touches(images, lam_prime):
            return False
    # (4) a whole level-1 subtree on each side
    def full_subtrees(side) -> set:
        heads: dict = {}
        for w in side:
            heads[w[0]] = heads.get(w[0], 0) + 1
        return {h for h, c in heads.items() if c == spec.size ** (n - 1)}

    a, b = full_subtrees(lam), full_subtrees(lam_prime)
    return bool(a) and bool(b)


@dataclass(frozen=True)
class Certificate:
    i: Word
    lam: tuple[Word, ...]
    lam_prime: tuple[Word, ...]

    def __str__(self) -> str:
        left = " ".join(format_word(w) for w in self.lam)
        right = " ".join(format_word(w) for w in self.lam_prime)
        return f"certificate i={format_word(self.i)} lambda={left} lambda'={right}"


def find_certificate(spec: GscSpec, i: Word, cap: int = CERTIFICATE_MAX_VERTICES) -> Certificate | None:
    """Try every grouping of the components of ``Γ_|i| - i`` into two sides.

    Condition (2) forces each component wholly onto one side, so this search
    is complete for the given i.
    """
    i = check_word(spec, i)
    if spec.size ** len(i) > cap:
        return None
    G = build_hata(spec, len(i), cap)
    v = G.index(i)
    if not G.is_cut_vertex(v):
        return None
    groups: dict[int, list[Word]] = {}
    for u in range(G.order):
        if u != v:
            groups.setdefault(G.removal_label(v, u), []).append(G.word(u))
    comps = sorted(groups.values(), key=lambda c: G.index(c[0]))
    rest = comps[1:]
    for r in range(len(rest)):
        for chosen in combinations(range(len(rest)), r):
            lam = list(comps[0]) + [w for c in chosen for w in rest[c]]
            lam_prime = [w for k, c in enumerate(rest) if k not in chosen for w in c]
            if check_repetition_certificate(spec, i, lam, lam_prime):
                key = G.index
                return Certificate(i, tuple(sorted(lam, key=key)), tuple(sorted(lam_prime, key=key)))
    return None


def corollary_double_check(spec: GscSpec, i: Word) -> bool:
    """Given i essential with exactly two components of ``Γ_|i| - i``,
    report whether ``ii`` is essential too (which makes every power of i
    essential)."""
    i = check_word(spec, i)
    if not i:
        raise PreconditionUnverified("empty word")
    state = ROOT
    for d in i:
        state = step_cells(spec, state, [(state.center[0], d)], cap=POINT_FROZEN_CAP).state
    if not state.sep or state.components != 2:
        raise PreconditionUnverified(f"{format_word(i)} is not essential with exactly two components")
    try:
        G = build_hata(spec, 2 * len(i))
        v = G.index(i + i)
        return G.is_essential(v)
    except LevelTooLarge:
        pass
    for d in i:
        state = window_step(spec, state, d)
    return state.sep


# -- verdicts -----------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    tag: str
    witness: FragilityWitness | None = None
    level: int | None = None
    omega: Word | None = None
    point: Point | None = None
    evidence: str | None = None

    def __str__(self) -> str:
        if self.tag == "Disconnected":
            return "Disconnected"
        if self.tag == "Fragile":
            w = self.witness
            d1 = "".join(format_word(x) for x in w.parts[0])
            d2 = "".join(format_word(x) for x in w.parts[1])
            return f"Fragile point={w.point} d1={d1} d2={d2}"
        if self.tag == "NoCutPoints":
            return f"NoCutPoints level={self.level}"
        return f"HasCutPoints omega={format_word(self.omega)} point={self.point}"

    @property
    def has_cut_points(self) -> bool:
        return self.tag in ("Fragile", "HasCutPoints")


def _stays_essential(spec: GscSpec, state: WindowState, omega: Word) -> bool:
    """Whether every power ``ω^k`` keeps sep true, starting from the state
    reached after ω itself."""
    seen = set()
    while state not in seen:
        seen.add(state)
        for d in omega:
            state = window_step(spec, state, d)
            if not state.sep:
                return False
    return True


def _omega_search(spec: GscSpec, max_len: int):
    """Words ω in order of length, then canonical order, whose powers are all
    essential.  Prefixes with sep false are pruned."""
    layer = [((), ROOT)]
    for _ in range(max_len):
        nxt = []
        for w, s in layer:
            for d in spec.digits:
                t = window_step(spec, s, d)
                if t.sep:
                    nxt.append((w + (d,), t))
        for w, t in nxt:
            if _stays_essential(spec, t, w):
                yield w
        layer = nxt


def decide_cut_points(spec: GscSpec, max_omega: int = MAX_OMEGA_LENGTH) -> Verdict:
    if not is_connected_gsc(spec):
        return Verdict("Disconnected")
    witness = fragility_witness(spec)
    if witness is not None:
        return Verdict("Fragile", witness=witness, point=witness.point)
    bits = essential_exists_at_depth(spec)
    pre, per = bits
    for n in range(2, len(pre) + len(per) + 2):
        if not bit_at(bits, n):
            return Verdict("NoCutPoints", level=n)
    for omega in _omega_search(spec, max_omega):
        pt = fixed_point(spec, omega)
        if not is_cut_point(spec, pt):
            continue
        cert = find_certificate(spec, omega)
        if cert is not None:
            evidence = str(cert)
        else:
            evidence = f"orbit word={format_word(omega)} essential for every power"
        return Verdict("HasCutPoints", omega=omega, point=pt, evidence=evidence)
    raise Inconclusive(f"every Γ_n has essential cut vertices but no ω of length <= {max_omega} was confirmed")


__all__ = [
    "Candidate",
    "Certificate",
    "DEFAULT_M",
    "EventuallyPeriodicAddress",
    "PointReport",
    "Verdict",
    "addresses_of",
    "bit_at",
    "check_repetition_certificate",
    "corollary_double_check",
    "decide_cut_points",
    "essential_exists_at_depth",
    "find_certificate",
    "is_cut_point",
    "max_depth",
    "point_components",
    "unique_cutpoint_candidates",
]
