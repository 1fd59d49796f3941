"""Slow, independent reference implementations used by the tests."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import networkx as nx
import numpy as np

from carpetcut.core import GscSpec, validate_spec, word_to_grid, words
from carpetcut.errors import SpecError
from carpetcut.fragility import fragility_witness, is_connected_gsc
from carpetcut.radix import Cardinality

# -- 1-D intersections by interval refinement ---------------------------------

LOOKAHEAD = 3


def _refine(pairs: np.ndarray, A, B, n: int) -> np.ndarray:
    """Children (p', q') of scaled prefix pairs whose closed value intervals
    [p', p'+1] and [q', q'+1] still overlap."""
    if len(pairs) == 0:
        return pairs
    da = np.array(sorted(A), dtype=np.int64)
    db = np.array(sorted(B), dtype=np.int64)
    p = (pairs[:, 0:1, None] * n + da[None, :, None]).repeat(len(db), axis=2)
    q = (pairs[:, 1:2, None] * n + db[None, None, :]).repeat(len(da), axis=1)
    p, q = p.ravel(), q.ravel()
    keep = np.abs(p - q) <= 1
    return np.unique(np.stack([p[keep], q[keep]], axis=1), axis=0)


def interval_oracle(A, B, n: int, depth: int = 12) -> Cardinality:
    """Classify C_A ∩ C_B by refining prefix intervals to ``depth``.

    A pair counts as live at depth k when it still has descendants
    ``LOOKAHEAD`` levels further down.  Multiple iff two live pairs have A-side
    values more than two cells apart at some depth; Empty iff refinement dies.
    """
    levels = [np.zeros((1, 2), dtype=np.int64)]
    scale = n**LOOKAHEAD
    for m in range(1, depth + LOOKAHEAD + 1):
        levels.append(_refine(levels[-1], A, B, n))
        if len(levels[-1]) == 0:
            return Cardinality.EMPTY
        k = m - LOOKAHEAD
        if k >= 1:
            live = np.unique(levels[m] // scale, axis=0)
            if live[:, 0].max() - live[:, 0].min() > 2:
                return Cardinality.MULTIPLE
            levels[k - 1] = None  # no longer needed
    return Cardinality.SINGLETON


def in_digit_system(v: Fraction, digits, n: int) -> bool:
    """Whether v = sum d_k n^-k for some digits d_k in ``digits``.

    Runs the carry automaton of {v} against the digit set by brute force:
    track the set of remainders r = n^k (v - prefix) in [0, 1].
    """
    top = Fraction(max(digits), n - 1)
    bottom = Fraction(min(digits), n - 1)
    seen = set()
    frontier = {Fraction(v)}
    while frontier:
        seen |= frontier
        nxt = set()
        for r in frontier:
            for d in digits:
                r2 = r * n - d
                if bottom <= r2 <= top and r2 not in seen:
                    nxt.add(r2)
        frontier = nxt
    # some remainder sequence survives forever iff a cycle is reachable; since
    # remainders are rationals with bounded denominators the set is finite
    graph = {r: [r * n - d for d in digits if bottom <= r * n - d <= top] for r in seen}
    alive = set(graph)
    while True:
        keep = {r for r in alive if any(s in alive for s in graph[r])}
        if keep == alive:
            break
        alive = keep
    return Fraction(v) in alive


# -- 2-D subdivision ------------------------------------------------------------


def subdivision_meets(spec: GscSpec, i, j, depth: int = 8) -> bool:
    """Whether two equal-level cells intersect: track the grid offsets of
    sub-square pairs that still overlap as closed boxes."""
    gi, gj = word_to_grid(spec, i), word_to_grid(spec, j)
    offsets = {(gj[0] - gi[0], gj[1] - gi[1])}
    offsets = {o for o in offsets if max(abs(o[0]), abs(o[1])) <= 1}
    n = spec.n_base
    for _ in range(depth):
        nxt = set()
        for ox, oy in offsets:
            for a in spec.digits:
                for b in spec.digits:
                    o = (n * ox + b[0] - a[0], n * oy + b[1] - a[1])
                    if max(abs(o[0]), abs(o[1])) <= 1:
                        nxt.add(o)
        offsets = nxt
        if not offsets:
            return False
    return True


def subdivision_meets_any_level(spec: GscSpec, i, j, depth: int = 8) -> bool:
    if len(i) > len(j):
        i, j = j, i
    if j[: len(i)] == i:
        return True
    extra = len(j) - len(i)
    return any(subdivision_meets(spec, i + tail, j, depth) for tail in words(spec, extra))


# -- graphs -----------------------------------------------------------------------


def nx_graph(G) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.order))
    H.add_edges_from(map(tuple, G.edges.tolist()))
    return H


def brute_force_cut_vertices(G) -> dict[int, tuple[list[int], bool]]:
    """Cut vertex -> (component sizes descending, essential) by deleting
    each vertex and recomputing components."""
    H = nx_graph(G)
    k = G.spec.size
    span = k ** (G.level - 1)
    out = {}
    for v in nx.articulation_points(H):
        H2 = H.copy()
        H2.remove_node(v)
        comps = list(nx.connected_components(H2))
        sizes = sorted((len(c) for c in comps), reverse=True)
        if G.level == 1:
            essential = True
        else:
            head = v // span
            labels = set()
            for r in range(k):
                if r == head:
                    continue
                members = set(range(r * span, (r + 1) * span))
                labels |= {idx for idx, c in enumerate(comps) if c & members}
            essential = len(labels) >= 2
        out[v] = (sizes, essential)
    return out


def brute_force_essential_exists(spec: GscSpec, n: int) -> bool:
    from carpetcut.hata import build_hata

    return any(ess for _, ess in brute_force_cut_vertices(build_hata(spec, n)).values())


# -- corpora ------------------------------------------------------------------------


def _path(rng, p, q):
    out = [p]
    x, y = p
    while (x, y) != q:
        if rng.random() < 0.8 or y == q[1]:
            x += (q[0] > x) - (q[0] < x)
        if rng.random() < 0.8 or x == q[0]:
            y += (q[1] > y) - (q[1] < y)
        out.append((x, y))
    return out


def _grown(rng, n, k):
    cells = {(rng.randrange(n), rng.randrange(n))}
    steps = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1), (1, -1), (-1, 1)]
    while len(cells) < k:
        a, b = rng.choice(sorted(cells))
        dx, dy = rng.choice(steps)
        if 0 <= a + dx < n and 0 <= b + dy < n:
            cells.add((a + dx, b + dy))
    return cells


def _spanning(rng, n):
    r = rng.sample(range(n), 2)
    cells = {(0, r[0]), (0, r[1]), (n - 1, r[0]), (n - 1, r[1])}
    if rng.random() < 0.5:
        c = rng.sample(range(n), 2)
        cells |= {(c[0], 0), (c[1], 0), (c[0], n - 1), (c[1], n - 1)}
    pts = sorted(cells)
    rng.shuffle(pts)
    for a, b in zip(pts, pts[1:]):
        cells |= set(_path(rng, a, b))
    return cells


def _line(rng, n):
    """A wiggly path across the square, ending on the row (or column) it
    started from so that opposite sides can touch."""
    r = rng.randrange(n)
    mid = (rng.randrange(1, n - 1), rng.randrange(n))
    cells = set(_path(rng, (0, r), mid)) | set(_path(rng, mid, (n - 1, r)))
    if rng.random() < 0.5:
        cells = {(b, a) for a, b in cells}
    return cells


def random_specs(seed: int, count: int, bases=(3, 4, 5), max_size: int = 10, fragile=False):
    """Seeded connected specs; non-fragile unless ``fragile`` is None (either)
    or True (fragile only)."""
    rng = random.Random(seed)
    out, seen = [], set()
    for _ in range(200 * count):
        if len(out) >= count:
            break
        n = rng.choice(bases)
        roll = rng.random()
        if roll < 0.4:
            cells = _grown(rng, n, rng.randint(3, min(max_size, n * n - 1)))
        elif roll < 0.8:
            cells = _spanning(rng, n)
        else:
            cells = _line(rng, n)
        if len(cells) > max_size:
            continue
        try:
            spec = validate_spec(n, cells)
        except SpecError:
            continue
        if spec in seen or not is_connected_gsc(spec):
            continue
        is_fragile = fragility_witness(spec) is not None
        if fragile is not None and is_fragile != fragile:
            continue
        seen.add(spec)
        out.append(spec)
    return out


def brute_force_fragile_split(spec: GscSpec):
    """All 2^(|D|-1) splits; the set of witness points found."""
    from carpetcut.adjacency import cells_intersection_class

    digits = spec.digits
    cls = {}
    for a, b in combinations(digits, 2):
        cls[a, b] = cls[b, a] = cells_intersection_class(spec, (a,), (b,))
    points = set()
    rest = digits[1:]
    for r in range(len(rest)):
        for chosen in combinations(rest, r):
            left = (digits[0],) + chosen
            right = [d for d in rest if d not in chosen]
            found, ok = set(), True
            for a in left:
                for b in right:
                    c = cls[a, b]
                    if c.tag is Cardinality.MULTIPLE:
                        ok = False
                    elif c.tag is Cardinality.SINGLETON:
                        found.add(c.point)
            if ok and len(found) == 1:
                points |= found
    return points


def exhaustive_specs(n: int, max_size: int, fragile=False):
    """Every connected spec on an n x n grid with |D| <= max_size, filtered
    by fragility as in :func:`random_specs`."""
    cells = [(a, b) for a in range(n) for b in range(n)]
    out = []
    for k in range(2, min(max_size, n * n - 1) + 1):
        for digits in combinations(cells, k):
            spec = validate_spec(n, digits)
            if not is_connected_gsc(spec):
                continue
            if fragile is not None and (fragility_witness(spec) is not None) != fragile:
                continue
            out.append(spec)
    return out
