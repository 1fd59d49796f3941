"""Explicit Hata graphs and their cut-vertex statistics.

``Γ_n`` has the words of length n as vertices and joins two words when their
cells meet.  Vertices are numbered in canonical word order, so vertex ``v``
spells out ``v`` in base ``|D|`` with digit ranks as letters.  Edges come from
a sorted lattice index: each cell looks at most at four forward neighbors.

Cut vertices are found with one iterative DFS (Hopcroft-Tarjan lowpoints).
For every vertex we keep the DFS subtrees that removing it cuts off; component
sizes and component membership of ``G - v`` are read from those intervals of
the preorder, which is all that χ and essentiality need.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .adjacency import neighbor_table
from .core import Direction, GscSpec, Word, check_word, format_word, word_key
from .errors import DisconnectedGraph, LevelTooLarge

DEFAULT_MAX_VERTICES = 2_000_000

_FORWARD = (Direction.RIGHT, Direction.UP, Direction.UP_RIGHT, Direction.UP_LEFT)


def max_vertices() -> int:
    return int(os.environ.get("CARPETCUT_MAX_VERTICES", DEFAULT_MAX_VERTICES))


@dataclass(frozen=True)
class CutVertexReport:
    vertex: Word
    component_sizes: tuple[int, ...]
    essential: bool
    # vertices left alone once ``vertex`` is removed (size-1 components)
    isolated: tuple[Word, ...] = ()

    def __str__(self) -> str:
        sizes = ",".join(map(str, self.component_sizes))
        text = f"{format_word(self.vertex)} sizes={sizes} essential={str(self.essential).lower()}"
        if self.isolated:
            text += " isolated=" + ",".join(format_word(w) for w in self.isolated)
        return text


class HataGraph:
    """The n-th Hata graph of a carpet."""

    def __init__(self, spec: GscSpec, level: int, cap: int | None = None):
        if level < 1:
            raise ValueError("level must be >= 1")
        cap = max_vertices() if cap is None else cap
        count = spec.size**level
        if count > cap:
            raise LevelTooLarge(count, cap)
        self.spec = spec
        self.level = level
        self.order = count
        n = spec.n_base
        ax = np.array([a for a, _ in spec.digits], dtype=np.int64)
        ay = np.array([b for _, b in spec.digits], dtype=np.int64)
        x = np.zeros(1, dtype=np.int64)
        y = np.zeros(1, dtype=np.int64)
        for _ in range(level):
            x = np.add.outer(x * n, ax).ravel()
            y = np.add.outer(y * n, ay).ravel()
        self.x, self.y = x, y
        side = n**level
        keys = x * side + y
        perm = np.argsort(keys, kind="stable")
        sorted_keys = keys[perm]

        table = neighbor_table(spec)
        us, vs = [], []
        for d in _FORWARD:
            if table[d].empty:
                continue
            qx, qy = x + d.dx, y + d.dy
            inside = (qx >= 0) & (qx < side) & (qy >= 0) & (qy < side)
            qk = np.where(inside, qx * side + qy, -1)
            pos = np.searchsorted(sorted_keys, qk)
            pos = np.minimum(pos, count - 1)
            hit = inside & (sorted_keys[pos] == qk)
            us.append(np.nonzero(hit)[0])
            vs.append(perm[pos[hit]])
        u = np.concatenate(us) if us else np.zeros(0, dtype=np.int64)
        v = np.concatenate(vs) if vs else np.zeros(0, dtype=np.int64)
        lo, hi = np.minimum(u, v), np.maximum(u, v)
        order = np.lexsort((hi, lo))
        self.edges = np.stack([lo[order], hi[order]], axis=1)

        both_u = np.concatenate([lo, hi])
        both_v = np.concatenate([hi, lo])
        srt = np.lexsort((both_v, both_u))
        self.indices = both_v[srt]
        self.indptr = np.searchsorted(both_u[srt], np.arange(count + 1))

    # -- naming ----------------------------------------------------------

    def word(self, v: int) -> Word:
        k = self.spec.size
        out = []
        for _ in range(self.level):
            v, r = divmod(int(v), k)
            out.append(self.spec.digits[r])
        return tuple(reversed(out))

    def index(self, w: Word) -> int:
        w = check_word(self.spec, w)
        if len(w) != self.level:
            raise ValueError(f"word of length {len(w)} in a level-{self.level} graph")
        v = 0
        for r in word_key(self.spec, w):
            v = v * self.spec.size + r
        return v

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    # -- DFS -------------------------------------------------------------

    @cached_property
    def _dfs(self):
        n = self.order
        indptr = self.indptr.tolist()
        indices = self.indices.tolist()
        disc = [-1] * n
        low = [0] * n
        size = [1] * n
        parent = [-1] * n
        component = [-1] * n
        # per vertex: list of (preorder start, subtree size) separated by removing it
        split: list[list[tuple[int, int]] | None] = [None] * n
        roots = []
        clock = 0
        for root in range(n):
            if disc[root] != -1:
                continue
            roots.append(root)
            disc[root] = low[root] = clock
            component[root] = len(roots) - 1
            clock += 1
            stack = [(root, indptr[root])]
            while stack:
                v, ptr = stack[-1]
                if ptr < indptr[v + 1]:
                    stack[-1] = (v, ptr + 1)
                    w = indices[ptr]
                    if disc[w] == -1:
                        parent[w] = v
                        disc[w] = low[w] = clock
                        component[w] = component[root]
                        clock += 1
                        stack.append((w, indptr[w]))
                    elif w != parent[v] and disc[w] < low[v]:
                        low[v] = disc[w]
                    continue
                stack.pop()
                p = parent[v]
                if p == -1:
                    continue
                size[p] += size[v]
                if low[v] < low[p]:
                    low[p] = low[v]
                if p == root or low[v] >= disc[p]:
                    if split[p] is None:
                        split[p] = []
                    split[p].append((disc[v], size[v]))
        by_disc = [0] * n
        for v, t in enumerate(disc):
            by_disc[t] = v
        self._by_disc = by_disc
        return disc, size, component, split, roots

    @property
    def component_count(self) -> int:
        return len(self._dfs[4])

    @property
    def is_connected(self) -> bool:
        return self.component_count == 1

    def components(self) -> list[int]:
        """Component label of every vertex (labels by least vertex)."""
        return list(self._dfs[2])

    def _pieces(self, v: int) -> list[tuple[int, int]]:
        """Preorder intervals of the components of ``G - v`` in v's component,
        except the one holding the DFS root when v is not the root."""
        split = self._dfs[3][v]
        return split or []

    def removal_components(self, v: int) -> list[int]:
        """Sizes of the components of ``G - v`` (connected G), descending."""
        self._require_connected()
        disc, size, _, _, roots = self._dfs
        pieces = self._pieces(v)
        sizes = [s for _, s in pieces]
        if v != roots[0]:
            rest = self.order - 1 - sum(sizes)
            if rest:
                sizes.append(rest)
        return sorted(sizes, reverse=True)

    def removal_label(self, v: int, u: int) -> int:
        """Which component of ``G - v`` holds ``u``: an index into the DFS
        pieces of v, or -1 for the piece containing the root."""
        disc = self._dfs[0]
        du = disc[u]
        for k, (start, sz) in enumerate(self._pieces(v)):
            if start <= du < start + sz:
                return k
        return -1

    def isolated_by(self, v: int) -> list[int]:
        """Vertices that become isolated when ``v`` is removed."""
        disc, size, _, _, roots = self._dfs
        out = [self._by_disc[start] for start, sz in self._pieces(v) if sz == 1]
        if v != roots[0] and self.order - 1 - sum(sz for _, sz in self._pieces(v)) == 1:
            out.append(roots[0])
        return sorted(out)

    def is_cut_vertex(self, v: int) -> bool:
        return len(self.removal_components(v)) >= 2

    def cut_vertices(self) -> list[int]:
        self._require_connected()
        return [v for v in range(self.order) if self._dfs[3][v] and self.is_cut_vertex(v)]

    def _require_connected(self):
        if not self.is_connected:
            raise DisconnectedGraph(f"Γ_{self.level} of {self.spec} is disconnected")

    # -- essential cut vertices -----------------------------------------

    def subtree_representative(self, digit_rank: int) -> int:
        """Least vertex of the level-1 subtree ``d D^(n-1)``."""
        return digit_rank * self.spec.size ** (self.level - 1)

    def is_essential(self, v: int) -> bool:
        if not self.is_cut_vertex(v):
            return False
        if self.level == 1:
            return True
        first = v // self.spec.size ** (self.level - 1)
        labels = {
            self.removal_label(v, self.subtree_representative(r))
            for r in range(self.spec.size)
            if r != first
        }
        return len(labels) >= 2

    def cut_vertex_reports(self) -> list[CutVertexReport]:
        return [
            CutVertexReport(
                self.word(v),
                tuple(self.removal_components(v)),
                self.is_essential(v),
                tuple(self.word(u) for u in self.isolated_by(v)),
            )
            for v in self.cut_vertices()
        ]


@lru_cache(maxsize=32)
def _cached_graph(spec: GscSpec, n: int, cap: int) -> HataGraph:
    return HataGraph(spec, n, cap)


def build_hata(spec: GscSpec, n: int, cap: int | None = None) -> HataGraph:
    cap = max_vertices() if cap is None else cap
    if spec.size**n > cap:
        raise LevelTooLarge(spec.size**n, cap)
    return _cached_graph(spec, n, cap)


def chi(G: HataGraph) -> int:
    """Largest second-biggest component of ``G - v`` over cut vertices v."""
    best = 0
    for v in G.cut_vertices():
        sizes = G.removal_components(v)
        best = max(best, sizes[1])
    return best


def has_long_tail(spec: GscSpec, n: int, strict: bool = False, cap: int | None = None) -> bool:
    """``χ(Γ_n) >= |D|^(n-1) - 1``; with ``strict`` the threshold is ``|D|^(n-1)``."""
    if n < 2:
        raise ValueError("long tails are defined for n >= 2")
    threshold = spec.size ** (n - 1) - (0 if strict else 1)
    return chi(build_hata(spec, n, cap)) >= threshold


def essential_cut_vertices(spec: GscSpec, n: int, cap: int | None = None) -> list[CutVertexReport]:
    """All cut vertices of ``Γ_n`` with the essential flag, in word order."""
    return build_hata(spec, n, cap).cut_vertex_reports()


# -- text export -------------------------------------------------------------


def vertex_name(w: Word) -> str:
    return "|".join(f"{a},{b}" for a, b in w)


def export_graph_text(G: HataGraph) -> str:
    """DOT description with vertices in word order and sorted edges."""
    lines = [f'graph "hata_{G.level}" {{']
    lines.append(f'  // N={G.spec.n_base} |D|={G.spec.size} level={G.level}')
    for v in range(G.order):
        lines.append(f'  "{vertex_name(G.word(v))}";')
    for u, v in G.edges.tolist():
        lines.append(f'  "{vertex_name(G.word(u))}" -- "{vertex_name(G.word(v))}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_edge_list(G: HataGraph) -> str:
    return "".join(f"{vertex_name(G.word(u))} {vertex_name(G.word(v))}\n" for u, v in G.edges.tolist())


def parse_graph_text(text: str) -> tuple[list[str], list[tuple[str, str]]]:
    """Read back the vertices and edges of :func:`export_graph_text` output."""
    nodes, edges = [], []
    for line in text.splitlines():
        line = line.strip()
        if not line.startswith('"'):
            continue
        parts = [p for p in line.rstrip(";").split('"') if p.strip()]
        if len(parts) == 1:
            nodes.append(parts[0])
        else:
            edges.append((parts[0], parts[2]))
    return nodes, edges
