"""Intersections of one-dimensional digit sets.

For ``A`` a subset of ``{0, ..., N-1}`` let ``C_A = {sum_k a_k N^-k : a_k in A}``.
Two cells that share an edge meet exactly along a copy of ``C_A ∩ C_B`` where
``A`` and ``B`` are the digit sets F leaves on the facing sides, so the
Empty / Singleton / Multiple trichotomy of ``C_A ∩ C_B`` drives every edge
contact in the carpet.

The decision procedure is a carry automaton.  Reading digit pairs
``(a_k, b_k)`` we keep the integer ``s_k = sum_{j<=k} (a_j - b_j) N^(k-j)``.
The two values agree iff ``s_k + N^k * tail_k = 0`` for every k, where
``tail_k = sum_{j>k} (a_j - b_j) N^-j``.  Since ``|a_j - b_j| <= N-1``,

    |N^k tail_k| <= (N-1) * sum_{i>=1} N^-i = 1,

so a common value forces ``s_k`` into ``{-1, 0, 1}`` at every step, and
conversely an infinite run inside ``{-1, 0, 1}`` gives ``|x - y| <= N^-k``
for all k.  Equality at ``|s_k| = 1`` needs the extreme tail, which is why
state +1 only continues with ``a - b = -(N-1)``.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Sequence

from .errors import BadBase, EmptyDigitSet, NotSingleton


class Cardinality(enum.IntEnum):
    """Size class of an intersection; ordered so that monotonicity reads
    naturally (Empty < Singleton < Multiple)."""

    EMPTY = 0
    SINGLETON = 1
    MULTIPLE = 2

    def __str__(self) -> str:
        return self.name.capitalize()


@dataclass(frozen=True)
class CarryAutomaton:
    n_base: int
    a_digits: frozenset[int]
    b_digits: frozenset[int]
    bound: int
    # state -> sorted ((a, b), next_state) moves, restricted to survivors
    moves: dict

    @property
    def survivors(self) -> frozenset[int]:
        return frozenset(self.moves)

    @property
    def nonempty(self) -> bool:
        return 0 in self.moves


def _check(a_digits, b_digits, n_base) -> tuple[frozenset[int], frozenset[int]]:
    if n_base < 2:
        raise BadBase(f"base must be >= 2, got {n_base}")
    A, B = frozenset(a_digits), frozenset(b_digits)
    if not A or not B:
        raise EmptyDigitSet("digit sets must be non-empty")
    for d in A | B:
        if not 0 <= d < n_base:
            raise EmptyDigitSet(f"digit {d} outside [0, {n_base - 1}]")
    return A, B


@lru_cache(maxsize=4096)
def _automaton(A: frozenset[int], B: frozenset[int], n_base: int, bound: int) -> CarryAutomaton:
    states = range(-bound, bound + 1)
    moves = {
        s: sorted(
            ((a, b), n_base * s + a - b)
            for a in A
            for b in B
            if abs(n_base * s + a - b) <= bound
        )
        for s in states
    }
    # drop states without an infinite continuation until nothing changes
    alive = set(states)
    while True:
        keep = {s for s in alive if any(t in alive for _, t in moves[s])}
        if keep == alive:
            break
        alive = keep
    pruned = {s: [(ab, t) for ab, t in moves[s] if t in alive] for s in sorted(alive)}
    return CarryAutomaton(n_base, A, B, bound, pruned)


def carry_automaton(a_digits: Iterable[int], b_digits: Iterable[int], n_base: int, bound: int = 1) -> CarryAutomaton:
    A, B = _check(a_digits, b_digits, n_base)
    return _automaton(A, B, n_base, bound)


def _diverges(aut: CarryAutomaton) -> bool:
    """Search pairs of accepting runs for two different A-values.

    ``d`` is ``N^k`` times the difference of the A-prefixes.  The tails differ
    by at most ``N^-k``, so ``|d| >= 2`` certifies distinct values and then
    stays ``>= 2``; bounded ``d`` forever means the values coincide.
    """
    n = aut.n_base
    start = (0, 0, 0)
    seen = {start}
    queue = deque([start])
    while queue:
        s, t, d = queue.popleft()
        for (a, _), s2 in aut.moves[s]:
            for (a2, _), t2 in aut.moves[t]:
                d2 = max(-2, min(2, n * d + a - a2))
                if abs(d2) == 2:
                    return True
                nxt = (s2, t2, d2)
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return False


def intersect_class(a_digits: Iterable[int], b_digits: Iterable[int], n_base: int, bound: int = 1) -> Cardinality:
    """Classify ``C_A ∩ C_B``.

    ``bound`` widens the carry range; any value >= 1 gives the same answer
    (states beyond 1 are pruned as dead) and exists for testing that claim.
    """
    aut = carry_automaton(a_digits, b_digits, n_base, bound)
    if not aut.nonempty:
        return Cardinality.EMPTY
    return Cardinality.MULTIPLE if _diverges(aut) else Cardinality.SINGLETON


def periodic_value(preperiod: Sequence[int], period: Sequence[int], n_base: int) -> Fraction:
    """Exact value of ``0.preperiod (period)^inf`` in base N."""
    value = Fraction(0)
    for d in preperiod:
        value = value * n_base + d
    head = value / n_base ** len(preperiod)
    if not period:
        return head
    cycle = 0
    for d in period:
        cycle = cycle * n_base + d
    tail = Fraction(cycle, n_base ** len(period) - 1)
    return head + tail / n_base ** len(preperiod)


def singleton_value(a_digits: Iterable[int], b_digits: Iterable[int], n_base: int) -> Fraction:
    """The unique common value of ``C_A`` and ``C_B``.

    Follows the least surviving move from carry 0; the state determines the
    move, so the digit stream is eventually periodic with period <= 3.
    """
    A, B = _check(a_digits, b_digits, n_base)
    if intersect_class(A, B, n_base) is not Cardinality.SINGLETON:
        raise NotSingleton(f"C_{sorted(A)} ∩ C_{sorted(B)} is not a singleton")
    aut = _automaton(A, B, n_base, 1)
    state, digits, first_seen = 0, [], {}
    while state not in first_seen:
        first_seen[state] = len(digits)
        (a, _), state = aut.moves[state][0]
        digits.append(a)
    start = first_seen[state]
    return periodic_value(digits[:start], digits[start:], n_base)


# -- base-N expansions of rationals -----------------------------------------


def canonical_expansion(preperiod: Sequence, period: Sequence) -> tuple[tuple, tuple]:
    """Shortest (preperiod, primitive period) coding the same infinite word."""
    pre, per = tuple(preperiod), tuple(period)
    for k in range(1, len(per) + 1):
        if len(per) % k == 0 and per[:k] * (len(per) // k) == per:
            per = per[:k]
            break
    while pre and pre[-1] == per[-1]:
        pre = pre[:-1]
        per = (per[-1],) + per[:-1]
    return pre, per


def expansions(x: Fraction, n_base: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All base-N expansions of ``x`` in [0, 1] as (preperiod, period).

    N-adic rationals strictly inside (0, 1) have two; everything else one.
    """
    x = Fraction(x)
    if not 0 <= x <= 1:
        return []
    if x == 1:
        return [((), (n_base - 1,))]
    digits, seen, r = [], {}, x
    while r not in seen:
        seen[r] = len(digits)
        r *= n_base
        d = r.numerator // r.denominator
        digits.append(d)
        r -= d
    start = seen[r]
    out = [canonical_expansion(digits[:start], digits[start:])]
    pre, per = out[0]
    if per == (0,) and pre:
        out.append(canonical_expansion(pre[:-1] + (pre[-1] - 1,), (n_base - 1,)))
    return out


def unroll(preperiod: Sequence, period: Sequence, length: int) -> list:
    out = list(preperiod[:length])
    k = 0
    while len(out) < length:
        out.append(period[k % len(period)])
        k += 1
    return out


def zip_expansions(xs: tuple[Sequence, Sequence], ys: tuple[Sequence, Sequence]) -> tuple[tuple, tuple]:
    """Pair two eventually periodic digit streams letter by letter."""
    pre_len = max(len(xs[0]), len(ys[0]))
    per_len = lcm(len(xs[1]), len(ys[1]))
    xd = unroll(xs[0], xs[1], pre_len + per_len)
    yd = unroll(ys[0], ys[1], pre_len + per_len)
    letters = list(zip(xd, yd))
    return canonical_expansion(letters[:pre_len], letters[pre_len:])
