"""Named carpets.

``oddcuts:m`` (N = 2m) is built from column pairs ``Λ_k``: rows below m in
column k and rows from m up in column k+1, staircasing left to right, plus
the two half columns at the edges.  ``evencuts:m`` adds the upper half of
column 2m-2.  Both families are expanded twice, once from the set formulas
and once column by column, and the two expansions must agree.
"""

from __future__ import annotations

from .core import Digit, GscSpec, validate_spec
from .errors import BadParameter, UnknownPreset

_FIXED = {
    "sierpinski": (3, [(a, b) for b in range(3) for a in range(3) if (a, b) != (1, 1)]),
    "goodcp": (3, [(a, b) for b in range(3) for a in range(3) if (a, b) not in {(1, 1), (1, 2)}]),
    "countable": (3, [(0, 1), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)]),
    "segment": (3, [(0, 0), (1, 0), (2, 0)]),
    "diag3": (3, [(0, 0), (1, 1), (2, 2)]),
}
_FAMILIES = ("oddcuts", "evencuts")


def _lam(k: int, m: int) -> set[Digit]:
    return {(k, i) for i in range(m)} | {(k + 1, i) for i in range(m, 2 * m)}


def family_by_sets(kind: str, m: int) -> set[Digit]:
    d = {(0, i) for i in range(m, 2 * m)} | {(2 * m - 1, i) for i in range(m)}
    for k in range(m):
        d |= _lam(2 * k, m)
    if kind == "evencuts":
        d |= {(2 * m - 2, i) for i in range(m, 2 * m)}
    return d


def family_by_columns(kind: str, m: int) -> set[Digit]:
    """Same sets, decided per cell: even columns carry the lower half, odd
    columns the upper half, the first and last columns both halves."""
    n = 2 * m
    out = set()
    for a in range(n):
        for b in range(n):
            lower = b < m
            keep = (a % 2 == 0) == lower or a in (0, n - 1)
            if kind == "evencuts" and a == n - 2 and not lower:
                keep = True
            if keep:
                out.add((a, b))
    return out


def _family(kind: str, arg: str) -> GscSpec:
    try:
        m = int(arg)
    except ValueError:
        raise BadParameter(f"{kind} needs an integer parameter, got {arg!r}") from None
    if m < 3:
        raise BadParameter(f"{kind}:m needs m >= 3, got {m}")
    digits = family_by_sets(kind, m)
    if digits != family_by_columns(kind, m):
        raise AssertionError(f"{kind}:{m} expansions disagree")
    return validate_spec(2 * m, digits, name=f"{kind}:{m}")


def resolve(name: str) -> GscSpec:
    name = name.strip()
    if name in _FIXED:
        n, digits = _FIXED[name]
        return validate_spec(n, digits, name=name)
    kind, _, arg = name.partition(":")
    if kind in _FAMILIES and arg:
        return _family(kind, arg)
    raise UnknownPreset(name)


def list_presets() -> list[str]:
    return list(_FIXED) + [f"{k}:m" for k in _FAMILIES]
