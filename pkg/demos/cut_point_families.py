"""
Counting cut points on a line
=============================

The ``oddcuts:m`` carpets (N = 2m) are staircases of half columns.  Their
cut points sit on the horizontal line y = 1/2; ``evencuts:m`` closes one
more gap and loses one cut point.
"""

# %%
from fractions import Fraction

from carpetcut import presets
from carpetcut.decider import addresses_of, decide_cut_points, is_cut_point
from carpetcut.render import render_svg

HALF = Fraction(1, 2)

# %%
for name in ("oddcuts:3", "evencuts:3", "oddcuts:4", "evencuts:4"):
    spec = presets.resolve(name)
    m = spec.n_base // 2
    xs = [Fraction(i, 2 * m) for i in range(2 * m + 1)]
    hits = [x for x in xs if is_cut_point(spec, (x, HALF))]
    print(f"{name:11s} |D|={spec.size:2d}  cut points at x =", ", ".join(map(str, hits)))

# %%
# Points on the line have up to two addresses; the test runs them together
spec = presets.resolve("oddcuts:3")
for a in addresses_of(spec, (Fraction(1, 3), HALF)):
    print(a, a.point(spec))

# %%
# Every carpet in the family is fragile, so the decider stops early
print(decide_cut_points(spec))

# %%
marks = [(Fraction(i, 6), HALF) for i in (2, 3, 4)]
svg = render_svg(spec, 2, marks)
print(len(svg), "bytes of SVG,", svg.count("<circle"), "marks")
