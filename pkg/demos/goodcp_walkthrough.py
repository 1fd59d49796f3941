"""
One cut point, found three ways
===============================

The carpet with N = 3 and the middle column's upper two cells removed has
exactly one cut point, (1/2, 0).  We look at it through the Hata graphs,
the window automaton and the repetition certificate.
"""

# %%
from fractions import Fraction

from carpetcut import presets
from carpetcut.core import format_word, parse_word
from carpetcut.decider import (
    decide_cut_points,
    essential_exists_at_depth,
    find_certificate,
    point_components,
    unique_cutpoint_candidates,
)
from carpetcut.hata import build_hata, chi
from carpetcut.window import run_word

spec = presets.resolve("goodcp")
print(spec, spec.digits)

# %%
# Second Hata graph: 49 vertices, five cut vertices, one of them essential
G = build_hata(spec, 2)
print(G.order, "vertices", G.edge_count, "edges, chi =", chi(G))
for report in G.cut_vertex_reports():
    print(" ", report)

# %%
# The window automaton reads a word letter by letter and knows whether
# the deleted cell still separates two first-level subtrees
for w in ["(1,0)", "(1,0)(1,0)", "(1,0)(1,0)(1,0)", "(0,0)(1,0)"]:
    print(w, "sep =", run_word(spec, parse_word(w)).sep)

# %%
# Essential cut vertices exist at every depth: preperiod and period bits
print(essential_exists_at_depth(spec))

# %%
verdict = decide_cut_points(spec)
print(verdict)
print(find_certificate(spec, verdict.omega))

# %%
# Only one fixed point of the first-level maps survives the point test
for c in unique_cutpoint_candidates(spec):
    print(format_word((c.digit,)), c.point, c.is_cut_point)

report = point_components(spec, (Fraction(1, 2), 0))
print("components of F minus (1/2, 0):", report.components)
