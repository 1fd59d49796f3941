"""
Where two digit systems meet
============================

Adjacent cells touch along a boundary whose shape is the intersection of
two one-dimensional Cantor sets C_A and C_B.  A three-state carry automaton
says whether that intersection is empty, a single point or more.
"""

# %%
from fractions import Fraction
from itertools import combinations

from carpetcut.radix import Cardinality, expansions, intersect_class, singleton_value

N = 3
subsets = [frozenset(c) for k in range(1, N + 1) for c in combinations(range(N), k)]

# %%
# The full 7 x 7 table for base 3
short = {Cardinality.EMPTY: ".", Cardinality.SINGLETON: "1", Cardinality.MULTIPLE: "#"}
for A in subsets:
    row = " ".join(short[intersect_class(A, B, N)] for B in subsets)
    print(f"{sorted(A)!s:10s} {row}")

# %%
# Singletons come with their exact value
for A in subsets:
    for B in subsets:
        if A <= B and intersect_class(A, B, N) is Cardinality.SINGLETON:
            print(sorted(A), sorted(B), singleton_value(A, B, N))

# %%
# Rationals with two expansions are where two cells can share a corner
print(expansions(Fraction(1, 3), 6))
