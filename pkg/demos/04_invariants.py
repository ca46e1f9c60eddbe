"""Invariant monomials of diagonal torus and finite-group actions.

Run: python3 demos/04_invariants.py
"""
from toricsl2 import WeightData, invariant_generators, is_invariant, monomial_weight

# t acts on (x1, x2, y1, y2) with weights (2, 2, -3, -3).
w = WeightData(4, ((2, 2, -3, -3),))
gens = invariant_generators(w)
print(f"{len(gens)} generators, all of degree 3 in x and degree 2 in y:")
print("  ", gens.elements)

# Adding a Z_6 factor acting by x1 x2-degree mod 6 doubles the level.
w6 = WeightData(4, ((2, 2, -3, -3),), (((1, 1, 0, 0), 6),))
print("with Z_6:", len(invariant_generators(w6)), "generators")

print("weight of x1:", monomial_weight(w, (1, 0, 0, 0)))
print("x1^3 y2^2 invariant:", is_invariant(w, (3, 0, 0, 2)))

# Rescaling the torus row leaves the invariant ring alone.
print("rescaled rows agree:",
      invariant_generators(WeightData(4, ((4, 4, -6, -6),))) == gens)
