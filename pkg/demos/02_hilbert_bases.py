"""Hilbert bases of cone monoids and of diophantine solution monoids,
each checked against box enumeration.

Run: python3 demos/02_hilbert_bases.py
"""
from toricsl2 import (
    DiophantineSystem, RayCone, brute_force_basis, generates_up_to, hilbert_basis_of_cone,
    hilbert_basis_of_system,
)

c = RayCone(2, [(1, 0), (1, 4)])
hb = hilbert_basis_of_cone(c)
print("cone((1,0),(1,4)):", hb.elements)
print("  oracle agrees:", brute_force_basis(c, 12) == hb)

# Singular cones need points strictly inside the fundamental parallelepiped.
c = RayCone(2, [(2, -1), (-1, 3)])
hb = hilbert_basis_of_cone(c)
print("cone((2,-1),(-1,3)):", hb.elements)
print("  generates every lattice point up to norm 8:", generates_up_to(hb, c, 8))

# x1 + x2 = 2 (x3 + x4), with x1 + x2 divisible by 4.
s = DiophantineSystem(4, ((1, 1, -2, -2),), (((1, 1, 0, 0), 4),))
hb = hilbert_basis_of_system(s)
print(f"system basis ({len(hb)} elements):")
for e in hb:
    print("  ", e)
print("  oracle agrees:", brute_force_basis(s, 10) == hb)

# Same answer through the completion route for a cone.
c = RayCone(3, [(0, 0, 1), (2, 0, 1), (0, 1, 1), (2, 1, 1)])
print("parallelepiped == completion:",
      hilbert_basis_of_cone(c) == hilbert_basis_of_cone(c, method="completion"))
