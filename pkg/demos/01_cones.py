"""Cones given by rays, their duals, and the facet description.

Run: python3 demos/01_cones.py
"""
from toricsl2 import RayCone, contains, dualize, edges_from_facets, extremal_rays, is_strongly_convex

# A redundant generating set collapses to its extremal rays.
c = RayCone(2, [(1, 0), (0, 1), (1, 1), (2, 3)])
print("extremal rays:", extremal_rays(c).rays)

# A pointed 3-dimensional cone with four rays and its dual.
sigma = RayCone(3, [(1, 0, 0), (0, 1, 0), (-1, 0, 2), (0, -1, 1)])
dual = dualize(sigma)
print("strongly convex:", is_strongly_convex(sigma))
print("dual rays:", dual.rays)

# The dual rays are the facet normals; intersecting facets recovers the edges.
print("edges from facets:", edges_from_facets(sigma.halfspaces()).rays)
print("double dual is the original:", extremal_rays(dualize(dual)) == extremal_rays(sigma))

for v in [(0, -1, 1), (0, -2, 1)]:
    print(f"{v} in sigma:", contains(sigma, v))

# A half-plane has a line in it; its dual is a single ray.
half = RayCone(2, [(1, 0), (-1, 0), (0, 1)])
print("half-plane lineality:", half.lineality(), "dual:", dualize(half).rays)
