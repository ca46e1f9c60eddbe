"""Class groups, Cox degrees and divisors of affine toric varieties.

Run: python3 demos/03_class_groups.py
"""
from toricsl2 import (
    AffineToricData, RayCone, TDivisor, class_group, degree_map, divisor_class,
    linearly_equivalent, pd_points, principal_divisor,
)
from toricsl2.exact import IntMatrix, cokernel, snf

a = IntMatrix.from_rows([[2, 4], [6, 8]])
res = snf(a)
print("SNF of [[2,4],[6,8]]:", res.diag.diagonal(), " cokernel:", cokernel(a))

rays = [(1, 0, 0), (0, 1, 0), (-1, 0, 4), (0, -1, 2)]
t = AffineToricData(RayCone(3, rays), rays)
print("class group:", class_group(t))
for r, deg in zip(t.rays, degree_map(t)):
    print(f"  deg D{r} = {deg}")

d = principal_divisor(t, (1, 0, 0))
print("div(chi^(1,0,0)) =", d.coefficients, " class:", divisor_class(t, d))
d1 = t.prime_divisor(0)
print("D1 principal?", linearly_equivalent(t, d1, TDivisor((0,) * 4)))
print("2 D2 - 2 D4 ~ 0?", linearly_equivalent(t, TDivisor((0, 2, 0, -2)), TDivisor((0,) * 4)))

# Global sections of O(D1) in a small window, at m3 = 0.
print("P_D1 points with m3 = 0:", [m for m in pd_points(t, d1, 3) if m[2] == 0])

# A simplicial cone with torsion only.
t = AffineToricData(RayCone(2, [(1, 0), (1, 3)]))
print("cone((1,0),(1,3)): Cl =", class_group(t))
