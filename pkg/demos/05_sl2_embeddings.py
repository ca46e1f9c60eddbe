"""Which quasihomogeneous SL(2)-embeddings are toric, and a full
cross-check of both constructions for a few of them.

Run: python3 demos/05_sl2_embeddings.py
"""
from math import gcd

from toricsl2 import (
    EmbeddingData, cl_group, embedding_cone, height, is_toric, phi_star, toricity, verify,
)
from toricsl2.sl2 import VExponent

print("toric cells with q <= 5, r <= 6:")
for q in range(2, 6):
    for p in range(1, q):
        if gcd(p, q) == 1:
            row = ["T" if is_toric(EmbeddingData(p, q, r)) else "." for r in range(1, 7)]
            print(f"  p/q = {p}/{q}: {' '.join(row)}")

print(toricity(EmbeddingData(1, 3, 3))[1])
print(toricity(EmbeddingData(1, 1, 4))[1])

e = EmbeddingData(1, 3, 4)
print(f"(1/3, 4): l = {e.l}, cone rays {embedding_cone(e).rays}, Cl = {cl_group(e)}")
cert = height(e)
print(f"height {cert.value}: witness {cert.witness.as_tuple()} -> {cert.image}")
print("phi*(x1 x2 y2) =", phi_star(VExponent(1, 1, 0, 1)))

for emb in [EmbeddingData(1, 2, 1), EmbeddingData(1, 2, 2), EmbeddingData(2, 3, 2)]:
    rep = verify(emb)
    print(f"verify {emb.p}/{emb.q}, r={emb.r}:",
          ", ".join(f"{c.name}={'ok' if c.passed else 'FAIL'}" for c in rep.checks))
