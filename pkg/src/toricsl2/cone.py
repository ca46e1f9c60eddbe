"""Rational polyhedral cones in generator (V) and inequality (H) form.

A :class:`RayCone` is the cone generated by its rays; a :class:`HalfspaceCone`
is the intersection of the halfspaces ``<w, x> >= 0`` over its normals.  Both
store primitive vectors, sorted and duplicate-free, so ``==`` is structural.
A lineality direction ``w`` is stored as the pair ``w, -w``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .exact import (
    IntVector, dot, is_zero, nullspace, primitive, project_orthogonal, rank, span_basis,
)


def _canonical(dim: int, vectors: Iterable[Sequence[int]]) -> tuple[IntVector, ...]:
    out = set()
    for v in vectors:
        v = tuple(int(x) for x in v)
        if len(v) != dim:
            raise ValueError(f"vector {v} does not have dimension {dim}")
        if not is_zero(v):
            out.add(primitive(v))
    return tuple(sorted(out))


def double_description(constraints: Sequence[Sequence[int]], dim: int
                       ) -> tuple[list[IntVector], list[IntVector]]:
    """Generators of ``{x in Q^dim : <a, x> >= 0 for all a in constraints}``.

    Incremental double description starting from the whole space.  Returns
    ``(lineality, rays)``: a basis of the lineality space and one primitive
    ray per minimal proper face.  Rays are not normalized modulo lineality.
    """
    lin: list[IntVector] = [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    rays: list[IntVector] = []
    seen: list[IntVector] = []
    for a in constraints:
        a = tuple(a)
        if is_zero(a):
            continue
        vals = [dot(a, l) for l in lin]
        k = next((i for i, x in enumerate(vals) if x != 0), None)
        if k is not None:
            # a cuts the lineality space: one direction becomes a ray
            l0 = lin[k] if vals[k] > 0 else tuple(-x for x in lin[k])
            s0 = abs(vals[k])
            lin = [primitive(tuple(s0 * x - dot(a, l) * y for x, y in zip(l, l0)))
                   for i, l in enumerate(lin) if i != k]
            lin = [l for l in lin if not is_zero(l)]
            rays = [_nz_primitive(tuple(s0 * x - dot(a, r) * y for x, y in zip(r, l0)))
                    for r in rays]
            rays.append(primitive(l0))
            seen.append(a)
            continue
        pos, zero, neg = [], [], []
        for r in rays:
            s = dot(a, r)
            (pos if s > 0 else neg if s < 0 else zero).append((r, s))
        need = dim - len(lin) - 2
        tight = {r: frozenset(i for i, c in enumerate(seen) if dot(c, r) == 0) for r in rays}
        new = [r for r, _ in pos] + [r for r, _ in zero]
        for p, sp in pos:
            for n, sn in neg:
                common = tight[p] & tight[n]
                if need > 0 and (len(common) < need or rank([seen[i] for i in common]) < need):
                    continue
                new.append(primitive(tuple(sp * x - sn * y for x, y in zip(n, p))))
        rays = list(dict.fromkeys(new))
        seen.append(a)
    return lin, rays


def _nz_primitive(v: IntVector) -> IntVector:
    if is_zero(v):
        raise AssertionError("ray collapsed into the lineality space")
    return primitive(v)


def _canonical_generators(dim: int, lin: Sequence[IntVector], rays: Iterable[IntVector]
                          ) -> tuple[IntVector, ...]:
    """Rays normalized modulo a canonical lineality basis, plus ``+-`` that basis."""
    basis = span_basis(lin) if lin else []
    out = []
    for b in basis:
        out.append(b)
        out.append(tuple(-x for x in b))
    for r in rays:
        pr = project_orthogonal(r, basis)
        if not is_zero(pr):
            out.append(pr)
    return _canonical(dim, out)


@dataclass(frozen=True)
class RayCone:
    ambient_dim: int
    rays: tuple[IntVector, ...] = ()

    def __post_init__(self):
        if self.ambient_dim < 1:
            raise ValueError("ambient dimension must be positive")
        object.__setattr__(self, "rays", _canonical(self.ambient_dim, self.rays))

    @cached_property
    def _dual_dd(self):
        return double_description(self.rays, self.ambient_dim)

    def halfspaces(self) -> "HalfspaceCone":
        """Inequality description of this cone (its dual generators as normals)."""
        return HalfspaceCone(self.ambient_dim, dualize(self).rays)

    @cached_property
    def _normals(self) -> tuple[IntVector, ...]:
        lin, rays = self._dual_dd
        return tuple(lin) + tuple(tuple(-x for x in l) for l in lin) + tuple(rays)

    def lineality(self) -> list[IntVector]:
        """Canonical basis of the largest subspace contained in the cone."""
        basis = nullspace(self._normals, self.ambient_dim) if self._normals else [
            tuple(int(i == j) for j in range(self.ambient_dim)) for i in range(self.ambient_dim)]
        return span_basis(basis) if basis else []

    def dim(self) -> int:
        return rank(self.rays) if self.rays else 0

    def to_dict(self) -> dict:
        return {"dim": self.ambient_dim, "rays": [list(r) for r in self.rays]}

    @classmethod
    def from_dict(cls, d: dict) -> "RayCone":
        return cls(int(d["dim"]), tuple(tuple(int(x) for x in r) for r in d["rays"]))


@dataclass(frozen=True)
class HalfspaceCone:
    ambient_dim: int
    normals: tuple[IntVector, ...] = field(default=())

    def __post_init__(self):
        if self.ambient_dim < 1:
            raise ValueError("ambient dimension must be positive")
        object.__setattr__(self, "normals", _canonical(self.ambient_dim, self.normals))

    def to_ray_cone(self) -> RayCone:
        return dualize(RayCone(self.ambient_dim, self.normals))

    def satisfied_by(self, v: Sequence[int]) -> bool:
        if len(v) != self.ambient_dim:
            raise ValueError("dimension mismatch")
        return all(dot(w, v) >= 0 for w in self.normals)


def dualize(c: RayCone) -> RayCone:
    """The dual cone ``{m : <m, r> >= 0 for every ray r}``."""
    lin, rays = c._dual_dd
    return RayCone(c.ambient_dim, _canonical_generators(c.ambient_dim, lin, rays))


def contains(c: RayCone, v: Sequence[int]) -> bool:
    if len(v) != c.ambient_dim:
        raise ValueError(f"dimension mismatch: cone in Z^{c.ambient_dim}, vector of length {len(v)}")
    return all(dot(w, v) >= 0 for w in c._normals)


def is_strongly_convex(c: RayCone) -> bool:
    """True iff the cone contains no line."""
    return not c.lineality()


def extremal_rays(c: RayCone) -> RayCone:
    """Minimal generating set: extremal rays, plus ``+-`` a lineality basis if any.

    A candidate ray is dropped exactly when it lies in the cone generated by
    the remaining candidates.
    """
    lin = c.lineality()
    cand = [project_orthogonal(r, lin) for r in c.rays]
    cand = list(dict.fromkeys(primitive(r) for r in cand if not is_zero(r)))
    lin_gens: list[IntVector] = []
    for b in lin:
        lin_gens += [b, tuple(-x for x in b)]
    kept = list(cand)
    for r in cand:
        others = [x for x in kept if x != r]
        if contains(RayCone(c.ambient_dim, others + lin_gens), r):
            kept = others
    return RayCone(c.ambient_dim, kept + lin_gens)


def edges_from_facets(h: HalfspaceCone) -> RayCone:
    """Edges of a pointed cone by intersecting ``dim - 1`` bounding hyperplanes.

    Every choice of ``dim - 1`` normals of full rank cuts out a line; the
    directions on that line satisfying all the inequalities are edges.  This
    is an independent route to :func:`extremal_rays` for pointed cones.
    """
    d = h.ambient_dim
    if d == 1:
        return RayCone(1, [r for r in [(1,), (-1,)] if h.satisfied_by(r)])
    found = set()
    for choice in combinations(h.normals, d - 1):
        ns = nullspace(choice, d)
        if len(ns) != 1:
            continue
        x = ns[0]
        for cand in (x, tuple(-t for t in x)):
            if h.satisfied_by(cand):
                found.add(cand)
    return RayCone(d, found)
