"""Divisor data of an affine toric variety given by a strongly convex cone.

Each extremal ray ``n_rho`` of the cone gives a prime invariant divisor
``D_rho``; a character ``m`` has divisor ``sum <m, n_rho> D_rho``, and the
class group is the cokernel of ``m -> (<m, n_rho>)_rho``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Sequence

from .cone import RayCone, extremal_rays, is_strongly_convex
from .exact import (
    FgAbelianGroup, IntMatrix, IntVector, cokernel, dot, primitive, rank, snf,
    solve_integer,
)


@dataclass(frozen=True)
class TDivisor:
    """``sum a_rho D_rho`` with coefficients listed in ray order."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(a) for a in self.coefficients))

    def __len__(self):
        return len(self.coefficients)

    def __add__(self, other: "TDivisor") -> "TDivisor":
        return TDivisor(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: "TDivisor") -> "TDivisor":
        return TDivisor(tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __le__(self, other: "TDivisor") -> bool:
        return all(a <= b for a, b in zip(self.coefficients, other.coefficients))


@dataclass(frozen=True)
class AffineToricData:
    """Toric data of a strongly convex cone.

    ``rays`` defaults to the extremal rays in canonical (lexicographic) order.
    A caller may pass its own ordering of exactly those rays, e.g. to match
    the ``rho_1, ..., rho_4`` labelling of a construction.
    """

    cone: RayCone
    rays: tuple[IntVector, ...] = None

    def __post_init__(self):
        if not is_strongly_convex(self.cone):
            raise ValueError("affine toric data needs a strongly convex cone")
        ext = extremal_rays(self.cone)
        object.__setattr__(self, "cone", ext)
        if self.rays is None:
            object.__setattr__(self, "rays", ext.rays)
            return
        given = tuple(primitive(r) for r in self.rays)
        if sorted(given) != list(ext.rays):
            raise ValueError("ray order must list exactly the extremal rays of the cone")
        object.__setattr__(self, "rays", given)

    @property
    def ambient_dim(self) -> int:
        return self.cone.ambient_dim

    @property
    def pairing_matrix(self) -> IntMatrix:
        """Row ``rho`` is ``n_rho``; as a map ``M -> Z^rays`` it sends ``m`` to its divisor."""
        return IntMatrix(len(self.rays), self.ambient_dim, self.rays)

    @cached_property
    def _snf(self):
        return snf(self.pairing_matrix)

    @property
    def class_group(self) -> FgAbelianGroup:
        return class_group(self)

    @property
    def degree_map(self) -> list[IntVector]:
        return degree_map(self)

    def divisor(self, coefficients: Sequence[int]) -> TDivisor:
        d = TDivisor(tuple(coefficients))
        if len(d) != len(self.rays):
            raise ValueError(f"expected {len(self.rays)} coefficients, got {len(d)}")
        return d

    def prime_divisor(self, i: int) -> TDivisor:
        return TDivisor(tuple(int(j == i) for j in range(len(self.rays))))


def principal_divisor(t: AffineToricData, m: Sequence[int]) -> TDivisor:
    if len(m) != t.ambient_dim:
        raise ValueError(f"character has length {len(m)}, lattice has rank {t.ambient_dim}")
    return TDivisor(tuple(dot(m, r) for r in t.rays))


def _require_spanning(t: AffineToricData):
    if not t.rays or rank(t.rays) < t.ambient_dim:
        raise ValueError("rays do not span the ambient space; the class group would pick up "
                         "spurious free rank from the torus factor")


def class_group(t: AffineToricData) -> FgAbelianGroup:
    _require_spanning(t)
    return cokernel(t.pairing_matrix)


def degree_map(t: AffineToricData) -> list[IntVector]:
    """Class of each ``D_rho`` in SNF coordinates: free coordinates first, then
    torsion coordinates reduced modulo their invariant factors.

    Signs follow the Smith transform; the group is only fixed up to
    isomorphism, so this is a convention.
    """
    _require_spanning(t)
    res = t._snf
    diag = res.diag.diagonal()
    k = len(t.rays)
    rk = res.rank
    free_idx = list(range(rk, k))
    tors_idx = [i for i in range(rk) if diag[i] > 1]
    out = []
    for rho in range(k):
        col = res.u_left.column(rho)
        out.append(tuple(col[i] for i in free_idx) + tuple(col[i] % diag[i] for i in tors_idx))
    return out


def divisor_class(t: AffineToricData, d: TDivisor) -> IntVector:
    """Class of ``d`` in the same coordinates as :func:`degree_map`."""
    res = t._snf
    diag = res.diag.diagonal()
    y = res.u_left @ d.coefficients
    rk = res.rank
    return (tuple(y[i] for i in range(rk, len(y)))
            + tuple(y[i] % diag[i] for i in range(rk) if diag[i] > 1))


def linearly_equivalent(t: AffineToricData, d1: TDivisor, d2: TDivisor) -> bool:
    """True iff ``d1 - d2`` is the divisor of a character."""
    diff = d1 - d2
    if len(diff) != len(t.rays):
        raise ValueError("divisor length does not match the ray count")
    return solve_integer(t.pairing_matrix, diff.coefficients) is not None


def pd_points(t: AffineToricData, d: TDivisor, box_bound: int) -> list[IntVector]:
    """Characters ``m`` with ``|m|_inf <= box_bound`` and ``<m, n_rho> >= -a_rho`` for all rho."""
    if box_bound < 0:
        raise ValueError("box bound must be nonnegative")
    if len(d) != len(t.rays):
        raise ValueError("divisor length does not match the ray count")
    rng = range(-box_bound, box_bound + 1)
    return [m for m in product(rng, repeat=t.ambient_dim)
            if all(dot(m, r) >= -a for r, a in zip(t.rays, d.coefficients))]
