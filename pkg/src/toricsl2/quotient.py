"""Invariant monomials of a diagonal quasitorus action on affine space.

A quasitorus ``T x Z_k1 x ... `` acting diagonally on ``K^n`` is recorded by
its weight rows: torus rows ``w`` (a monomial ``x^e`` is invariant iff
``<w, e> = 0``) and finite rows ``(w, k)`` (invariance iff ``<w, e> = 0 mod k``).
The invariant algebra is the monoid algebra of the nonnegative solutions,
so its monomial generators are a Hilbert basis.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exact import IntVector, dot
from .semigroup import DiophantineSystem, HilbertBasis, hilbert_basis_of_system


@dataclass(frozen=True)
class WeightData:
    num_vars: int
    torus_rows: tuple[IntVector, ...] = ()
    finite_rows: tuple[tuple[IntVector, int], ...] = ()

    def __post_init__(self):
        # reuse the system's validation of lengths and moduli
        s = self.as_system()
        object.__setattr__(self, "torus_rows", s.equality_rows)
        object.__setattr__(self, "finite_rows", s.congruence_rows)

    def as_system(self) -> DiophantineSystem:
        return DiophantineSystem(self.num_vars, tuple(self.torus_rows), tuple(self.finite_rows))

    def to_dict(self) -> dict:
        return {
            "vars": self.num_vars,
            "torus": [list(r) for r in self.torus_rows],
            "finite": [{"row": list(r), "mod": k} for r, k in self.finite_rows],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "WeightData":
        return cls(
            int(d["vars"]),
            tuple(tuple(r) for r in d.get("torus", ())),
            tuple((tuple(c["row"]), int(c["mod"])) for c in d.get("finite", ())),
        )


def invariant_generators(w: WeightData) -> HilbertBasis:
    """Exponent vectors of the minimal generating invariant monomials."""
    return hilbert_basis_of_system(w.as_system())


def monomial_weight(w: WeightData, e: Sequence[int]) -> tuple[list[int], list[int]]:
    """Character of ``x^e``: torus pairings and residues of the finite rows.

    ``x^e`` is invariant iff both lists are all zero.
    """
    if len(e) != w.num_vars:
        raise ValueError(f"exponent has length {len(e)}, expected {w.num_vars}")
    if any(x < 0 for x in e):
        raise ValueError("exponents must be nonnegative")
    return ([dot(r, e) for r in w.torus_rows], [dot(r, e) % k for r, k in w.finite_rows])


def is_invariant(w: WeightData, e: Sequence[int]) -> bool:
    torus, finite = monomial_weight(w, e)
    return not any(torus) and not any(finite)
