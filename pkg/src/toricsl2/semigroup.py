"""Hilbert bases of affine semigroups.

Two kinds of monoid are handled:

* solution monoids ``{e in Z_+^n : <w, e> = 0, <w', e> = 0 mod k}`` of a
  :class:`DiophantineSystem`;
* lattice points ``sigma cap Z^d`` of a strongly convex :class:`RayCone`.

Systems go through a Pottier-style completion, one row at a time.  Cone
monoids are reduced to their saturated span lattice and then read off from
the fundamental parallelepipeds of simplicial subcones, keeping the
irreducible points.  The completion route for cones (inequality matrix plus
Smith normal form) is still available through ``method="completion"``.
:func:`brute_force_basis` is an independent box enumeration used as an oracle.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, Sequence, Union

import numpy as np

from .cone import RayCone, contains, dualize, extremal_rays, is_strongly_convex
from .exact import (
    IntMatrix, IntVector, content, dot, rank, saturated_span_basis, snf, solve_integer,
)


@dataclass(frozen=True)
class DiophantineSystem:
    """Nonnegative solutions of equalities ``<w, e> = 0`` and congruences ``<w, e> = 0 mod k``."""

    num_vars: int
    equality_rows: tuple[IntVector, ...] = ()
    congruence_rows: tuple[tuple[IntVector, int], ...] = ()

    def __post_init__(self):
        if self.num_vars < 1:
            raise ValueError("a system needs at least one variable")
        eqs = tuple(tuple(int(x) for x in r) for r in self.equality_rows)
        cons = tuple((tuple(int(x) for x in r), int(k)) for r, k in self.congruence_rows)
        for r in eqs + tuple(r for r, _ in cons):
            if len(r) != self.num_vars:
                raise ValueError(f"row {r} does not have {self.num_vars} entries")
        for _, k in cons:
            if k < 2:
                raise ValueError(f"modulus {k} must be at least 2")
        object.__setattr__(self, "equality_rows", eqs)
        object.__setattr__(self, "congruence_rows", cons)

    def is_solution(self, e: Sequence[int]) -> bool:
        return (len(e) == self.num_vars and all(x >= 0 for x in e)
                and all(dot(r, e) == 0 for r in self.equality_rows)
                and all(dot(r, e) % k == 0 for r, k in self.congruence_rows))

    def to_dict(self) -> dict:
        return {
            "vars": self.num_vars,
            "equalities": [list(r) for r in self.equality_rows],
            "congruences": [{"row": list(r), "mod": k} for r, k in self.congruence_rows],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "DiophantineSystem":
        return cls(
            int(d["vars"]),
            tuple(tuple(r) for r in d.get("equalities", ())),
            tuple((tuple(c["row"]), int(c["mod"])) for c in d.get("congruences", ())),
        )


@dataclass(frozen=True)
class HilbertBasis:
    ambient_dim: int
    elements: tuple[IntVector, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted(set(tuple(e) for e in self.elements))))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[IntVector]:
        return iter(self.elements)

    def __contains__(self, e) -> bool:
        return tuple(e) in self.elements


Monoid = Union[DiophantineSystem, RayCone]


# --------------------------------------------------------------------------
# completion


def _conformal_le(u: IntVector, v: IntVector) -> bool:
    return all((a == 0) or (a * b > 0 and abs(a) <= abs(b)) for a, b in zip(u, v))


def pottier(rows: Sequence[Sequence[int]], n: int) -> list[IntVector]:
    """Hilbert basis of ``{x in Z_+^n : A x = 0}`` by completion, one row at a time.

    Start from the unit vectors (the basis of ``Z_+^n``).  For each row ``a``,
    lift the current basis ``H`` to vectors ``(h, <a, h>)`` and complete:
    a vector ``g`` reduces ``s`` when ``g`` is conformally below ``s`` (same
    signs, no larger absolute values), and pair sums are normalized until
    every pair sum reduces to zero.  Pairs with equal-sign last coordinates
    are skipped since ``f + g`` reduces by ``f`` then ``g``.  The members with
    last coordinate zero generate the new monoid.

    Reduction is sound at every stage because each intermediate monoid is
    closed under differences: ``y <= x`` in it implies ``x - y`` in it.
    """
    basis = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    for a in rows:
        a = tuple(a)
        if any(a):
            basis = _complete_row(basis, a)
    return basis


def _complete_row(basis: list[IntVector], a: IntVector) -> list[IntVector]:
    n = len(a)
    gens: list[IntVector] = [h + (dot(a, h),) for h in basis]
    queue: deque = deque()
    for i, f in enumerate(gens):
        for g in gens[i + 1:]:
            if f[n] * g[n] < 0:
                queue.append(tuple(x + y for x, y in zip(f, g)))
    while queue:
        s = _normal_form(queue.popleft(), gens)
        if s is not None:
            for g in gens:
                if s[n] * g[n] < 0:
                    queue.append(tuple(x + y for x, y in zip(s, g)))
            gens.append(s)
    sols = list(dict.fromkeys(g[:n] for g in gens if g[n] == 0))
    return [s for s in sols if not any(t != s and all(x <= y for x, y in zip(t, s)) for t in sols)]


def _normal_form(s: IntVector, gens: list[IntVector]):
    while True:
        if all(x == 0 for x in s):
            return None
        for g in gens:
            if _conformal_le(g, s):
                s = tuple(a - b for a, b in zip(s, g))
                break
        else:
            return s


def _lift_congruences(system: DiophantineSystem) -> tuple[list[IntVector], int]:
    """Equality rows over ``num_vars + #congruences`` nonnegative variables.

    A congruence ``<w, e> = 0 mod k`` becomes ``<w mod k, e> - k s = 0`` with
    one slack ``s >= 0``; reducing ``w`` mod ``k`` makes the left pairing
    nonnegative, so the slack is determined by ``e``.
    """
    n, c = system.num_vars, len(system.congruence_rows)
    rows = []
    for r in system.equality_rows:
        g = content(r)
        if g:
            rows.append(tuple(x // g for x in r) + (0,) * c)
    for j, (r, k) in enumerate(system.congruence_rows):
        red = tuple(x % k for x in r)
        rows.append(red + tuple(-k if i == j else 0 for i in range(c)))
    return rows, n + c


def hilbert_basis_of_system(system: DiophantineSystem) -> HilbertBasis:
    rows, total = _lift_congruences(system)
    basis = pottier(rows, total)
    return HilbertBasis(system.num_vars, [b[:system.num_vars] for b in basis])


def _span_coordinates(c: RayCone) -> tuple[IntMatrix, RayCone]:
    """Lattice basis ``B`` of ``span(c) cap Z^d`` and the cone in ``B``-coordinates.

    The cone is full-dimensional in the new coordinates.
    """
    ext = extremal_rays(c).rays
    basis = saturated_span_basis(ext, c.ambient_dim)
    coords = []
    for r in ext:
        y = solve_integer(basis, r)
        if y is None:
            raise AssertionError("ray outside its own saturated span")
        coords.append(y)
    return basis, RayCone(basis.cols, coords)


def _parallelepiped_points(gens: Sequence[IntVector]) -> list[IntVector]:
    """Nonzero lattice points of ``{sum t_i g_i : 0 <= t_i < 1}`` for linearly independent ``gens``.

    One point per element of ``Z^r / G Z^r``, read off the Smith form of ``G``.
    """
    g = IntMatrix.from_columns(gens)
    res = snf(g)
    diag = res.diag.diagonal()
    v = res.v_right
    pts = []
    for y in product(*(range(d) for d in diag)):
        lam = [sum(Fraction(v[i, j] * y[j], diag[j]) for j in range(len(diag)))
               for i in range(len(diag))]
        frac = [t - (t.numerator // t.denominator) for t in lam]
        p = tuple(int(sum(frac[j] * gens[j][i] for j in range(len(gens))))
                  for i in range(len(gens)))
        if any(p):
            pts.append(p)
    return pts


def _irreducible(candidates: Sequence[IntVector], normals: Sequence[IntVector]) -> list[IntVector]:
    """Members of a generating candidate set that are not ``h + (nonzero element)`` for another candidate."""
    if not candidates:
        return []
    pts = np.array(candidates, dtype=object if _too_big(candidates, normals) else np.int64)
    w = np.array(normals, dtype=pts.dtype)
    coords = pts @ w.T
    deg = coords.sum(axis=1)
    keep = []
    for i in range(len(pts)):
        lower = deg < deg[i]
        if lower.any() and np.any(np.all(coords[i] - coords[lower] >= 0, axis=1)):
            continue
        keep.append(candidates[i])
    return keep


def _too_big(pts, normals) -> bool:
    m = max((abs(x) for p in pts for x in p), default=0)
    w = max((abs(x) for n in normals for x in n), default=0)
    return m * w * max(len(normals), 1) * 4 >= 2 ** 62


def hilbert_basis_of_cone(c: RayCone, method: str = "parallelepiped") -> HilbertBasis:
    """Minimal generating set of the lattice points of a strongly convex cone.

    ``method="parallelepiped"`` collects the lattice points of the fundamental
    parallelepipeds of all simplicial subcones spanned by extremal rays (every
    irreducible element lies in one of them) and keeps the irreducible ones.
    ``method="completion"`` rewrites the monoid as a diophantine system (slack
    variables ``s = W m`` in the image lattice of the inequality matrix) and
    runs :func:`pottier`; it is exact but slow once the lattice index is large.
    """
    if not is_strongly_convex(c):
        raise ValueError("cone contains a line; its monoid has no unique minimal generating set")
    if not c.rays:
        return HilbertBasis(c.ambient_dim)
    basis, inner = _span_coordinates(c)
    if method == "parallelepiped":
        r = inner.ambient_dim
        cands = set(inner.rays)
        for sub in combinations(inner.rays, r):
            if rank(sub) == r:
                cands.update(_parallelepiped_points(sub))
        normals = dualize(inner).rays
        found = _irreducible(sorted(cands), normals)
    elif method == "completion":
        found = list(_completion_cone_basis(inner))
    else:
        raise ValueError(f"unknown method {method!r}")
    return HilbertBasis(c.ambient_dim, [basis @ y for y in found])


def _completion_cone_basis(c: RayCone) -> list[IntVector]:
    # c is full-dimensional and pointed, so W (rows = facet normals) is injective
    normals = dualize(c).rays
    d, k = c.ambient_dim, len(normals)
    res = snf(IntMatrix(k, d, normals))
    diag = res.diag.diagonal()
    u = res.u_left.data
    system = DiophantineSystem(
        k, tuple(u[i] for i in range(d, k)),
        tuple((u[i], diag[i]) for i in range(d) if diag[i] > 1))
    out = []
    for s in hilbert_basis_of_system(system):
        y = res.u_left @ s
        out.append(res.v_right @ [y[i] // diag[i] for i in range(d)])
    return out


# --------------------------------------------------------------------------
# box oracle


def default_bound(obj: Monoid) -> int:
    """``4 * d * max|entry|`` over the rays of a cone or the rows of a system."""
    if isinstance(obj, RayCone):
        entries = [abs(x) for r in obj.rays for x in r]
        d = obj.ambient_dim
    else:
        entries = [abs(x) for r in obj.equality_rows for x in r]
        entries += [abs(x) for r, _ in obj.congruence_rows for x in r]
        d = obj.num_vars
    return 4 * d * max(entries + [1])


def _box_solutions(obj: Monoid, bound: int) -> np.ndarray:
    """All monoid elements with sup-norm at most ``bound`` (rows of an int64 array)."""
    if isinstance(obj, RayCone):
        d, lo = obj.ambient_dim, -bound
    else:
        d, lo = obj.num_vars, 0
    axes = np.arange(lo, bound + 1, dtype=np.int64)
    chunks = []
    # chunk over the first coordinate to keep memory flat
    rest = np.stack(np.meshgrid(*([axes] * (d - 1)), indexing="ij"), -1).reshape(-1, d - 1) \
        if d > 1 else np.zeros((1, 0), dtype=np.int64)
    for x0 in axes:
        pts = np.hstack([np.full((len(rest), 1), x0, dtype=np.int64), rest])
        chunks.append(pts[_membership_mask(obj, pts)])
    return np.vstack(chunks) if chunks else np.zeros((0, d), dtype=np.int64)


def _membership_mask(obj: Monoid, pts: np.ndarray) -> np.ndarray:
    if isinstance(obj, RayCone):
        normals = np.array(dualize(obj).rays, dtype=np.int64).reshape(-1, obj.ambient_dim)
        return np.all(pts @ normals.T >= 0, axis=1)
    mask = np.all(pts >= 0, axis=1)
    for r in obj.equality_rows:
        mask &= pts @ np.array(r, dtype=np.int64) == 0
    for r, k in obj.congruence_rows:
        mask &= (pts @ np.array(r, dtype=np.int64)) % k == 0
    return mask


def _grading(obj: Monoid) -> np.ndarray:
    """Integer functional positive on every nonzero monoid element."""
    if isinstance(obj, RayCone):
        normals = np.array(dualize(obj).rays, dtype=np.int64).reshape(-1, obj.ambient_dim)
        return normals.sum(axis=0)
    return np.ones(obj.num_vars, dtype=np.int64)


def brute_force_basis(obj: Monoid, bound: int | None = None) -> HilbertBasis:
    """Irreducible monoid elements inside the box ``|x|_inf <= bound``.

    Points are processed by increasing degree; a point is reducible iff
    subtracting some already-found irreducible leaves a nonzero monoid
    element.  The result is the true Hilbert basis whenever that basis fits
    inside the box.
    """
    if bound is None:
        bound = default_bound(obj)
    if bound < 1:
        raise ValueError("bound must be at least 1")
    if isinstance(obj, RayCone) and not is_strongly_convex(obj):
        raise ValueError("cone contains a line; its monoid has no unique minimal generating set")
    dim = obj.ambient_dim if isinstance(obj, RayCone) else obj.num_vars
    pts = _box_solutions(obj, bound)
    deg = pts @ _grading(obj)
    keep = deg > 0
    pts, deg = pts[keep], deg[keep]
    order = np.argsort(deg, kind="stable")
    pts, deg = pts[order], deg[order]
    if isinstance(obj, RayCone):
        normals = np.array(dualize(obj).rays, dtype=np.int64).reshape(-1, dim)
        coords = pts @ normals.T   # monoid membership of x - h is coords(x) >= coords(h)
    else:
        coords = pts
    irreducible = np.zeros((0, coords.shape[1]), dtype=np.int64)
    found = []
    starts = np.flatnonzero(np.r_[True, deg[1:] != deg[:-1]]) if len(deg) else []
    ends = list(starts[1:]) + [len(deg)]
    for a, b in zip(starts, ends):
        level = coords[a:b]
        if len(irreducible):
            reducible = np.zeros(len(level), dtype=bool)
            step = max(1, 2_000_000 // max(1, len(irreducible) * coords.shape[1]))
            for i in range(0, len(level), step):
                diff = level[i:i + step, None, :] - irreducible[None, :, :]
                reducible[i:i + step] = np.any(np.all(diff >= 0, axis=2), axis=1)
        else:
            reducible = np.zeros(len(level), dtype=bool)
        new = np.flatnonzero(~reducible)
        found.extend(tuple(int(x) for x in pts[a + j]) for j in new)
        irreducible = np.vstack([irreducible, level[new]])
    return HilbertBasis(dim, found)


def is_monoid_element(obj: Monoid, e: Sequence[int]) -> bool:
    if isinstance(obj, RayCone):
        return contains(obj, e)
    return obj.is_solution(e)


def generates_up_to(basis: HilbertBasis | Sequence[Sequence[int]], obj: Monoid, bound: int) -> bool:
    """True iff every monoid element with sup-norm ``<= bound`` is a sum of basis elements."""
    gens = [tuple(g) for g in basis]
    if any(not is_monoid_element(obj, g) for g in gens):
        return False
    gens = [g for g in gens if any(g)]
    pts = [tuple(int(x) for x in p) for p in _box_solutions(obj, bound)]

    @lru_cache(maxsize=None)
    def reachable(x: IntVector) -> bool:
        if not any(x):
            return True
        for g in gens:
            y = tuple(a - b for a, b in zip(x, g))
            if is_monoid_element(obj, y) and reachable(y):
                return True
        return False

    grade = [int(v) for v in _grading(obj)]
    # ascending degree keeps the recursion shallow: smaller elements are memoized first
    for x in sorted(pts, key=lambda p: dot(grade, p)):
        if not reachable(x):
            return False
    return True
