"""Toric SL(2)/Z_r-embeddings.

A normal affine three-dimensional variety with a locally transitive SL(2)
action is classified by its height ``p/q`` (coprime, ``0 < p/q <= 1``) and its
degree ``r`` (order of the generic stabilizer).  It is toric exactly when
``q > p`` and ``q - p`` divides ``r``; then ``l = r / (q - p)`` and

* its cone is ``cone((1,0,0), (0,1,0), (-1,0,lq), (0,-1,lp))``;
* it is ``K^4 // (torus x Z_l)`` where the torus acts with weights
  ``(p, p, -q, -q)`` on ``(x1, x2, y1, y2)`` and ``Z_l`` cuts invariants down
  to levels where ``x``-degree is a multiple of ``lq``;
* its class group is ``Z + Z_l``.

:func:`verify` recomputes all of this through the generic cone, toric and
quotient machinery and compares the two sides exactly.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .cone import RayCone, dualize, edges_from_facets, extremal_rays, is_strongly_convex
from .exact import FgAbelianGroup, IntVector
from .quotient import WeightData, invariant_generators, is_invariant
from .semigroup import HilbertBasis, generates_up_to, hilbert_basis_of_cone
from .toric import AffineToricData, class_group


@dataclass(frozen=True)
class EmbeddingData:
    p: int
    q: int
    r: int

    def __post_init__(self):
        p, q, r = self.p, self.q, self.r
        if not (1 <= p <= q):
            raise ValueError(f"height p/q = {p}/{q} must satisfy 1 <= p <= q")
        if gcd(p, q) != 1:
            raise ValueError(f"height {p}/{q} is not in lowest terms")
        if r < 1:
            raise ValueError(f"degree r = {r} must be positive")

    @property
    def height(self) -> Fraction:
        return Fraction(self.p, self.q)

    @property
    def l(self) -> Optional[int]:
        """``r / (q - p)`` for toric data, else ``None``."""
        return self.r // (self.q - self.p) if is_toric(self) else None


@dataclass(frozen=True)
class VExponent:
    """Exponents of ``x1, x2, y1, y2``."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if min(self.a, self.b, self.c, self.d) < 0:
            raise ValueError("exponents must be nonnegative")

    def __add__(self, other: "VExponent") -> "VExponent":
        return VExponent(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def as_tuple(self) -> IntVector:
        return (self.a, self.b, self.c, self.d)


@dataclass(frozen=True)
class GExponent:
    """Exponents of the matrix-entry functions ``alpha, beta, gamma, delta`` on SL(2)."""

    e_alpha: int
    e_beta: int
    e_gamma: int
    e_delta: int

    def __post_init__(self):
        if min(self.e_alpha, self.e_beta, self.e_gamma, self.e_delta) < 0:
            raise ValueError("exponents must be nonnegative")

    def __add__(self, other: "GExponent") -> "GExponent":
        return GExponent(self.e_alpha + other.e_alpha, self.e_beta + other.e_beta,
                         self.e_gamma + other.e_gamma, self.e_delta + other.e_delta)

    def __str__(self) -> str:
        names = ("alpha", "beta", "gamma", "delta")
        exps = (self.e_alpha, self.e_beta, self.e_gamma, self.e_delta)
        parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps) if e]
        return "*".join(parts) if parts else "1"


def toricity(emb: EmbeddingData) -> tuple[bool, str]:
    """Toricity decision and a human-readable reason."""
    gap = emb.q - emb.p
    if gap == 0:
        return False, (f"q-p=0: height 1 has no toric model "
                       f"(only 0 is divisible by 0, and r={emb.r} >= 1)")
    if emb.r % gap:
        return False, f"q-p={gap} does not divide r={emb.r}"
    return True, f"q-p={gap} divides r={emb.r}"


def is_toric(emb: EmbeddingData) -> bool:
    return toricity(emb)[0]


def _require_toric(emb: EmbeddingData) -> int:
    ok, reason = toricity(emb)
    if not ok:
        raise ValueError(f"({emb.p}/{emb.q}, r={emb.r}) is not toric: {reason}")
    return emb.r // (emb.q - emb.p)


def cl_group(emb: EmbeddingData) -> FgAbelianGroup:
    """``Z + Z_l`` with ``l = r / gcd(r, q - p)``."""
    if emb.q == emb.p:
        raise ValueError("class group formula needs q > p")
    return FgAbelianGroup.from_orders(1, [emb.r // gcd(emb.r, emb.q - emb.p)])


def embedding_rays(emb: EmbeddingData) -> tuple[IntVector, ...]:
    """The four rays in their construction order ``rho_1, ..., rho_4``."""
    l = _require_toric(emb)
    return ((1, 0, 0), (0, 1, 0), (-1, 0, l * emb.q), (0, -1, l * emb.p))


def embedding_cone(emb: EmbeddingData) -> RayCone:
    cone = RayCone(3, embedding_rays(emb))
    if not is_strongly_convex(cone) or len(extremal_rays(cone).rays) != 4:
        raise AssertionError(f"cone for {emb} is not strongly convex with 4 extremal rays")
    return cone


def embedding_toric_data(emb: EmbeddingData) -> AffineToricData:
    return AffineToricData(embedding_cone(emb), embedding_rays(emb))


def embedding_weights(emb: EmbeddingData) -> WeightData:
    l = _require_toric(emb)
    finite = (((1, 1, 0, 0), l * emb.q),) if l > 1 else ()
    return WeightData(4, ((emb.p, emb.p, -emb.q, -emb.q),), finite)


def phi_star(v: VExponent) -> GExponent:
    """``x1^a x2^b y1^c y2^d -> alpha^a gamma^b beta^c delta^d``."""
    return GExponent(e_alpha=v.a, e_beta=v.c, e_gamma=v.b, e_delta=v.d)


def cone_to_v(emb: EmbeddingData, m: IntVector) -> VExponent:
    """Character ``(m1, m2, m3)`` of the dual cone to the invariant monomial it represents.

    ``m3`` is the level; the monomial is ``x1^(m3 lq - m1) x2^m1 y1^(m3 lp - m2) y2^m2``.
    """
    l = _require_toric(emb)
    m1, m2, m3 = m
    return VExponent(m3 * l * emb.q - m1, m1, m3 * l * emb.p - m2, m2)


def v_to_cone(emb: EmbeddingData, v: VExponent) -> IntVector:
    """Inverse of :func:`cone_to_v`; rejects monomials that are not level-homogeneous."""
    l = _require_toric(emb)
    lq, lp = l * emb.q, l * emb.p
    if (v.a + v.b) % lq or (v.c + v.d) % lp or (v.a + v.b) // lq != (v.c + v.d) // lp:
        raise ValueError(f"{v} has no level: x-degree {v.a + v.b}, y-degree {v.c + v.d}, "
                         f"need multiples k*{lq}, k*{lp} of one k")
    return (v.b, v.d, (v.a + v.b) // lq)


def stabilizer_order(emb: EmbeddingData) -> int:
    """Order ``q - p`` of the generic stabilizer of ``K^4 // torus``."""
    if emb.q == emb.p:
        raise ValueError("q = p: every stabilizer contains a one-dimensional torus, "
                         "so there is no open orbit")
    return emb.q - emb.p


def prop7_bound_holds(emb: EmbeddingData) -> bool:
    """``l' / (q - p + l') <= p / q`` for ``0 <= l' <= p``, with equality only at ``l' = p``."""
    h = emb.height
    for lp in range(emb.p + 1):
        ratio = Fraction(lp, emb.q - emb.p + lp)
        if ratio > h or ((ratio == h) != (lp == emb.p)):
            return False
    return True


@dataclass(frozen=True)
class HeightCertificate:
    value: Fraction
    witness: Optional[VExponent] = None
    image: Optional[GExponent] = None
    bound_holds: Optional[bool] = None


def height(emb: EmbeddingData) -> HeightCertificate:
    """Height ``p/q`` together with the invariant generator that attains it.

    For toric data the witness is the invariant generator ``x1^(lq) y1^(lp)``
    free of ``x2`` and ``y2``.  It has level one, so it cannot split into two
    nonzero invariants.  Its image ``alpha^(lq) beta^(lp)`` has ratio
    ``lp/lq = p/q``.  Reducing an arbitrary image monomial to the shape
    ``alpha^(q-p+l') beta^(l')`` uses the relation ``alpha delta - beta gamma = 1``
    and is taken as given; the resulting inequality is checked exactly.
    """
    if emb.q == emb.p or not is_toric(emb):
        return HeightCertificate(emb.height)
    l = emb.l
    w = VExponent(l * emb.q, 0, l * emb.p, 0)
    if not is_invariant(embedding_weights(emb), w.as_tuple()) or v_to_cone(emb, w)[2] != 1:
        raise AssertionError(f"witness {w} is not a level-one invariant")
    img = phi_star(w)
    if Fraction(img.e_beta, img.e_alpha) != emb.height or img.e_gamma or img.e_delta:
        raise AssertionError(f"witness {w} does not attain the height")
    return HeightCertificate(emb.height, w, img, prop7_bound_holds(emb))


# --------------------------------------------------------------------------
# cross-verification


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)


@dataclass(frozen=True)
class VerifyReport:
    emb: EmbeddingData
    bound: int
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {"p": self.emb.p, "q": self.emb.q, "r": self.emb.r, "bound": self.bound,
                "passed": self.passed, "checks": [asdict(c) for c in self.checks]}


def default_verify_bound(emb: EmbeddingData) -> int:
    l = _require_toric(emb)
    return max(10, l * emb.q + l * emb.p)


def _check_cone(emb: EmbeddingData) -> Check:
    cone = RayCone(3, embedding_rays(emb))
    ext = extremal_rays(cone)
    edges = edges_from_facets(cone.halfspaces())
    ok = is_strongly_convex(cone) and len(ext.rays) == 4 and edges == ext
    return Check("cone", ok, {
        "rays": [list(r) for r in embedding_rays(emb)],
        "extremal_rays": len(ext.rays),
        "facet_edges": [list(r) for r in edges.rays],
        "strongly_convex": is_strongly_convex(cone),
    })


def _check_class_group(emb: EmbeddingData) -> Check:
    geometric = class_group(embedding_toric_data(emb))
    formula = cl_group(emb)
    return Check("class_group", geometric == formula and geometric.free_rank == 1,
                 {"cokernel": str(geometric), "formula": str(formula)})


def _check_semigroup(emb: EmbeddingData, bound: int, inv: HilbertBasis) -> Check:
    dual = dualize(embedding_cone(emb))
    cone_basis = hilbert_basis_of_cone(dual)
    weights = embedding_weights(emb)
    mapped = sorted(cone_to_v(emb, m).as_tuple() for m in cone_basis)
    l = emb.l
    expected = (l * emb.q + 1) * (l * emb.p + 1)
    level_one = all(m[2] == 1 for m in cone_basis)
    back = all(v_to_cone(emb, VExponent(*g)) in cone_basis for g in inv)
    gen_cone = generates_up_to(cone_basis, dual, bound)
    gen_inv = generates_up_to(inv, weights.as_system(), bound)
    all_inv = all(is_invariant(weights, g) for g in mapped)
    ok = (mapped == list(inv.elements) and len(inv) == expected and level_one and back
          and gen_cone and gen_inv and all_inv)
    details = {"cone_side": len(cone_basis), "invariant_side": len(inv), "expected": expected,
               "last_coordinate_one": level_one, "generates_cone": gen_cone,
               "generates_invariants": gen_inv}
    if mapped != list(inv.elements):
        details["only_cone_side"] = sorted(set(mapped) - set(inv.elements))
        details["only_invariant_side"] = sorted(set(inv.elements) - set(mapped))
    return Check("semigroup", ok, details)


def _check_height(emb: EmbeddingData, inv: Sequence[IntVector]) -> Check:
    cert = height(emb)
    # among all invariant generators, only the witness maps to a gamma, delta-free monomial
    pure = [g for g in inv if phi_star(VExponent(*g)).e_gamma == 0
            and phi_star(VExponent(*g)).e_delta == 0]
    ok = (cert.value == emb.height and cert.witness is not None
          and pure == [cert.witness.as_tuple()]
          and cert.image.e_gamma == 0 and cert.image.e_delta == 0 and bool(cert.bound_holds))
    return Check("height", ok, {
        "height": f"{cert.value.numerator}/{cert.value.denominator}",
        "witness": list(cert.witness.as_tuple()) if cert.witness else None,
        "gamma_delta_free_generators": [list(g) for g in pure],
        "image": str(cert.image) if cert.image else None,
        "bound_holds": cert.bound_holds,
        "note": "image monomials reduce to alpha^(q-p+l') beta^(l') via alpha*delta - beta*gamma = 1;"
                " that reduction is assumed, the inequality on l' is checked",
    })


def verify(emb: EmbeddingData, bound: Optional[int] = None) -> VerifyReport:
    """Run the cone, class-group, semigroup and height cross-checks."""
    _require_toric(emb)
    if bound is None:
        bound = default_verify_bound(emb)
    inv = invariant_generators(embedding_weights(emb))
    checks = (_check_cone(emb), _check_class_group(emb), _check_semigroup(emb, bound, inv),
              _check_height(emb, list(inv)))
    return VerifyReport(emb, bound, checks)
