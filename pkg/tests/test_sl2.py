from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from toricsl2.cone import contains, dualize, extremal_rays, is_strongly_convex
from toricsl2.exact import FgAbelianGroup
from toricsl2.semigroup import hilbert_basis_of_cone
from toricsl2.sl2 import (
    EmbeddingData, GExponent, VExponent, cl_group, cone_to_v, embedding_cone, embedding_rays,
    embedding_toric_data, embedding_weights, height, is_toric, phi_star, prop7_bound_holds, stabilizer_order,
    toricity, v_to_cone, verify,
)
from toricsl2.toric import class_group

E = EmbeddingData


def toric_cells(qmax=6, rmax=12):
    return [E(p, q, r) for q in range(2, qmax + 1) for p in range(1, q) if gcd(p, q) == 1
            for r in range(1, rmax + 1) if r % (q - p) == 0]


def test_embedding_validation():
    for bad in [(0, 1, 1), (3, 2, 1), (2, 4, 1), (1, 2, 0)]:
        with pytest.raises(ValueError):
            E(*bad)
    assert E(1, 2, 2).l == 2 and E(1, 3, 3).l is None and E(2, 3, 1).height == Fraction(2, 3)


def test_is_toric_examples():
    assert is_toric(E(1, 2, 1))
    assert not is_toric(E(1, 3, 3))
    assert toricity(E(1, 3, 3))[1] == "q-p=2 does not divide r=3"
    assert not is_toric(E(1, 1, 5))


def test_cl_group_examples():
    assert cl_group(E(1, 2, 1)) == FgAbelianGroup(1, ())
    assert cl_group(E(1, 2, 6)) == FgAbelianGroup(1, (6,))
    assert cl_group(E(1, 3, 4)) == FgAbelianGroup(1, (2,))
    with pytest.raises(ValueError):
        cl_group(E(1, 1, 2))


def test_embedding_cone_examples():
    assert embedding_rays(E(1, 2, 1)) == ((1, 0, 0), (0, 1, 0), (-1, 0, 2), (0, -1, 1))
    assert embedding_rays(E(1, 2, 2)) == ((1, 0, 0), (0, 1, 0), (-1, 0, 4), (0, -1, 2))
    assert embedding_rays(E(2, 3, 3)) == ((1, 0, 0), (0, 1, 0), (-1, 0, 9), (0, -1, 6))
    with pytest.raises(ValueError, match="does not divide"):
        embedding_cone(E(1, 3, 3))


def test_embedding_weights_examples():
    w = embedding_weights(E(1, 2, 1))
    assert w.torus_rows == ((1, 1, -2, -2),) and w.finite_rows == ()
    w = embedding_weights(E(1, 2, 2))
    assert w.finite_rows == (((1, 1, 0, 0), 4),)
    assert embedding_weights(E(2, 3, 1)).torus_rows == ((2, 2, -3, -3),)
    with pytest.raises(ValueError):
        embedding_weights(E(1, 3, 1))


def test_phi_star_examples():
    assert str(phi_star(VExponent(2, 0, 1, 0))) == "alpha^2*beta"
    assert phi_star(VExponent(0, 0, 0, 0)) == GExponent(0, 0, 0, 0)
    assert str(phi_star(VExponent(0, 0, 0, 0))) == "1"
    assert str(phi_star(VExponent(1, 1, 0, 1))) == "alpha*gamma*delta"


def test_height_examples():
    c = height(E(1, 2, 1))
    assert c.value == Fraction(1, 2) and c.witness.as_tuple() == (2, 0, 1, 0)
    assert str(c.image) == "alpha^2*beta"
    c = height(E(2, 3, 1))
    assert c.value == Fraction(2, 3) and c.witness.as_tuple() == (3, 0, 2, 0)
    c = height(E(1, 2, 2))
    assert c.witness.as_tuple() == (4, 0, 2, 0) and str(c.image) == "alpha^4*beta^2"


def test_stabilizer_order_examples():
    assert stabilizer_order(E(1, 2, 3)) == 1
    assert stabilizer_order(E(1, 3, 3)) == 2
    assert stabilizer_order(E(2, 3, 5)) == 1
    with pytest.raises(ValueError):
        stabilizer_order(E(1, 1, 1))


def test_verify_examples():
    rep = verify(E(1, 2, 1), 10)
    assert rep.passed
    sg = next(c for c in rep.checks if c.name == "semigroup")
    assert sg.details["cone_side"] == sg.details["invariant_side"] == 6
    rep = verify(E(1, 2, 2), 10)
    cg = next(c for c in rep.checks if c.name == "class_group")
    assert rep.passed and cg.details["cokernel"] == cg.details["formula"] == "Z + Z_2"
    rep = verify(E(1, 3, 2), 12)
    cone = next(c for c in rep.checks if c.name == "cone")
    assert rep.passed and [-1, 0, 3] in cone.details["rays"] and [0, -1, 1] in cone.details["rays"]
    assert str(cl_group(E(1, 3, 2))) == "Z"
    with pytest.raises(ValueError):
        verify(E(1, 3, 3))


def test_v_to_cone_rejects_mixed_levels():
    with pytest.raises(ValueError):
        v_to_cone(E(1, 2, 1), VExponent(2, 0, 0, 0))


@pytest.mark.parametrize("emb", toric_cells(), ids=str)
def test_grid_laws(emb):
    c = embedding_cone(emb)
    assert is_strongly_convex(c) and len(extremal_rays(c).rays) == 4
    g = class_group(embedding_toric_data(emb))
    assert g.free_rank == 1 and g == cl_group(emb)
    assert g == FgAbelianGroup.from_orders(1, [emb.l])
    assert prop7_bound_holds(emb)


@given(st.lists(st.integers(0, 9), min_size=8, max_size=8))
def test_phi_star_additive(xs):
    v, w = VExponent(*xs[:4]), VExponent(*xs[4:])
    assert phi_star(v + w) == phi_star(v) + phi_star(w)


@given(st.sampled_from([e for e in toric_cells(5, 8) if e.l * e.q <= 8]),
       st.tuples(st.integers(0, 20), st.integers(0, 20), st.integers(0, 3)))
def test_cone_v_inverse(emb, m):
    if contains(dualize(embedding_cone(emb)), m):
        assert v_to_cone(emb, cone_to_v(emb, m)) == m
    else:
        with pytest.raises(ValueError):
            cone_to_v(emb, m)


@given(st.integers(1, 12), st.integers(1, 12), st.integers(1, 30))
def test_toricity_rule(p, q, r):
    if p > q or gcd(p, q) != 1:
        return
    assert is_toric(E(p, q, r)) == (q > p and r % (q - p) == 0)


def test_cone_basis_level_one():
    for emb in toric_cells(4, 6):
        hb = hilbert_basis_of_cone(dualize(embedding_cone(emb)))
        assert all(m[2] == 1 for m in hb)
        assert len(hb) == (emb.l * emb.q + 1) * (emb.l * emb.p + 1)
