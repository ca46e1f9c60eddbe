from itertools import product

import pytest
from hypothesis import given

from conftest import pointed_cones, ray_lists
from toricsl2.cone import (
    HalfspaceCone, RayCone, contains, dualize, edges_from_facets, extremal_rays,
    is_strongly_convex,
)
from toricsl2.exact import dot
from toricsl2.sl2 import EmbeddingData, embedding_cone

SL2_CONE = RayCone(3, [(1, 0, 0), (0, 1, 0), (-1, 0, 2), (0, -1, 1)])
ORTHANT = RayCone(2, [(1, 0), (0, 1)])


def box(d, b):
    return product(range(-b, b + 1), repeat=d)


def test_orthant_self_dual():
    assert dualize(ORTHANT) == ORTHANT


def test_half_plane_dual_is_ray():
    assert dualize(RayCone(2, [(1, 0), (-1, 0), (0, 1)])).rays == ((0, 1),)


def test_sl2_cone_dual():
    assert set(dualize(SL2_CONE).rays) == {(0, 0, 1), (2, 0, 1), (0, 1, 1), (2, 1, 1)}


def test_dual_of_ray_and_of_zero_cone():
    assert set(dualize(RayCone(2, [(0, 1)])).rays) == {(-1, 0), (1, 0), (0, 1)}
    assert set(dualize(RayCone(2, [])).rays) == {(1, 0), (-1, 0), (0, 1), (0, -1)}


def test_extremal_rays_examples():
    assert extremal_rays(RayCone(2, [(1, 0), (0, 1), (1, 1)])).rays == ((0, 1), (1, 0))
    assert set(extremal_rays(RayCone(2, [(1, 0), (-1, 0)])).rays) == {(1, 0), (-1, 0)}


def test_contains_examples():
    assert contains(ORTHANT, (3, 5))
    assert not contains(ORTHANT, (-1, 0))
    assert contains(SL2_CONE, (0, -1, 1))
    assert not contains(SL2_CONE, (0, -2, 1))
    with pytest.raises(ValueError):
        contains(ORTHANT, (1, 2, 3))


def test_strong_convexity_examples():
    assert is_strongly_convex(ORTHANT)
    assert not is_strongly_convex(RayCone(2, [(1, 0), (-1, 0)]))
    for p, q, r in [(1, 2, 1), (1, 2, 2), (2, 3, 3), (1, 4, 6)]:
        assert is_strongly_convex(embedding_cone(EmbeddingData(p, q, r)))


def test_rays_are_canonicalized():
    c = RayCone(2, [(2, 0), (0, 3), (4, 0)])
    assert c.rays == ((0, 1), (1, 0))
    assert RayCone.from_dict(c.to_dict()) == c


def test_edges_from_facets_sl2_cone():
    assert edges_from_facets(SL2_CONE.halfspaces()) == extremal_rays(SL2_CONE)


def test_halfspace_roundtrip():
    h = HalfspaceCone(3, dualize(SL2_CONE).rays)
    assert extremal_rays(h.to_ray_cone()) == extremal_rays(SL2_CONE)
    assert h.satisfied_by((0, -1, 1)) and not h.satisfied_by((0, -2, 1))


@given(ray_lists())
def test_double_dual(data):
    d, rays = data
    c = RayCone(d, rays)
    assert extremal_rays(dualize(dualize(c))) == extremal_rays(c)


@given(ray_lists())
def test_dual_sound_and_complete(data):
    d, rays = data
    c = RayCone(d, rays)
    dual = dualize(c)
    assert all(dot(w, r) >= 0 for w in dual.rays for r in c.rays)
    for m in box(d, 3):
        assert contains(dual, m) == all(dot(m, r) >= 0 for r in c.rays)


@given(ray_lists(max_rays=5))
def test_extremal_minimal(data):
    d, rays = data
    ext = extremal_rays(RayCone(d, rays))
    assert all(contains(ext, r) for r in rays)
    if is_strongly_convex(ext):
        for i, r in enumerate(ext.rays):
            rest = RayCone(d, ext.rays[:i] + ext.rays[i + 1:])
            assert not contains(rest, r)


@given(ray_lists())
def test_strong_convexity_matches_box(data):
    d, rays = data
    c = RayCone(d, rays)
    lin = c.lineality()
    b = max([2] + [abs(x) for v in lin for x in v])
    has_line = any(any(v) and contains(c, v) and contains(c, tuple(-x for x in v))
                   for v in box(d, b))
    assert is_strongly_convex(c) == (not has_line)


@given(pointed_cones())
def test_edges_from_facets_random(c):
    if c.dim() == c.ambient_dim:
        assert edges_from_facets(c.halfspaces()) == extremal_rays(c)
