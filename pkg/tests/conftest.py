import random

from hypothesis import settings, strategies as st

from toricsl2.exact import IntMatrix

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def int_matrices(max_rows=5, max_cols=5, lo=-9, hi=9):
    return st.integers(1, max_rows).flatmap(lambda m: st.integers(1, max_cols).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n),
                           min_size=m, max_size=m).map(IntMatrix.from_rows)))


def random_unimodular(n: int, rng: random.Random, steps: int = 12) -> IntMatrix:
    """Product of random elementary operations; determinant is +-1 by construction."""
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        if n == 1:
            m[0][0] = -m[0][0]
            continue
        i, j = rng.sample(range(n), 2)
        op = rng.randrange(3)
        if op == 0:
            c = rng.randint(-3, 3)
            m[i] = [a + c * b for a, b in zip(m[i], m[j])]
        elif op == 1:
            m[i], m[j] = m[j], m[i]
        else:
            m[i] = [-a for a in m[i]]
    return IntMatrix.from_rows(m)


@st.composite
def unimodular(draw, n):
    return random_unimodular(n, random.Random(draw(st.integers(0, 2**32))))


def vectors(dim, lo=-6, hi=6):
    return st.lists(st.integers(lo, hi), min_size=dim, max_size=dim).map(tuple)


@st.composite
def ray_lists(draw, min_dim=2, max_dim=3, max_rays=5, lo=-6, hi=6):
    d = draw(st.integers(min_dim, max_dim))
    rays = draw(st.lists(vectors(d, lo, hi).filter(any), min_size=1, max_size=max_rays))
    return d, rays


@st.composite
def pointed_cones(draw, min_dim=2, max_dim=3, max_rays=4, lo=-4, hi=4):
    """Strongly convex cones: rays on the positive side of a random functional."""
    from toricsl2.cone import RayCone
    d = draw(st.integers(min_dim, max_dim))
    w = draw(vectors(d, -2, 2).filter(any))
    rays = draw(st.lists(vectors(d, lo, hi).filter(lambda v: sum(a * b for a, b in zip(v, w)) > 0),
                         min_size=1, max_size=max_rays))
    return RayCone(d, rays)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
