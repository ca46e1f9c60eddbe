"""Exact integer linear algebra: vectors, matrices, Smith normal form, cokernels.

Everything here works on plain Python ``int`` and ``fractions.Fraction``, so
there is no overflow regardless of how large intermediates get.  Vectors are
tuples of ints; matrices are :class:`IntMatrix` values.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

IntVector = tuple[int, ...]


def vec(entries: Iterable[int]) -> IntVector:
    out = tuple(int(e) for e in entries)
    return out


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def add(u: Sequence[int], v: Sequence[int]) -> IntVector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[int], v: Sequence[int]) -> IntVector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c: int, v: Sequence[int]) -> IntVector:
    return tuple(c * a for a in v)


def content(v: Sequence[int]) -> int:
    """gcd of the entries (0 for the zero vector)."""
    g = 0
    for a in v:
        g = gcd(g, a)
    return g


def primitive(v: Sequence[int]) -> IntVector:
    """Divide ``v`` by the gcd of its entries.

    >>> primitive((2, 0, 4))
    (1, 0, 2)
    """
    g = content(v)
    if g == 0:
        raise ValueError("zero vector has no primitive generator")
    return tuple(a // g for a in v)


def is_zero(v: Sequence[int]) -> bool:
    return all(a == 0 for a in v)


def clear_denominators(v: Sequence[Fraction]) -> IntVector:
    """Smallest positive multiple of a rational vector that is integral and primitive."""
    den = 1
    for a in v:
        den = den * Fraction(a).denominator // gcd(den, Fraction(a).denominator)
    ints = tuple(int(Fraction(a) * den) for a in v)
    return primitive(ints) if not is_zero(ints) else ints


@dataclass(frozen=True)
class IntMatrix:
    """Row-major integer matrix.  ``rows``/``cols`` are explicit so that
    0-column (or 0-row) matrices keep their shape."""

    rows: int
    cols: int
    data: tuple[IntVector, ...] = field(repr=False)

    def __post_init__(self):
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise ValueError("matrix data does not match its shape")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], cols: Optional[int] = None) -> "IntMatrix":
        data = tuple(vec(r) for r in rows)
        if cols is None:
            if not data:
                raise ValueError("cannot infer column count of an empty row list")
            cols = len(data[0])
        return cls(len(data), cols, data)

    @classmethod
    def from_columns(cls, columns: Iterable[Iterable[int]], rows: Optional[int] = None) -> "IntMatrix":
        cs = [vec(c) for c in columns]
        if rows is None:
            if not cs:
                raise ValueError("cannot infer row count of an empty column list")
            rows = len(cs[0])
        return cls(rows, len(cs), tuple(tuple(c[i] for c in cs) for i in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.data[i][j]

    def column(self, j: int) -> IntVector:
        return tuple(r[j] for r in self.data)

    def columns(self) -> list[IntVector]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, tuple(self.columns()))

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch in matrix product")
            ocols = other.columns()
            return IntMatrix(
                self.rows, other.cols,
                tuple(tuple(dot(r, c) for c in ocols) for r in self.data),
            )
        v = tuple(other)
        return tuple(dot(r, v) for r in self.data)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.data]

    def is_diagonal(self) -> bool:
        return all(self.data[i][j] == 0
                   for i in range(self.rows) for j in range(self.cols) if i != j)

    def diagonal(self) -> IntVector:
        return tuple(self.data[i][i] for i in range(min(self.rows, self.cols)))


def det(a: IntMatrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    if a.rows != a.cols:
        raise ValueError("determinant of a non-square matrix")
    n = a.rows
    if n == 0:
        return 1
    m = [list(r) for r in a.data]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rref(rows: Iterable[Sequence[int]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (nonzero rows, pivot columns)."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Iterable[Sequence[int]]) -> int:
    return len(rref(rows)[0])


def span_basis(vectors: Iterable[Sequence[int]]) -> list[IntVector]:
    """Canonical integer basis of the rational span: primitive rows of the RREF."""
    return [clear_denominators(r) for r in rref(vectors)[0]]


def nullspace(rows: Sequence[Sequence[int]], n: int) -> list[IntVector]:
    """Primitive integer basis of ``{x in Q^n : <row, x> = 0 for every row}``."""
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for r, pc in zip(red, pivots):
            x[pc] = -r[f]
        basis.append(clear_denominators(x))
    return basis


def project_orthogonal(v: Sequence[int], basis: Sequence[Sequence[int]]) -> IntVector:
    """Positive integer multiple of the orthogonal projection of ``v`` onto ``span(basis)^perp``.

    Returns the zero vector when ``v`` lies in the span.
    """
    if not basis:
        return tuple(v)
    k = len(basis)
    gram = [[Fraction(dot(b1, b2)) for b2 in basis] for b1 in basis]
    rhs = [Fraction(dot(b, v)) for b in basis]
    # solve gram * c = rhs by Gauss-Jordan on the augmented system
    aug = [gram[i] + [rhs[i]] for i in range(k)]
    red, pivots = rref(aug)
    coef = [Fraction(0)] * k
    for r, pc in zip(red, pivots):
        coef[pc] = r[k]
    proj = [Fraction(x) - sum(coef[i] * basis[i][j] for i in range(k)) for j, x in enumerate(v)]
    return clear_denominators(proj)


@dataclass(frozen=True)
class SnfResult:
    u_left: IntMatrix
    diag: IntMatrix
    v_right: IntMatrix

    @property
    def invariant_factors(self) -> IntVector:
        """Nonzero diagonal entries (including 1s)."""
        return tuple(d for d in self.diag.diagonal() if d != 0)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def snf(a: IntMatrix) -> SnfResult:
    """Smith normal form ``U A V = D`` with ``U``, ``V`` unimodular.

    Pivots are the smallest nonzero absolute value in the remaining block,
    ties broken by lowest (row, col).  Diagonal entries are nonnegative and
    each divides the next.
    """
    m, n = a.rows, a.cols
    d = [list(r) for r in a.data]
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):  # row_dst += c * row_src
        d[dst] = [x + c * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, c):  # col_dst += c * col_src
        for row in d:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    x = d[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                break
            _, i, j = best
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            p = d[t][t]
            dirty = False
            for i in range(t + 1, m):
                if d[i][t]:
                    add_row(i, t, -(d[i][t] // p))
                    dirty = dirty or d[i][t] != 0
            for j in range(t + 1, n):
                if d[t][j]:
                    add_col(j, t, -(d[t][j] // p))
                    dirty = dirty or d[t][j] != 0
            if dirty:
                continue
            bad = next((i for i in range(t + 1, m)
                        if any(d[i][j] % p for j in range(t + 1, n))), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if best is None:
            break
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
    return SnfResult(
        IntMatrix(m, m, tuple(tuple(r) for r in u)),
        IntMatrix(m, n, tuple(tuple(r) for r in d)),
        IntMatrix(n, n, tuple(tuple(r) for r in v)),
    )


def solve_integer(a: IntMatrix, b: Sequence[int]) -> Optional[IntVector]:
    """An integer solution of ``a x = b``, or ``None`` if there is none."""
    if len(b) != a.rows:
        raise ValueError("right-hand side has the wrong length")
    res = snf(a)
    ub = res.u_left @ b
    diag = res.diag.diagonal()
    y = [0] * a.cols
    for i, c in enumerate(ub):
        di = diag[i] if i < len(diag) else 0
        if di == 0:
            if c != 0:
                return None
        elif c % di:
            return None
        else:
            y[i] = c // di
    return res.v_right @ y


@dataclass(frozen=True)
class FgAbelianGroup:
    """``Z^free_rank + Z_{k1} + ... + Z_{ks}`` with ``k1 | k2 | ... | ks`` and every ``ki >= 2``."""

    free_rank: int
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        fs = self.invariant_factors
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        if any(k < 2 for k in fs) or any(fs[i + 1] % fs[i] for i in range(len(fs) - 1)):
            raise ValueError(f"not a canonical invariant factor list: {fs}")

    @classmethod
    def from_orders(cls, free_rank: int, orders: Iterable[int]) -> "FgAbelianGroup":
        """Canonical form of ``Z^free_rank + sum Z_k`` for arbitrary cyclic orders ``k >= 1``."""
        orders = [int(k) for k in orders]
        if any(k < 1 for k in orders):
            raise ValueError("cyclic orders must be positive")
        if not orders:
            return cls(free_rank)
        res = snf(IntMatrix(len(orders), len(orders),
                            tuple(tuple(k if i == j else 0 for j in range(len(orders)))
                                  for i, k in enumerate(orders))))
        return cls(free_rank, tuple(k for k in res.invariant_factors if k > 1))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z_{k}" for k in self.invariant_factors]
        return " + ".join(parts) if parts else "0"


def cokernel(a: IntMatrix) -> FgAbelianGroup:
    """``Z^rows / (column span of a)`` in canonical form."""
    res = snf(a)
    facs = res.invariant_factors
    return FgAbelianGroup(a.rows - len(facs), tuple(k for k in facs if k > 1))


def inverse_unimodular(a: IntMatrix) -> IntMatrix:
    """Integer inverse of a matrix with determinant +-1."""
    n = a.rows
    if n != a.cols or abs(det(a)) != 1:
        raise ValueError("matrix is not unimodular")
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(a.data)]
    red, _ = rref(aug)
    return IntMatrix(n, n, tuple(tuple(int(x) for x in r[n:]) for r in red))


def saturated_span_basis(vectors: Sequence[Sequence[int]], dim: int) -> IntMatrix:
    """Columns form a basis of the lattice ``span(vectors) cap Z^dim``."""
    if not vectors:
        return IntMatrix.zeros(dim, 0)
    res = snf(IntMatrix.from_columns(vectors, rows=dim))
    uinv = inverse_unimodular(res.u_left)
    return IntMatrix.from_columns(uinv.columns()[:res.rank], rows=dim)
