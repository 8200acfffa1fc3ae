"""Exact linear algebra: 2x2 integer Hermite normal form, subspaces over
an exact field, and finite-dimensional commutative algebras given by
structure constants.

No floating point is used anywhere in this module.
"""

import itertools
import math
import random
from dataclasses import dataclass

from . import poly
from .errors import BadTower, DimensionMismatch, RankDeficient, ZeroDivisor
from .fields import QQ


def xgcd(a, b):
    """Return (g, s, t) with g = gcd(a, b) >= 0 and s*a + t*b = g."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


@dataclass(frozen=True)
class IntMat2:
    """2x2 integer matrix with rows (a, b) and (c, d).

    In Hermite normal form the rows are the basis vectors (a, 0) and (c, d)
    with a, d > 0 and 0 <= c < a.
    """

    a: int
    b: int
    c: int
    d: int

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))

    def det(self):
        return self.a * self.d - self.b * self.c

    def is_hnf(self):
        return self.b == 0 and self.a > 0 and self.d > 0 and 0 <= self.c < self.a


def hnf2(generators):
    """Hermite normal form of the lattice in Z^2 spanned by integer pairs."""
    rows = [(int(x), int(y)) for x, y in generators]
    if not rows:
        raise RankDeficient("no generators")
    g = 0
    px = 0
    axis = 0  # gcd of first coordinates of vectors with second coordinate 0
    for x, y in rows:
        if y == 0:
            axis = math.gcd(axis, x)
            continue
        if g == 0:
            px, g = x, y
            continue
        d, s, t = xgcd(g, y)
        axis = math.gcd(axis, (y // d) * px - (g // d) * x)
        px, g = s * px + t * x, d
    if g == 0 or axis == 0:
        raise RankDeficient(f"generators {rows} span rank < 2")
    if g < 0:
        px, g = -px, -g
    return IntMat2(axis, 0, px % axis, g)


def in_lattice(m, v):
    """Membership of an integer pair in the lattice with HNF basis ``m``."""
    x, y = v
    if y % m.d:
        return False
    k = y // m.d
    return (x - k * m.c) % m.a == 0


# ---------------------------------------------------------------- subspaces


def rref(vectors, F, n):
    """Reduced row echelon form; leading coefficients 1, pivots left to right."""
    rows = [[F(x) for x in v] for v in vectors]
    for v in rows:
        if len(v) != n:
            raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {n}")
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = F.inv(rows[r][col])
        rows[r] = [F(x * inv) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [F(x - f * y) for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return tuple(tuple(row) for row in rows[:r])


def _pivots(basis):
    return [next(j for j, x in enumerate(row) if x != 0) for row in basis]


def nullspace(constraints, F, n):
    """Basis of {x in F^n : c . x = 0 for every constraint row c}."""
    R = rref(constraints, F, n) if constraints else ()
    piv = _pivots(R)
    free = [j for j in range(n) if j not in piv]
    out = []
    for fcol in free:
        v = [F(0)] * n
        v[fcol] = F(1)
        for row, p in zip(R, piv):
            v[p] = F(-row[fcol])
        out.append(tuple(v))
    return out


@dataclass(frozen=True)
class Subspace:
    """Subspace of F^dim stored by its canonical reduced echelon basis, so
    equality of subspaces is equality of representations."""

    field: object
    dim: int
    basis: tuple

    @classmethod
    def span(cls, F, dim, vectors):
        return cls(F, dim, rref(list(vectors), F, dim))

    @classmethod
    def zero(cls, F, dim):
        return cls(F, dim, ())

    @classmethod
    def full(cls, F, dim):
        return cls(F, dim, tuple(tuple(F(int(i == j)) for j in range(dim)) for i in range(dim)))

    @property
    def rank(self):
        return len(self.basis)

    def _check(self, other):
        if self.dim != other.dim or self.field != other.field:
            raise DimensionMismatch(f"{self.field}^{self.dim} vs {other.field}^{other.dim}")

    def reduce(self, v):
        F = self.field
        v = [F(x) for x in v]
        for row, p in zip(self.basis, _pivots(self.basis)):
            if v[p] != 0:
                f = v[p]
                v = [F(x - f * y) for x, y in zip(v, row)]
        return v

    def __contains__(self, v):
        if len(v) != self.dim:
            raise DimensionMismatch("vector length")
        return not any(self.reduce(v))

    def contains(self, other):
        self._check(other)
        return all(v in self for v in other.basis)

    def __add__(self, other):
        self._check(other)
        return Subspace.span(self.field, self.dim, self.basis + other.basis)

    def annihilator(self):
        """Orthogonal complement under the standard bilinear form."""
        return Subspace.span(self.field, self.dim, nullspace(list(self.basis), self.field, self.dim))

    def __and__(self, other):
        self._check(other)
        cons = list(self.annihilator().basis) + list(other.annihilator().basis)
        return Subspace.span(self.field, self.dim, nullspace(cons, self.field, self.dim))

    intersect = __and__

    def random_element(self, rng, bound=3):
        F = self.field
        v = [F(0)] * self.dim
        for row in self.basis:
            c = F(rng.randint(-bound, bound))
            v = [F(x + c * y) for x, y in zip(v, row)]
        return tuple(v)


def subspace_ops(a, b, kind):
    """Dispatch for sum / intersect / equals / contains."""
    a._check(b)
    if kind == "sum":
        return a + b
    if kind == "intersect":
        return a & b
    if kind == "equals":
        return a == b
    if kind == "contains":
        return a.contains(b)
    raise ValueError(f"unknown subspace operation {kind!r}")


# ------------------------------------------------------------- algebras


class StructureAlgebra:
    """Commutative associative unital algebra over F with basis e_0..e_{n-1};
    ``table[i][j]`` holds the coordinates of e_i * e_j. e_0 must be the
    identity.
    """

    def __init__(self, field, table, labels=None, validate=True):
        self.field = field
        self.dim = len(table)
        F = field
        self.table = tuple(tuple(tuple(F(x) for x in table[i][j]) for j in range(self.dim)) for i in range(self.dim))
        self.labels = list(labels) if labels else [f"e{i}" for i in range(self.dim)]
        if validate:
            self._validate_algebra()

    def _validate_algebra(self):
        n = self.dim
        if any(len(self.table[i]) != n or any(len(v) != n for v in self.table[i]) for i in range(n)):
            raise BadTower("structure constants must be a dim x dim x dim array")
        for i in range(n):
            if self.table[0][i] != self.basis_vector(i):
                raise BadTower("first basis element is not the identity")
        for i, j in itertools.combinations(range(n), 2):
            if self.table[i][j] != self.table[j][i]:
                raise BadTower(f"not commutative at basis pair ({i}, {j})")
        for i, j, k in itertools.product(range(n), repeat=3):
            e = self.basis_vector
            if self.mul(self.mul(e(i), e(j)), e(k)) != self.mul(e(i), self.mul(e(j), e(k))):
                raise BadTower(f"not associative at basis triple ({i}, {j}, {k})")

    def basis_vector(self, i):
        F = self.field
        return tuple(F(int(i == j)) for j in range(self.dim))

    def unit(self):
        return self.basis_vector(0)

    def zero(self):
        return tuple(self.field(0) for _ in range(self.dim))

    def elem(self, coords):
        return tuple(self.field(x) for x in coords)

    def add(self, x, y):
        F = self.field
        return tuple(F(a + b) for a, b in zip(x, y))

    def scale(self, c, x):
        F = self.field
        return tuple(F(c * a) for a in x)

    def mul(self, x, y):
        F = self.field
        out = [0] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            row = self.table[i]
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                c = xi * yj
                for k, t in enumerate(row[j]):
                    if t != 0:
                        out[k] += c * t
        return tuple(F(v) for v in out)

    def power(self, x, n):
        r = self.unit()
        for _ in range(n):
            r = self.mul(r, x)
        return r

    def inverse(self, x):
        """Solve x*y = 1; raise ZeroDivisor when x is not a unit."""
        F, n = self.field, self.dim
        cols = [self.mul(x, self.basis_vector(i)) for i in range(n)]
        one = self.unit()
        cons = [[cols[i][k] for i in range(n)] + [F(-one[k])] for k in range(n)]
        sols = nullspace(cons, F, n + 1)
        for z in sols:
            if z[n] != 0:
                inv = F.inv(z[n])
                y = tuple(F(z[i] * inv) for i in range(n))
                if self.mul(x, y) == one:
                    return y
        raise ZeroDivisor(f"{x} is not invertible")

    def is_unit(self, x):
        try:
            self.inverse(x)
        except ZeroDivisor:
            return False
        return True

    def format(self, x):
        parts = []
        for c, lab in zip(x, self.labels):
            if c == 0:
                continue
            parts.append(str(c) if lab == "1" else (lab if c == 1 else f"{c}*{lab}"))
        return " + ".join(parts) if parts else "0"

    def __eq__(self, other):
        return isinstance(other, StructureAlgebra) and self.field == other.field and self.table == other.table

    def __hash__(self):
        return hash((self.field, self.table))

    def __repr__(self):
        return f"{type(self).__name__}({self.field}, dim={self.dim}, labels={self.labels})"

    @classmethod
    def from_modulus(cls, F, c, validate=False, **kw):
        """k[X]/(c) with basis 1, X, ..., X^{deg c - 1}."""
        c = poly.monic(poly.trim(c, F), F)
        n = poly.deg(c)
        if n < 1:
            raise BadTower("modulus must have positive degree")
        table = []
        for i in range(n):
            row = []
            for j in range(n):
                r = poly.rem(poly.x_power(i + j, F), c, F)
                row.append(tuple(r) + (F(0),) * (n - len(r)))
            table.append(row)
        labels = ["1", "X"] + [f"X^{i}" for i in range(2, n)]
        return cls(F, table, labels[:n], validate=validate, **kw)


class FieldTower(StructureAlgebra):
    """A finite extension K of the base field, given by structure constants.

    Construction validates that the algebra is commutative, associative,
    unital and a field (every tested nonzero element is invertible; the
    test is exhaustive over finite fields of at most ``exhaustive_limit``
    elements).
    """

    exhaustive_limit = 4096

    def __init__(self, field, table, labels=None, validate=True):
        super().__init__(field, table, labels, validate=validate)
        if validate:
            self._validate_field()

    def _test_elements(self):
        F = self.field
        if F.char and F.char**self.dim <= self.exhaustive_limit:
            return itertools.product(range(F.char), repeat=self.dim)
        coeffs = (-1, 0, 1, 2)
        return itertools.product(coeffs, repeat=self.dim)

    def _validate_field(self):
        for v in self._test_elements():
            x = self.elem(v)
            if any(x) and not self.is_unit(x):
                raise BadTower(f"{self.format(x)} is a zero divisor: not a field")

    @classmethod
    def from_minpoly(cls, F, coeffs, var="t"):
        c = poly.trim(coeffs, F)
        alg = StructureAlgebra.from_modulus(F, c)
        labels = ["1", var] + [f"{var}^{i}" for i in range(2, alg.dim)]
        return cls(F, alg.table, labels[: alg.dim])

    @classmethod
    def quadratic(cls, a, F=QQ):
        a = F(a)
        return cls(F, [[(1, 0), (0, 1)], [(0, 1), (a, 0)]], ["1", f"sqrt({a})"])

    @classmethod
    def biquadratic(cls, a, b, F=QQ):
        """F(sqrt a, sqrt b) with basis 1, sqrt a, sqrt b, sqrt ab."""
        a, b = F(a), F(b)
        z = F(0)
        e = lambda *v: tuple(F(x) for x in v)  # noqa: E731
        t = [
            [e(1, 0, 0, 0), e(0, 1, 0, 0), e(0, 0, 1, 0), e(0, 0, 0, 1)],
            [e(0, 1, 0, 0), e(a, 0, 0, 0), e(0, 0, 0, 1), e(0, 0, a, 0)],
            [e(0, 0, 1, 0), e(0, 0, 0, 1), e(b, 0, 0, 0), e(0, b, 0, 0)],
            [e(0, 0, 0, 1), e(0, 0, a, 0), e(0, b, 0, 0), e(a * b, z, z, z)],
        ]
        return cls(F, t, ["1", f"sqrt({a})", f"sqrt({b})", f"sqrt({a * b})"])


def _require_same(a, b, alg):
    if a.dim != alg.dim or b.dim != alg.dim or a.field != alg.field or b.field != alg.field:
        raise DimensionMismatch("subspaces must live in the algebra's ambient space")


def module_product(a, b, alg):
    """Span of all products of basis vectors of ``a`` and ``b``."""
    _require_same(a, b, alg)
    return Subspace.span(alg.field, alg.dim, [alg.mul(x, y) for x in a.basis for y in b.basis])


def field_colon(a, b, alg):
    """{x : x*b in a for all b in B}, solved as one exact linear system.

    Works in any structure algebra, not only fields.
    """
    _require_same(a, b, alg)
    if b.rank == 0:
        raise ZeroDivisor("colon by the zero subspace")
    F, n = alg.field, alg.dim
    ann = a.annihilator().basis
    cons = []
    for bv in b.basis:
        images = [alg.mul(alg.basis_vector(i), bv) for i in range(n)]
        for alpha in ann:
            cons.append([sum(al * im for al, im in zip(alpha, images[i])) for i in range(n)])
    return Subspace.span(F, n, nullspace(cons, F, n))


def random_subspace(F, dim, rank, rng=None, bound=3):
    rng = rng or random.Random(0)
    while True:
        vecs = [[F(rng.randint(-bound, bound)) for _ in range(dim)] for _ in range(rank)]
        S = Subspace.span(F, dim, vecs)
        if S.rank == rank:
            return S
