"""Pseudo-valuation pullbacks R = k + M inside V = K + M, M = X*K[[X]], for
a field extension k <= K given by structure constants.

A nonzero fractional ideal is X^n (W + M) with W a nonzero k-subspace of K;
W = K is the V-ideal X^n V, and X^n M is normalized to X^(n+1) V. Power
series never appear: M absorbs every term above the leading one, so product
and colon have exact closed forms in (n, W). A truncated power-series model
is kept alongside as an independent check.
"""

import functools
import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import poly
from .errors import BadTower, UnsupportedDegree, ZeroIdeal
from .fields import QQ
from .linalg import FieldTower, Subspace, field_colon, module_product, nullspace
from .regularity import regularity_report
from .semigroup import build_semigroup, is_boolean, is_clifford


@dataclass(frozen=True)
class PvdIdeal:
    level: int
    W: Subspace


class PvdRing:
    def __init__(self, K, k_sub):
        self.K = K
        self.F = K.field
        if k_sub.dim != K.dim or k_sub.field != K.field:
            raise BadTower("k must be a subspace of K")
        if K.unit() not in k_sub:
            raise BadTower("k must contain 1")
        if not k_sub.contains(module_product(k_sub, k_sub, K)):
            raise BadTower("k is not closed under multiplication")
        for b in k_sub.basis:
            if K.inverse(b) not in k_sub:
                raise BadTower("k is not closed under inversion")
        if k_sub.rank == K.dim:
            raise BadTower("k must be a proper subfield of K")
        if K.dim % k_sub.rank:
            raise BadTower("[K:k] is not an integer")
        self.k = k_sub
        self.degree = K.dim // k_sub.rank
        self.full = Subspace.full(self.F, K.dim)

    @classmethod
    def over_base(cls, K):
        """k = the base field (span of 1)."""
        return cls(K, Subspace.span(K.field, K.dim, [K.unit()]))

    def span(self, *vectors):
        return Subspace.span(self.F, self.K.dim, vectors)

    def kspan(self, *vectors):
        """The k-subspace generated by vectors of K."""
        return module_product(self.k, self.span(*vectors), self.K)

    def ideal(self, level, W):
        if W.rank == 0:
            return PvdIdeal(level + 1, self.full)
        if not W.contains(module_product(self.k, W, self.K)):
            raise ValueError("W is not a k-subspace")
        return PvdIdeal(level, W)

    def phi_inverse(self, W):
        """phi^-1(W) = W + M for k <= W."""
        return self.ideal(0, W)

    def one(self):
        return PvdIdeal(0, self.k)

    def V(self):
        return PvdIdeal(0, self.full)

    def M(self):
        return PvdIdeal(1, self.full)

    # -- arithmetic

    def product(self, I, J):
        return self.ideal(I.level + J.level, module_product(I.W, J.W, self.K))

    def colon(self, I, J):
        if J.W.rank == 0:
            raise ZeroIdeal("colon by zero")
        return self.ideal(I.level - J.level, field_colon(I.W, J.W, self.K))

    def equals(self, I, J):
        return I == J

    def contains(self, I, J):
        """J is a subset of I."""
        if J.level > I.level:
            return True
        return J.level == I.level and I.W.contains(J.W)

    def scale(self, q, I):
        level, u = q
        return self.ideal(I.level + level, module_product(self.span(u), I.W, self.K))

    def principal_generator(self, I):
        T = self.colon(I, I)
        if T.W.rank != I.W.rank:
            return None
        X = field_colon(I.W, T.W, self.K)
        if X.rank == 0:
            return None
        u = X.basis[0]
        q = (I.level - T.level, u)
        return q if self.scale(q, T) == I else None

    def is_isomorphic(self, I, J):
        """u with J = X^m u I, or None."""
        if I.W.rank != J.W.rank:
            return None
        X = field_colon(J.W, I.W, self.K)
        if X.rank == 0:
            return None
        return (J.level - I.level, X.basis[0])

    # -- display

    def describe(self, I):
        return {"level": I.level, "W": [self.K.format(v) for v in I.W.basis], "dim_W": I.W.rank}

    def describe_ring(self, T):
        if T == self.one():
            return "R"
        if T == self.V():
            return "V"
        return self.describe(T)

    def describe_element(self, q):
        level, u = q
        return f"X^{level}*({self.K.format(u)})"

    # -- truncated power-series model (test oracle)

    def truncated(self, I, lo, depth):
        """Coefficient blocks of degrees lo..lo+depth-1 allowed in I."""
        n = self.K.dim
        vecs = []
        for i in range(depth):
            d = lo + i
            if d < I.level:
                continue
            basis = I.W.basis if d == I.level else self.full.basis
            for b in basis:
                v = [self.F(0)] * (depth * n)
                v[i * n : (i + 1) * n] = b
                vecs.append(v)
        return Subspace.span(self.F, depth * n, vecs)

    def _monomial_gens(self, I):
        gens = [(I.level, w) for w in I.W.basis]
        gens += [(I.level + 1, e) for e in self.full.basis]
        return gens

    def brute_force_colon(self, I, J, depth=4):
        """(I : J) in the window of degrees lo..lo+depth-1, lo = a-b-2, by
        solving x*g in I for every R-generator g of J."""
        K, F, n = self.K, self.F, self.K.dim
        lo = I.level - J.level - 2
        ann_W = I.W.annihilator().basis
        unit_rows = [tuple(F(int(i == j)) for j in range(n)) for i in range(n)]
        cons = []
        for v, g in self._monomial_gens(J):
            images = [K.mul(K.basis_vector(j), g) for j in range(n)]
            for i in range(depth):
                d = lo + i + v
                if d > I.level:
                    continue
                rows = unit_rows if d < I.level else ann_W
                for alpha in rows:
                    row = [F(0)] * (depth * n)
                    for j in range(n):
                        row[i * n + j] = sum(a * x for a, x in zip(alpha, images[j]))
                    cons.append(row)
        return lo, Subspace.span(F, depth * n, nullspace(cons, F, depth * n))

    def brute_force_product(self, I, J, lo, depth=4):
        """I*J in the window, from products of monomial R-generators and the
        R-span X^v (k u + M) of each product X^v u."""
        K, F, n = self.K, self.F, self.K.dim
        vecs = []
        for (v1, g1), (v2, g2) in itertools.product(self._monomial_gens(I), self._monomial_gens(J)):
            v, u = v1 + v2, K.mul(g1, g2)
            for i in range(depth):
                d = lo + i
                if d < v:
                    continue
                block = [K.mul(kb, u) for kb in self.k.basis] if d == v else list(self.full.basis)
                for b in block:
                    row = [F(0)] * (depth * n)
                    row[i * n : (i + 1) * n] = b
                    vecs.append(row)
        return Subspace.span(F, depth * n, vecs)

    def random_subspace_over_k(self, rng, contains_one=True, proper=True, bound=3):
        """Random k-subspace W of K (k <= W < K when asked)."""
        n = self.K.dim
        while True:
            r = rng.randint(0, self.degree - 1)
            vecs = [self.K.unit()] if contains_one else []
            vecs += [tuple(self.F(rng.randint(-bound, bound)) for _ in range(n)) for _ in range(r)]
            if not contains_one and not any(any(v) for v in vecs):
                continue
            W = self.kspan(*vecs)
            if W.rank == 0 or (proper and W.rank == n):
                continue
            return W


# ------------------------------------------------------------ analyses


@dataclass
class NonRegularWitness:
    x: Optional[tuple]
    W: Subspace
    ideal: PvdIdeal
    square_colon_product: PvdIdeal
    strict: bool
    below_XM: bool

    def to_json(self, Rg):
        return {
            "x": None if self.x is None else Rg.K.format(self.x),
            "W": [Rg.K.format(v) for v in self.W.basis],
            "ideal": Rg.describe(self.ideal),
            "I2_colon_product": Rg.describe(self.square_colon_product),
            "strict": self.strict,
            "below_XM": self.below_XM,
        }


def _candidates(K):
    n = K.dim
    e = [K.basis_vector(i) for i in range(n)]
    yield from e
    for i, j in itertools.combinations(range(n), 2):
        for s in (1, -1):
            yield K.add(e[i], K.scale(s, e[j]))


def _witness_for(Rg, x, W):
    I = Rg.ideal(1, W)
    I2 = Rg.product(I, I)
    P = Rg.product(I2, Rg.colon(I, I2))
    return NonRegularWitness(
        x=x,
        W=W,
        ideal=I,
        square_colon_product=P,
        strict=Rg.contains(I, P) and P != I,
        below_XM=Rg.contains(PvdIdeal(2, Rg.full), P),
    )


def quadratic_dichotomy_holds(Rg, x):
    """x^2 lies in k + xk."""
    K = Rg.K
    return K.mul(x, x) in Rg.kspan(K.unit(), x)


def degree_witness(Rg):
    """For [K:k] > 2: x with x^2 outside k + xk (or, failing that, a free
    system 1, x, z with (W:W) = k), and the non-regular ideal X*(W + M)."""
    if Rg.degree <= 2:
        return None
    K = Rg.K
    for x in _candidates(K):
        if x in Rg.k:
            continue
        if not quadratic_dichotomy_holds(Rg, x):
            return _witness_for(Rg, x, Rg.kspan(K.unit(), x))
    cands = [x for x in _candidates(K) if x not in Rg.k]
    for x, z in itertools.combinations(cands, 2):
        W = Rg.kspan(K.unit(), x, z)
        if W.rank == 3 * Rg.k.rank and W.rank < K.dim and field_colon(W, W, K) == Rg.k:
            return _witness_for(Rg, None, W)
    raise AssertionError("no witness found; [K:k] > 2 guarantees one")


theorem51_witness = degree_witness


@dataclass
class PvdVerdict:
    degree: int
    clifford: bool
    boolean: bool
    exhaustive: bool
    classes: list
    semigroup: object = None
    witness: Optional[NonRegularWitness] = None
    reports: list = field(default_factory=list)

    def to_json(self, Rg):
        return {
            "degree": self.degree,
            "clifford": self.clifford,
            "boolean": self.boolean,
            "exhaustive": self.exhaustive,
            "classes": self.classes,
            "table": None if self.semigroup is None else [list(r) for r in self.semigroup.table],
            "witness": None if self.witness is None else self.witness.to_json(Rg),
            "reports": [r.to_json() for r in self.reports],
        }


def shape_battery(Rg, rng=None, per_dim=3):
    """Ideals X^n (W + M) with W of each k-dimension 1..[K:k]."""
    rng = rng or random.Random(0)
    K = Rg.K
    out = [Rg.one(), Rg.V(), Rg.M()]
    for _ in range(per_dim):
        u = tuple(Rg.F(rng.randint(-3, 3)) for _ in range(K.dim))
        if any(u):
            out.append(Rg.ideal(rng.randint(-1, 2), Rg.kspan(u)))
    for _ in range(per_dim * Rg.degree):
        W = Rg.random_subspace_over_k(rng, contains_one=False, proper=False)
        out.append(Rg.ideal(rng.randint(-1, 2), W))
    return out


def pvd_class_analysis(Rg, rng=None):
    """Class-level verdict by k-dimension of W. For [K:k] = 2 every W is xk
    or K, so the classes are [R] and [V] and the split is exhaustive."""
    if Rg.degree not in (2, 3, 4):
        raise UnsupportedDegree(f"[K:k] = {Rg.degree}")
    battery = shape_battery(Rg, rng)
    reports = [regularity_report(Rg, I) for I in battery]
    if Rg.degree == 2:
        reps = [Rg.one(), Rg.V()]

        def cls(I):
            for k, R in enumerate(reps):
                if Rg.is_isomorphic(R, I) is not None:
                    return k
            raise AssertionError(f"{Rg.describe(I)} is neither [R] nor [V]")

        for I in battery:
            cls(I)
        table = [[cls(Rg.product(a, b)) for b in reps] for a in reps]
        S = build_semigroup(["R", "V"], table)
        return PvdVerdict(
            degree=2,
            clifford=is_clifford(S)[0] and all(r.regular for r in reports),
            boolean=is_boolean(S)[0] and all(r.scalar_idempotent for r in reports),
            exhaustive=True,
            classes=["R", "V"],
            semigroup=S,
            reports=reports,
        )
    wit = degree_witness(Rg)
    reports.append(regularity_report(Rg, wit.ideal))
    return PvdVerdict(
        degree=Rg.degree,
        clifford=False,
        boolean=False,
        exhaustive=False,
        classes=[f"dim_k W = {d}" for d in range(1, Rg.degree + 1)],
        witness=wit,
        reports=reports,
    )


def valuation_ring_battery(Rg, levels=range(-2, 4)):
    """The V-ideals X^n V: each is principal in V = (I:I)."""
    return [PvdIdeal(n, Rg.full) for n in levels]


# ------------------------------------------------------------ towers


@functools.lru_cache(maxsize=None)
def biquadratic_over_Q():
    """Q(sqrt 2, sqrt 3) with k = Q."""
    return PvdRing.over_base(FieldTower.biquadratic(2, 3))


@functools.lru_cache(maxsize=None)
def quadratic_over_Q(a=2):
    return PvdRing.over_base(FieldTower.quadratic(a))


@functools.lru_cache(maxsize=None)
def intermediate_over_sqrt2():
    """Q(sqrt 2, sqrt 3) with k = Q(sqrt 2)."""
    K = FieldTower.biquadratic(2, 3)
    return PvdRing(K, Subspace.span(QQ, 4, [K.basis_vector(0), K.basis_vector(1)]))


@functools.lru_cache(maxsize=None)
def prime_quartic(p=5, c0=-2):
    """F_p[t]/(t^4 + c0) with k = F_p."""
    from .fields import GF

    F = GF(p)
    return PvdRing.over_base(FieldTower.from_minpoly(F, [c0, 0, 0, 0, 1]))


@functools.lru_cache(maxsize=None)
def prime_quartic_over_quadratic(p=5, c0=-2):
    """F_p[t]/(t^4 + c0) with k = span{1, t^2} (the subfield of order p^2)."""
    from .fields import GF

    F = GF(p)
    K = FieldTower.from_minpoly(F, [c0, 0, 0, 0, 1])
    return PvdRing(K, Subspace.span(F, 4, [K.basis_vector(0), K.basis_vector(2)]))


def load_tower(obj):
    """Tower spec: {base: "Q" | "F_p", dim, mult_table, k_basis_rows}."""
    from .fields import field_from_tag

    F = field_from_tag(obj["base"])
    dim = int(obj["dim"])
    table = [[[Fraction(x) for x in v] for v in row] for row in obj["mult_table"]]
    if len(table) != dim:
        raise BadTower("mult_table does not match dim")
    labels = obj.get("labels")
    K = FieldTower(F, table, labels)
    k = Subspace.span(F, dim, [[Fraction(x) for x in r] for r in obj["k_basis_rows"]])
    return PvdRing(K, k)


def tower_to_json(Rg):
    def enc(x):
        return str(x)

    return {
        "base": Rg.F.tag,
        "dim": Rg.K.dim,
        "mult_table": [[[enc(x) for x in v] for v in row] for row in Rg.K.table],
        "k_basis_rows": [[enc(x) for x in r] for r in Rg.k.basis],
        "labels": Rg.K.labels,
    }


# ------------------------------------------------- D + X K[X], D a DVR


def _vp(x, p):
    x = Fraction(x)
    if x == 0:
        raise ZeroIdeal("zero scalar")
    v, n, d = 0, x.numerator, x.denominator
    while n % p == 0:
        n //= p
        v += 1
    while d % p == 0:
        d //= p
        v -= 1
    return v


@dataclass(frozen=True)
class DvrIdeal:
    """X^m h (F + X Q[X]) with h = num/den, h(0) = 1, X not dividing num or
    den, and F = p^a Z_(p) (a an int) or F = Q (a None)."""

    m: int
    num: tuple
    den: tuple
    a: Optional[int]


class DvrPullback:
    """R = Z_(p) + X Q[X]."""

    def __init__(self, p):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.F = QQ

    def ideal(self, f_num, f_den=(1,), a=0):
        """f * (p^a Z_(p) + X Q[X]) for a rational function f; a=None gives
        f * Q[X]."""
        F, p = self.F, self.p
        num, den = poly.trim(f_num, F), poly.trim(f_den, F)
        if not num or not den:
            raise ZeroIdeal("zero generator")
        m = 0
        while num[0] == 0:
            num, m = num[1:], m + 1
        while den[0] == 0:
            den, m = den[1:], m - 1
        lam = Fraction(num[0]) / den[0]
        num = poly.scale(num, 1 / Fraction(num[0]), F)
        den = poly.scale(den, 1 / Fraction(den[0]), F)
        g = poly.gcd(num, den, F)
        g = poly.scale(g, 1 / Fraction(g[0]), F)
        num = poly.divmod_(num, g, F)[0]
        den = poly.divmod_(den, g, F)[0]
        if a is not None:
            a += _vp(lam, p)
        return DvrIdeal(m, num, den, a)

    def _f(self, I):
        F = self.F
        return poly.shift(I.num, max(I.m, 0), F), poly.shift(I.den, max(-I.m, 0), F)

    def one(self):
        return DvrIdeal(0, (Fraction(1),), (Fraction(1),), 0)

    def product(self, I, J):
        F = self.F
        a = None if I.a is None or J.a is None else I.a + J.a
        n1, d1 = self._f(I)
        n2, d2 = self._f(J)
        return self.ideal(poly.mul(n1, n2, F), poly.mul(d1, d2, F), a)

    def colon(self, I, J):
        F = self.F
        n1, d1 = self._f(I)
        n2, d2 = self._f(J)
        num, den = poly.mul(n1, d2, F), poly.mul(d1, n2, F)
        if J.a is None and I.a is not None:
            # (p^a D + XK[X] : K[X]) = X K[X]
            return self.ideal(poly.shift(num, 1, F), den, None)
        if I.a is None:
            return self.ideal(num, den, None)
        return self.ideal(num, den, I.a - J.a)

    def equals(self, I, J):
        return I == J

    def contains(self, I, J):
        """J is a subset of I: 1 in (I : J)."""
        H = self.colon(I, J)
        if H.num != (1,) or H.m > 0:
            return False
        if H.m < 0:
            return True
        return H.a is None or H.a <= 0

    def scale(self, q, I):
        num, den = q
        n1, d1 = self._f(I)
        return self.ideal(poly.mul(n1, num, self.F), poly.mul(d1, den, self.F), I.a)

    def principal_generator(self, I):
        T = self.colon(I, I)
        n, d = self._f(I)
        if I.a is not None:
            n = poly.scale(n, Fraction(self.p) ** I.a, self.F)
        q = (n, d)
        return q if self.scale(q, T) == I else None

    def describe(self, I):
        h = poly.to_str(I.num) if I.den == (1,) else f"({poly.to_str(I.num)})/({poly.to_str(I.den)})"
        F = "Q" if I.a is None else f"{self.p}^{I.a} Z_({self.p})"
        return {"X_power": I.m, "h": h, "F": F}

    def describe_ring(self, T):
        if T == self.one():
            return "R"
        if T.a is None and T.m == 0 and T.num == (1,) and T.den == (1,):
            return "Q[X]"
        return self.describe(T)

    def describe_element(self, q):
        num, den = q
        return poly.to_str(num) if den == (1,) else f"({poly.to_str(num)})/({poly.to_str(den)})"


def dvr_battery(R, a_values=range(0, 4), f_values=None):
    F = QQ
    if f_values is None:
        f_values = [(1,), (0, 1), (1, 1), (0, 0, 1), (2, -1, 3), (R.p, 1)]
    out = []
    for f in f_values:
        fp = poly.trim(f, F)
        for a in a_values:
            out.append(R.ideal(fp, (1,), a))
        out.append(R.ideal(fp, (1,), None))
    return out


def dvr_coefficient_instance(p, battery=None):
    """Verdicts over D + X Q[X] with D = Z_(p): every battery ideal is
    regular and principal over its multiplier ring."""
    R = DvrPullback(p)
    battery = battery if battery is not None else dvr_battery(R)
    reports = [regularity_report(R, I) for I in battery]
    return {
        "p": p,
        "clifford": all(r.regular for r in reports),
        "strongly_stable": all(r.strongly_stable for r in reports),
        "reports": reports,
    }


def pvd_product(Rg, I, J):
    return Rg.product(I, J)


def pvd_colon(Rg, I, J):
    return Rg.colon(I, J)
