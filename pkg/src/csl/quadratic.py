"""Fractional ideals of imaginary quadratic orders as rational lattices, and
the finite class semigroup S(O) of an order O.

Coordinates are always relative to the maximal order's basis (1, w) with
w = (d_K + sqrt(d_K))/2, whatever order acts. The order of conductor f is
Z + Z*f*w.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from . import kernels
from .errors import (
    BadDiscriminant,
    BoundTooSmall,
    InternalInvariant,
    RealQuadraticUnsupported,
    WrongMultiplier,
    ZeroIdeal,
)
from .linalg import IntMat2, hnf2, in_lattice
from .semigroup import build_semigroup


def _squarefree(n):
    n = abs(n)
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 1
    return True


def is_fundamental(d):
    if d in (0, 1):
        return False
    if d % 4 == 1:
        return _squarefree(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and _squarefree(m)
    return False


def divisors(n):
    return [k for k in range(1, n + 1) if n % k == 0]


def reduced_form_count(D):
    """Class number h(D): primitive reduced forms (a, b, c) of discriminant D."""
    D = int(D)
    if D >= 0 or D % 4 not in (0, 1):
        raise BadDiscriminant(f"{D} is not a negative discriminant")
    return kernels.reduced_form_count_raw(D)


def reduced_forms(D):
    """The primitive reduced forms themselves, for display and cross-checks."""
    if D >= 0 or D % 4 not in (0, 1):
        raise BadDiscriminant(f"{D} is not a negative discriminant")
    out = []
    for a in range(1, isqrt(-D // 3) + 1):
        for b in range(-a + 1, a + 1):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (a == c and b < 0) or gcd(gcd(a, abs(b)), c) != 1:
                continue
            out.append((a, b, c))
    return out


@dataclass(frozen=True)
class QuadraticOrder:
    d_K: int
    f: int = 1

    def __post_init__(self):
        if self.d_K > 0:
            raise RealQuadraticUnsupported("real quadratic orders are not supported")
        if not is_fundamental(self.d_K):
            raise BadDiscriminant(f"{self.d_K} is not a fundamental discriminant")
        if self.f < 1:
            raise ValueError("conductor must be positive")

    @property
    def D(self):
        return self.f * self.f * self.d_K

    @property
    def trace_w(self):
        return self.d_K

    @property
    def norm_w(self):
        return (self.d_K * self.d_K - self.d_K) // 4

    def suborder(self, fp):
        return QuadraticOrder(self.d_K, fp)

    def lattice(self):
        return order_lattice(self.d_K, self.f)

    def class_number(self):
        return reduced_form_count(self.D)


# ---------------------------------------------------------------- elements


def emul(d_K, x, y):
    t, n = d_K, (d_K * d_K - d_K) // 4
    return (x[0] * y[0] - n * x[1] * y[1], x[0] * y[1] + x[1] * y[0] + t * x[1] * y[1])


def enorm(d_K, x):
    n = (d_K * d_K - d_K) // 4
    return x[0] * x[0] + d_K * x[0] * x[1] + n * x[1] * x[1]


def econj(d_K, x):
    return (x[0] + d_K * x[1], -x[1])


def einv(d_K, x):
    N = enorm(d_K, x)
    if N == 0:
        raise ZeroDivisionError("inverse of zero")
    c = econj(d_K, x)
    return (Fraction(c[0]) / N, Fraction(c[1]) / N)


def format_element(x):
    a, b = x
    if b == 0:
        return str(a)
    w = "w" if b == 1 else ("-w" if b == -1 else f"{b}*w")
    if a == 0:
        return w
    return f"{a} - {w[1:]}" if w.startswith("-") else f"{a} + {w}"


# ---------------------------------------------------------------- lattices


@dataclass(frozen=True)
class QuadLattice:
    """The lattice (1/denom) * (Z*(a, 0) + Z*(c, d)) in coordinates (1, w)."""

    d_K: int
    denom: int
    basis: IntMat2

    def vectors(self):
        m, q = self.basis, self.denom
        return ((Fraction(m.a, q), Fraction(0)), (Fraction(m.c, q), Fraction(m.d, q)))

    def norm(self):
        """Index in the maximal order (rational for fractional lattices)."""
        return Fraction(self.basis.a * self.basis.d, self.denom * self.denom)

    def __contains__(self, v):
        q = self.denom
        x, y = Fraction(v[0]) * q, Fraction(v[1]) * q
        if x.denominator != 1 or y.denominator != 1:
            return False
        return in_lattice(self.basis, (int(x), int(y)))

    def contains(self, other):
        return all(v in self for v in other.vectors())

    def label(self):
        m = self.basis
        s = f"[{m.a}, {format_element((m.c, m.d))}]"
        return s if self.denom == 1 else f"{s}/{self.denom}"

    def to_json(self):
        m = self.basis
        return {"denom": self.denom, "hnf": [[m.a, m.b], [m.c, m.d]]}


def lattice_from_vectors(d_K, vectors):
    vecs = [(Fraction(x), Fraction(y)) for x, y in vectors]
    L = 1
    for x, y in vecs:
        L = L * x.denominator // gcd(L, x.denominator)
        L = L * y.denominator // gcd(L, y.denominator)
    return _from_int(d_K, [(int(x * L), int(y * L)) for x, y in vecs], L)


def _from_int(d_K, vecs, den):
    """Lattice spanned by integer vectors divided by a common denominator."""
    m = hnf2(vecs)
    h = gcd(den, gcd(gcd(m.a, m.c), m.d))
    return QuadLattice(d_K, den // h, IntMat2(m.a // h, 0, m.c // h, m.d // h))


def _imul(d_K, x, y):
    n = (d_K * d_K - d_K) // 4
    return (x[0] * y[0] - n * x[1] * y[1], x[0] * y[1] + x[1] * y[0] + d_K * x[1] * y[1])


def _ivecs(L):
    m = L.basis
    return ((m.a, 0), (m.c, m.d))


def order_lattice(d_K, fp):
    return QuadLattice(d_K, 1, IntMat2(1, 0, 0, fp))


def _check_field(I, J):
    if I.d_K != J.d_K:
        raise ValueError("lattices live in different quadratic fields")


def ideal_product(I, J):
    _check_field(I, J)
    d = I.d_K
    return _from_int(d, [_imul(d, u, v) for u in _ivecs(I) for v in _ivecs(J)], I.denom * J.denom)


def _scale_int(q, qden, I):
    return _from_int(I.d_K, [_imul(I.d_K, q, v) for v in _ivecs(I)], qden * I.denom)


def scale(q, I):
    x, y = Fraction(q[0]), Fraction(q[1])
    qd = x.denominator * y.denominator // gcd(x.denominator, y.denominator)
    return _scale_int((int(x * qd), int(y * qd)), qd, I)


def _dual(L):
    """Dual lattice vectors (integers) and their common denominator."""
    m, den = L.basis, L.denom
    return [(den * m.d, -den * m.c), (0, den * m.a)], m.a * m.d


def _from_int_pieces(d_K, pieces):
    den = 1
    for _, q in pieces:
        den = den * q // gcd(den, q)
    vecs = [(x * (den // q), y * (den // q)) for vs, q in pieces for x, y in vs]
    return _from_int(d_K, vecs, den)


def intersect(I, J):
    _check_field(I, J)
    S = _from_int_pieces(I.d_K, [_dual(I), _dual(J)])
    return _from_int_pieces(I.d_K, [_dual(S)])


def colon(I, J):
    """(I : J) = {x : xJ in I}, the intersection of m^-1 I over the HNF
    generators m of J."""
    _check_field(I, J)
    d = I.d_K
    out = None
    for m in _ivecs(J):
        if m == (0, 0):
            continue
        # (m / den)^-1 = den * conj(m) / N(m)
        N = m[0] * m[0] + d * m[0] * m[1] + (d * d - d) // 4 * m[1] * m[1]
        inv = (J.denom * (m[0] + d * m[1]), -J.denom * m[1])
        piece = _scale_int(inv, N, I)
        out = piece if out is None else intersect(out, piece)
    if out is None:
        raise ZeroIdeal("colon by the zero ideal")
    return out


def is_order_module(L, fp):
    """L is a module over the order of conductor fp."""
    return all(in_lattice(L.basis, _imul(L.d_K, (0, fp), v)) for v in _ivecs(L))


def multiplier_conductor(I):
    """Conductor f' of the multiplier ring (I:I)."""
    T = colon(I, I)
    m = T.basis
    if T.denom != 1 or m.a != 1 or m.c != 0:
        raise InternalInvariant(f"(I:I) = {T.label()} is not an order")
    return m.d


def multiplier_order(I, order=None):
    fp = multiplier_conductor(I)
    if order is not None and order.f % fp:
        raise InternalInvariant(f"multiplier conductor {fp} does not divide {order.f}")
    return QuadraticOrder(I.d_K, fp)


def norm_solutions(I, target):
    """Elements q of I with N(q) = target, by bounded search in the lattice
    coordinates (finitely many: the norm form is positive definite)."""
    m, den, d_K = I.basis, I.denom, I.d_K
    n = (d_K * d_K - d_K) // 4
    N = Fraction(target) * den * den
    if N.denominator != 1 or N <= 0:
        return
    N = int(N)
    A = m.a * m.a
    B = 2 * m.a * m.c + d_K * m.a * m.d
    C = m.c * m.c + d_K * m.c * m.d + n * m.d * m.d
    vmax = isqrt(4 * N // (m.d * m.d * -d_K)) + 1
    for v in sorted(range(-vmax, vmax + 1), key=lambda k: (abs(k), -k)):
        disc = B * B * v * v - 4 * A * (C * v * v - N)
        if disc < 0:
            continue
        r = isqrt(disc)
        if r * r != disc:
            continue
        for num in sorted({-B * v + r, -B * v - r}, reverse=True):
            if num % (2 * A) == 0:
                u = num // (2 * A)
                yield (Fraction(u * m.a + v * m.c, den), Fraction(v * m.d, den))


def is_principal_over(I, T):
    """A generator q with qT = I, or None. T must be the multiplier order."""
    fp = T.f if isinstance(T, QuadraticOrder) else int(T)
    if multiplier_conductor(I) != fp:
        raise WrongMultiplier(f"{I.label()} is not an ideal with multiplier conductor {fp}")
    TL = order_lattice(I.d_K, fp)
    for q in norm_solutions(I, I.norm() / fp):
        if scale(q, TL) == I:
            return q
    return None


def is_isomorphic(I, J):
    """q with J = qI, or None."""
    if I.basis.det() == 0 or J.basis.det() == 0:
        raise ZeroIdeal("zero lattice")
    fp = multiplier_conductor(I)
    if multiplier_conductor(J) != fp:
        return None
    H = colon(J, I)
    if multiplier_conductor(H) != fp:
        return None
    q = is_principal_over(H, fp)
    if q is not None and scale(q, I) == J:
        return q
    return None


# ------------------------------------------------------------ class tables


@dataclass
class ClassTable:
    order: QuadraticOrder
    reps: list
    table: list
    semigroup: object
    multiplier_of: dict

    def labels(self):
        return list(self.semigroup.labels)

    def index_of(self, I):
        fp = multiplier_conductor(I)
        for k, R in enumerate(self.reps):
            if self.multiplier_of[k] == fp and is_isomorphic(R, I) is not None:
                return k
        return None


def _label(rep, fp):
    return f"f'={fp}:{rep.label()}"


def _order_sublattices(d_K, fp, index):
    """Sublattices of the order of conductor fp with the given index, in
    increasing HNF order, that are modules over that order."""
    for a in divisors(index):
        d = index // a
        for c in range(a):
            L = lattice_from_vectors(d_K, [(a, 0), (c, d * fp)])
            if is_order_module(L, fp):
                yield L


def _classify_into(reps, fps, L, fp):
    for k, R in enumerate(reps):
        if fps[k] == fp and is_isomorphic(R, L) is not None:
            return k
    return None


def _fill_table(order, reps, fps):
    n = len(reps)
    table = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            P = ideal_product(reps[i], reps[j])
            k = _classify_into(reps, fps, P, multiplier_conductor(P))
            if k is None:
                raise BoundTooSmall(f"product of classes {i} and {j} matched no representative")
            table[i][j] = table[j][i] = k
    labels = [_label(r, fp) for r, fp in zip(reps, fps)]
    S = build_semigroup(labels, table)
    return ClassTable(order, list(reps), table, S, dict(enumerate(fps)))


def _structural_reps(order, norm_bound):
    reps, fps = [], []
    for fp in sorted(divisors(order.f), reverse=True):
        Dp = fp * fp * order.d_K
        bound = max(1, norm_bound if norm_bound is not None else isqrt(-Dp // 3))
        for N in range(1, bound + 1):
            for L in _order_sublattices(order.d_K, fp, N):
                if multiplier_conductor(L) != fp:
                    continue
                if _classify_into(reps, fps, L, fp) is None:
                    reps.append(L)
                    fps.append(fp)
    return reps, fps


def enumerate_class_semigroup(order, norm_bound=None, max_doublings=4):
    """S(O) as the disjoint union over f' | f of Pic(O_f'), each class
    represented by its least-norm integral O_f'-ideal."""
    bound = norm_bound
    for _ in range(max_doublings + 1):
        reps, fps = _structural_reps(order, bound)
        try:
            return _fill_table(order, reps, fps)
        except BoundTooSmall:
            base = bound or max(1, isqrt(-order.D // 3))
            bound = 2 * base
    raise BoundTooSmall(f"no closed class set for {order} up to norm bound {bound}")


def exhaustive_sublattice_oracle(order, index_bound):
    """Classes met by every O-submodule of O with index <= index_bound."""
    reps, fps = [], []
    for N in range(1, index_bound + 1):
        for L in _order_sublattices(order.d_K, order.f, N):
            fp = multiplier_conductor(L)
            if _classify_into(reps, fps, L, fp) is None:
                reps.append(L)
                fps.append(fp)
    return _fill_table(order, reps, fps)


def match_tables(A, B):
    """Bijection between the classes of two tables of one order that
    respects multiplication, or None."""
    if len(A.reps) != len(B.reps):
        return None
    perm = []
    for k, R in enumerate(A.reps):
        j = _classify_into(B.reps, B.multiplier_of, R, A.multiplier_of[k])
        if j is None or j in perm:
            return None
        perm.append(j)
    n = len(perm)
    for i in range(n):
        for j in range(n):
            if perm[A.table[i][j]] != B.table[perm[i]][perm[j]]:
                return None
    return perm


class QuadIdeals:
    """Ideal arithmetic of a quadratic order for the regularity layer."""

    def __init__(self, order):
        self.order = order

    def product(self, I, J):
        return ideal_product(I, J)

    def colon(self, I, J):
        return colon(I, J)

    def equals(self, I, J):
        return I == J

    def contains(self, I, J):
        return I.contains(J)

    def one(self):
        return self.order.lattice()

    def scale(self, q, I):
        return scale(q, I)

    def principal_generator(self, I):
        return is_principal_over(I, multiplier_conductor(I))

    def describe(self, I):
        return I.label()

    def describe_element(self, q):
        return format_element(q)


def class_table_json(ct, reports=None):
    """Report schema for one order: classes with verdicts, table, and the
    semigroup-level Clifford/Boolean verdicts."""
    from .semigroup import is_boolean, is_clifford

    S = ct.semigroup
    classes = []
    for k, rep in enumerate(ct.reps):
        entry = {
            "label": S.labels[k],
            "norm": str(rep.norm()),
            "multiplier_conductor": ct.multiplier_of[k],
            "idempotent": S.table[k][k] == k,
        }
        if reports is not None:
            r = reports[k]
            entry.update(regular=r.regular, stable=r.stable, strongly_stable=r.strongly_stable)
        classes.append(entry)
    return {
        "discriminant": ct.order.D,
        "fundamental_discriminant": ct.order.d_K,
        "conductor": ct.order.f,
        "classes": classes,
        "table": [list(row) for row in ct.table],
        "clifford": is_clifford(S)[0],
        "boolean": is_boolean(S)[0],
    }
