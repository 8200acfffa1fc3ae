"""Fractional ideals of R = {h in k[X] : h mod c in D}, with D a unital
subalgebra of k[X]/(c).

Every nonzero fractional ideal I satisfies g*c*k[X] <= I <= g*k[X] where
g generates I*k[X]; it is stored as the monic rational function g plus the
subspace S = (I/g) mod c of the window k[X]/(c). With g normalized to be the
gcd of I, (g, S) is unique.
"""

import random
from dataclasses import dataclass

from . import poly
from .errors import NotSubalgebra, ZeroIdeal
from .linalg import StructureAlgebra, Subspace, field_colon, module_product


@dataclass(frozen=True)
class WindowIdeal:
    num: tuple
    den: tuple
    S: Subspace


class WindowRing:
    def __init__(self, field, c, D_polys=None):
        F = field
        self.field = F
        self.c = poly.monic(poly.trim(c, F), F)
        self.n = poly.deg(self.c)
        if self.n < 1:
            raise NotSubalgebra("conductor must have positive degree")
        self.A = StructureAlgebra.from_modulus(F, self.c)
        gens = [poly.one(F)] if D_polys is None else [poly.trim(p, F) for p in D_polys]
        self.D = Subspace.span(F, self.n, [self.phi(p) for p in gens])
        if self.phi(poly.one(F)) not in self.D:
            raise NotSubalgebra("D must contain 1")
        if not self.D.contains(module_product(self.D, self.D, self.A)):
            raise NotSubalgebra("D is not closed under multiplication mod c")

    # -- coordinates

    def phi(self, p):
        r = poly.rem(poly.trim(p, self.field), self.c, self.field)
        return tuple(r) + (self.field(0),) * (self.n - len(r))

    def lift(self, v):
        return poly.trim(v, self.field)

    def in_ring(self, p):
        return self.phi(p) in self.D

    # -- construction

    def normalize(self, num, den, S):
        F = self.field
        lifts = [self.lift(v) for v in S.basis]
        h = poly.gcd_many([self.c] + lifts, F)
        if poly.deg(h) > 0:
            ch = poly.divmod_(self.c, h, F)[0]
            vecs = [self.phi(poly.divmod_(s, h, F)[0]) for s in lifts]
            vecs += [self.phi(poly.shift(ch, j, F)) for j in range(poly.deg(h))]
            S = Subspace.span(F, self.n, vecs)
            num = poly.mul(num, h, F)
        g = poly.gcd(num, den, F)
        num = poly.monic(poly.divmod_(num, g, F)[0], F)
        den = poly.monic(poly.divmod_(den, g, F)[0], F)
        return WindowIdeal(num, den, S)

    def one(self):
        F = self.field
        return WindowIdeal(poly.one(F), poly.one(F), self.D)

    def closure(self):
        """k[X] as a fractional ideal (the overring with full window)."""
        F = self.field
        return WindowIdeal(poly.one(F), poly.one(F), Subspace.full(F, self.n))

    def close_under_D(self, S):
        while True:
            T = S + module_product(self.D, S, self.A)
            if T == S:
                return S
            S = T

    def ideal(self, gens):
        """Ideal of R generated by polynomials."""
        F = self.field
        gens = [poly.trim(p, F) for p in gens]
        gens = [p for p in gens if p]
        if not gens:
            raise ZeroIdeal("no nonzero generators")
        g = poly.gcd_many(gens, F)
        S = Subspace.span(F, self.n, [self.phi(poly.divmod_(p, g, F)[0]) for p in gens])
        return self.normalize(g, poly.one(F), self.close_under_D(S))

    def principal(self, q):
        return self.scale(q, self.one())

    # -- arithmetic

    def product(self, I, J):
        F = self.field
        return self.normalize(
            poly.mul(I.num, J.num, F), poly.mul(I.den, J.den, F), module_product(I.S, J.S, self.A)
        )

    def colon(self, I, J):
        if J.S.rank == 0:
            raise ZeroIdeal("colon by zero")
        F = self.field
        U = field_colon(I.S, J.S, self.A)
        return self.normalize(poly.mul(I.num, J.den, F), poly.mul(I.den, J.num, F), U)

    def equals(self, I, J):
        return I == J

    def _quotient_poly(self, J, I):
        """g_J / g_I when it is a polynomial, else None."""
        F = self.field
        q, r = poly.divmod_(poly.mul(J.num, I.den, F), poly.mul(J.den, I.num, F), F)
        return None if r else q

    def contains(self, I, J):
        """J is a subset of I."""
        q = self._quotient_poly(J, I)
        if q is None:
            return False
        x = Subspace.span(self.field, self.n, [self.phi(q)])
        return I.S.contains(module_product(x, J.S, self.A))

    def scale(self, q, I):
        F = self.field
        num, den = q
        return self.normalize(poly.mul(I.num, num, F), poly.mul(I.den, den, F), I.S)

    def principal_generator(self, I):
        """Generator of I over T = (I:I), or None.

        T is inside k[X] whose units are the nonzero constants, and qT has
        gcd q; so I = qT forces q = g_I up to a constant, and the question
        is whether the windows of I and T coincide.
        """
        T = self.colon(I, I)
        if I.S == T.S:
            return (I.num, I.den)
        return None

    def member(self, I, p):
        F = self.field
        q, r = poly.divmod_(poly.mul(p, I.den, F), I.num, F)
        if r:
            return False
        return self.phi(q) in I.S

    def random_element(self, I, rng, bound=3, extra_deg=3):
        F = self.field
        s = self.lift(I.S.random_element(rng, bound))
        tail = poly.mul(self.c, poly.trim([rng.randint(-bound, bound) for _ in range(extra_deg)], F), F)
        inner = poly.add(s, tail, F)
        # only meaningful for integral ideals (den == 1)
        return poly.mul(inner, I.num, F)

    # -- display

    def describe(self, I):
        g = poly.to_str(I.num) if I.den == poly.one(self.field) else f"({poly.to_str(I.num)})/({poly.to_str(I.den)})"
        return {
            "g": g,
            "window_dim": self.n,
            "subspace_rank": I.S.rank,
            "subspace": [poly.to_str(self.lift(v)) for v in I.S.basis],
        }

    def describe_ring(self, T):
        if T == self.one():
            return "R"
        if T == self.closure():
            return "closure"
        return self.describe(T)

    def describe_element(self, q):
        num, den = q
        if den == poly.one(self.field):
            return poly.to_str(num)
        return f"({poly.to_str(num)})/({poly.to_str(den)})"


def cusp_ring(F):
    """k[X^2, X^3]: conductor X^2, D = k."""
    return WindowRing(F, poly.x_power(2, F))


def ideal_from_generators(R, gens):
    return R.ideal(gens)


def wproduct(I, J, R):
    return R.product(I, J)


def wcolon(I, J, R):
    return R.colon(I, J)


def is_principal_in(R, I):
    return R.principal_generator(I)


def random_battery(R, count, rng=None, max_gens=3, max_deg=4, bound=2):
    """Random nonzero ideals of R generated by random elements of R."""
    rng = rng or random.Random(0)
    F = R.field
    out = []
    while len(out) < count:
        gens = []
        for _ in range(rng.randint(1, max_gens)):
            p = poly.trim([rng.randint(-bound, bound) for _ in range(rng.randint(1, max_deg + 1))], F)
            if p and R.in_ring(p):
                gens.append(p)
        if gens:
            out.append(R.ideal(gens))
    return out
