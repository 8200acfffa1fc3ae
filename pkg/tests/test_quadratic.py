from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from csl.errors import BadDiscriminant, RealQuadraticUnsupported, WrongMultiplier, ZeroIdeal
from csl.quadratic import (
    QuadIdeals,
    QuadraticOrder,
    colon,
    divisors,
    emul,
    enorm,
    enumerate_class_semigroup,
    exhaustive_sublattice_oracle,
    ideal_product,
    intersect,
    is_fundamental,
    is_isomorphic,
    is_principal_over,
    lattice_from_vectors,
    match_tables,
    multiplier_conductor,
    order_lattice,
    reduced_form_count,
    reduced_forms,
    scale,
)
from csl.regularity import check_l_stable, check_stable, regularity_report
from csl.semigroup import is_boolean

GRID = [(d, f) for d in (-3, -4, -7, -8, -11, -15, -20, -23) for f in range(1, 7)]


def kronecker(d, p):
    if p == 2:
        if d % 2 == 0:
            return 0
        return 1 if d % 8 in (1, 7) else -1
    r = pow(d % p, (p - 1) // 2, p)
    return 0 if r == 0 else (1 if r == 1 else -1)


def primes_of(n):
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    return out + ([n] if n > 1 else [])


def order_class_number(d_K, f):
    """h(f^2 d_K) from h(d_K), the unit index and the Euler factors."""
    h = Fraction(reduced_form_count(d_K) * f)
    for p in primes_of(f):
        h *= 1 - Fraction(kronecker(d_K, p), p)
    if f > 1:
        h /= {-3: 3, -4: 2}.get(d_K, 1)
    assert h.denominator == 1
    return int(h)


def span_ideal(order, gens):
    """O-module generated by gens, as a lattice."""
    d, f = order.d_K, order.f
    basis = [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(f))]
    return lattice_from_vectors(d, [emul(d, g, b) for g in gens for b in basis])


@pytest.mark.parametrize("D, h", [(-3, 1), (-4, 1), (-15, 2), (-20, 2), (-23, 3), (-47, 5), (-71, 7), (-84, 4), (-12, 1), (-16, 1), (-27, 1), (-60, 2)])
def test_class_numbers(D, h):
    assert reduced_form_count(D) == h
    assert len(reduced_forms(D)) == h


def test_fundamental_discriminants():
    assert [d for d in range(-1, -30, -1) if is_fundamental(d)] == [-3, -4, -7, -8, -11, -15, -19, -20, -23, -24]
    for bad in (0, -1, -2, -5, -12):
        with pytest.raises(BadDiscriminant):
            QuadraticOrder(bad, 1)
    with pytest.raises(RealQuadraticUnsupported):
        QuadraticOrder(5, 1)


@pytest.mark.parametrize("d, f", GRID)
def test_order_class_number_formula(d, f):
    assert QuadraticOrder(d, f).class_number() == order_class_number(d, f)


@pytest.mark.parametrize("d, f", [(-3, 2), (-3, 6), (-4, 4), (-15, 1), (-23, 6), (-20, 3)])
def test_semigroup_size(d, f):
    ct = enumerate_class_semigroup(QuadraticOrder(d, f))
    assert ct.semigroup.n == sum(order_class_number(d, fp) for fp in divisors(f))


def test_two_one_plus_sqrt_minus3():
    O = QuadraticOrder(-3, 2)
    # sqrt(-3) = 2w + 3, so 1 + sqrt(-3) = 4 + 2w
    I = span_ideal(O, [(2, 0), (4, 2)])
    assert I == lattice_from_vectors(-3, [(2, 0), (0, 2)])
    A = QuadIdeals(O)
    assert ideal_product(I, I) == scale((2, 0), I)
    assert colon(I, I) == order_lattice(-3, 1)
    assert multiplier_conductor(I) == 1
    q = is_principal_over(I, 1)
    assert q is not None and enorm(-3, q) == 4
    assert check_l_stable(A, I) == (True, "stable", 1)
    with pytest.raises(WrongMultiplier):
        is_principal_over(I, 2)


def test_invertible_ideal_of_maximal_order_is_stable():
    O = QuadraticOrder(-23, 1)
    A = QuadIdeals(O)
    P = span_ideal(O, [(2, 0), (0, 1)])  # a prime over 2 (2 splits)
    assert P.norm() == 2
    assert check_stable(A, P)
    r = regularity_report(A, P)
    assert r.regular and r.stable and not r.strongly_stable


lat = st.tuples(st.integers(1, 9), st.integers(0, 8), st.integers(1, 9), st.sampled_from([1, 2, 3]))


def make_lattice(d, t):
    a, c, dd, den = t
    return lattice_from_vectors(d, [(Fraction(a, den), 0), (Fraction(c % a, den), Fraction(dd, den))])


@given(st.sampled_from([-3, -4, -7, -15]), lat, lat, lat)
def test_lattice_arithmetic(d, a, b, c):
    I, J, K = (make_lattice(d, t) for t in (a, b, c))
    assert ideal_product(I, J) == ideal_product(J, I)
    assert ideal_product(ideal_product(I, J), K) == ideal_product(I, ideal_product(J, K))
    H = colon(I, J)
    assert I.contains(ideal_product(H, J))
    # H is the largest such lattice: enlarging it by index 2 or 3 breaks it
    for p in (2, 3):
        bigger = lattice_from_vectors(d, list(H.vectors()) + [(v[0] / p, v[1] / p) for v in H.vectors()[:1]])
        assert not I.contains(ideal_product(bigger, J))
    M = intersect(I, J)
    assert I.contains(M) and J.contains(M)
    assert colon(I, I) == order_lattice(d, multiplier_conductor(I))


@given(st.sampled_from([-3, -4, -7, -15]), lat, st.tuples(st.integers(-5, 5), st.integers(-5, 5)))
def test_isomorphism_by_scaling(d, t, q):
    if q == (0, 0):
        return
    I = make_lattice(d, t)
    J = scale(q, I)
    u = is_isomorphic(I, J)
    assert u is not None and scale(u, I) == J
    assert multiplier_conductor(I) == multiplier_conductor(J)


def test_zero_lattice_rejected():
    with pytest.raises(Exception):
        lattice_from_vectors(-3, [(0, 0), (0, 0)])


def test_oracle_agreement_small():
    O = QuadraticOrder(-4, 3)
    assert match_tables(enumerate_class_semigroup(O), exhaustive_sublattice_oracle(O, 40)) is not None


@pytest.mark.parametrize("d, f", GRID)
def test_boolean_descends_to_overorders(d, f):
    """Boolean S(O_f) forces Boolean S(O_f') for f' | f."""
    if is_boolean(enumerate_class_semigroup(QuadraticOrder(d, f)).semigroup)[0]:
        for fp in divisors(f):
            assert is_boolean(enumerate_class_semigroup(QuadraticOrder(d, fp)).semigroup)[0]


@pytest.mark.parametrize("d, f", GRID)
def test_idempotents_are_overrings(d, f):
    """The idempotent classes are exactly the classes of the overorders
    O_f', f' | f; in a Boolean table they are all the classes."""
    ct = enumerate_class_semigroup(QuadraticOrder(d, f))
    S = ct.semigroup
    idem = {k for k in range(S.n) if S.mul(k, k) == k}
    over = {ct.index_of(order_lattice(d, fp)) for fp in divisors(f)}
    assert idem == over
    assert is_boolean(S)[0] == (idem == set(range(S.n)))


def test_class_table_every_class_is_regular_on_a_nonboolean_order():
    O = QuadraticOrder(-23, 6)
    ct = enumerate_class_semigroup(O)
    A = QuadIdeals(O)
    assert all(regularity_report(A, I).regular for I in ct.reps)
    assert not is_boolean(ct.semigroup)[0]
