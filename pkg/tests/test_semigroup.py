import json
import random

import pytest
from hypothesis import given, strategies as st

from csl import kernels
from csl.errors import NotAssociative, NotCommutative
from csl.semigroup import (
    build_semigroup,
    clifford_decomposition,
    cyclic_group,
    is_boolean,
    is_clifford,
    is_group,
    load_semigroup,
    random_commutative_semigroup,
    regular_elements,
    relabel,
    semilattice_chain,
)


@st.composite
def semigroups(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return build_semigroup(None, random_commutative_semigroup(n, random.Random(seed)))


def test_rejects_bad_tables():
    with pytest.raises(NotCommutative) as e:
        build_semigroup(None, [[0, 0], [1, 1]])
    assert tuple(e.value.witness) == (0, 1)
    # x*y = 1 except 0*0 = 0 ... commutative but not associative
    with pytest.raises(NotAssociative):
        build_semigroup(None, [[1, 0], [0, 0]])
    with pytest.raises(ValueError):
        build_semigroup(None, [[0, 2], [2, 0]])


def test_cyclic_group():
    S = cyclic_group(4)
    assert is_clifford(S)[0]
    assert is_boolean(S) == (False, 1)
    dec = clifford_decomposition(S)
    assert dec.idempotents == [0] and sorted(dec.groups[0]) == [0, 1, 2, 3]


def test_semilattice_is_boolean():
    S = semilattice_chain(4)
    assert is_boolean(S)[0] and is_clifford(S)[0]
    assert all(len(g) == 1 for g in clifford_decomposition(S).groups.values())


def test_null_semigroup_not_clifford():
    # {0, a} with a*a = 0: a is not regular
    S = build_semigroup(["0", "a"], [[0, 0], [0, 0]])
    assert is_clifford(S) == (False, 1)
    assert clifford_decomposition(S).unassigned == [1]


@given(semigroups())
def test_decomposition_invariants(S):
    dec = clifford_decomposition(S)
    for e, g in dec.groups.items():
        assert S.mul(e, e) == e
        assert is_group(S, g, e)
    # groups are disjoint
    seen = [x for g in dec.groups.values() for x in g]
    assert len(seen) == len(set(seen))
    clif = is_clifford(S)[0]
    assert clif == (not dec.unassigned)
    assert clif == (len(regular_elements(S)) == S.n)
    assert is_boolean(S)[0] == (clif and all(len(g) == 1 for g in dec.groups.values()))


@given(semigroups(), st.randoms(use_true_random=False))
def test_verdicts_invariant_under_relabelling(S, rnd):
    perm = list(range(S.n))
    rnd.shuffle(perm)
    T = build_semigroup(None, relabel(S.table, perm))
    assert is_clifford(S)[0] == is_clifford(T)[0]
    assert is_boolean(S)[0] == is_boolean(T)[0]
    assert len(kernels.idempotents(S.table)) == len(kernels.idempotents(T.table))


@given(semigroups())
def test_regular_witnesses_are_witnesses(S):
    for x, a in regular_elements(S).items():
        assert S.mul(S.mul(x, x), a) == x


def test_exhaustive_small_tables():
    for n in range(1, 5):
        for t in kernels.enumerate_commutative_semigroups(n):
            S = build_semigroup(None, t)
            dec = clifford_decomposition(S)
            assert is_clifford(S)[0] == (not dec.unassigned)


def test_json_round_trip():
    S = cyclic_group(2)
    assert load_semigroup(json.dumps(S.to_json())) == S
