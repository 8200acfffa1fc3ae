"""Finite commutative semigroups given by multiplication tables: regular
elements, Clifford and Boolean verdicts, constituent groups."""

import json
import random
from dataclasses import dataclass, field

from . import kernels
from .errors import NotAssociative, NotCommutative


@dataclass(frozen=True)
class FiniteSemigroup:
    labels: tuple
    table: tuple

    @property
    def n(self):
        return len(self.table)

    def mul(self, x, y):
        return self.table[x][y]

    def to_json(self):
        return {"labels": list(self.labels), "table": [list(r) for r in self.table]}


def build_semigroup(labels, table):
    """Validate and freeze a table; rejects non-commutative or
    non-associative operations with a witness."""
    table = tuple(tuple(int(v) for v in row) for row in table)
    n = len(table)
    labels = tuple(str(l) for l in labels) if labels is not None else tuple(str(i) for i in range(n))
    if len(labels) != n or any(len(row) != n for row in table):
        raise ValueError("table must be square with one label per row")
    if any(not 0 <= v < n for row in table for v in row):
        raise ValueError("table entry out of range")
    pair = kernels.find_noncommutative(table)
    if pair is not None:
        raise NotCommutative(pair)
    triple = kernels.find_nonassociative(table)
    if triple is not None:
        raise NotAssociative(triple)
    return FiniteSemigroup(labels, table)


def load_semigroup(text):
    obj = json.loads(text)
    return build_semigroup(obj["labels"], obj["table"])


def regular_elements(S):
    """Map each regular x to a witness a with x^2 a = x."""
    return {x: a for x, a in enumerate(kernels.regular_witnesses(S.table)) if a >= 0}


def is_clifford(S):
    """(True, None) or (False, x) with x a non-regular element."""
    for x, a in enumerate(kernels.regular_witnesses(S.table)):
        if a < 0:
            return False, x
    return True, None


def is_boolean(S):
    for x in range(S.n):
        if S.table[x][x] != x:
            return False, x
    return True, None


@dataclass
class CliffordDecomposition:
    idempotents: list
    groups: dict
    unassigned: list = field(default_factory=list)

    def to_json(self, labels):
        return {
            "idempotents": [labels[e] for e in self.idempotents],
            "groups": {labels[e]: [labels[x] for x in g] for e, g in self.groups.items()},
            "unassigned": [labels[x] for x in self.unassigned],
        }


def clifford_decomposition(S):
    """Largest subgroup G_e for every idempotent e, plus the leftovers."""
    idem = kernels.idempotents(S.table)
    groups = {e: kernels.maximal_subgroup(S.table, e) for e in idem}
    covered = set()
    for g in groups.values():
        covered.update(g)
    return CliffordDecomposition(idem, groups, [x for x in range(S.n) if x not in covered])


def is_group(S, members, e):
    """Closure, identity and inverses for ``members`` under S."""
    ms = set(members)
    t = S.table
    if e not in ms:
        return False
    for x in members:
        if t[x][e] != x:
            return False
        if not any(t[x][y] == e for y in members):
            return False
        if any(t[x][y] not in ms for y in members):
            return False
    return True


# ------------------------------------------------------------ generators


def cyclic_group(n):
    return build_semigroup([f"g{i}" for i in range(n)], [[(i + j) % n for j in range(n)] for i in range(n)])


def semilattice_chain(n):
    """{0 < 1 < ... < n-1} under min."""
    return build_semigroup([f"e{i}" for i in range(n)], [[min(i, j) for j in range(n)] for i in range(n)])


def relabel(table, perm):
    """Table of the isomorphic semigroup with element x renamed perm[x]."""
    n = len(table)
    inv = [0] * n
    for x, px in enumerate(perm):
        inv[px] = x
    return tuple(tuple(perm[table[inv[i]][inv[j]]] for j in range(n)) for i in range(n))


def random_commutative_semigroup(n, rng):
    """A random commutative semigroup of order n: a multiplicatively closed
    subset of (Z/m)^* x (Z/m') under coordinatewise multiplication, randomly
    relabelled. Retries until the closure has exactly n elements."""
    while True:
        m1 = rng.randint(2, 40)
        m2 = rng.randint(1, 12)
        gens = {(rng.randrange(m1), rng.randrange(m2)) for _ in range(rng.randint(1, 3))}
        elems = set(gens)
        frontier = list(elems)
        while frontier and len(elems) <= n:
            new = []
            for a in frontier:
                for b in list(elems):
                    c = ((a[0] * b[0]) % m1, (a[1] * b[1]) % m2)
                    if c not in elems:
                        elems.add(c)
                        new.append(c)
            frontier = new
        if len(elems) != n:
            continue
        order = sorted(elems)
        idx = {v: i for i, v in enumerate(order)}
        table = [[idx[((a[0] * b[0]) % m1, (a[1] * b[1]) % m2)] for b in order] for a in order]
        perm = list(range(n))
        rng.shuffle(perm)
        return relabel(table, perm)


def random_semigroups(n, count, seed=0):
    rng = random.Random(seed)
    return [random_commutative_semigroup(n, rng) for _ in range(count)]
