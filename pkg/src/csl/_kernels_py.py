"""Pure-Python semigroup-table and binary-form kernels.

Same API as the compiled ``_ckernels`` module; selected by ``csl.kernels``
when the extension is unavailable or ``CSL_PURE_PYTHON=1``.
"""

from math import gcd, isqrt


def find_noncommutative(table):
    n = len(table)
    for x in range(n):
        for y in range(x + 1, n):
            if table[x][y] != table[y][x]:
                return (x, y)
    return None


def find_nonassociative(table):
    n = len(table)
    for x in range(n):
        tx = table[x]
        for y in range(n):
            xy = tx[y]
            txy = table[xy]
            ty = table[y]
            for z in range(n):
                if txy[z] != tx[ty[z]]:
                    return (x, y, z)
    return None


def idempotents(table):
    return [x for x in range(len(table)) if table[x][x] == x]


def regular_witnesses(table):
    """For each x, the least a with x*x*a == x, or -1 when x is not regular."""
    n = len(table)
    out = []
    for x in range(n):
        sq = table[table[x][x]]
        out.append(next((a for a in range(n) if sq[a] == x), -1))
    return out


def maximal_subgroup(table, e):
    """{x : xe = x and some y has xy = e and ye = y}."""
    n = len(table)
    te = table[e]
    members = []
    for x in range(n):
        if table[x][e] != x:
            continue
        tx = table[x]
        if any(tx[y] == e and te[y] == y for y in range(n)):
            members.append(x)
    return members


def enumerate_commutative_semigroups(n):
    """All labelled commutative semigroup tables on {0..n-1}, by backtracking
    over the upper triangle with associativity pruning."""
    cells = [(i, j) for i in range(n) for j in range(i, n)]
    t = [[-1] * n for _ in range(n)]
    out = []

    def consistent():
        for x in range(n):
            for y in range(n):
                a = t[x][y]
                if a < 0:
                    continue
                for z in range(n):
                    l = t[a][z]
                    b = t[y][z]
                    if l < 0 or b < 0:
                        continue
                    r = t[x][b]
                    if r >= 0 and r != l:
                        return False
        return True

    def rec(k):
        if k == len(cells):
            out.append(tuple(tuple(row) for row in t))
            return
        i, j = cells[k]
        for v in range(n):
            t[i][j] = t[j][i] = v
            if consistent():
                rec(k + 1)
        t[i][j] = t[j][i] = -1

    if n > 0:
        rec(0)
    return out


def reduced_form_count(D):
    """Number of primitive reduced positive definite forms of discriminant D."""
    count = 0
    amax = isqrt(-D // 3)
    for a in range(1, amax + 1):
        for b in range(-a + 1, a + 1):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if a == c and b < 0:
                continue
            if gcd(gcd(a, abs(b)), c) != 1:
                continue
            count += 1
    return count
