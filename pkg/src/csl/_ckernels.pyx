# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled semigroup-table and binary-form kernels (see ``_kernels_py``)."""

from libc.stdlib cimport malloc, free


cdef int* _pack(table, int n) except NULL:
    cdef int* t = <int*> malloc(n * n * sizeof(int))
    if t == NULL:
        raise MemoryError()
    cdef int i, j
    for i in range(n):
        row = table[i]
        for j in range(n):
            t[i * n + j] = row[j]
    return t


def find_noncommutative(table):
    cdef int n = len(table)
    if n == 0:
        return None
    cdef int* t = _pack(table, n)
    cdef int x, y
    try:
        for x in range(n):
            for y in range(x + 1, n):
                if t[x * n + y] != t[y * n + x]:
                    return (x, y)
        return None
    finally:
        free(t)


cdef int _assoc(int* t, int n, int* wit) nogil:
    cdef int x, y, z, xy
    for x in range(n):
        for y in range(n):
            xy = t[x * n + y]
            for z in range(n):
                if t[xy * n + z] != t[x * n + t[y * n + z]]:
                    wit[0] = x
                    wit[1] = y
                    wit[2] = z
                    return 0
    return 1


def find_nonassociative(table):
    cdef int n = len(table)
    if n == 0:
        return None
    cdef int* t = _pack(table, n)
    cdef int wit[3]
    cdef int ok
    try:
        ok = _assoc(t, n, wit)
        if ok:
            return None
        return (wit[0], wit[1], wit[2])
    finally:
        free(t)


def idempotents(table):
    cdef int n = len(table)
    return [x for x in range(n) if table[x][x] == x]


def regular_witnesses(table):
    cdef int n = len(table)
    if n == 0:
        return []
    cdef int* t = _pack(table, n)
    cdef int x, a, sq, w
    out = []
    try:
        for x in range(n):
            sq = t[x * n + x]
            w = -1
            for a in range(n):
                if t[sq * n + a] == x:
                    w = a
                    break
            out.append(w)
        return out
    finally:
        free(t)


def maximal_subgroup(table, int e):
    cdef int n = len(table)
    cdef int* t = _pack(table, n)
    cdef int x, y
    cdef bint found
    members = []
    try:
        for x in range(n):
            if t[x * n + e] != x:
                continue
            found = False
            for y in range(n):
                if t[x * n + y] == e and t[y * n + e] == y:
                    found = True
                    break
            if found:
                members.append(x)
        return members
    finally:
        free(t)


def enumerate_commutative_semigroups(int n):
    """All labelled commutative semigroup tables on {0..n-1}, by exhaustive
    odometer over the upper triangle and a full associativity test."""
    if n <= 0:
        return []
    cdef int m = n * (n + 1) // 2
    cdef int* t = <int*> malloc(n * n * sizeof(int))
    cdef int* ci = <int*> malloc(m * sizeof(int))
    cdef int* cj = <int*> malloc(m * sizeof(int))
    cdef int wit[3]
    cdef int i, j, k
    out = []
    try:
        k = 0
        for i in range(n):
            for j in range(i, n):
                ci[k] = i
                cj[k] = j
                k += 1
        for i in range(n * n):
            t[i] = 0
        while True:
            if _assoc(t, n, wit):
                out.append(tuple(tuple(t[i * n + j] for j in range(n)) for i in range(n)))
            k = m - 1
            while k >= 0:
                i = ci[k]
                j = cj[k]
                if t[i * n + j] < n - 1:
                    t[i * n + j] += 1
                    t[j * n + i] = t[i * n + j]
                    break
                t[i * n + j] = 0
                t[j * n + i] = 0
                k -= 1
            if k < 0:
                break
        return out
    finally:
        free(t)
        free(ci)
        free(cj)


cdef long long _gcd(long long a, long long b) nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


def reduced_form_count(D):
    if -D > 10**12:
        from ._kernels_py import reduced_form_count as slow
        return slow(D)
    cdef long long d = D
    cdef long long a, b, num, c, amax, count = 0
    amax = 0
    while (amax + 1) * (amax + 1) * 3 <= -d:
        amax += 1
    for a in range(1, amax + 1):
        for b in range(-a + 1, a + 1):
            num = b * b - d
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if a == c and b < 0:
                continue
            if _gcd(_gcd(a, b), c) != 1:
                continue
            count += 1
    return count
