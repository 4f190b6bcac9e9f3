# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled exponent-vector kernels.

Same contract as ``_kernels_py``; exponents must fit a machine long
(absurdly large exponents raise OverflowError instead of degrading
silently).
"""

from libc.stdlib cimport free, malloc

IMPLEMENTATION = "cython"


def grlex_key(vec):
    return (sum(vec), vec)


def divides(tuple a, tuple b):
    """Componentwise a <= b."""
    cdef Py_ssize_t i, n = len(a)
    cdef long x, y
    for i in range(n):
        x = a[i]
        y = b[i]
        if x > y:
            return False
    return True


def lcm(tuple a, tuple b):
    """Componentwise maximum."""
    cdef Py_ssize_t i, n = len(a)
    cdef long x, y
    out = []
    for i in range(n):
        x = a[i]
        y = b[i]
        out.append(x if x >= y else y)
    return tuple(out)


def any_divides(gens, tuple m):
    """True if some vector in gens divides m componentwise."""
    cdef tuple g
    for g in gens:
        if divides(g, m):
            return True
    return False


def minimalize(vecs):
    """Minimal elements of vecs under divisibility, in graded-lex order."""
    cdef list ordered = sorted(set(vecs), key=grlex_key)
    cdef Py_ssize_t n = len(ordered)
    if n <= 1:
        return ordered
    cdef Py_ssize_t d = len(<tuple> ordered[0])
    cdef long *buf = <long *> malloc(n * d * sizeof(long))
    if buf == NULL:
        raise MemoryError
    cdef Py_ssize_t *kept = <Py_ssize_t *> malloc(n * sizeof(Py_ssize_t))
    if kept == NULL:
        free(buf)
        raise MemoryError
    cdef Py_ssize_t i, j, k, nkept = 0
    cdef bint dom
    cdef tuple t
    try:
        for i in range(n):
            t = <tuple> ordered[i]
            if len(t) != d:
                raise ValueError("exponent vectors must share one dimension")
            for k in range(d):
                buf[i * d + k] = t[k]
        for i in range(n):
            dom = False
            for j in range(nkept):
                dom = True
                for k in range(d):
                    if buf[kept[j] * d + k] > buf[i * d + k]:
                        dom = False
                        break
                if dom:
                    break
            if not dom:
                kept[nkept] = i
                nkept += 1
        return [ordered[kept[j]] for j in range(nkept)]
    finally:
        free(buf)
        free(kept)


def intersect_rows(gens1, gens2):
    """Generating rows of the intersection: minimalized pairwise lcms."""
    cdef tuple f, g
    cdef list prods = []
    for f in gens1:
        for g in gens2:
            prods.append(lcm(f, g))
    return minimalize(prods)
