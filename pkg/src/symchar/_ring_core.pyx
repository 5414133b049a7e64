# cython: language_level=3
"""Compiled convolution kernels for truncated polynomial arithmetic.

Mirrors ``symchar._ring_py`` exactly.  Coefficients stay Python ints
(arbitrary precision); Cython only removes the interpreter overhead of
the index loops, which dominate for the dense small-degree elements this
library works with.
"""


def mul_trunc(list a, list b, Py_ssize_t top):
    """Convolution product with terms above slot ``top`` discarded."""
    cdef Py_ssize_t n = top + 1
    cdef Py_ssize_t i, j, m
    cdef list out = [0] * n
    cdef object ai, bj
    for i in range(n):
        ai = a[i]
        if ai == 0:
            continue
        m = n - i
        for j in range(m):
            bj = b[j]
            if bj != 0:
                out[i + j] = out[i + j] + ai * bj
    return out


def pow_trunc(list a, k, Py_ssize_t top):
    """k-th power by binary exponentiation, truncated above slot ``top``."""
    cdef Py_ssize_t n = top + 1
    cdef list result = [0] * n
    result[0] = 1
    cdef list base = list(a)
    while k:
        if k & 1:
            result = mul_trunc(result, base, top)
        k >>= 1
        if k:
            base = mul_trunc(base, base, top)
    return result


def invert_trunc(list a, Py_ssize_t top):
    """Inverse of a unit whose constant term is 1 or -1.

    Geometric-series recursion: with c0 = a[0] (its own inverse),
    b[0] = c0 and b[k] = -c0 * sum(a[i] * b[k-i] for i in 1..k).
    The caller is responsible for validating the constant term.
    """
    cdef Py_ssize_t k, i
    cdef object c0 = a[0]
    cdef object s, ai
    cdef list out = [0] * (top + 1)
    out[0] = c0
    for k in range(1, top + 1):
        s = 0
        for i in range(1, k + 1):
            ai = a[i]
            if ai != 0:
                s = s + ai * out[k - i]
        out[k] = -c0 * s
    return out
