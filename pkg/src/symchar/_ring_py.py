"""Pure-Python convolution kernels for truncated polynomial arithmetic.

Drop-in twin of the compiled module ``symchar._ring_core``; ``symchar.ring``
imports whichever is available.  Coefficients are plain Python integers, so
every result is exact at any magnitude.  All three kernels take and return
lists of length ``top + 1`` (one slot per generator power, constant first).
"""

from __future__ import annotations


def mul_trunc(a: list, b: list, top: int) -> list:
    """Convolution product with terms above slot ``top`` discarded."""
    n = top + 1
    out = [0] * n
    for i in range(n):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(n - i):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def pow_trunc(a: list, k: int, top: int) -> list:
    """k-th power by binary exponentiation, truncated above slot ``top``."""
    n = top + 1
    result = [0] * n
    result[0] = 1
    base = list(a)
    while k:
        if k & 1:
            result = mul_trunc(result, base, top)
        k >>= 1
        if k:
            base = mul_trunc(base, base, top)
    return result


def invert_trunc(a: list, top: int) -> list:
    """Inverse of a unit whose constant term is 1 or -1.

    Geometric-series recursion: with c0 = a[0] (its own inverse),
    b[0] = c0 and b[k] = -c0 * sum(a[i] * b[k-i] for i in 1..k).
    The caller is responsible for validating the constant term.
    """
    c0 = a[0]
    out = [0] * (top + 1)
    out[0] = c0
    for k in range(1, top + 1):
        s = 0
        for i in range(1, k + 1):
            ai = a[i]
            if ai:
                s += ai * out[k - i]
        out[k] = -c0 * s
    return out
