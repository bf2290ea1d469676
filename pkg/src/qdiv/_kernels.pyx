# cython: language_level=3
"""Compiled kernels for truncated series arithmetic.

Coefficients stay arbitrary-precision Python objects (int or Fraction);
the win over qdiv._kernels_py is the removal of interpreter loop overhead
in the O(order^2) inner loops.  Keep in lockstep with the pure twin.
"""

from fractions import Fraction

BACKEND_NAME = "cython"


def conv_trunc(list a, list b, Py_ssize_t order):
    """Coefficients of a*b through q^order (schoolbook, zero-skipping)."""
    cdef Py_ssize_t n_out = order + 1
    cdef Py_ssize_t na = len(a)
    cdef Py_ssize_t nb = len(b)
    cdef Py_ssize_t i, j, jmax
    cdef list out = [0] * n_out
    cdef object ai, bj
    if na > n_out:
        na = n_out
    for i in range(na):
        ai = a[i]
        if not ai:
            continue
        jmax = n_out - i
        if nb < jmax:
            jmax = nb
        for j in range(jmax):
            bj = b[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out


def inverse_trunc(list a, Py_ssize_t order):
    """Coefficients of 1/a through q^order; a[0] must be nonzero."""
    cdef Py_ssize_t n_out = order + 1
    cdef Py_ssize_t amax = len(a)
    cdef Py_ssize_t m, i, imax
    cdef list out = [0] * n_out
    cdef object a0 = a[0]
    cdef object recip, acc, ai
    cdef int unit = 0
    if a0 == 1:
        unit = 1
        recip = 1
    elif a0 == -1:
        unit = -1
        recip = -1
    else:
        recip = 1 / Fraction(a0)
    out[0] = recip
    if amax > n_out:
        amax = n_out
    for m in range(1, n_out):
        acc = 0
        imax = m if m < amax - 1 else amax - 1
        for i in range(1, imax + 1):
            ai = a[i]
            if ai:
                acc = acc + ai * out[m - i]
        if not acc:
            continue
        if unit == 1:
            out[m] = -acc
        elif unit == -1:
            out[m] = acc
        else:
            out[m] = -acc * recip
    return out
