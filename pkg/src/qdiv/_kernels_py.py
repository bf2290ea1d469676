"""Pure-Python kernels for truncated series arithmetic.

Fallback twin of the compiled module qdiv._kernels; both operate on plain
lists of exact coefficients (int or fractions.Fraction) and must stay
behaviourally identical.  Selected at import time by qdiv._backend.
"""

from __future__ import annotations

from fractions import Fraction

BACKEND_NAME = "python"


def conv_trunc(a: list, b: list, order: int) -> list:
    """Coefficients of a*b through q^order (schoolbook, zero-skipping)."""
    n_out = order + 1
    out = [0] * n_out
    if len(a) > n_out:
        a = a[:n_out]
    for i, ai in enumerate(a):
        if not ai:
            continue
        jmax = min(len(b), n_out - i)
        for j in range(jmax):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def inverse_trunc(a: list, order: int) -> list:
    """Coefficients of 1/a through q^order; a[0] must be nonzero."""
    a0 = a[0]
    n_out = order + 1
    out = [0] * n_out
    if a0 == 1:
        recip = 1
    elif a0 == -1:
        recip = -1
    else:
        recip = 1 / Fraction(a0)
    out[0] = recip
    amax = min(len(a), n_out)
    for m in range(1, n_out):
        acc = 0
        for i in range(1, min(m, amax - 1) + 1):
            ai = a[i]
            if ai:
                acc += ai * out[m - i]
        if not acc:
            continue
        if a0 == 1:
            out[m] = -acc
        elif a0 == -1:
            out[m] = acc
        else:
            out[m] = -acc * recip
    return out
