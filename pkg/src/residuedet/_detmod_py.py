"""Fallback kernel: mod-p determinant via vectorized numpy elimination.

Same contract as the compiled extension in ``_detmod.pyx``; used when the
extension is not built.  All intermediate products fit in int64 because the
modulus is restricted to p < 2**31.
"""

from __future__ import annotations

import numpy as np


def det_mod_i64(a: np.ndarray, p: int) -> int:
    """Determinant of the square int64 matrix ``a`` modulo the prime ``p``.

    Destroys ``a``.  Entries may be any int64 values; they are reduced into
    [0, p) first.  Requires 2 <= p < 2**31.
    """
    if p < 2 or p >= 1 << 31:
        raise ValueError("modulus must satisfy 2 <= p < 2**31")
    n = a.shape[0]
    if a.ndim != 2 or a.shape[1] != n:
        raise ValueError("matrix must be square")
    if n == 0:
        return 1 % p
    a %= p
    det = 1
    sign = 1
    for k in range(n):
        nz = np.flatnonzero(a[k:, k])
        if nz.size == 0:
            return 0
        piv = k + int(nz[0])
        if piv != k:
            a[[k, piv], k:] = a[[piv, k], k:]
            sign = -sign
        pv = int(a[k, k])
        det = det * pv % p
        inv = pow(pv, p - 2, p)
        row = a[k, k + 1 :] * inv % p
        factors = a[k + 1 :, k]
        a[k + 1 :, k + 1 :] = (a[k + 1 :, k + 1 :] - factors[:, None] * row[None, :]) % p
    if sign < 0 and det != 0:
        det = p - det
    return det
