"""Row echelon over GF(p), numpy implementation.

Fallback for environments where the compiled extension hcv._gfelim is
unavailable; selected at import time by hcv._kernel.  Must match the
compiled kernel's semantics exactly (same pivot rule, same in-place
result), only slower.
"""

from __future__ import annotations

import numpy as np


def row_echelon_modp(a: np.ndarray, p: int, reduced: bool):
    """In-place row echelon form of `a` modulo the prime p.

    See hcv._gfelim.row_echelon_modp for the contract.
    """
    m, n = a.shape
    r = 0
    pivots: list[int] = []
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i], :] = a[[i, r], :]
        piv = int(a[r, c])
        if piv != 1:
            inv = pow(piv, -1, p)
            a[r, c:] = a[r, c:] * inv % p
        rows = np.flatnonzero(a[r + 1 :, c])
        if rows.size:
            rows += r + 1
            a[rows, c:] = (a[rows, c:] - a[rows, c][:, None] * a[r, c:]) % p
        pivots.append(c)
        r += 1
    if reduced:
        for idx in range(len(pivots) - 1, -1, -1):
            c = pivots[idx]
            rows = np.flatnonzero(a[:idx, c])
            if rows.size:
                a[rows, c:] = (a[rows, c:] - a[rows, c][:, None] * a[idx, c:]) % p
    return r, pivots
