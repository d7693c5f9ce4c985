# cython: boundscheck=False, wraparound=False, cdivision=True
"""Row echelon over GF(p) on C-contiguous int64 buffers (compiled kernel).

Semantics must stay identical to hcv._gfelim_py.row_echelon_modp: the
two implementations are interchangeable and the test suite checks that
they produce bitwise-equal results.
"""

from libc.stdint cimport int64_t


cdef inline int64_t _inv_mod(int64_t a, int64_t p) noexcept:
    # Extended Euclid; a is nonzero mod p.
    cdef int64_t t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr != 0:
        q = r / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def row_echelon_modp(int64_t[:, ::1] a, int64_t p, bint reduced):
    """In-place row echelon form of `a` modulo the prime p.

    Entries must already lie in [0, p) and p must be below 2**31 so that
    products fit in int64.  Pivot rule: scan columns left to right, take
    the first row (top down) with a nonzero entry.  Pivot rows are
    normalized to leading coefficient 1.  With `reduced`, entries above
    the pivots are cleared as well (RREF).  Returns (rank, pivot_columns).
    """
    cdef Py_ssize_t m = a.shape[0]
    cdef Py_ssize_t n = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, prow, idx
    cdef int64_t piv, inv, f, v
    pivots = []
    for c in range(n):
        if r == m:
            break
        prow = -1
        for i in range(r, m):
            if a[i, c] != 0:
                prow = i
                break
        if prow == -1:
            continue
        if prow != r:
            for j in range(c, n):
                v = a[r, j]
                a[r, j] = a[prow, j]
                a[prow, j] = v
        piv = a[r, c]
        if piv != 1:
            inv = _inv_mod(piv, p)
            for j in range(c, n):
                a[r, j] = a[r, j] * inv % p
        for i in range(r + 1, m):
            f = a[i, c]
            if f != 0:
                for j in range(c, n):
                    v = (a[i, j] - f * a[r, j]) % p
                    if v < 0:
                        v += p
                    a[i, j] = v
        pivots.append(c)
        r += 1
    if reduced:
        for idx in range(len(pivots) - 1, -1, -1):
            c = pivots[idx]
            for i in range(idx):
                f = a[i, c]
                if f != 0:
                    for j in range(c, n):
                        v = (a[i, j] - f * a[idx, j]) % p
                        if v < 0:
                            v += p
                        a[i, j] = v
    return r, pivots
