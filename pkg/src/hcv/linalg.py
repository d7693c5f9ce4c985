"""Exact linear algebra over the coefficient fields.

Over the rationals, elimination is fraction-free (Bareiss): rows are
cleared to integers and every update divides exactly by the previous
pivot, so intermediate entries stay integral minors of the input.  Over
GF(p) the work runs on int64 arrays through hcv._kernel (compiled when
available, numpy otherwise).

Pivot selection everywhere: scan columns left to right in their given
order, take the first row with a nonzero entry.  All outputs are
deterministic functions of the input.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np

from ._kernel import row_echelon_modp
from .fields import Field

# Moduli beyond this would overflow int64 products in the kernels.
_KERNEL_MAX_P = 1 << 31


def _to_int_rows(rows, field: Field) -> list[list[int]]:
    """Clear denominators row by row; row scaling preserves rank and kernel."""
    out = []
    for row in rows:
        ints: list[int] = []
        lcm = 1
        for v in row:
            f = Fraction(v) if not isinstance(v, Fraction) else v
            lcm = lcm * f.denominator // gcd(lcm, f.denominator)
        for v in row:
            f = Fraction(v) if not isinstance(v, Fraction) else v
            ints.append(int(f * lcm))
        out.append(ints)
    return out


def _normalize_int_row(row: list[int]) -> list[int]:
    g = 0
    for v in row:
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return [v // g for v in row]
    return row


def _bareiss_echelon(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free forward elimination; returns (echelon rows, pivot columns)."""
    m = len(rows)
    if m == 0:
        return [], []
    n = len(rows[0])
    rows = [_normalize_int_row(list(r)) for r in rows]
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(n):
        if r == m:
            break
        prow = -1
        for i in range(r, m):
            if rows[i][c] != 0:
                prow = i
                break
        if prow == -1:
            continue
        if prow != r:
            rows[r], rows[prow] = rows[prow], rows[r]
        piv = rows[r][c]
        top = rows[r]
        for i in range(r + 1, m):
            cur = rows[i]
            f = cur[c]
            if f == 0:
                if prev == 1:
                    new = [piv * v for v in cur]
                else:
                    new = []
                    for v in cur:
                        q, rem = divmod(piv * v, prev)
                        if rem:
                            raise ArithmeticError("fraction-free elimination lost exactness")
                        new.append(q)
            else:
                new = [0] * n
                for j in range(c + 1, n):
                    q, rem = divmod(piv * cur[j] - f * top[j], prev)
                    if rem:
                        raise ArithmeticError("fraction-free elimination lost exactness")
                    new[j] = q
            rows[i] = new
        pivots.append(c)
        prev = piv
        r += 1
    return rows[: len(pivots)], pivots


class Echelon:
    """Echelon form of an exact matrix, with rank and membership queries."""

    def __init__(self, field: Field, ncols: int, pivots: list[int], rows):
        self.field = field
        self.ncols = ncols
        self.pivots = pivots
        self._rows = rows  # int rows (rational) or int64 ndarray (gf)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduces_to_zero(self, row) -> bool:
        """True iff `row` lies in the row space of the matrix."""
        if self.field.kind == "gf":
            p = self.field.p
            if isinstance(row, np.ndarray):
                work = row.astype(np.int64) % p
            else:
                work = np.array([int(self.field.coerce(v)) for v in row], dtype=np.int64) % p
            for i, c in enumerate(self.pivots):
                f = int(work[c])
                if f:
                    work[c:] = (work[c:] - f * self._rows[i, c:]) % p
            return not work.any()
        work = [int(v) for v in _to_int_rows([row], self.field)[0]]
        for i, c in enumerate(self.pivots):
            if work[c] != 0:
                piv = self._rows[i][c]
                f = work[c]
                work = [piv * a - f * b for a, b in zip(work, self._rows[i])]
                work = _normalize_int_row(work)
        return all(v == 0 for v in work)


def echelonize(rows, field: Field, ncols: int | None = None) -> Echelon:
    """Forward elimination of a dense row list over the given field."""
    if field.kind == "gf":
        a = _gf_matrix(rows, field, ncols)
        rank, pivots = _gf_echelon(a, field.p, reduced=False)
        return Echelon(field, a.shape[1], pivots, a[:rank])
    int_rows = _to_int_rows(rows, field)
    if ncols is None:
        ncols = len(int_rows[0]) if int_rows else 0
    ech, pivots = _bareiss_echelon(int_rows)
    return Echelon(field, ncols, pivots, ech)


def _gf_matrix(rows, field: Field, ncols: int | None) -> np.ndarray:
    p = field.p
    if isinstance(rows, np.ndarray):
        return np.ascontiguousarray(rows % p, dtype=np.int64)
    data = [[int(field.coerce(v)) for v in row] for row in rows]
    if not data:
        return np.zeros((0, ncols or 0), dtype=np.int64)
    return np.array(data, dtype=np.int64)


def _gf_echelon(a: np.ndarray, p: int, reduced: bool):
    if p >= _KERNEL_MAX_P:
        raise ValueError(f"GF modulus {p} too large for the elimination kernels")
    return row_echelon_modp(a, p, reduced)


def rank(rows, field: Field) -> int:
    return echelonize(rows, field).rank


def null_space(rows, field: Field, ncols: int) -> list[list]:
    """Exact basis of the right null space, deterministic.

    Basis vectors are in one-to-one correspondence with the free columns;
    the vector for free column f has entry 1 there and zeroes at all
    other free columns.
    """
    if field.kind == "gf":
        a = _gf_matrix(rows, field, ncols)
        rank_, pivots = _gf_echelon(a, field.p, reduced=True)
        free = [c for c in range(ncols) if c not in set(pivots)]
        p = field.p
        basis = []
        for f in free:
            v = [0] * ncols
            v[f] = 1
            for i, c in enumerate(pivots):
                v[c] = int(-a[i, f]) % p
            basis.append(v)
        return basis
    int_rows = _to_int_rows(rows, field)
    ech, pivots = _bareiss_echelon(int_rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v: list[Fraction] = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i in range(len(pivots) - 1, -1, -1):
            pc = pivots[i]
            row = ech[i]
            s = Fraction(0)
            for j in range(pc + 1, ncols):
                if v[j]:
                    s += row[j] * v[j]
            v[pc] = -s / row[pc]
        basis.append(v)
    return basis


def solve_unique(rows, rhs, field: Field) -> list:
    """Solve A x = b exactly; raises if inconsistent or not uniquely determined."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    if field.kind == "gf":
        a = _gf_matrix(aug, field, ncols + 1)
        _, pivots = _gf_echelon(a, field.p, reduced=True)
        if ncols in pivots:
            raise ValueError("inconsistent linear system")
        if len(pivots) != ncols:
            raise ValueError("linear system is underdetermined")
        x = [0] * ncols
        for i, c in enumerate(pivots):
            x[c] = int(a[i, ncols])
        return x
    int_rows = _to_int_rows(aug, field)
    ech, pivots = _bareiss_echelon(int_rows)
    if ncols in pivots:
        raise ValueError("inconsistent linear system")
    if len(pivots) != ncols:
        raise ValueError("linear system is underdetermined")
    x: list[Fraction] = [Fraction(0)] * ncols
    for i in range(len(pivots) - 1, -1, -1):
        pc = pivots[i]
        row = ech[i]
        s = Fraction(row[ncols])
        for j in range(pc + 1, ncols):
            if x[j]:
                s -= row[j] * x[j]
        x[pc] = s / row[pc]
    return x


def gf_null_space_matrix(a: np.ndarray, p: int) -> tuple[int, list[int], np.ndarray]:
    """RREF a GF(p) matrix in place and return (rank, pivots, the array).

    Lower-level entry point for callers that manage their own int64
    arrays (the min-degree search); avoids per-entry coercion.
    """
    rank_, pivots = _gf_echelon(a, p, reduced=True)
    return rank_, pivots, a
