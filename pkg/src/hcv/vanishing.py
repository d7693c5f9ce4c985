"""Vanishing multiplicities on the Boolean hypercube and the degree oracle.

The multiplicity of a polynomial P at a point a is the minimum total
degree among the monomials of P(x+a); this definition works uniformly in
every characteristic.  Taylor coefficients of the shift play the role of
derivatives: over characteristic 0 they equal the classical derivatives
divided by m_1! ... m_n!, an invertible diagonal rescaling that leaves
every rank and isomorphism statement intact.

`minimum_degree` is a brute-force oracle: feasibility of a target degree
is decided exactly by ranks of the Taylor-constraint matrix on all
monomials up to that degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, inf

import numpy as np

from . import linalg
from .combinatorics import (
    hypercube_points,
    iter_exponents_of_degree,
    iter_monomials_up_to,
    iter_orders_below,
    nonzero_hypercube_points,
)
from .fields import Field
from .poly import ExponentVector, SparsePolynomial

ENUMERATION_GUARD = 24

# Default modulus for large feasibility searches; rational elimination on
# thousands of columns blows up coefficient sizes, and this prime divides
# no Catalan number small enough to matter for the supported range of k.
DEFAULT_LARGE_PRIME = 1000003
_AUTO_RATIONAL_MAX_COLUMNS = 800


def _check_point(point, nvars: int):
    pt = tuple(point)
    if len(pt) != nvars:
        raise ValueError("point dimension mismatch")
    if any(v not in (0, 1) for v in pt):
        raise ValueError("hypercube point coordinates must be 0 or 1")
    return pt


def multiplicity_at(p: SparsePolynomial, point) -> int | float:
    """Vanishing multiplicity of p at a hypercube point (inf for the zero poly)."""
    pt = _check_point(point, p.nvars)
    shifted = p.taylor_shift(pt)
    if shifted.is_zero:
        return inf
    return min(sum(e) for e in shifted.terms())


def multiplicity_profile(p: SparsePolynomial, force: bool = False) -> dict[tuple[int, ...], int | float]:
    """Multiplicity at every point of {0,1}^n, in binary-counter order."""
    if p.nvars > ENUMERATION_GUARD and not force:
        raise ValueError(
            f"refusing to enumerate 2^{p.nvars} points (limit n <= {ENUMERATION_GUARD}; pass force=True)"
        )
    return {pt: multiplicity_at(p, pt) for pt in hypercube_points(p.nvars)}


@dataclass(frozen=True)
class DerivativeIndex:
    """A (point, order) pair indexing one Taylor coefficient."""

    point: tuple[int, ...]
    order: ExponentVector


def taylor_coefficient_int(monomial: ExponentVector, point: tuple[int, ...], order: ExponentVector) -> int:
    """Integer coefficient of x^order in the shift of x^monomial by a 0/1 point."""
    out = 1
    for e, a, m in zip(monomial, point, order):
        if a:
            f = comb(e, m)
            if f == 0:
                return 0
            out *= f
        elif e != m:
            return 0
    return out


def taylor_data_rows(n: int, k: int) -> list[DerivativeIndex]:
    """Row index set of the Taylor-data map: orders < k at the nonzero
    points (binary-counter order) followed by orders < k-1 at the origin."""
    rows = [
        DerivativeIndex(pt, order)
        for pt in nonzero_hypercube_points(n)
        for order in iter_orders_below(n, k)
    ]
    origin = (0,) * n
    rows.extend(DerivativeIndex(origin, order) for order in iter_orders_below(n, k - 1))
    return rows


@dataclass
class EvaluationMatrix:
    """Matrix of Taylor-shift coefficients: rows indexed by (point, order)
    pairs, columns by monomials, in the canonical orders."""

    field: Field
    rows: list[DerivativeIndex]
    columns: list[ExponentVector]
    entries: list[list]

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.columns))

    def rank(self) -> int:
        return linalg.rank(self.entries, self.field)


def taylor_data_matrix(
    n: int, k: int, basis: list[ExponentVector], field: Field = Field.rational()
) -> EvaluationMatrix:
    """Matrix of the map sending a polynomial (on the given monomial basis)
    to its Taylor data of order < k off the origin and order < k-1 at the
    origin.  Row count is (2^n - 1) * M_k(n) + M_{k-1}(n)."""
    if k < 2 or n < 1:
        raise ValueError(f"need k >= 2 and n >= 1, got k={k}, n={n}")
    rows = taylor_data_rows(n, k)
    entries = [
        [field.coerce(taylor_coefficient_int(mono, ri.point, ri.order)) for mono in basis]
        for ri in rows
    ]
    return EvaluationMatrix(field, rows, list(basis), entries)


def null_space(matrix: EvaluationMatrix) -> list[list]:
    """Exact basis of the right null space of an evaluation matrix."""
    return linalg.null_space(matrix.entries, matrix.field, len(matrix.columns))


@dataclass(frozen=True)
class OriginCondition:
    """Required behaviour at the origin: vanishing order exactly `ell`.

    ell = 0 is the "nonzero value at the origin" condition.
    """

    ell: int = 0

    def __str__(self) -> str:
        return "nonzero" if self.ell == 0 else f"exact={self.ell}"


NONZERO = OriginCondition(0)


def exact_multiplicity(ell: int) -> OriginCondition:
    return OriginCondition(ell)


def _constraint_rows_int(n: int, k: int, ell: int, columns: list[ExponentVector]):
    """Integer constraint matrix rows: order < k at nonzero points plus
    order < ell at the origin; plus the separate block of order-exactly-ell
    origin rows used to detect multiplicity exactly ell."""
    origin = (0,) * n
    base_index = [
        (pt, order) for pt in nonzero_hypercube_points(n) for order in iter_orders_below(n, k)
    ]
    base_index.extend((origin, order) for order in iter_orders_below(n, ell))
    extra_index = [(origin, order) for order in iter_exponents_of_degree(n, ell)]
    base = [
        [taylor_coefficient_int(mono, pt, order) for mono in columns]
        for pt, order in base_index
    ]
    extra = [
        [taylor_coefficient_int(mono, pt, order) for mono in columns]
        for pt, order in extra_index
    ]
    return base, extra


def _auto_field(n: int, max_degree: int) -> Field:
    if comb(n + max_degree, n) <= _AUTO_RATIONAL_MAX_COLUMNS:
        return Field.rational()
    return Field.gf(DEFAULT_LARGE_PRIME)


def minimum_degree(
    n: int,
    k: int,
    origin: OriginCondition = NONZERO,
    field: Field | None = None,
    max_degree: int | None = None,
    force: bool = False,
) -> int | None:
    """Smallest d <= max_degree admitting a polynomial of degree <= d with
    multiplicity >= k at every nonzero hypercube point and multiplicity
    exactly `origin.ell` at the origin; None if no such degree exists.

    Results are specific to the field searched; no transfer between
    characteristics is claimed.  With field=None, small instances run
    over the rationals and large ones over GF(1000003).
    """
    if n < 1 or k < 1:
        raise ValueError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    if not 0 <= origin.ell <= k - 1:
        raise ValueError(f"origin multiplicity must lie in 0..{k-1}, got {origin.ell}")
    if max_degree is None:
        max_degree = n + 2 * k - 2
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    if n > ENUMERATION_GUARD and not force:
        raise ValueError(
            f"refusing to enumerate 2^{n} points (limit n <= {ENUMERATION_GUARD}; pass force=True)"
        )
    if field is None:
        field = _auto_field(n, max_degree)

    columns = list(iter_monomials_up_to(n, max_degree))
    base, extra = _constraint_rows_int(n, k, origin.ell, columns)

    if field.kind == "gf":
        p = field.p
        base_mat = np.array(base, dtype=np.int64) % p if base else np.zeros((0, len(columns)), dtype=np.int64)
        extra_mat = np.array(extra, dtype=np.int64) % p

    for d in range(max_degree + 1):
        ncols = comb(n + d, n)
        if field.kind == "gf":
            a = np.ascontiguousarray(base_mat[:, :ncols])
            ech = linalg.echelonize(a, field, ncols)
            if any(not ech.reduces_to_zero(row) for row in extra_mat[:, :ncols] % field.p):
                return d
        else:
            sliced = [row[:ncols] for row in base]
            ech = linalg.echelonize(sliced, field, ncols)
            if any(not ech.reduces_to_zero(row[:ncols]) for row in extra):
                return d
    return None


def witness_for_degree(
    n: int,
    k: int,
    d: int,
    origin: OriginCondition = NONZERO,
    field: Field | None = None,
) -> SparsePolynomial | None:
    """A degree <= d polynomial meeting the constraints of `minimum_degree`,
    or None if degree d is infeasible.  Deterministic: the first null-space
    basis vector with the required origin behaviour is returned."""
    if field is None:
        field = _auto_field(n, d)
    columns = list(iter_monomials_up_to(n, d))
    base, extra = _constraint_rows_int(n, k, origin.ell, columns)
    vectors = linalg.null_space(base, field, len(columns))
    for vec in vectors:
        data = [
            sum(field.mul(field.coerce(r), v) for r, v in zip(row, vec) if r)
            for row in extra
        ]
        if any(field.coerce(val) != 0 for val in data):
            return SparsePolynomial(field, n, dict(zip(columns, vec)))
    return None
