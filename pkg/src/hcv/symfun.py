"""Symmetric polynomials, power-sum representations, and top-space coordinates.

Symmetric polynomials are stored on the monomial-symmetric basis,
indexed by partitions; full orbit expansion is lazy because a single
orbit can have n! monomials.  Products of power sums p_m = x_1^m + ... +
x_n^m form a basis of the symmetric polynomials of degree <= n, and the
conversion both ways is exact.  Degrees above n are rejected (the
representation is no longer unique there), which also means p_m with
m > n is never needed.

The "top space" for parameters (n, k) is spanned by the homogeneous
degree n+2k-3 polynomials

    x_1 ... x_n * (x_1^m + ... + x_n^m) * x_1^(2 d_1) ... x_n^(2 d_n)

over indices (m, d) with m + 2(d_1 + ... + d_n) = 2k-3; these are
linearly independent for n >= k-1, so coordinates are well defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from math import factorial

from . import linalg
from .combinatorics import (
    distinct_permutations,
    iter_monomials_up_to,
    num_orders_below,
    orbit_size,
    partitions,
)
from .fields import CharacteristicError, Field
from .poly import ExponentVector, SparsePolynomial

Partition = tuple[int, ...]  # weakly decreasing positive entries


def _as_partition(exps: ExponentVector) -> Partition:
    return tuple(sorted((e for e in exps if e), reverse=True))


@dataclass
class SymmetricPolynomial:
    """Coordinates on the monomial-symmetric basis m_lambda."""

    field: Field
    nvars: int
    coeffs: dict[Partition, object]

    def __post_init__(self):
        clean = {}
        for lam, c in self.coeffs.items():
            lam = tuple(lam)
            if len(lam) > self.nvars:
                raise ValueError(f"partition {lam} has more parts than variables")
            c = self.field.coerce(c)
            if c != 0:
                clean[lam] = c
        self.coeffs = clean

    @property
    def degree(self) -> int:
        return max((sum(lam) for lam in self.coeffs), default=-1)

    def expand(self) -> SparsePolynomial:
        """Full orbit expansion into a sparse polynomial."""
        terms: dict[ExponentVector, object] = {}
        for lam, c in self.coeffs.items():
            padded = tuple(lam) + (0,) * (self.nvars - len(lam))
            for perm in distinct_permutations(padded):
                terms[perm] = c
        return SparsePolynomial(self.field, self.nvars, terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymmetricPolynomial):
            return NotImplemented
        return (
            self.field == other.field
            and self.nvars == other.nvars
            and self.coeffs == other.coeffs
        )


def to_symmetric(p: SparsePolynomial) -> SymmetricPolynomial:
    """Partition-indexed coordinates of a symmetric sparse polynomial.

    Raises ValueError if p is not symmetric (coefficients must be
    constant on each full orbit of exponent vectors).
    """
    groups: dict[Partition, list] = {}
    for exps, coeff in p.terms().items():
        groups.setdefault(_as_partition(exps), []).append(coeff)
    coeffs: dict[Partition, object] = {}
    for lam, values in groups.items():
        size = orbit_size(lam, p.nvars)
        if len(values) != size or any(v != values[0] for v in values[1:]):
            raise ValueError("polynomial is not symmetric")
        coeffs[lam] = values[0]
    return SymmetricPolynomial(p.field, p.nvars, coeffs)


@lru_cache(maxsize=None)
def _multiply_by_power_sum_int(lam: Partition, r: int, n: int) -> tuple[tuple[Partition, int], ...]:
    """m_lambda * p_r on the monomial-symmetric basis, integer coefficients.

    The coefficient of m_mu is the number of positions i with mu_i >= r
    such that removing r from that position re-sorts to lambda; it equals
    the multiplicity of v+r in mu for each distinct value v of the padded
    lambda (v = 0 allowed when lambda has fewer than n parts).
    """
    out: dict[Partition, int] = {}
    padded = list(lam) + [0] * (n - len(lam))
    for v in sorted(set(padded)):
        bumped = list(padded)
        bumped[bumped.index(v)] = v + r
        mu = tuple(sorted((x for x in bumped if x), reverse=True))
        out[mu] = out.get(mu, 0) + bumped.count(v + r)
    return tuple(sorted(out.items()))


@lru_cache(maxsize=None)
def _power_sum_product_int(parts: Partition, n: int) -> tuple[tuple[Partition, int], ...]:
    """Expansion of p_{parts_1} * ... * p_{parts_l} on m_lambda, over the integers."""
    coeffs: dict[Partition, int] = {(): 1}
    for r in parts:
        new: dict[Partition, int] = {}
        for lam, c in coeffs.items():
            for mu, mult in _multiply_by_power_sum_int(lam, r, n):
                new[mu] = new.get(mu, 0) + c * mult
        coeffs = new
    return tuple(sorted(coeffs.items()))


def expand_power_sum_product(
    parts, n: int, field: Field = Field.rational()
) -> SymmetricPolynomial:
    """The product of power sums p_m over the multiset `parts`, as a
    symmetric polynomial in n variables."""
    parts = tuple(sorted(parts, reverse=True))
    if any(m < 1 for m in parts):
        raise ValueError("power-sum indices must be positive")
    if any(m > n for m in parts):
        raise ValueError(f"power sum index above nvars={n} is outside the basis convention")
    coeffs = {lam: c for lam, c in _power_sum_product_int(parts, n)}
    return SymmetricPolynomial(field, n, coeffs)


@dataclass
class PowerSumRepresentation:
    """Unique expansion of a symmetric polynomial of degree <= n as a linear
    combination of products of power sums; keys are multisets of positive
    integers stored as weakly decreasing tuples (the empty tuple is the
    constant term)."""

    field: Field
    nvars: int
    terms: dict[Partition, object]

    def coefficient(self, parts) -> object:
        return self.terms.get(tuple(sorted(parts, reverse=True)), self.field.zero())

    def expand(self) -> SymmetricPolynomial:
        total = SymmetricPolynomial(self.field, self.nvars, {})
        acc: dict[Partition, object] = {}
        for parts, c in self.terms.items():
            if parts == ():
                acc[()] = self.field.add(acc.get((), self.field.zero()), c)
                continue
            for lam, mult in _power_sum_product_int(parts, self.nvars):
                step = self.field.mul(c, self.field.coerce(mult))
                acc[lam] = self.field.add(acc.get(lam, self.field.zero()), step)
        total.coeffs = {lam: c for lam, c in acc.items() if c != 0}
        return total


def to_power_sums(s: SymmetricPolynomial) -> PowerSumRepresentation:
    """Decompose a symmetric polynomial of degree <= nvars into products of
    power sums, by a triangular solve over partitions of each weight
    (finest partition first; the diagonal entry for lambda is the product
    of the factorials of its part multiplicities)."""
    field = s.field
    n = s.nvars
    if s.degree > n:
        raise ValueError(
            f"degree {s.degree} exceeds nvars={n}; the power-sum representation is not unique"
        )
    work = dict(s.coeffs)
    result: dict[Partition, object] = {}
    for weight in sorted({sum(lam) for lam in work}):
        if weight == 0:
            result[()] = work.pop(())
            continue
        for lam in partitions(weight):
            c = work.get(lam)
            if c is None or c == 0:
                work.pop(lam, None)
                continue
            diag = 1
            for v in set(lam):
                diag *= factorial(lam.count(v))
            diag_f = field.coerce(diag)
            if diag_f == 0:
                raise CharacteristicError(
                    f"triangular solve needs division by {diag}, a multiple of the characteristic"
                )
            a = field.div(c, diag_f)
            result[lam] = a
            for mu, mult in _power_sum_product_int(lam, n):
                delta = field.mul(a, field.coerce(mult))
                cur = field.sub(work.get(mu, field.zero()), delta)
                if cur != 0:
                    work[mu] = cur
                else:
                    work.pop(mu, None)
    if any(c != 0 for c in work.values()):
        raise AssertionError("triangular power-sum solve left a nonzero remainder")
    return PowerSumRepresentation(field, n, result)


def newton_coefficient(parts) -> Fraction:
    """Coefficient of the pure power sum p_(d_1+...+d_t) in the power-sum
    expansion of the distinct-index sum over x_{i1}^{d1} ... x_{it}^{dt};
    equals t! (-1)^(t-1) / t."""
    parts = tuple(parts)
    if not parts or any(d < 1 for d in parts):
        raise ValueError("need a nonempty sequence of positive integers")
    t = len(parts)
    return Fraction(factorial(t) * (-1) ** (t - 1), t)


def distinct_index_sum(parts, n: int, field: Field = Field.rational()) -> SymmetricPolynomial:
    """Sum of x_{i1}^{d1} ... x_{it}^{dt} over ordered tuples of distinct
    indices; equals (product of part-multiplicity factorials) * m_lambda."""
    parts = tuple(parts)
    if len(parts) > n:
        raise ValueError("more parts than variables")
    lam = tuple(sorted(parts, reverse=True))
    mult = 1
    for v in set(lam):
        mult *= factorial(lam.count(v))
    return SymmetricPolynomial(field, n, {lam: mult})


def odd_part_support_check(parts, n: int) -> bool:
    """Decompose the distinct-index sum for `parts` (positive integers,
    exactly one odd, total <= n) into power sums and verify that every
    multiset in the support has the same weight and exactly one odd part."""
    parts = tuple(parts)
    if sum(parts) > n:
        raise ValueError("total degree must be at most nvars")
    if sum(d % 2 for d in parts) != 1:
        raise ValueError("need exactly one odd part")
    rep = to_power_sums(distinct_index_sum(parts, n))
    weight = sum(parts)
    for ms, c in rep.terms.items():
        if c == 0:
            continue
        if sum(ms) != weight or sum(m % 2 for m in ms) != 1:
            return False
    return True


# -- the top space -------------------------------------------------------------


def top_space_indices(n: int, k: int) -> list[tuple[int, ExponentVector]]:
    """All (m, d) with m + 2|d| = 2k-3: the index set of the top-space
    basis, ordered by |d| ascending then graded-lex on d.  The first entry
    is the leading index (m = 2k-3, d = 0).  Count: M_{k-1}(n)."""
    if k < 2 or n < k - 1:
        raise ValueError(f"need k >= 2 and n >= k-1, got n={n}, k={k}")
    out = []
    for d in iter_monomials_up_to(n, k - 2):
        m = 2 * k - 3 - 2 * sum(d)
        out.append((m, d))
    assert len(out) == num_orders_below(k - 1, n)
    return out


def top_space_basis_polynomial(
    n: int, k: int, m: int, d: ExponentVector, field: Field = Field.rational()
) -> SparsePolynomial:
    """x_1 ... x_n * (x_1^m + ... + x_n^m) * x^(2d), expanded."""
    terms: dict[ExponentVector, object] = {}
    for i in range(n):
        exps = [1 + 2 * di for di in d]
        exps[i] += m
        terms[tuple(exps)] = field.add(terms.get(tuple(exps), field.zero()), field.one())
    return SparsePolynomial(field, n, terms)


@dataclass
class TopSpaceCoordinates:
    """Coordinates of a homogeneous degree n+2k-3 polynomial on the
    top-space basis; `leading` is the coordinate at (m=2k-3, d=0)."""

    n: int
    k: int
    field: Field
    coords: dict[tuple[int, ExponentVector], object]

    @property
    def leading(self):
        return self.coords.get((2 * self.k - 3, (0,) * self.n), self.field.zero())

    def vector(self) -> list:
        order = top_space_indices(self.n, self.k)
        return [self.coords.get(key, self.field.zero()) for key in order]


def top_space_coordinates(h: SparsePolynomial, k: int) -> TopSpaceCoordinates:
    """Coordinates of a symmetric member of the top space.

    Requirements, each reported separately: h homogeneous of degree
    n+2k-3 with n >= 2k-3; divisible by x_1 ... x_n; symmetric; every
    monomial of the quotient has exactly one odd exponent.  The quotient
    is decomposed into power sums; each multiset regroups by its unique
    odd part m, with the even parts distributed over the variables.  The
    leading coordinate therefore equals the coefficient of the pure power
    sum p_{2k-3} in the quotient's representation.
    """
    n = h.nvars
    if k < 2 or n < 2 * k - 3:
        raise ValueError(f"need k >= 2 and n >= 2k-3, got n={n}, k={k}")
    target = n + 2 * k - 3
    if h.is_zero or any(sum(e) != target for e in h.terms()):
        raise ValueError(f"polynomial is not homogeneous of degree {target}")
    if not h.is_divisible_by_all_variables():
        raise ValueError("polynomial is not divisible by the product of all variables")
    quotient = h.divide_by_all_variables()
    for e in quotient.terms():
        if sum(v % 2 for v in e) != 1:
            raise ValueError("a quotient monomial does not have exactly one odd exponent")
    rep = to_power_sums(to_symmetric(quotient))
    field = h.field
    coords: dict[tuple[int, ExponentVector], object] = {}
    for ms, c in rep.terms.items():
        odd = [m for m in ms if m % 2 == 1]
        if len(odd) != 1:
            raise ValueError("power-sum support contains a multiset without a unique odd part")
        m = odd[0]
        evens = [v for v in ms if v % 2 == 0]
        for assignment in iproduct(range(n), repeat=len(evens)):
            d = [0] * n
            for pos, v in zip(assignment, evens):
                d[pos] += v // 2
            key = (m, tuple(d))
            coords[key] = field.add(coords.get(key, field.zero()), c)
    coords = {key: c for key, c in coords.items() if c != 0}
    return TopSpaceCoordinates(n, k, field, coords)


def top_space_coordinates_by_solve(h: SparsePolynomial, k: int) -> TopSpaceCoordinates:
    """Coordinates of an arbitrary top-space member via an exact linear
    solve against the expanded basis polynomials.  Independent of the
    symmetric power-sum route; also serves as a membership test."""
    n = h.nvars
    field = h.field
    indices = top_space_indices(n, k)
    basis_polys = [top_space_basis_polynomial(n, k, m, d, field) for m, d in indices]
    support: list[ExponentVector] = sorted(
        {e for q in basis_polys for e in q.terms()} | set(h.terms())
    )
    rows = [[q.coefficient(e) for q in basis_polys] for e in support]
    rhs = [h.coefficient(e) for e in support]
    try:
        solution = linalg.solve_unique(rows, rhs, field)
    except ValueError as exc:
        raise ValueError(f"polynomial is not in the top space: {exc}") from None
    coords = {
        key: field.coerce(c) for key, c in zip(indices, solution) if field.coerce(c) != 0
    }
    return TopSpaceCoordinates(n, k, field, coords)
