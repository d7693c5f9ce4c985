"""Construction and verification of the extremal polynomials.

The canonical degree n+2k-3 example with multiplicity >= k at every
nonzero hypercube point and a nonzero value at the origin arises by
reducing the seed (-1)^((k-1)n) (x_1-1)^k ... (x_n-1)^k.  Its top-degree
part has a closed form: an n-fold product of one fixed univariate factor
polynomial, restricted to terms with exactly one even exponent, and its
leading power-sum coefficient is the signed Catalan number
(-1)^(k-1) C_(k-2).  That Catalan number vanishing mod p is exactly what
breaks the degree bound in characteristic p; the explicit GF(2), k=4
example below realizes the failure at degree n+2k-4.

Characteristic 3 (k=7) and p > 3 (k=(p+5)/2) admit analogous examples,
but verifying them needs n >= 2k-3 >= 11 variables; they stay untested
here and only the Catalan divisibility criterion itself is checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .combinatorics import (
    compositions,
    hypercube_points,
    iter_exponents_of_degree,
)
from .fields import Field, is_prime
from .identities import catalan
from .poly import AffineForm, ExponentVector, SparsePolynomial
from .reduction import reduce_polynomial
from .vanishing import ENUMERATION_GUARD


def _x_minus_one_power(field: Field, nvars: int, index: int, power: int) -> SparsePolynomial:
    e = [0] * nvars
    e[index] = 1
    base = SparsePolynomial(field, nvars, {tuple(e): 1, (0,) * nvars: -1})
    return base**power


def witness_seed(n: int, k: int, field: Field = Field.rational()) -> SparsePolynomial:
    """(-1)^((k-1)n) (x_1-1)^k ... (x_n-1)^k expanded; degree kn, value
    (-1)^n at the origin, multiplicity >= k at every nonzero point."""
    if k < 2 or n < 1:
        raise ValueError(f"need k >= 2 and n >= 1, got n={n}, k={k}")
    out = SparsePolynomial.constant(field, n, (-1) ** ((k - 1) * n))
    for i in range(n):
        out = out * _x_minus_one_power(field, n, i, k)
    return out


def extremal_witness(n: int, k: int, field: Field = Field.rational()) -> SparsePolynomial:
    """The k-reduced form of the witness seed: symmetric, degree exactly
    n+2k-3, multiplicity >= k at every nonzero hypercube point, value
    (-1)^n at the origin."""
    if n < 2 * k - 3:
        raise ValueError(f"need n >= 2k-3, got n={n}, k={k}")
    return reduce_polynomial(witness_seed(n, k, field), k).reduced


def extremal_witness_with_origin(
    n: int, k: int, ell: int, field: Field = Field.rational()
) -> SparsePolynomial:
    """Reduced form of x_1^ell (x_1-1)^k ... (x_n-1)^k: degree n+2k-3,
    multiplicity >= k at nonzero points and exactly ell at the origin,
    for 0 <= ell <= k-2."""
    if not 0 <= ell <= k - 2:
        raise ValueError(f"origin multiplicity must lie in 0..{k-2}, got {ell}")
    if n < 2 * k - 3:
        raise ValueError(f"need n >= 2k-3, got n={n}, k={k}")
    seed = SparsePolynomial.monomial(field, tuple([ell] + [0] * (n - 1)))
    for i in range(n):
        seed = seed * _x_minus_one_power(field, n, i, k)
    return reduce_polynomial(seed, k).reduced


def witness_exact_kminus1(n: int, k: int, field: Field = Field.rational()) -> SparsePolynomial:
    """x_1^(k-1) (x_1-1)^(k-1) * (x_1-1) ... (x_n-1): degree n+2k-2,
    multiplicity >= k at nonzero points and exactly k-1 at the origin.
    Valid for every k >= 1 (k=1 gives (x_1-1) ... (x_n-1))."""
    if k < 1 or n < 1:
        raise ValueError(f"need k >= 1 and n >= 1, got n={n}, k={k}")
    lead = SparsePolynomial.monomial(field, tuple([k - 1] + [0] * (n - 1)))
    out = lead * _x_minus_one_power(field, n, 0, k - 1)
    for i in range(n):
        out = out * _x_minus_one_power(field, n, i, 1)
    return out


@dataclass(frozen=True)
class FactorCoefficients:
    """Coefficients a_0..a_{k-1} of the univariate factor polynomial
    a_{k-1} x^k + ... + a_0 x whose n-fold product carries the witness
    top part; a_d = 0 for d >= k."""

    k: int
    values: tuple[int, ...]

    def a(self, d: int) -> int:
        if d < 0:
            raise ValueError("negative index")
        return self.values[d] if d < self.k else 0


def top_factor_coefficients(k: int) -> FactorCoefficients:
    """a_{2m} = C(k-1-m, m) and a_{2m-1} = -C(k-1-m, m-1); a_0 = 1."""
    if k < 2:
        raise ValueError("need k >= 2")
    values = []
    for d in range(k):
        if d % 2 == 0:
            m = d // 2
            values.append(comb(k - 1 - m, m))
        else:
            m = (d + 1) // 2
            values.append(-comb(k - 1 - m, m - 1))
    return FactorCoefficients(k, tuple(values))


def extremal_top_part(n: int, k: int, field: Field = Field.rational()) -> SparsePolynomial:
    """Closed form of the degree n+2k-3 part of the extremal witness:
    sum of a_{d_1} ... a_{d_n} x_1^(d_1+1) ... x_n^(d_n+1) over
    non-negative (d_1..d_n) summing to 2k-3 with exactly one odd entry."""
    if k < 2 or n < 2 * k - 3:
        raise ValueError(f"need k >= 2 and n >= 2k-3, got n={n}, k={k}")
    coeffs = top_factor_coefficients(k)
    terms: dict[ExponentVector, object] = {}
    for d in iter_exponents_of_degree(n, 2 * k - 3):
        if sum(v % 2 for v in d) != 1:
            continue
        c = 1
        for v in d:
            c *= coeffs.a(v)
            if c == 0:
                break
        if c:
            terms[tuple(v + 1 for v in d)] = c
    return SparsePolynomial(field, n, terms)


def leading_power_sum_coefficient(k: int) -> int:
    """The leading top-space coordinate of the witness top part, evaluated
    as the alternating composition sum

        sum over (m_1..m_t), m_i >= 1, sum = k-1 of
        (-1)^t C(k-1-m_1, m_1-1) C(k-1-m_2, m_2) ... C(k-1-m_t, m_t),

    and checked against its closed form (-1)^(k-1) C_(k-2)."""
    if k < 2:
        raise ValueError("need k >= 2")
    total = 0
    for parts in compositions(k - 1):
        term = (-1) ** len(parts) * comb(k - 1 - parts[0], parts[0] - 1)
        for m in parts[1:]:
            term *= comb(k - 1 - m, m)
        total += term
    closed = (-1) ** (k - 1) * catalan(k - 2)
    if total != closed:
        raise AssertionError(
            f"composition sum {total} disagrees with signed Catalan value {closed}"
        )
    return total


def gf2_counterexample(n: int) -> SparsePolynomial:
    """Degree n+4 polynomial over GF(2), nonzero at the origin, with
    multiplicity >= 4 at every nonzero hypercube point; breaks the
    characteristic-zero minimum degree n+2k-3 for k=4.

    Built symbolically from its index-set description and expanded on
    demand: the product of (x_l + 1) over all l times the quartic bracket
    1 + sum_i (x_i^3+x_i^2+x_i) + sum_{i != j} (x_i^3+x_i^2) x_j
      + sum_{i<j} x_i x_j + sum_{i<j<l} x_i x_j x_l.
    """
    if n < 5:
        raise ValueError("need n >= 5")
    field = Field.gf(2)
    zero = (0,) * n

    def mono(pairs: dict[int, int]) -> ExponentVector:
        e = [0] * n
        for i, v in pairs.items():
            e[i] = v
        return tuple(e)

    terms: dict[ExponentVector, int] = {zero: 1}

    def toggle(e: ExponentVector):
        # Characteristic 2: adding a term twice cancels it.
        if e in terms:
            del terms[e]
        else:
            terms[e] = 1

    for i in range(n):
        toggle(mono({i: 3}))
        toggle(mono({i: 2}))
        toggle(mono({i: 1}))
    for i in range(n):
        for j in range(n):
            if i != j:
                toggle(mono({i: 3, j: 1}))
                toggle(mono({i: 2, j: 1}))
    for i in range(n):
        for j in range(i + 1, n):
            toggle(mono({i: 1, j: 1}))
    for i in range(n):
        for j in range(i + 1, n):
            for l in range(j + 1, n):
                toggle(mono({i: 1, j: 1, l: 1}))
    bracket = SparsePolynomial(field, n, terms)
    out = bracket
    for i in range(n):
        e = [0] * n
        e[i] = 1
        out = out * SparsePolynomial(field, n, {tuple(e): 1, zero: 1})
    return out


def first_catalan_vanishing_k(p: int) -> int:
    """Smallest k >= 2 with the Catalan number C_(k-2) divisible by p.

    Catalan numbers are produced by the exact integer recurrence
    C_i = C_(i-1) * 2(2i-1) / (i+1) and reduced mod p afterwards; the
    recurrence's division is unsafe directly mod p.  Search is bounded by
    i <= 4p, which suffices for every prime p <= 10**6.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    c = 1  # C_0
    if c % p == 0:
        return 2
    for i in range(1, 4 * p + 1):
        num = c * 2 * (2 * i - 1)
        c, rem = divmod(num, i + 1)
        if rem:
            raise AssertionError("Catalan recurrence lost integrality")
        if c % p == 0:
            return i + 2
    raise RuntimeError(f"no Catalan multiple of {p} found with index <= {4 * p}")


@dataclass
class CoverReport:
    """Coverage of the hypercube by the zero sets of affine forms."""

    nvars: int
    num_forms: int
    counts: dict[tuple[int, ...], int]  # point -> number of vanishing forms
    origin_covered: bool
    min_coverage_off_origin: int

    def valid_for(self, k: int) -> bool:
        """True iff no form vanishes at the origin and every nonzero point
        is covered at least k times."""
        return not self.origin_covered and self.min_coverage_off_origin >= k


def verify_hyperplane_cover(forms: list[AffineForm], k: int, force: bool = False) -> CoverReport:
    """Count, at every hypercube point, how many of the forms vanish."""
    if not forms:
        raise ValueError("need at least one affine form")
    n = forms[0].nvars
    field = forms[0].field
    for f in forms:
        if f.nvars != n or f.field != field:
            raise ValueError("affine forms must share field and variable count")
    if n > ENUMERATION_GUARD and not force:
        raise ValueError(
            f"refusing to enumerate 2^{n} points (limit n <= {ENUMERATION_GUARD}; pass force=True)"
        )
    counts: dict[tuple[int, ...], int] = {}
    for pt in hypercube_points(n):
        counts[pt] = sum(1 for f in forms if f.vanishes_at(pt))
    origin = (0,) * n
    off_origin = [c for pt, c in counts.items() if pt != origin]
    return CoverReport(
        nvars=n,
        num_forms=len(forms),
        counts=counts,
        origin_covered=counts[origin] > 0,
        min_coverage_off_origin=min(off_origin),
    )
