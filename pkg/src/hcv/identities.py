"""Exact integer identities behind the leading-coefficient computation.

Everything here is arbitrary-precision integer arithmetic; no modular
shortcuts.  The binomial convention throughout: C(n, m) is defined for
n >= 0 and any integer m, and equals 0 unless 0 <= m <= n.
"""

from __future__ import annotations

from math import comb

from .combinatorics import compositions

COMPOSITION_GUARD = 24


def binomial(n: int, m: int) -> int:
    """Binomial coefficient with the zero extension outside 0 <= m <= n."""
    if n < 0:
        raise ValueError("binomial is defined for n >= 0 only")
    if m < 0 or m > n:
        return 0
    return comb(n, m)


def catalan(i: int) -> int:
    """The i-th Catalan number C(2i, i) / (i+1), exactly."""
    if i < 0:
        raise ValueError("Catalan numbers are indexed from 0")
    return comb(2 * i, i) // (i + 1)


def catalan_alternating_sum(s: int) -> int:
    """sum_{i=0}^{s} (-1)^i C_i binomial(i+1, s-i); equals 0 for s >= 1
    and 1 for s = 0."""
    if s < 0:
        raise ValueError("need s >= 0")
    return sum((-1) ** i * catalan(i) * binomial(i + 1, s - i) for i in range(s + 1))


def binom_convolution_check(n: int, m: int, s: int) -> bool:
    """Check binomial(n+s+1, m-s) = sum_j binomial(s+1, j-s) binomial(n, m-j);
    the sum truncates at j = 2s+1 by the zero convention."""
    if n < 0 or m < 0 or s < 0:
        raise ValueError("need non-negative n, m, s")
    rhs = sum(binomial(s + 1, j - s) * binomial(n, m - j) for j in range(s, 2 * s + 2))
    return binomial(n + s + 1, m - s) == rhs


def catalan_binomial_expansion_check(n: int, m: int, s: int) -> bool:
    """Check the expansion of binomial(n, m) through Catalan-weighted
    shifted binomials:

        binomial(n, m) = sum_{j=0}^{s} (-1)^j C_j binomial(n+j+1, m-j)
          - sum_{j=s+1}^{2s+1} (sum_{i=0}^{s} (-1)^i C_i binomial(i+1, j-i))
            * binomial(n, m-j).
    """
    if n < 0 or m < 0 or s < 0:
        raise ValueError("need non-negative n, m, s")
    first = sum((-1) ** j * catalan(j) * binomial(n + j + 1, m - j) for j in range(s + 1))
    second = sum(
        sum((-1) ** i * catalan(i) * binomial(i + 1, j - i) for i in range(s + 1))
        * binomial(n, m - j)
        for j in range(s + 1, 2 * s + 2)
    )
    return binomial(n, m) == first - second


def signed_composition_sum(total: int) -> int:
    """sum over ordered sequences (m_1..m_t) of positive integers with
    sum `total` of (-1)^t binomial(total-m_1, m_1-1) * prod_{j>=2}
    binomial(total-m_j, m_j); equals (-1)^total C_(total-1).

    Enumerates all 2^(total-1) compositions; guarded at total <= 24.
    """
    if total < 1:
        raise ValueError("need total >= 1")
    if total > COMPOSITION_GUARD:
        raise ValueError(f"composition enumeration guarded at total <= {COMPOSITION_GUARD}")
    result = 0
    for parts in compositions(total):
        term = (-1) ** len(parts) * binomial(total - parts[0], parts[0] - 1)
        for m in parts[1:]:
            term *= binomial(total - m, m)
        result += term
    return result


def cancellation_check(total: int, j: int) -> bool:
    """Check that the signed sum over sequences (m_1..m_t) with m_1 >= 0,
    m_2..m_t > 0 and sum = total-j-1 of
    (-1)^t prod_i binomial(total-m_i, m_i) vanishes, for 0 <= j <= total-2."""
    if total < 1 or not 0 <= j <= total - 2:
        raise ValueError("need total >= 1 and 0 <= j <= total-2")
    weight = total - j - 1
    acc = 0
    for m1 in range(weight + 1):
        rest = weight - m1
        if rest == 0:
            acc += -binomial(total - m1, m1)  # t = 1
            continue
        for parts in compositions(rest):
            term = (-1) ** (len(parts) + 1) * binomial(total - m1, m1)
            for m in parts:
                term *= binomial(total - m, m)
            acc += term
    return acc == 0
