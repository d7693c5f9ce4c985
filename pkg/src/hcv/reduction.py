"""Canonical reduced forms relative to hypercube vanishing data.

A polynomial in n variables is k-reduced when its degree is at most
n+2k-3 and no monomial is divisible by a product of k squares of
variables.  Rewriting any polynomial into this form subtracts products
that vanish to order >= k at every nonzero hypercube point (and >= k-1
at the origin), so the reduced form carries the same Taylor data there.
The result is independent of the order in which reducible monomials are
eliminated; the deterministic policy here exists only to make outputs
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random

from .combinatorics import grlex_key, iter_monomials_up_to, num_orders_below
from .fields import Field
from .poly import ExponentVector, SparsePolynomial


@dataclass(frozen=True)
class ReducibleMonomial:
    """Witness that a monomial admits a reduction step.

    kind "squares": divisible by a product of k variable squares
    (square_indices is a k-multiset of variable indices, 1-based).
    kind "squares_all_vars": divisible by a product of k-1 variable
    squares times x_1 ... x_n (square_indices has k-1 entries).
    """

    monomial: ExponentVector
    kind: str
    square_indices: tuple[int, ...]


def is_reduced(p: SparsePolynomial, k: int) -> bool:
    """True iff deg p <= n+2k-3 and no monomial carries k variable squares."""
    if k < 2:
        raise ValueError("reduction is defined for k >= 2")
    cap = p.nvars + 2 * k - 3
    for exps in p.terms():
        if sum(exps) > cap:
            return False
        if sum(e // 2 for e in exps) >= k:
            return False
    return True


def _classify(exps: ExponentVector, k: int) -> tuple[str, tuple[int, ...]] | None:
    # "squares" kind, greedy lowest-index multiset.
    caps = [e // 2 for e in exps]
    if sum(caps) >= k:
        indices = []
        need = k
        for i, cap in enumerate(caps):
            take = min(cap, need)
            indices.extend([i + 1] * take)
            need -= take
            if need == 0:
                break
        return ("squares", tuple(indices))
    # Remaining reducible monomials have every exponent odd with the
    # floor-halves summing to exactly k-1; then the step-product's leading
    # monomial matches exactly.
    if all(e >= 1 for e in exps) and sum((e - 1) // 2 for e in exps) >= k - 1:
        indices = []
        for i, e in enumerate(exps):
            indices.extend([i + 1] * ((e - 1) // 2))
        return ("squares_all_vars", tuple(indices))
    return None


def find_reducible_monomial(p: SparsePolynomial, k: int) -> ReducibleMonomial | None:
    """The reducible monomial of maximum degree (graded-lex-largest among
    ties), preferring the k-squares kind; None when p is k-reduced in the
    monomial sense."""
    if k < 2:
        raise ValueError("reduction is defined for k >= 2")
    best: ExponentVector | None = None
    for exps in p.terms():
        if _classify(exps, k) is None:
            continue
        if best is None or grlex_key(exps) > grlex_key(best):
            best = exps
    if best is None:
        return None
    kind, indices = _classify(best, k)  # type: ignore[misc]
    return ReducibleMonomial(best, kind, indices)


@dataclass(frozen=True)
class ReductionResult:
    reduced: SparsePolynomial
    steps_taken: int


def _square_factor_product(field: Field, nvars: int, counts: dict[int, int]) -> SparsePolynomial:
    """Product over i of (x_i^2 - x_i)^counts[i] (0-based variable keys)."""
    out = SparsePolynomial.constant(field, nvars, 1)
    for i, c in counts.items():
        e2 = [0] * nvars
        e1 = [0] * nvars
        e2[i] = 2
        e1[i] = 1
        factor = SparsePolynomial(field, nvars, {tuple(e2): 1, tuple(e1): -1})
        out = out * factor**c
    return out


def _all_vars_minus_one(field: Field, nvars: int) -> SparsePolynomial:
    out = SparsePolynomial.constant(field, nvars, 1)
    for i in range(nvars):
        e = [0] * nvars
        e[i] = 1
        out = out * SparsePolynomial(field, nvars, {tuple(e): 1, (0,) * nvars: -1})
    return out


def _random_square_counts(exps: ExponentVector, k: int, rng: Random) -> dict[int, int]:
    caps = [e // 2 for e in exps]
    counts: dict[int, int] = {}
    for _ in range(k):
        choices = [i for i, cap in enumerate(caps) if counts.get(i, 0) < cap]
        i = rng.choice(choices)
        counts[i] = counts.get(i, 0) + 1
    return counts


def reduce_polynomial(q: SparsePolynomial, k: int, rng: Random | None = None) -> ReductionResult:
    """Rewrite q into its k-reduced form.

    Each step cancels one reducible monomial of maximal degree by
    subtracting a multiple of either

      (a) x_{i1}(x_{i1}-1) ... x_{ik}(x_{ik}-1) * x^m, or
      (b) x_{i1}(x_{i1}-1) ... x_{i,k-1}(x_{i,k-1}-1) * (x_1-1) ... (x_n-1),

    both of which vanish to order >= k at every nonzero hypercube point
    and to order >= k-1 (for (a): >= k) at the origin.  Every non-leading
    monomial of the subtracted product has strictly smaller degree, so
    the rewriting processes degrees top-down and terminates.  With `rng`,
    tie-breaking among maximal-degree monomials and among valid square
    multisets is randomized (the result provably does not depend on it).
    """
    if k < 2:
        raise ValueError("reduction is defined for k >= 2")
    field = q.field
    n = q.nvars
    terms: dict[ExponentVector, object] = dict(q.terms())
    add = field.add
    mul = field.mul
    neg = field.neg

    by_degree: dict[int, set[ExponentVector]] = {}
    for e in terms:
        by_degree.setdefault(sum(e), set()).add(e)

    all_vars_poly: SparsePolynomial | None = None
    square_cache: dict[tuple[tuple[int, int], ...], SparsePolynomial] = {}

    def square_product(counts: dict[int, int]) -> SparsePolynomial:
        key = tuple(sorted(counts.items()))
        if key not in square_cache:
            square_cache[key] = _square_factor_product(field, n, dict(key))
        return square_cache[key]

    steps = 0
    degree = max(by_degree, default=-1)
    while degree >= 0:
        bucket = by_degree.get(degree)
        if not bucket:
            by_degree.pop(degree, None)
            degree -= 1
            continue
        reducible = [e for e in bucket if _classify(e, k) is not None]
        if not reducible:
            degree -= 1
            continue
        if rng is None:
            reducible.sort(key=grlex_key, reverse=True)
        else:
            rng.shuffle(reducible)
        for exps in reducible:
            coeff = terms.get(exps)
            if coeff is None:
                raise AssertionError("reducible monomial vanished before its own step")
            kind, indices = _classify(exps, k)  # type: ignore[misc]
            if kind == "squares":
                if rng is None:
                    counts: dict[int, int] = {}
                    for idx in indices:
                        counts[idx - 1] = counts.get(idx - 1, 0) + 1
                else:
                    counts = _random_square_counts(exps, k, rng)
                leftover = list(exps)
                for i, c in counts.items():
                    leftover[i] -= 2 * c
                product = square_product(counts)
                shift = tuple(leftover)
                if any(shift):
                    product_terms = {
                        tuple(a + b for a, b in zip(e, shift)): c
                        for e, c in product.terms().items()
                    }
                else:
                    product_terms = product.terms()
            else:
                counts = {}
                for idx in indices:
                    counts[idx - 1] = counts.get(idx - 1, 0) + 1
                if all_vars_poly is None:
                    all_vars_poly = _all_vars_minus_one(field, n)
                product_terms = (square_product(counts) * all_vars_poly).terms()
            # Subtract coeff * product; the leading monomial is exps with
            # coefficient 1, so the target term cancels exactly.
            for e, c in product_terms.items():
                delta = mul(coeff, c)
                old = terms.get(e)
                if old is None:
                    terms[e] = neg(delta)
                    by_degree.setdefault(sum(e), set()).add(e)
                else:
                    new = add(old, neg(delta))
                    if new != 0:
                        terms[e] = new
                    else:
                        del terms[e]
                        by_degree[sum(e)].discard(e)
            steps += 1
            if exps in terms:
                raise AssertionError("reduction step failed to cancel its monomial")
        degree -= 1
    reduced = SparsePolynomial(field, n, terms)
    return ReductionResult(reduced, steps)


def reduced_monomial_basis(n: int, k: int) -> list[ExponentVector]:
    """All monomials of degree <= n+2k-3 free of k variable squares,
    graded-lex ascending; the count is (2^n - 1) M_k(n) + M_{k-1}(n)."""
    if k < 2 or n < 1:
        raise ValueError(f"need k >= 2 and n >= 1, got k={k}, n={n}")
    cap = n + 2 * k - 3
    return [
        e for e in iter_monomials_up_to(n, cap) if sum(v // 2 for v in e) < k
    ]


def vanishing_reduced_basis(
    n: int, k: int, field: Field = Field.rational()
) -> list[SparsePolynomial]:
    """Basis of the k-reduced polynomials with multiplicity >= k at every
    nonzero hypercube point: the null space of the off-origin Taylor rows
    on the reduced monomial basis.  Size M_{k-1}(n); each vector is
    normalized so its first nonzero coordinate (graded-lex) is 1."""
    from . import linalg
    from .vanishing import taylor_coefficient_int

    basis = reduced_monomial_basis(n, k)
    from .combinatorics import iter_orders_below, nonzero_hypercube_points

    rows = [
        [taylor_coefficient_int(mono, pt, order) for mono in basis]
        for pt in nonzero_hypercube_points(n)
        for order in iter_orders_below(n, k)
    ]
    if field.kind == "gf":
        rows = [[v % field.p for v in row] for row in rows]
    vectors = linalg.null_space(rows, field, len(basis))
    out = []
    for vec in vectors:
        lead = next(v for v in vec if v != 0)
        inv = field.inv(field.coerce(lead))
        out.append(
            SparsePolynomial(
                field,
                n,
                {
                    mono: field.mul(field.coerce(v), inv)
                    for mono, v in zip(basis, vec)
                    if v != 0
                },
            )
        )
    expected = num_orders_below(k - 1, n)
    if len(out) != expected:
        raise AssertionError(
            f"null space dimension {len(out)} differs from expected {expected}"
        )
    return out
