"""Enumeration helpers shared across the package.

All generators yield in a fixed, documented order so that downstream
matrices, bases and serialized files are reproducible byte for byte.
Graded-lex order on exponent tuples means: compare by total degree
first, then lexicographically on the tuple itself.
"""

from __future__ import annotations

from math import factorial
from typing import Iterator


def grlex_key(exps: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Sort key realizing graded-lex order (ascending)."""
    return (sum(exps), exps)


def iter_exponents_of_degree(nvars: int, degree: int) -> Iterator[tuple[int, ...]]:
    """All n-tuples of non-negative integers with the given sum, lex ascending."""
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree + 1):
        for rest in iter_exponents_of_degree(nvars - 1, degree - first):
            yield (first,) + rest


def iter_monomials_up_to(nvars: int, max_degree: int) -> Iterator[tuple[int, ...]]:
    """All exponent tuples of total degree <= max_degree, graded-lex ascending."""
    for d in range(max_degree + 1):
        yield from iter_exponents_of_degree(nvars, d)


def iter_orders_below(nvars: int, t: int) -> Iterator[tuple[int, ...]]:
    """Derivative multi-indices of order < t, graded-lex ascending."""
    yield from iter_monomials_up_to(nvars, t - 1)


def num_orders_below(t: int, n: int) -> int:
    """Number of n-tuples of non-negative integers summing to less than t.

    Equals C(n+t-1, n); cross-checked against direct enumeration in the
    test suite.
    """
    if t < 1 or n < 1:
        raise ValueError(f"need t >= 1 and n >= 1, got t={t}, n={n}")
    from math import comb

    return comb(n + t - 1, n)


def hypercube_points(n: int) -> list[tuple[int, ...]]:
    """The 2^n points of {0,1}^n in binary-counter order (origin first).

    Coordinate a_i is bit i-1 of the counter value.
    """
    return [tuple((v >> i) & 1 for i in range(n)) for v in range(1 << n)]


def nonzero_hypercube_points(n: int) -> list[tuple[int, ...]]:
    """The 2^n - 1 nonzero points of {0,1}^n in binary-counter order."""
    return hypercube_points(n)[1:]


def compositions(total: int) -> Iterator[tuple[int, ...]]:
    """All 2^(total-1) ordered sequences of positive integers summing to total.

    Iterative binary-gap encoding: bit j of the mask cuts between
    positions j+1 and j+2 of [1..total].
    """
    if total < 1:
        raise ValueError("compositions are defined for positive totals")
    for mask in range(1 << (total - 1)):
        parts = []
        prev = 0
        for pos in range(total - 1):
            if (mask >> pos) & 1:
                parts.append(pos + 1 - prev)
                prev = pos + 1
        parts.append(total - prev)
        yield tuple(parts)


def partitions(total: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of `total` as weakly decreasing tuples.

    Yielded in ascending tuple order ((1,1,..,1) first, (total,) last),
    which is the processing order of the triangular power-sum solve.
    """
    if total == 0:
        yield ()
        return
    if max_part is None:
        max_part = total
    result = []

    def rec(remaining: int, cap: int, acc: list[int]):
        if remaining == 0:
            result.append(tuple(acc))
            return
        for part in range(min(cap, remaining), 0, -1):
            acc.append(part)
            rec(remaining - part, part, acc)
            acc.pop()

    rec(total, max_part, [])
    result.sort()
    yield from result


def distinct_permutations(values: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Distinct permutations of a tuple (multiset permutations)."""
    counts: dict[int, int] = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    keys = sorted(counts)
    n = len(values)
    slot: list[int] = []

    def rec():
        if len(slot) == n:
            yield tuple(slot)
            return
        for v in keys:
            if counts[v]:
                counts[v] -= 1
                slot.append(v)
                yield from rec()
                slot.pop()
                counts[v] += 1

    yield from rec()


def orbit_size(partition: tuple[int, ...], nvars: int) -> int:
    """Number of distinct monomials with exponent multiset `partition` in nvars."""
    if len(partition) > nvars:
        return 0
    mult: dict[int, int] = {0: nvars - len(partition)}
    for part in partition:
        mult[part] = mult.get(part, 0) + 1
    denom = 1
    for c in mult.values():
        denom *= factorial(c)
    return factorial(nvars) // denom
