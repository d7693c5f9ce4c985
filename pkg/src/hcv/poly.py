"""Sparse multivariate polynomials with exact coefficients.

A polynomial is a map from exponent tuples (one entry per variable) to
nonzero field elements.  All values are immutable after construction and
every operation is a pure function, so instances are safe to share
across threads.

Serialization uses the JSON document

    {"field": "rational" | "gf:<p>", "nvars": n,
     "terms": [{"exps": [e1, ..., en], "coeff": "<int or num/den>"}]}

with terms sorted in graded-lex order and coefficients normalized.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .combinatorics import grlex_key
from .fields import Field

ExponentVector = tuple[int, ...]


class SparsePolynomial:
    """Immutable sparse polynomial over an exact field."""

    __slots__ = ("field", "nvars", "_terms")

    def __init__(self, field: Field, nvars: int, terms: Mapping[ExponentVector, object] | None = None):
        if nvars < 1:
            raise ValueError("need at least one variable")
        self.field = field
        self.nvars = nvars
        clean: dict[ExponentVector, object] = {}
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != nvars or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent vector {exps} for nvars={nvars}")
                c = field.coerce(coeff)
                if c != 0:
                    clean[exps] = c
        self._terms = clean

    @classmethod
    def _raw(cls, field: Field, nvars: int, terms: dict[ExponentVector, object]) -> "SparsePolynomial":
        # Internal fast path: terms already validated and zero-free.
        self = object.__new__(cls)
        self.field = field
        self.nvars = nvars
        self._terms = terms
        return self

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, field: Field, nvars: int) -> "SparsePolynomial":
        return cls._raw(field, nvars, {})

    @classmethod
    def constant(cls, field: Field, nvars: int, value) -> "SparsePolynomial":
        return cls(field, nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, field: Field, nvars: int, index: int) -> "SparsePolynomial":
        """The polynomial x_index, with 1-based index."""
        if not 1 <= index <= nvars:
            raise ValueError(f"variable index {index} out of range 1..{nvars}")
        exps = [0] * nvars
        exps[index - 1] = 1
        return cls(field, nvars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, field: Field, exps: Iterable[int], coeff=1) -> "SparsePolynomial":
        exps = tuple(exps)
        return cls(field, len(exps), {exps: coeff})

    # -- inspection ------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def num_terms(self) -> int:
        return len(self._terms)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def coefficient(self, exps: Iterable[int]):
        return self._terms.get(tuple(exps), self.field.zero())

    def terms(self) -> Mapping[ExponentVector, object]:
        """Read-only view of the underlying term map."""
        return self._terms

    def sorted_terms(self) -> list[tuple[ExponentVector, object]]:
        """Terms in graded-lex ascending order (canonical iteration order)."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return (
            self.field == other.field
            and self.nvars == other.nvars
            and self._terms == other._terms
        )

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- arithmetic ------------------------------------------------------------

    def _check_compatible(self, other: "SparsePolynomial"):
        if self.field != other.field:
            raise ValueError(f"field mismatch: {self.field.name} vs {other.field.name}")
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        self._check_compatible(other)
        add = self.field.add
        out = dict(self._terms)
        for exps, coeff in other._terms.items():
            c = add(out.get(exps, 0), coeff) if exps in out else coeff
            if c != 0:
                out[exps] = c
            else:
                out.pop(exps, None)
        return SparsePolynomial._raw(self.field, self.nvars, out)

    def __sub__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        return self + (-other)

    def __neg__(self) -> "SparsePolynomial":
        neg = self.field.neg
        return SparsePolynomial._raw(
            self.field, self.nvars, {e: neg(c) for e, c in self._terms.items()}
        )

    def scale(self, value) -> "SparsePolynomial":
        c = self.field.coerce(value)
        if c == 0:
            return SparsePolynomial.zero(self.field, self.nvars)
        mul = self.field.mul
        return SparsePolynomial._raw(
            self.field, self.nvars, {e: mul(v, c) for e, v in self._terms.items()}
        )

    def __mul__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        self._check_compatible(other)
        mul = self.field.mul
        add = self.field.add
        out: dict[ExponentVector, object] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = mul(c1, c2)
                if e in out:
                    c = add(out[e], c)
                if c != 0:
                    out[e] = c
                else:
                    out.pop(e, None)
        return SparsePolynomial._raw(self.field, self.nvars, out)

    def __pow__(self, exponent: int) -> "SparsePolynomial":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = SparsePolynomial.constant(self.field, self.nvars, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def evaluate(self, point: Iterable[object]):
        """Exact value at a point with coordinates coerced into the field."""
        pt = [self.field.coerce(v) for v in point]
        if len(pt) != self.nvars:
            raise ValueError("point dimension mismatch")
        mul = self.field.mul
        add = self.field.add
        total = self.field.zero()
        for exps, coeff in self._terms.items():
            term = coeff
            for v, e in zip(pt, exps):
                for _ in range(e):
                    term = mul(term, v)
            total = add(total, term)
        return total

    # -- structural operations ---------------------------------------------------

    def taylor_shift(self, point: Iterable[object]) -> "SparsePolynomial":
        """Return P(x + a) expanded, exactly, in any characteristic.

        Implemented variable by variable through binomial expansion of
        (x_i + a_i)^e; a zero coordinate is a no-op.  Intended for
        hypercube points a in {0,1}^n, but any exact coordinates work.
        """
        from math import comb

        field = self.field
        pt = [field.coerce(v) for v in point]
        if len(pt) != self.nvars:
            raise ValueError("shift point dimension mismatch")
        add = field.add
        mul = field.mul
        terms = self._terms
        for i, a in enumerate(pt):
            if a == 0:
                continue
            powers = [field.one()]  # powers of a
            new: dict[ExponentVector, object] = {}
            for exps, coeff in terms.items():
                e = exps[i]
                while len(powers) <= e:
                    powers.append(mul(powers[-1], a))
                prefix, suffix = exps[:i], exps[i + 1 :]
                for j in range(e + 1):
                    c = mul(coeff, field.coerce(comb(e, j)))
                    if e > j:
                        c = mul(c, powers[e - j])
                    if c == 0:
                        continue
                    key = prefix + (j,) + suffix
                    if key in new:
                        s = add(new[key], c)
                        if s != 0:
                            new[key] = s
                        else:
                            del new[key]
                    else:
                        new[key] = c
            terms = new
        if terms is self._terms:
            terms = dict(terms)
        return SparsePolynomial._raw(field, self.nvars, terms)

    def homogeneous_component(self, degree: int) -> "SparsePolynomial":
        """Sum of the terms of total degree exactly `degree`."""
        return SparsePolynomial._raw(
            self.field,
            self.nvars,
            {e: c for e, c in self._terms.items() if sum(e) == degree},
        )

    def is_divisible_by_all_variables(self) -> bool:
        return bool(self._terms) and all(min(e) >= 1 for e in self._terms)

    def divide_by_all_variables(self) -> "SparsePolynomial":
        """Exact quotient by x_1 ... x_n; requires every exponent positive."""
        if not self.is_divisible_by_all_variables():
            raise ValueError("polynomial is not divisible by the product of all variables")
        return SparsePolynomial._raw(
            self.field,
            self.nvars,
            {tuple(v - 1 for v in e): c for e, c in self._terms.items()},
        )

    # -- serialization -----------------------------------------------------------

    def to_doc(self) -> dict:
        """JSON-ready document in the canonical polynomial file format."""
        return {
            "field": self.field.name,
            "nvars": self.nvars,
            "terms": [
                {"exps": list(e), "coeff": self.field.to_str(c)}
                for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "SparsePolynomial":
        try:
            field = Field.from_name(doc["field"])
            nvars = int(doc["nvars"])
            terms = {tuple(t["exps"]): t["coeff"] for t in doc["terms"]}
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed polynomial document: {exc}") from None
        return cls(field, nvars, terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for exps, coeff in sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True):
            mono = "*".join(
                f"x{i+1}" if e == 1 else f"x{i+1}^{e}"
                for i, e in enumerate(exps)
                if e
            )
            if not mono:
                chunks.append(f"{coeff}")
            elif coeff == 1:
                chunks.append(mono)
            elif coeff == -1:
                chunks.append(f"-{mono}")
            else:
                chunks.append(f"{coeff}*{mono}")
        return " + ".join(chunks).replace("+ -", "- ")


@dataclass(frozen=True)
class AffineForm:
    """Degree-one polynomial c_1 x_1 + ... + c_n x_n + c_0 (not all zero)."""

    field: Field
    coefficients: tuple
    constant: object

    def __post_init__(self):
        coeffs = tuple(self.field.coerce(c) for c in self.coefficients)
        const = self.field.coerce(self.constant)
        if all(c == 0 for c in coeffs) and const == 0:
            raise ValueError("affine form must have a nonzero coefficient or constant")
        object.__setattr__(self, "coefficients", coeffs)
        object.__setattr__(self, "constant", const)

    @property
    def nvars(self) -> int:
        return len(self.coefficients)

    def to_polynomial(self) -> SparsePolynomial:
        n = self.nvars
        terms: dict[ExponentVector, object] = {}
        for i, c in enumerate(self.coefficients):
            if c != 0:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = c
        if self.constant != 0:
            terms[(0,) * n] = self.constant
        return SparsePolynomial(self.field, n, terms)

    def evaluate(self, point: Iterable[object]):
        pt = [self.field.coerce(v) for v in point]
        if len(pt) != self.nvars:
            raise ValueError("point dimension mismatch")
        total = self.constant
        for c, v in zip(self.coefficients, pt):
            total = self.field.add(total, self.field.mul(c, v))
        return total

    def vanishes_at(self, point: Iterable[object]) -> bool:
        return self.evaluate(point) == 0

    def to_terms_doc(self) -> list[dict]:
        return self.to_polynomial().to_doc()["terms"]

    @classmethod
    def from_terms_doc(cls, field: Field, nvars: int, terms: list[dict]) -> "AffineForm":
        coeffs = [field.zero()] * nvars
        const = field.zero()
        for t in terms:
            exps = tuple(t["exps"])
            if len(exps) != nvars or sum(exps) > 1 or any(e < 0 for e in exps):
                raise ValueError(f"term {t} is not affine")
            c = field.coerce(t["coeff"])
            if sum(exps) == 0:
                const = field.add(const, c)
            else:
                coeffs[exps.index(1)] = field.add(coeffs[exps.index(1)], c)
        return cls(field, tuple(coeffs), const)


def product_of_affine_forms(
    forms: list[AffineForm], *, field: Field | None = None, nvars: int | None = None
) -> SparsePolynomial:
    """Exact product of affine forms; the empty product is the constant 1.

    For an empty list, `field` and `nvars` must be supplied.
    """
    if not forms:
        if field is None or nvars is None:
            raise ValueError("empty product needs explicit field and nvars")
        return SparsePolynomial.constant(field, nvars, 1)
    f0 = forms[0]
    for f in forms[1:]:
        if f.field != f0.field or f.nvars != f0.nvars:
            raise ValueError("affine forms must share field and variable count")
    result = SparsePolynomial.constant(f0.field, f0.nvars, 1)
    for f in forms:
        result = result * f.to_polynomial()
    return result
