"""Exact coefficient fields: the rationals and prime fields GF(p).

Field elements are plain Python objects: `fractions.Fraction` over the
rationals (always in lowest terms with normalized sign) and `int` in the
range [0, p) over GF(p).  A `Field` instance bundles the arithmetic so
that polynomial and matrix code stays generic.  There is no floating
point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class CharacteristicError(ArithmeticError):
    """An operation required dividing by a multiple of the characteristic."""


# Witness bases making Miller-Rabin deterministic for all n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin with fixed witness bases)."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Field:
    """Descriptor for an exact coefficient field.

    Use `Field.rational()` or `Field.gf(p)`; the constructor itself does
    not validate primality, the factory methods do.
    """

    kind: str  # "rational" or "gf"
    p: int | None = None

    @staticmethod
    def rational() -> "Field":
        return Field("rational")

    @staticmethod
    def gf(p: int) -> "Field":
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"GF modulus must be a prime integer, got {p!r}")
        return Field("gf", p)

    @property
    def name(self) -> str:
        return "rational" if self.kind == "rational" else f"gf:{self.p}"

    @staticmethod
    def from_name(name: str) -> "Field":
        """Parse "rational" or "gf:<p>"."""
        if name == "rational":
            return Field.rational()
        if name.startswith("gf:"):
            try:
                p = int(name[3:])
            except ValueError:
                raise ValueError(f"bad field name {name!r}") from None
            return Field.gf(p)
        raise ValueError(f"bad field name {name!r}")

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == "rational" else self.p  # type: ignore[return-value]

    # -- element construction -------------------------------------------------

    def zero(self):
        return Fraction(0) if self.kind == "rational" else 0

    def one(self):
        return Fraction(1) if self.kind == "rational" else 1

    def coerce(self, value):
        """Map an int, Fraction or decimal/fraction string into the field."""
        if isinstance(value, str):
            value = Fraction(value)
        if self.kind == "rational":
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
            raise TypeError(f"cannot coerce {value!r} into {self.name}")
        p = self.p
        if isinstance(value, int):
            return value % p
        if isinstance(value, Fraction):
            den = value.denominator % p
            if den == 0:
                raise CharacteristicError(
                    f"denominator {value.denominator} vanishes in GF({p})"
                )
            return value.numerator % p * pow(den, -1, p) % p
        raise TypeError(f"cannot coerce {value!r} into {self.name}")

    # -- arithmetic ------------------------------------------------------------

    def add(self, a, b):
        return a + b if self.kind == "rational" else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.kind == "rational" else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.kind == "rational" else a * b % self.p

    def neg(self, a):
        return -a if self.kind == "rational" else -a % self.p

    def inv(self, a):
        if self.kind == "rational":
            if a == 0:
                raise ZeroDivisionError("inverse of 0")
            return 1 / Fraction(a)
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of 0 in GF({self.p})")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) if self.kind == "rational" else a * self.inv(b) % self.p

    def to_str(self, a) -> str:
        """Exact string form: integer or "num/den" (rationals only)."""
        return str(a)
