"""Exact scalars in Q(sqrt 2).

Every number in this package is a Scalar: a pair (r0, r1) of rationals
representing r0 + r1*sqrt(2).  Q(sqrt 2) is the smallest field containing
all structure constants that appear downstream (the exceptional 7-dim
representation needs 1/sqrt 2), and it is still a field with decidable
equality, so every pipeline stays exact end to end.  No floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction, str]


def _frac(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


class Scalar:
    """An element r0 + r1*sqrt(2) of Q(sqrt 2), always in lowest terms."""

    __slots__ = ("r0", "r1")

    def __init__(self, r0: RationalLike = 0, r1: RationalLike = 0):
        object.__setattr__(self, "r0", _frac(r0))
        object.__setattr__(self, "r1", _frac(r1))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # ---- constructors ----

    @staticmethod
    def sqrt2() -> "Scalar":
        return Scalar(0, 1)

    @staticmethod
    def coerce(value: "Scalar | RationalLike") -> "Scalar":
        if isinstance(value, Scalar):
            return value
        return Scalar(value)

    # ---- predicates ----

    def is_zero(self) -> bool:
        return not self.r0 and not self.r1

    def is_rational(self) -> bool:
        return not self.r1

    def __bool__(self) -> bool:
        return not self.is_zero()

    # ---- arithmetic ----

    @staticmethod
    def _as_scalar(value):
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return Scalar(value)
        return None

    def __add__(self, other):
        other = Scalar._as_scalar(other)
        if other is None:
            return NotImplemented
        return Scalar(self.r0 + other.r0, self.r1 + other.r1)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(-self.r0, -self.r1)

    def __sub__(self, other):
        other = Scalar._as_scalar(other)
        if other is None:
            return NotImplemented
        return Scalar(self.r0 - other.r0, self.r1 - other.r1)

    def __rsub__(self, other):
        other = Scalar._as_scalar(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = Scalar._as_scalar(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.r0, self.r1, other.r0, other.r1
        # (a + b s)(c + d s) = (ac + 2bd) + (ad + bc) s  with s^2 = 2
        if not b and not d:
            return Scalar(a * c)
        return Scalar(a * c + 2 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        a, b = self.r0, self.r1
        if not a and not b:
            raise ZeroDivisionError("inverse of zero Scalar")
        # 1/(a + b s) = (a - b s)/(a^2 - 2 b^2); the norm is nonzero since
        # sqrt 2 is irrational.
        norm = a * a - 2 * b * b
        return Scalar(a / norm, -b / norm)

    def __truediv__(self, other) -> "Scalar":
        return self * Scalar.coerce(other).inverse()

    def __rtruediv__(self, other) -> "Scalar":
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "Scalar":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Scalar(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # ---- comparison / hashing ----

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.r0 == other.r0 and self.r1 == other.r1

    def __hash__(self):
        return hash((self.r0, self.r1))

    def sign_key(self) -> int:
        """-1, 0 or +1 according to the real value of the scalar.

        Exact: a + b*sqrt2 > 0 iff (a > 0 and a^2 > 2b^2) or
        (b > 0 and 2b^2 > a^2), handled below by case analysis.
        """
        a, b = self.r0, self.r1
        if not a and not b:
            return 0
        if a >= 0 and b >= 0:
            return 1
        if a <= 0 and b <= 0:
            return -1
        # opposite signs: compare a^2 with 2 b^2
        if a > 0:  # b < 0
            return 1 if a * a > 2 * b * b else -1
        return -1 if a * a > 2 * b * b else 1

    # ---- rendering ----

    @staticmethod
    def _frac_str(q: Fraction) -> str:
        return str(q)

    def __str__(self) -> str:
        a, b = self.r0, self.r1
        if not b:
            return self._frac_str(a)
        if not a:
            if b == 1:
                return "sqrt2"
            if b == -1:
                return "-sqrt2"
            return f"{self._frac_str(b)}*sqrt2"
        sep = " - " if b < 0 else " + "
        mag = -b if b < 0 else b
        tail = "sqrt2" if mag == 1 else f"{self._frac_str(mag)}*sqrt2"
        return f"{self._frac_str(a)}{sep}{tail}"

    def __repr__(self) -> str:
        return f"Scalar({self.r0!r}, {self.r1!r})"


ZERO = Scalar(0)
ONE = Scalar(1)
SQRT2 = Scalar(0, 1)
HALF_SQRT2 = Scalar(0, Fraction(1, 2))
