"""Exact arithmetic in the real quadratic field Q(sqrt(d)).

An element is stored as (a + b*sqrt(d)) / q with arbitrary-precision integers
a, b, q in the canonical form q > 0, gcd(a, b, q) = 1.  Equal field elements
therefore compare equal bit-for-bit.  Rational values (b = 0) mix freely with
elements of any ambient d; combining two irrational values from different
fields raises FieldMismatchError.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd


class FieldMismatchError(ArithmeticError):
    """Raised when two irrational scalars from different Q(sqrt(d)) meet."""


def is_squarefree(d: int) -> bool:
    if d < 2:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


def check_field_parameter(d: int) -> int:
    """Validate the ambient field parameter (square-free, >= 2; default 2)."""
    if not isinstance(d, int) or not is_squarefree(d):
        raise ValueError(f"field parameter must be a square-free integer >= 2, got {d!r}")
    return d


class Scalar:
    """One element of Q(sqrt(d)), exact."""

    __slots__ = ("a", "b", "q", "d")

    def __init__(self, a: int, b: int = 0, q: int = 1, d: int = 2):
        if q == 0:
            raise ZeroDivisionError("scalar denominator is zero")
        if q < 0:
            a, b, q = -a, -b, -q
        g = gcd(gcd(a, b), q)
        if g > 1:
            a //= g
            b //= g
            q //= g
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_fraction(cls, x: Fraction | int, d: int = 2) -> Scalar:
        x = Fraction(x)
        return cls(x.numerator, 0, x.denominator, d)

    @classmethod
    def sqrt_d(cls, d: int = 2) -> Scalar:
        """The generator sqrt(d) itself."""
        return cls(0, 1, 1, check_field_parameter(d))

    # -- structure ---------------------------------------------------------

    @property
    def rational_part(self) -> Fraction:
        return Fraction(self.a, self.q)

    @property
    def radical_part(self) -> Fraction:
        return Fraction(self.b, self.q)

    def is_rational(self) -> bool:
        return self.b == 0

    def to_fraction(self) -> Fraction:
        if self.b != 0:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.a, self.q)

    def conjugate(self) -> Scalar:
        """Galois conjugate a - b*sqrt(d)."""
        return Scalar(self.a, -self.b, self.q, self.d)

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __hash__(self):
        if self.b == 0:
            return hash(Fraction(self.a, self.q))
        return hash((self.a, self.b, self.q, self.d))

    def __eq__(self, other) -> bool:
        other = _coerce(other, self.d)
        if other is NotImplemented:
            return NotImplemented
        if self.b != 0 and other.b != 0 and self.d != other.d:
            return False
        return self.a == other.a and self.b == other.b and self.q == other.q

    # -- arithmetic --------------------------------------------------------

    def _join_d(self, other: Scalar) -> int:
        if self.b == 0:
            return other.d
        if other.b == 0 or self.d == other.d:
            return self.d
        raise FieldMismatchError(f"cannot mix Q(sqrt {self.d}) with Q(sqrt {other.d})")

    def __add__(self, other) -> Scalar:
        other = _coerce(other, self.d)
        if other is NotImplemented:
            return NotImplemented
        d = self._join_d(other)
        return Scalar(
            self.a * other.q + other.a * self.q,
            self.b * other.q + other.b * self.q,
            self.q * other.q,
            d,
        )

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar(-self.a, -self.b, self.q, self.d)

    def __sub__(self, other) -> Scalar:
        other = _coerce(other, self.d)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Scalar:
        return (-self) + other

    def __mul__(self, other) -> Scalar:
        other = _coerce(other, self.d)
        if other is NotImplemented:
            return NotImplemented
        d = self._join_d(other)
        return Scalar(
            self.a * other.a + d * self.b * other.b,
            self.a * other.b + self.b * other.a,
            self.q * other.q,
            d,
        )

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        """Exact multiplicative inverse; norm a^2 - d b^2 never vanishes for
        nonzero elements because d is a non-square."""
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(sqrt d)")
        n = self.a * self.a - self.d * self.b * self.b
        return Scalar(self.q * self.a, -self.q * self.b, n, self.d)

    def __truediv__(self, other) -> Scalar:
        other = _coerce(other, self.d)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> Scalar:
        return _coerce(other, self.d) * self.inverse()

    def __pow__(self, n: int) -> Scalar:
        if n < 0:
            return self.inverse() ** (-n)
        out = Scalar(1, 0, 1, self.d)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- text form ---------------------------------------------------------

    def __str__(self) -> str:
        if self.b == 0:
            return _fmt_rat(Fraction(self.a, self.q))
        radical = _fmt_rat(abs(Fraction(self.b, self.q))) + "*r"
        if self.a == 0:
            return radical if self.b > 0 else "-" + radical
        sign = "+" if self.b > 0 else "-"
        return _fmt_rat(Fraction(self.a, self.q)) + sign + radical

    def __repr__(self) -> str:
        return f"Scalar('{self}', d={self.d})"


def _coerce(x, d: int):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int):
        return Scalar(x, 0, 1, d)
    if isinstance(x, Fraction):
        return Scalar(x.numerator, 0, x.denominator, d)
    return NotImplemented


def _fmt_rat(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


_RAT = r"-?\d+(?:/\d+)?"
_LITERAL = re.compile(
    rf"^\s*(?:"
    rf"(?P<lone_r>[+-]?r)"
    rf"|(?P<rad_only>{_RAT})\*r"
    rf"|(?P<rat>{_RAT})(?:(?P<sign>[+-])(?:(?P<rad>{_RAT})\*r|(?P<rad_r>r)))?"
    rf")\s*$"
)


def parse_scalar(text: str, d: int = 2) -> Scalar:
    """Parse the scalar literal grammar.

    scalar := rat | rat sign rat "*r" | rat "*r" where rat := ["-"] int ["/" int]
    and "r" stands for sqrt(d); the bare aliases "r" / "-r" are accepted for
    "1*r" / "-1*r".  Examples: "1", "-3/2", "1/2*r", "1+2*r".
    """
    m = _LITERAL.match(text)
    if not m:
        raise ValueError(f"bad scalar literal {text!r}")
    if m.group("lone_r"):
        b = Fraction(-1 if m.group("lone_r").startswith("-") else 1)
        return _from_parts(Fraction(0), b, d)
    if m.group("rad_only"):
        return _from_parts(Fraction(0), Fraction(m.group("rad_only")), d)
    a = Fraction(m.group("rat"))
    b = Fraction(0)
    if m.group("sign"):
        b = Fraction(1) if m.group("rad_r") else Fraction(m.group("rad"))
        if m.group("sign") == "-":
            b = -b
    return _from_parts(a, b, d)


def _from_parts(a: Fraction, b: Fraction, d: int) -> Scalar:
    q = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
    return Scalar(
        a.numerator * (q // a.denominator),
        b.numerator * (q // b.denominator),
        q,
        d,
    )


def as_scalar(x, d: int = 2) -> Scalar:
    """Coerce int / Fraction / literal string / Scalar to Scalar."""
    if isinstance(x, str):
        return parse_scalar(x, d)
    s = _coerce(x, d)
    if s is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as a scalar")
    return s


ZERO = Scalar(0)
ONE = Scalar(1)
