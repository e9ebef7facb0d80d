from fractions import Fraction
from functools import total_ordering

import mpmath

Rational = int | Fraction


@total_ordering
class QuadraticSurd:
    """
    Exact a + b√k with rational a, b and squarefree k >= 1. A surd with b = 0
    is stored with k = 1, so rationals combine with any field.
    """

    __slots__ = ("_a", "_b", "_k")

    def __init__(self, a: Rational, b: Rational = 0, k: int = 1) -> None:
        if k < 1:
            raise ValueError(f"Radicand must be positive, got {k}")
        self._a = Fraction(a)
        self._b = Fraction(b)
        self._k = k if self._b else 1
        if self._k == 1 and self._b:
            self._a += self._b
            self._b = Fraction(0)

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def k(self) -> int:
        return self._k

    @property
    def is_rational(self) -> bool:
        return self._b == 0

    def __repr__(self) -> str:
        return f"QuadraticSurd({self._a}, {self._b}, {self._k})"

    def __str__(self) -> str:
        if self.is_rational:
            return str(self._a)
        radical = f"√{self._k}" if self._b == 1 else f"({self._b})√{self._k}"
        return radical if self._a == 0 else f"{self._a} + {radical}"

    def __hash__(self) -> int:
        return hash((self._a, self._b, self._k))

    @classmethod
    def _lift(cls, other) -> "QuadraticSurd":
        if isinstance(other, QuadraticSurd):
            return other
        if isinstance(other, (int, Fraction)):
            return cls(other)
        return NotImplemented

    def _field(self, other: "QuadraticSurd") -> int:
        if self._k != 1 and other.k != 1 and self._k != other.k:
            raise ValueError(f"Cannot combine √{self._k} and √{other.k}")
        return max(self._k, other.k)

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is NotImplemented:
            return False
        return (self._a, self._b, self._k) == (other.a, other.b, other.k)

    def sign(self) -> int:
        a, b = self._a, self._b
        if b == 0:
            return (a > 0) - (a < 0)
        if a >= 0 and b > 0:
            return 1
        if a <= 0 and b < 0:
            return -1
        # a and b of opposite signs: compare a^2 with b^2 k
        diff = a * a - b * b * self._k
        return (1 if a > 0 else -1) * ((diff > 0) - (diff < 0))

    def __lt__(self, other) -> bool:
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() < 0

    def __add__(self, other) -> "QuadraticSurd":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        k = self._field(other)
        return QuadraticSurd(self._a + other.a, self._b + other.b, k)

    __radd__ = __add__

    def __neg__(self) -> "QuadraticSurd":
        return QuadraticSurd(-self._a, -self._b, self._k)

    def __sub__(self, other) -> "QuadraticSurd":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "QuadraticSurd":
        return (-self) + other

    def __mul__(self, other) -> "QuadraticSurd":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        k = self._field(other)
        a = self._a * other.a + self._b * other.b * k
        b = self._a * other.b + self._b * other.a
        return QuadraticSurd(a, b, k)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadraticSurd":
        return QuadraticSurd(self._a, -self._b, self._k)

    def norm(self) -> Fraction:
        return self._a * self._a - self._b * self._b * self._k

    def __truediv__(self, other) -> "QuadraticSurd":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        norm = other.norm()
        if norm == 0:
            raise ZeroDivisionError("Division by a zero surd")
        numerator = self * other.conjugate()
        return QuadraticSurd(numerator.a / norm, numerator.b / norm, numerator.k)

    def __rtruediv__(self, other) -> "QuadraticSurd":
        return QuadraticSurd._lift(other) / self

    def to_mpf(self, dps: int = 50) -> mpmath.mpf:
        with mpmath.workdps(dps):
            value = mpmath.mpf(self._a.numerator) / self._a.denominator
            if self._b:
                b = mpmath.mpf(self._b.numerator) / self._b.denominator
                value += b * mpmath.sqrt(self._k)
            return +value

    def decimal(self, digits: int = 30) -> str:
        """`digits` significant digits."""
        if self == 0:
            return "0"
        with mpmath.workdps(digits + 10):
            return mpmath.nstr(self.to_mpf(digits + 10), digits, strip_zeros=False)
