from collections.abc import Iterator
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from math import isqrt

Scalar = int | Fraction


class SeriesDomainError(ValueError):
    """An operation is undefined for the given series (e.g. 1/x, √0)."""


class SeriesOp(StrEnum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"


@dataclass(frozen=True, slots=True)
class PowerSeries:
    """
    Truncated formal power series: coeffs[k] is the coefficient of x^k for
    0 <= k < order. Every operation keeps exactly `order` coefficients.
    """

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.order < 1:
            raise ValueError(f"Series order must be at least 1, got {self.order}")
        if len(self.coeffs) != self.order:
            raise ValueError(f"Expected {self.order} coefficients, got {len(self.coeffs)}")

    @classmethod
    def from_coeffs(cls, coeffs: list[Scalar], order: int) -> "PowerSeries":
        padded = [Fraction(c) for c in coeffs[:order]]
        padded += [Fraction(0)] * (order - len(padded))
        return cls(order, tuple(padded))

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "PowerSeries":
        return cls.from_coeffs([value], order)

    @classmethod
    def x(cls, order: int) -> "PowerSeries":
        return cls.from_coeffs([0, 1], order)

    def with_order(self, order: int) -> "PowerSeries":
        return PowerSeries.from_coeffs(list(self.coeffs), order)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def _coerce(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            if other.order != self.order:
                raise ValueError(f"Series orders differ: {self.order} vs {other.order}")
            return other
        if isinstance(other, (int, Fraction)):
            return PowerSeries.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PowerSeries(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries(self.order, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, n = self.coeffs, other.coeffs, self.order
        product = []
        for k in range(n):
            product.append(sum((a[i] * b[k - i] for i in range(k + 1) if a[i]), Fraction(0)))
        return PowerSeries(n, tuple(product))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise SeriesDomainError("Division of a series by zero")
            return PowerSeries(self.order, tuple(a / other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        b = other.coeffs
        if b[0] == 0:
            raise SeriesDomainError("Cannot divide by a series with zero constant term")
        quotient: list[Fraction] = []
        for k in range(self.order):
            acc = self.coeffs[k] - sum(
                (b[i] * quotient[k - i] for i in range(1, k + 1) if b[i]), Fraction(0)
            )
            quotient.append(acc / b[0])
        return PowerSeries(self.order, tuple(quotient))

    def __rtruediv__(self, other):
        return PowerSeries.constant(other, self.order) / self

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)


def ps_arith(a: PowerSeries, b: PowerSeries, op: SeriesOp) -> PowerSeries:
    match SeriesOp(op):
        case SeriesOp.ADD:
            return a + b
        case SeriesOp.SUB:
            return a - b
        case SeriesOp.MUL:
            return a * b
        case SeriesOp.DIV:
            return a / b


def rational_sqrt(q: Fraction) -> Fraction:
    """Exact positive square root of a rational, or SeriesDomainError."""
    q = Fraction(q)
    if q <= 0:
        raise SeriesDomainError(f"Square root needs a positive constant term, got {q}")
    num, den = isqrt(q.numerator), isqrt(q.denominator)
    if num * num != q.numerator or den * den != q.denominator:
        raise SeriesDomainError(f"Constant term {q} has no rational square root")
    return Fraction(num, den)


def newton_sqrt_stages(a: PowerSeries) -> Iterator[PowerSeries]:
    """
    Newton iteration s <- (s + a/s)/2 starting from the positive root of the
    constant term. Each stage is exact to twice the order of the previous one
    (capped at a.order) and is yielded with that order.
    """
    s = PowerSeries.constant(rational_sqrt(a[0]), 1)
    yield s
    precision = 1
    while precision < a.order:
        precision = min(2 * precision, a.order)
        target = a.with_order(precision)
        s = s.with_order(precision)
        s = (s + target / s) / 2
        yield s


def ps_sqrt(a: PowerSeries) -> PowerSeries:
    *_, last = newton_sqrt_stages(a)
    return last
