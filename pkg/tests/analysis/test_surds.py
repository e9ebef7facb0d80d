from fractions import Fraction

import mpmath
import pytest

from analysis.surds import QuadraticSurd


def q(a, b=0, k=1) -> QuadraticSurd:
    return QuadraticSurd(Fraction(a), Fraction(b), k)


class TestQuadraticSurd:
    def test_rational_normalises_radicand(self):
        assert q(3, 0, 10) == q(3)
        assert q(3, 0, 10).k == 1
        assert q(1, 2, 1) == q(3)

    def test_field_arithmetic(self):
        root3 = q(0, 1, 3)
        assert root3 * root3 == q(3)
        assert (q(1, 1, 3) + q(2, -1, 3)) == q(3)
        assert q(1, 1, 2) - q(1, 1, 2) == 0

    def test_division_rationalises(self):
        # 1/(1+√2) = √2 - 1
        assert 1 / q(1, 1, 2) == q(-1, 1, 2)
        assert q(Fraction(1, 2), Fraction(-1, 6), 3) / q(Fraction(1, 2)) == q(1, Fraction(-1, 3), 3)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            q(1, 1, 2) / q(0)

    def test_mixed_fields_rejected(self):
        with pytest.raises(ValueError):
            q(0, 1, 2) + q(0, 1, 3)

    def test_sign_and_ordering(self):
        assert q(3, -1, 10).sign() == -1
        assert q(4, -1, 10).sign() == 1
        assert q(0).sign() == 0
        assert q(Fraction(1, 2), Fraction(-1, 6), 3) < q(Fraction(1, 2))
        assert q(0, 1, 2) > 1

    def test_decimal(self):
        assert q(Fraction(1, 2), Fraction(-1, 6), 3).decimal(12) == "0.211324865405"
        assert q(Fraction(1, 2)).decimal(5) == "0.50000"
        assert q(0).decimal() == "0"

    def test_to_mpf(self):
        with mpmath.workdps(30):
            assert abs(q(0, 1, 2).to_mpf(30) - mpmath.sqrt(2)) < mpmath.mpf(10) ** -25

    def test_str(self):
        assert str(q(Fraction(1, 2))) == "1/2"
        assert str(q(0, 1, 2)) == "√2"
