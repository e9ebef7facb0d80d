from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from series.power_series import (
    PowerSeries,
    SeriesDomainError,
    SeriesOp,
    newton_sqrt_stages,
    ps_arith,
    ps_sqrt,
    rational_sqrt,
)

N = 16


def series(coeffs, order=N) -> PowerSeries:
    return PowerSeries.from_coeffs(coeffs, order)


class TestArithmetic:
    def test_add_cancels(self):
        x = PowerSeries.x(N)
        assert ps_arith(1 - 8 * x, 8 * x, SeriesOp.ADD) == PowerSeries.constant(1, N)

    def test_mul_truncates(self):
        x = PowerSeries.x(N)
        product = ps_arith(x, x, SeriesOp.MUL)
        assert product[2] == 1
        assert sum(product.coeffs) == 1

    def test_square_of_g_prefix(self):
        g = series([0, 2, 4, 16, 80])
        assert (g * g).coeffs[:5] == (0, 0, 4, 16, 80)

    def test_div_inverts_mul(self):
        a = series([1, 2, 3])
        b = series([2, -1, 5, 7])
        assert ps_arith(a * b, b, SeriesOp.DIV) == a

    def test_geometric_series(self):
        x = PowerSeries.x(N)
        assert (1 / (1 - x)).coeffs == tuple(Fraction(1) for _ in range(N))

    def test_div_by_zero_constant_term(self):
        x = PowerSeries.x(N)
        with pytest.raises(SeriesDomainError):
            ps_arith(PowerSeries.constant(1, N), x, SeriesOp.DIV)
        with pytest.raises(SeriesDomainError):
            x / 0

    def test_orders_must_match(self):
        with pytest.raises(ValueError):
            PowerSeries.x(4) + PowerSeries.x(5)

    def test_constructor_checks_length(self):
        with pytest.raises(ValueError):
            PowerSeries(3, (Fraction(1),))

    def test_scalars(self):
        x = PowerSeries.x(4)
        assert (Fraction(1, 2) * (2 + 4 * x)).coeffs == (1, 2, 0, 0)
        assert (3 - x).coeffs == (3, -1, 0, 0)


class TestSqrt:
    def test_binomial_series(self):
        x = PowerSeries.x(N)
        r = ps_sqrt(1 - 8 * x)
        assert r.coeffs[:5] == (1, -4, -8, -32, -160)

    def test_constant(self):
        assert ps_sqrt(PowerSeries.constant(4, 5)) == PowerSeries.constant(2, 5)

    def test_nested_radical_constant_term(self):
        x = PowerSeries.x(N)
        r = ps_sqrt(1 - 8 * x)
        assert ps_sqrt(2 + 2 * r + 8 * x)[0] == 2

    def test_squares_back(self):
        x = PowerSeries.x(128)
        for a in [1 - 8 * x, 1 - 4 * x, 4 + x - 3 * x * x]:
            s = ps_sqrt(a)
            assert s * s == a

    def test_stages_double_and_agree(self):
        x = PowerSeries.x(40)
        stages = list(newton_sqrt_stages(1 - 8 * x))
        assert [s.order for s in stages] == [1, 2, 4, 8, 16, 32, 40]
        for previous, current in zip(stages, stages[1:]):
            assert current.coeffs[: previous.order] == previous.coeffs

    def test_domain_errors(self):
        x = PowerSeries.x(N)
        with pytest.raises(SeriesDomainError):
            ps_sqrt(x)
        with pytest.raises(SeriesDomainError):
            ps_sqrt(-1 + x)
        with pytest.raises(SeriesDomainError):
            ps_sqrt(2 + x)

    def test_rational_sqrt(self):
        assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
        with pytest.raises(SeriesDomainError):
            rational_sqrt(Fraction(1, 2))

    @settings(max_examples=40, deadline=None)
    @given(
        tail=st.lists(st.integers(min_value=-20, max_value=20), min_size=1, max_size=10),
        root=st.integers(min_value=1, max_value=5),
    )
    def test_sqrt_property(self, tail, root):
        a = series([root * root, *tail], order=12)
        s = ps_sqrt(a)
        assert s[0] == root
        assert s * s == a
