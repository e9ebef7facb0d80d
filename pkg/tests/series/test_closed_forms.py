import pytest

from sequences.recurrences import SequenceId, compute
from series.closed_forms import (
    gf_coefficients,
    gf_integers,
    gf_series,
    radicals,
    recurrence_mismatches,
    series_identities,
)
from series.power_series import PowerSeries

S = SequenceId
GF_IDS = [sid for sid in SequenceId if sid != S.CAT]


class TestCoefficients:
    def test_examples(self):
        assert gf_coefficients(S.F, 6) == [1, 1, 4, 19, 104]
        assert gf_coefficients(S.H, 6) == [1, 1, 2, 5, 14]
        assert gf_coefficients(S.T1, 4) == [0, 1, 6]
        assert gf_coefficients(S.G, 3) == [2, 4]
        assert gf_coefficients(S.T3, 8) == [0, 1, 2, 9, 46, 262, 1588]

    def test_order_must_leave_a_coefficient(self):
        with pytest.raises(ValueError):
            gf_coefficients(S.F, 1)

    def test_integral(self):
        for sid in GF_IDS:
            assert all(c.denominator == 1 for c in gf_coefficients(sid, 64)), sid

    def test_route_equivalence(self):
        """Series coefficients equal the recurrence values up to x^64."""
        for sid in SequenceId:
            assert gf_integers(sid, 65) == compute(sid, 64).values, sid
            assert recurrence_mismatches(sid, 65) == []

    def test_cat_served_by_h(self):
        assert gf_series(S.CAT, 20) == gf_series(S.H, 20)


class TestRadicals:
    def test_round_trip(self):
        r = radicals(128)
        x = r.x
        assert r.R * r.R == 1 - 8 * x
        assert r.S * r.S == 2 + 2 * r.R + 8 * x
        assert r.U * r.U == 3 - 4 * x - 2 * r.R
        assert r.Q * r.Q == 1 - 4 * x


class TestSeriesIdentities:
    def test_all_hold(self):
        identities = series_identities(64)
        assert identities and all(identities.values()), identities

    def test_partition_off_by_single_variable_row(self):
        g, f = gf_series(S.G, 10), gf_series(S.F, 10)
        t1, t2, t3 = (gf_series(sid, 10) for sid in (S.T1, S.T2, S.T3))
        assert g - (f + t1 + t2 + t3) == PowerSeries.x(10)

    def test_t2_is_f_minus_x(self):
        assert gf_series(S.T2, 30) == gf_series(S.F, 30) - PowerSeries.x(30)

    def test_shared_closed_forms(self):
        assert gf_series(S.D2, 30) == gf_series(S.D3, 30)
        assert gf_series(S.K2, 30) == gf_series(S.K3, 30)
