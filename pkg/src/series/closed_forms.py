import argparse
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

import config
from sequences.recurrences import SequenceId, compute
from series.power_series import PowerSeries, SeriesDomainError, ps_sqrt


@dataclass(frozen=True)
class Radicals:
    """
    The square roots every closed form is built from, at one truncation order:
    R = √(1-8x), S = √(2+2R+8x), U = √(3-4x-2R), Q = √(1-4x).
    """

    x: PowerSeries
    R: PowerSeries
    S: PowerSeries
    U: PowerSeries
    Q: PowerSeries


@cache
def radicals(order: int) -> Radicals:
    x = PowerSeries.x(order)
    R = ps_sqrt(1 - 8 * x)
    S = ps_sqrt(2 + 2 * R + 8 * x)
    U = ps_sqrt(3 - 4 * x - 2 * R)
    Q = ps_sqrt(1 - 4 * x)
    return Radicals(x=x, R=R, S=S, U=U, Q=Q)


def _closed_form(id: SequenceId, r: Radicals) -> PowerSeries:
    x, R, S, U, Q = r.x, r.R, r.S, r.U, r.Q
    match id:
        case SequenceId.G:
            return (1 - R) / 2
        case SequenceId.F:
            return (-1 - R + S) / 4
        case SequenceId.T2:
            return (-1 - R + S) / 4 - x
        case SequenceId.T3:
            return (2 + 2 * R - S - R * S) / 8
        case SequenceId.T1:
            return (6 - 2 * R - 3 * S + R * S) / 8
        case SequenceId.Y:
            return (2 - R - U) / 2
        case SequenceId.D1:
            return (4 - 3 * R - 2 * U - 6 * x + R * U) / 2
        case SequenceId.D2 | SequenceId.D3:
            return (-5 + 3 * R + 3 * U + 4 * x - R * U) / 4
        case SequenceId.H | SequenceId.CAT:
            return (1 - Q) / 2
        case SequenceId.K1:
            return (1 - 6 * x - Q * R) / 2
        case SequenceId.K2 | SequenceId.K3:
            return (-1 - R + R * Q + Q + 4 * x) / 4
    raise ValueError(f"No closed form for sequence id '{id}'")


def gf_series(id: SequenceId, order: int = config.DEFAULT_SERIES_ORDER) -> PowerSeries:
    return _closed_form(SequenceId(id), radicals(order))


def gf_coefficients(id: SequenceId, order: int = config.DEFAULT_SERIES_ORDER) -> list[Fraction]:
    """Coefficients of x^1..x^(order-1) of the id's generating function."""
    if order < 2:
        raise ValueError(f"Series order must be at least 2, got {order}")
    series = gf_series(id, order)
    if series[0] != 0:
        raise SeriesDomainError(f"Generating function of {id} has constant term {series[0]}")
    return list(series.coeffs[1:])


def gf_integers(id: SequenceId, order: int = config.DEFAULT_SERIES_ORDER) -> list[int]:
    coefficients = gf_coefficients(id, order)
    if any(c.denominator != 1 for c in coefficients):
        raise SeriesDomainError(f"Generating function of {id} has non-integer coefficients")
    return [c.numerator for c in coefficients]


def recurrence_mismatches(id: SequenceId, order: int = config.DEFAULT_SERIES_ORDER) -> list[int]:
    """Values of n where the series coefficient differs from the recurrence value."""
    coefficients = gf_coefficients(id, order)
    values = compute(id, order - 1).values
    return [n for n, (a, b) in enumerate(zip(coefficients, values), start=1) if a != b]


def series_identities(order: int = config.DEFAULT_SERIES_ORDER) -> dict[str, bool]:
    """
    Identities between the closed forms, exact to truncation. Each family
    sums to G minus x: the single-variable true row belongs to no case.
    """
    S = SequenceId
    gf = {sid: gf_series(sid, order) for sid in S}
    x = PowerSeries.x(order)
    return {
        "g - (f + t1 + t2 + t3) = x": gf[S.G] - (gf[S.F] + gf[S.T1] + gf[S.T2] + gf[S.T3]) == x,
        "g - (y + d1 + d2 + d3) = x": gf[S.G] - (gf[S.Y] + gf[S.D1] + gf[S.D2] + gf[S.D3]) == x,
        "g - (h + k1 + k2 + k3) = x": gf[S.G] - (gf[S.H] + gf[S.K1] + gf[S.K2] + gf[S.K3]) == x,
        "t2 = f - x": gf[S.T2] == gf[S.F] - x,
        "k1 = (g - h)^2": gf[S.K1] == (gf[S.G] - gf[S.H]) * (gf[S.G] - gf[S.H]),
        "d1 = y^2": gf[S.D1] == gf[S.Y] * gf[S.Y],
    }


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Coefficients of a closed-form generating function")
    parser.add_argument("id", type=str, help="Sequence id, e.g. f, t1, k3")
    parser.add_argument("order", type=int, nargs="?", default=12, help="Truncation order")
    args = parser.parse_args()

    print(" ".join(str(c) for c in gf_coefficients(SequenceId.parse(args.id), args.order)))
