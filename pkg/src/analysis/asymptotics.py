import argparse
from fractions import Fraction

import mpmath
from pydantic import BaseModel, ConfigDict

import config
from analysis.surds import QuadraticSurd
from formulas.model import Connective
from sequences.recurrences import CASE_SEQUENCES, SequenceId, compute

S = SequenceId


class LimitConstant(BaseModel):
    """lim numerator_n / denominator_n as an exact a + b√k."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    numerator: SequenceId
    denominator: SequenceId
    value: QuadraticSurd
    exact_form: str

    @property
    def id(self) -> str:
        return f"{self.numerator}/{self.denominator}"

    @property
    def decimal(self) -> str:
        return self.value.decimal(config.CONSTANT_DIGITS)

    def as_row(self) -> dict[str, str]:
        return {
            "id": self.id,
            "exact_form": self.exact_form,
            "a": str(self.value.a),
            "b": str(self.value.b),
            "k": str(self.value.k),
            "decimal": self.decimal,
        }


class ConvergenceReport(BaseModel):
    id: str
    limit: str
    probes: list[int]
    errors: list[str]
    decreasing: bool
    within_envelope: bool

    @property
    def passed(self) -> bool:
        return self.decreasing and self.within_envelope


class DominanceReport(BaseModel):
    n_min: int
    n_max: int
    passed: bool
    counterexample: int | None = None


def _surd(a: Fraction | int, b: Fraction | int = 0, k: int = 1) -> QuadraticSurd:
    return QuadraticSurd(Fraction(a), Fraction(b), k)


_PER_G: dict[SequenceId, tuple[QuadraticSurd, str]] = {
    S.G: (_surd(1), "1"),
    S.F: (_surd(Fraction(1, 2), Fraction(-1, 6), 3), "(3-√3)/6"),
    S.T2: (_surd(Fraction(1, 2), Fraction(-1, 6), 3), "(3-√3)/6"),
    S.T3: (_surd(Fraction(-1, 2), Fraction(1, 3), 3), "(2√3-3)/6"),
    S.T1: (_surd(Fraction(1, 2)), "1/2"),
    S.Y: (_surd(1, Fraction(-1, 5), 10), "(10-2√10)/10"),
    S.D1: (_surd(3, Fraction(-9, 10), 10), "(30-9√10)/10"),
    S.D2: (_surd(Fraction(-3, 2), Fraction(11, 20), 10), "(11√10-30)/20"),
    S.D3: (_surd(Fraction(-3, 2), Fraction(11, 20), 10), "(11√10-30)/20"),
    S.H: (_surd(0), "0"),
    S.K1: (_surd(0, Fraction(1, 2), 2), "√2/2"),
    S.K2: (_surd(Fraction(1, 2), Fraction(-1, 4), 2), "(2-√2)/4"),
    S.K3: (_surd(Fraction(1, 2), Fraction(-1, 4), 2), "(2-√2)/4"),
}

_PAIRWISE: dict[tuple[SequenceId, SequenceId], tuple[QuadraticSurd, str]] = {
    (S.T3, S.T2): (_surd(Fraction(-1, 2), Fraction(1, 2), 3), "(√3-1)/2"),
    (S.T2, S.T3): (_surd(1, 1, 3), "1+√3"),
    (S.T3, S.T1): (_surd(-1, Fraction(2, 3), 3), "(2√3-3)/3"),
    (S.T1, S.T3): (_surd(3, 2, 3), "3+2√3"),
    (S.T2, S.T1): (_surd(1, Fraction(-1, 3), 3), "(3-√3)/3"),
    (S.T1, S.T2): (_surd(Fraction(3, 2), Fraction(1, 2), 3), "(3+√3)/2"),
    (S.D1, S.D3): (_surd(Fraction(-18, 31), Fraction(12, 31), 10), "(12√10-18)/31"),
    (S.D3, S.D1): (_surd(Fraction(1, 2), Fraction(1, 3), 10), "(2√10+3)/6"),
    (S.D1, S.Y): (_surd(2, Fraction(-1, 2), 10), "(4-√10)/2"),
    (S.Y, S.D1): (_surd(Fraction(4, 3), Fraction(1, 3), 10), "(4+√10)/3"),
    (S.Y, S.D3): (_surd(Fraction(16, 31), Fraction(10, 31), 10), "(16+10√10)/31"),
    (S.D3, S.Y): (_surd(Fraction(-2, 3), Fraction(5, 12), 10), "(5√10-8)/12"),
    (S.K2, S.K1): (_surd(Fraction(-1, 2), Fraction(1, 2), 2), "(√2-1)/2"),
    (S.K1, S.K2): (_surd(2, 2, 2), "2√2+2"),
}


def limit_constants() -> list[LimitConstant]:
    """The 13 sequence/g limits followed by the 14 pairwise limits."""
    constants = [
        LimitConstant(numerator=sid, denominator=S.G, value=value, exact_form=form)
        for sid, (value, form) in _PER_G.items()
    ]
    constants += [
        LimitConstant(numerator=num, denominator=den, value=value, exact_form=form)
        for (num, den), (value, form) in _PAIRWISE.items()
    ]
    return constants


def limit_constant(numerator: SequenceId, denominator: SequenceId = S.G) -> LimitConstant:
    numerator, denominator = SequenceId(numerator), SequenceId(denominator)
    if numerator == S.CAT:
        numerator = S.H
    if denominator == S.G:
        value, form = _PER_G[numerator]
    elif (numerator, denominator) in _PAIRWISE:
        value, form = _PAIRWISE[(numerator, denominator)]
    else:
        raise ValueError(f"No known limit for {numerator}/{denominator}")
    return LimitConstant(numerator=numerator, denominator=denominator, value=value, exact_form=form)


def connective_constant_sum(c: Connective) -> QuadraticSurd:
    """Sum of the four per-case limits of a connective; exactly 1 for every connective."""
    total = QuadraticSurd(0)
    for sid in CASE_SEQUENCES[Connective(c)].values():
        total = total + _PER_G[sid][0]
    return total


# ====================
#  Finite-n Ratios
# ====================
def exact_ratio(id: SequenceId, n: int, denominator: SequenceId = S.G) -> Fraction:
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    below = compute(denominator, n).values[-1]
    if below == 0:
        raise ValueError(f"{denominator} is 0 at n={n}")
    return Fraction(compute(id, n).values[-1], below)


def format_fixed(q: Fraction, digits: int) -> str:
    """`q` rounded half-to-even to exactly `digits` decimal places."""
    scaled = round(q * 10**digits)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**digits)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


def ratio(
    id: SequenceId,
    n: int,
    digits: int = config.DEFAULT_RATIO_DIGITS,
    denominator: SequenceId = S.G,
) -> str:
    if not 0 <= digits <= config.MAX_RATIO_DIGITS:
        raise ValueError(f"digits must be between 0 and {config.MAX_RATIO_DIGITS}, got {digits}")
    return format_fixed(exact_ratio(id, n, denominator), digits)


def _to_mpf(q: Fraction) -> mpmath.mpf:
    return mpmath.mpf(q.numerator) / q.denominator


def convergence_check(
    id: SequenceId,
    constant: LimitConstant | None = None,
    probes: list[int] | None = None,
    denominator: SequenceId = S.G,
) -> ConvergenceReport:
    """
    Errors |value_n/denominator_n - limit| at each probe must strictly
    decrease and stay below CONVERGENCE_ENVELOPE/n.
    """
    id = SequenceId(id)
    probes = probes or [10, 50, 100, 500]
    if list(probes) != sorted(set(probes)):
        raise ValueError(f"Probes must be strictly ascending, got {probes}")
    if id == denominator:
        raise ValueError(f"{id}/{denominator} is identically 1; there is nothing to converge")
    constant = constant or limit_constant(id, denominator)

    with mpmath.workdps(60):
        limit = constant.value.to_mpf(60)
        errors = [abs(_to_mpf(exact_ratio(id, n, denominator)) - limit) for n in probes]
        decreasing = all(later < earlier for earlier, later in zip(errors, errors[1:]))
        within = all(err < mpmath.mpf(config.CONVERGENCE_ENVELOPE) / n for err, n in zip(errors, probes))
        rendered = [mpmath.nstr(err, 6) for err in errors]

    return ConvergenceReport(
        id=f"{id}/{denominator}",
        limit=constant.exact_form,
        probes=list(probes),
        errors=rendered,
        decreasing=decreasing,
        within_envelope=within,
    )


def dominance_check(n_min: int = 3, n_max: int = 200) -> DominanceReport:
    """t1_n > t2_n = f_n > t3_n for every n in range."""
    t1, t2, t3, f = (compute(sid, n_max).values for sid in (S.T1, S.T2, S.T3, S.F))
    for n in range(n_min, n_max + 1):
        i = n - 1
        if not (t1[i] > t2[i] == f[i] > t3[i]):
            return DominanceReport(n_min=n_min, n_max=n_max, passed=False, counterexample=n)
    return DominanceReport(n_min=n_min, n_max=n_max, passed=True)


def leading_term(id: SequenceId, n: int) -> mpmath.mpf:
    """c * 2^(3n-2) / √(πn³) with c the id's limit over g; informational only."""
    c = limit_constant(id).value
    with mpmath.workdps(30):
        return c.to_mpf(30) * mpmath.mpf(2) ** (3 * n - 2) / mpmath.sqrt(mpmath.pi * mpmath.mpf(n) ** 3)


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Print the limit constants")
    parser.add_argument("--digits", type=int, default=config.CONSTANT_DIGITS)
    args = parser.parse_args()

    for constant in limit_constants():
        print(f"{constant.id:8} {constant.exact_form:16} {constant.value.decimal(args.digits)}")
