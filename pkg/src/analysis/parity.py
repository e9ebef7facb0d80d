import argparse

from pydantic import BaseModel

from sequences.recurrences import STARTS_AT_TWO, SequenceId, compute

# Cat and the twelve case sequences; g_n = 2^n C_n is always even.
PARITY_IDS = [sid for sid in SequenceId if sid != SequenceId.G]


class ParityReport(BaseModel):
    id: SequenceId
    n_max: int
    passed: bool
    counterexample: int | None = None


def is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def parity_check(id: SequenceId, n_max: int) -> ParityReport:
    """Odd exactly when n is a power of two, from n=2 for ids that are 0 at n=1."""
    if n_max < 2:
        raise ValueError(f"n_max must be at least 2, got {n_max}")
    id = SequenceId(id)
    values = compute(id, n_max).values
    start = 2 if id in STARTS_AT_TWO else 1
    for n in range(start, n_max + 1):
        if (values[n - 1] % 2 == 1) != is_power_of_two(n):
            return ParityReport(id=id, n_max=n_max, passed=False, counterexample=n)
    return ParityReport(id=id, n_max=n_max, passed=True)


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Check the power-of-two parity law")
    parser.add_argument("n_max", type=int, nargs="?", default=64)
    args = parser.parse_args()

    for sid in PARITY_IDS:
        report = parity_check(sid, args.n_max)
        verdict = "pass" if report.passed else f"fail at n={report.counterexample}"
        print(f"{sid:4} {verdict}")
