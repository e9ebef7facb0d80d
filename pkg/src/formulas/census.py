import argparse
from concurrent.futures import ProcessPoolExecutor
from itertools import repeat
from typing import Self

import pandas as pd
from pydantic import BaseModel, model_validator
from tqdm import tqdm

import config
from formulas.model import (
    CASE_TABLE,
    Connective,
    Formula,
    Leaf,
    RowCase,
    TruthColumns,
    bracketings_over,
    enumerate_bracketings,
    render,
    valuations,
)
from sequences.recurrences import CASE_SEQUENCES, compute, total_rows
from utils import status


class CensusRefused(ValueError):
    """The requested enumeration is above the configured cap."""


class TableTooWide(ValueError):
    """Merged tables are only rendered for small n."""


class Census(BaseModel):
    n: int
    connective: Connective
    case_counts: dict[RowCase, int]
    uncased_true: int = 0
    uncased_false: int = 0
    total: int
    formula: str | None = None

    @model_validator(mode="after")
    def _check_counts(self) -> Self:
        counts = [self.case_counts.get(case, 0) for case in RowCase]
        if any(x < 0 for x in counts) or self.uncased_true < 0 or self.uncased_false < 0:
            raise ValueError("Census counts must be nonnegative")
        if sum(counts) + self.uncased_true + self.uncased_false != self.total:
            raise ValueError(f"Census counts do not add up to total={self.total}")
        if self.n >= 2 and (self.uncased_true or self.uncased_false):
            raise ValueError("Only single-variable rows are uncased")
        if self.n == 1 and any(counts):
            raise ValueError("Single-variable rows have no top-level split")
        return self

    def count(self, case: RowCase) -> int:
        return self.case_counts.get(case, 0)

    def as_row(self) -> dict[str, int]:
        row = {"n": self.n}
        row.update({f"case{case.value}": self.count(case) for case in RowCase})
        row["uncased_true"] = self.uncased_true
        row["uncased_false"] = self.uncased_false
        row["total"] = self.total
        return row


class OracleReport(BaseModel):
    n_max: int
    connectives: list[Connective]
    passed: bool
    mismatches: list[str]


def census_cap(allow_large: bool = False) -> int:
    if allow_large:
        return config.CENSUS_HARD_CAP
    return min(config.CENSUS_DEFAULT_CAP, config.CENSUS_HARD_CAP)


def _single_variable_census(c: Connective, formula: str | None = None) -> Census:
    return Census(
        n=1,
        connective=c,
        case_counts={case: 0 for case in RowCase},
        uncased_true=1,
        uncased_false=1,
        total=2,
        formula=formula,
    )


def _pair_counts(c: Connective, left: int, right: int, full: int) -> list[int]:
    """Rows per case for one (left column, right column) pair."""
    counts = [0, 0, 0, 0]
    left_sel = (full ^ left, left)
    right_sel = (full ^ right, right)
    for (x, y), case in CASE_TABLE[c].items():
        counts[case - 1] += (left_sel[x] & right_sel[y]).bit_count()
    return counts


def _tally_split(n: int, c: Connective, split: int) -> list[int]:
    """Case counts over every bracketing whose top split is after p_split."""
    columns = TruthColumns(n, c)
    lefts = [columns.column(f) for f in bracketings_over(1, split)]
    rights = [columns.column(f) for f in bracketings_over(split + 1, n)]
    counts = [0, 0, 0, 0]
    for left in lefts:
        for right in rights:
            for i, x in enumerate(_pair_counts(c, left, right, columns.full)):
                counts[i] += x
    return counts


def run_census(
    n: int,
    c: Connective,
    *,
    allow_large: bool = False,
    workers: int | None = None,
    progress: bool = False,
) -> Census:
    """
    Classify every row of every bracketing of n variables by its top-level
    case. Work is split by the position of the top-level connective; with
    workers > 1 the splits run in separate processes.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    cap = census_cap(allow_large)
    if n > cap:
        raise CensusRefused(
            f"A census at n={n} would classify {total_rows(n):,} rows; the cap is n={cap}"
            + ("" if allow_large else f" (override allows up to n={config.CENSUS_HARD_CAP})")
        )
    c = Connective(c)
    if n == 1:
        return _single_variable_census(c)

    workers = workers or config.MAX_CONCURRENT_WORKERS
    splits = list(range(1, n))
    if workers > 1:
        status(f"Running census n={n} {c} over {len(splits)} splits with {workers} workers...")
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = executor.map(_tally_split, repeat(n), repeat(c), splits)
            per_split = list(
                tqdm(results, total=len(splits), desc="Census", unit="split", disable=not progress)
            )
    else:
        per_split = [
            _tally_split(n, c, split)
            for split in tqdm(splits, desc="Census", unit="split", disable=not progress)
        ]

    totals = [sum(counts[i] for counts in per_split) for i in range(4)]
    return Census(
        n=n,
        connective=c,
        case_counts={case: totals[case - 1] for case in RowCase},
        total=sum(totals),
    )


def per_formula_census(f: Formula, c: Connective, style: str | None = None) -> Census:
    label = render(f, c, style)
    if isinstance(f, Leaf):
        return _single_variable_census(c, label)
    columns = TruthColumns(f.size, c, first=f.lo)
    counts = _pair_counts(c, columns.column(f.left), columns.column(f.right), columns.full)
    return Census(
        n=f.size,
        connective=c,
        case_counts={case: counts[case - 1] for case in RowCase},
        total=sum(counts),
        formula=label,
    )


def per_formula_frame(n: int, c: Connective, style: str | None = None) -> pd.DataFrame:
    """One census row per bracketing, in enumeration order."""
    if n > census_cap():
        raise CensusRefused(f"Per-formula censuses are limited to n <= {census_cap()}, got {n}")
    rows = []
    for f in enumerate_bracketings(n):
        census = per_formula_census(f, c, style)
        rows.append({"formula": census.formula, **census.as_row()})
    return pd.DataFrame(rows)


def merged_truth_table(n: int, c: Connective, style: str | None = None) -> pd.DataFrame:
    """
    Rows are valuations in descending binary order. After the p1..pn columns,
    each bracketing contributes a value column (its rendered form) and a
    "<formula> case" column (empty when n=1).
    """
    if n > census_cap():
        raise CensusRefused(f"Merged tables are limited to n <= {census_cap()}, got {n}")
    rows = list(valuations(n))
    data: dict[str, list] = {f"p{i}": [row[i - 1] for row in rows] for i in range(1, n + 1)}

    columns = TruthColumns(n, c)
    for f in enumerate_bracketings(n):
        label = render(f, c, style)
        value = columns.column(f)
        data[label] = [columns.row_value(value, r) for r in range(columns.rows)]
        if isinstance(f, Leaf):
            data[f"{label} case"] = pd.array([pd.NA] * columns.rows, dtype="Int64")
        else:
            left, right = columns.column(f.left), columns.column(f.right)
            data[f"{label} case"] = pd.array(
                [
                    int(c.case_of(columns.row_value(left, r), columns.row_value(right, r)))
                    for r in range(columns.rows)
                ],
                dtype="Int64",
            )
    return pd.DataFrame(data)


def check_table_width(n: int) -> None:
    if n > config.TABLE_MAX_N:
        raise TableTooWide(
            f"Merged tables are printed up to n={config.TABLE_MAX_N}; use run_census for n={n}"
        )


def render_table(
    n: int, c: Connective, style: str | None = None, frame: pd.DataFrame | None = None
) -> str:
    """
    Fixed-width merged truth table; each cell is the row value with its case
    tag. Pass `frame` to reuse an already built merged_truth_table.
    """
    check_table_width(n)
    if frame is None:
        frame = merged_truth_table(n, c, style)
    display = frame[[f"p{i}" for i in range(1, n + 1)]].astype(str)
    for f in enumerate_bracketings(n):
        label = render(f, c, style)
        cases = frame[f"{label} case"]
        display[label] = [
            f"{value}" if pd.isna(case) else f"{value} c{case}"
            for value, case in zip(frame[label], cases)
        ]
    return display.to_string(index=False)


def oracle_check(n_max: int, connectives: list[Connective] | None = None) -> OracleReport:
    """Compare brute-force case counts with the recurrence values for 2 <= n <= n_max."""
    connectives = connectives or list(Connective)
    mismatches = []
    for c in connectives:
        for n in range(2, n_max + 1):
            census = run_census(n, c)
            if census.total != total_rows(n):
                mismatches.append(f"{c} n={n} total: census {census.total} != g {total_rows(n)}")
            for case, sid in CASE_SEQUENCES[c].items():
                expected = compute(sid, n).values[-1]
                if census.count(case) != expected:
                    mismatches.append(
                        f"{c} n={n} case{case.value}: census {census.count(case)} != {sid} {expected}"
                    )
    return OracleReport(
        n_max=n_max, connectives=connectives, passed=not mismatches, mismatches=mismatches
    )


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Count truth-table rows by case")
    parser.add_argument("-n", type=int, default=3, help="Number of variables")
    parser.add_argument(
        "-c",
        "--connective",
        choices=[c.value for c in Connective],
        default=Connective.IMP.value,
    )
    parser.add_argument("--table", action="store_true", help="Print the merged truth table")
    parser.add_argument(
        "--max-workers",
        type=int,
        default=config.MAX_CONCURRENT_WORKERS,
        help=f"Maximum number of worker processes (default: {config.MAX_CONCURRENT_WORKERS})",
    )
    args = parser.parse_args()

    connective = Connective(args.connective)
    if args.table:
        print(render_table(args.n, connective))
    else:
        census = run_census(args.n, connective, workers=args.max_workers, progress=True)
        print(census.as_row())
