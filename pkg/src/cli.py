import argparse
import json
import sys
from typing import Any

import mpmath
import pandas as pd
from pydantic import BaseModel, ConfigDict

import config
from analysis.asymptotics import (
    convergence_check,
    leading_term,
    limit_constant,
    limit_constants,
    ratio,
)
from analysis.parity import PARITY_IDS, parity_check
from formulas.census import (
    check_table_width,
    merged_truth_table,
    oracle_check,
    per_formula_frame,
    render_table,
    run_census,
)
from formulas.model import Connective, enumerate_bracketings, render
from formulas.visualize import render_formula_tree
from sequences.printed import discrepancies
from sequences.recurrences import SequenceId, compute, load_sequences, verify_identities
from series.closed_forms import gf_coefficients, recurrence_mismatches, series_identities
from utils import did_you_mean, warn


class Outcome(BaseModel):
    """What a subcommand produced, before it is rendered in the chosen format."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    command: str
    params: dict[str, Any]
    results: Any
    text: list[str]
    frame: pd.DataFrame | None = None
    warnings: list[str] = []
    exit_code: int = 0


# ====================
#  Argument Types
# ====================
def parse_connective(value: str) -> Connective:
    try:
        return Connective(value.lower())
    except ValueError:
        choices = [c.value for c in Connective]
        raise argparse.ArgumentTypeError(
            f"unknown connective '{value}'{did_you_mean(value.lower(), choices)}"
        ) from None


def parse_sequence_id(value: str) -> SequenceId:
    try:
        return SequenceId.parse(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def parse_target(value: str) -> tuple[SequenceId, SequenceId]:
    """'t1' is t1 over g; 't3/t2' is a pairwise ratio."""
    numerator, _, denominator = value.partition("/")
    return parse_sequence_id(numerator), parse_sequence_id(denominator or "g")


def _integer_or_text(q) -> int | str:
    return q.numerator if q.denominator == 1 else str(q)


def _sequence_frame(values: list, start: int = 1) -> pd.DataFrame:
    return pd.DataFrame(
        {"n": range(start, start + len(values)), "value": pd.Series(values, dtype=object)}
    )


def _census_text(row: dict[str, int]) -> str:
    parts = [f"case{i}={row[f'case{i}']}" for i in range(1, 5)]
    if row["uncased_true"] or row["uncased_false"]:
        parts += [f"uncased_true={row['uncased_true']}", f"uncased_false={row['uncased_false']}"]
    parts.append(f"total={row['total']}")
    return " ".join(parts)


# ====================
#  Subcommands
# ====================
def cmd_enumerate(args: argparse.Namespace) -> Outcome:
    formulas = enumerate_bracketings(args.n)
    rendered = [render(f, args.connective, args.glyphs) for f in formulas]
    if args.tree:
        text = "\n\n".join(render_formula_tree(f, args.connective, args.glyphs) for f in formulas)
        lines = text.split("\n")
    else:
        lines = rendered
    return Outcome(
        command="enumerate",
        params={"n": args.n, "connective": args.connective.value},
        results=rendered,
        text=lines,
        frame=pd.DataFrame({"index": range(1, len(rendered) + 1), "formula": rendered}),
    )


def cmd_census(args: argparse.Namespace) -> Outcome:
    params = {"n": args.n, "connective": args.connective.value}
    if args.table:
        check_table_width(args.n)
        frame = merged_truth_table(args.n, args.connective, args.glyphs)
        text = render_table(args.n, args.connective, args.glyphs, frame=frame).split("\n")
        results = json.loads(frame.to_json(orient="records"))
        return Outcome(command="census", params={**params, "table": True}, results=results, text=text, frame=frame)

    if args.per_formula:
        frame = per_formula_frame(args.n, args.connective, args.glyphs)
        rows = frame.to_dict(orient="records")
        text = [f"{row['formula']}: {_census_text(row)}" for row in rows]
        results = [{k: (v if isinstance(v, str) else int(v)) for k, v in row.items()} for row in rows]
        return Outcome(
            command="census", params={**params, "per_formula": True}, results=results, text=text, frame=frame
        )

    census = run_census(
        args.n,
        args.connective,
        allow_large=args.max_rows_override,
        workers=args.workers,
        progress=args.progress,
    )
    row = census.as_row()
    return Outcome(
        command="census",
        params=params,
        results=row,
        text=[_census_text(row)],
        frame=pd.DataFrame([row]),
    )


def cmd_seq(args: argparse.Namespace) -> Outcome:
    load_sequences(args.n_max, force_refresh=args.force_refresh)
    table = compute(args.id, args.n_max)
    results: dict[str, Any] = {"id": table.id.value, "values": table.values}
    text = [" ".join(str(v) for v in table.values)]
    exit_code = 0

    if args.check_identities:
        report = verify_identities(max(args.n_max, 2))
        results["identities"] = report.model_dump()
        text.append("identities: pass" if report.passed else f"identities: fail ({report.counterexample})")
        exit_code = exit_code or (0 if report.passed else 1)

    if args.oracle is not None:
        report = oracle_check(args.oracle)
        results["oracle"] = report.model_dump(mode="json")
        if report.passed:
            text.append(f"oracle: MATCH up to n={args.oracle}")
        else:
            text.extend(f"oracle: {line}" for line in report.mismatches)
            exit_code = 1

    return Outcome(
        command="seq",
        params={"id": table.id.value, "n_max": args.n_max},
        results=results,
        text=text,
        frame=_sequence_frame(table.values),
        warnings=[d.describe() for d in discrepancies(table.id, table.values)],
        exit_code=exit_code,
    )


def cmd_gf(args: argparse.Namespace) -> Outcome:
    coefficients = gf_coefficients(args.id, args.order)
    values = [_integer_or_text(c) for c in coefficients]
    results: dict[str, Any] = {"id": args.id.value, "coefficients": values}
    text = [" ".join(str(v) for v in values)]
    exit_code = 0

    if args.diff_recurrence:
        mismatches = recurrence_mismatches(args.id, args.order)
        results["recurrence_mismatches"] = mismatches
        if mismatches:
            text.append("MISMATCH at n=" + ",".join(str(n) for n in mismatches))
            exit_code = 1
        else:
            text.append("MATCH")

    if args.check_identities:
        identities = series_identities(args.order)
        results["identities"] = identities
        text.extend(f"{name}: {'pass' if ok else 'fail'}" for name, ok in identities.items())
        if not all(identities.values()):
            exit_code = 1

    return Outcome(
        command="gf",
        params={"id": args.id.value, "order": args.order},
        results=results,
        text=text,
        frame=_sequence_frame(values),
        exit_code=exit_code,
    )


def _limit_text(value, digits: int) -> str:
    if value == 0:
        return "0"
    return mpmath.nstr(value.to_mpf(digits + 10), max(digits, 1))


def cmd_asymp(args: argparse.Namespace) -> Outcome:
    if args.list_constants:
        rows = [c.as_row() for c in limit_constants()]
        return Outcome(
            command="asymp",
            params={"list_constants": True},
            results=rows,
            text=[f"{r['id']} = {r['exact_form']} = {r['decimal']}" for r in rows],
            frame=pd.DataFrame(rows),
        )
    if args.target is None:
        raise ValueError("asymp needs a sequence id or a ratio such as t3/t2")

    numerator, denominator = args.target
    constant = limit_constant(numerator, denominator)
    probes = args.probes or [10, 50, 100, 500]
    load_sequences(max(probes))
    limit = _limit_text(constant.value, args.digits)

    rows, text = [], []
    for n in probes:
        value = ratio(numerator, n, args.digits, denominator)
        rows.append({"n": n, "ratio": value, "limit": limit})
        line = f"{value} (limit {limit})"
        if args.verbose and denominator == SequenceId.G and constant.value != 0:
            scale = mpmath.mpf(compute(numerator, n).values[-1]) / leading_term(numerator, n)
            line += f" value/leading term {mpmath.nstr(scale, 8)}"
        text.append(line)

    results: dict[str, Any] = {"id": constant.id, "exact_form": constant.exact_form, "probes": rows}
    exit_code = 0
    if args.check:
        report = convergence_check(numerator, constant, probes, denominator)
        results["convergence"] = report.model_dump()
        verdict = "pass" if report.passed else "fail"
        text.append(f"convergence: {verdict} (errors {', '.join(report.errors)})")
        exit_code = 0 if report.passed else 1

    return Outcome(
        command="asymp",
        params={"target": constant.id, "probes": probes, "digits": args.digits},
        results=results,
        text=text,
        frame=pd.DataFrame(rows),
        exit_code=exit_code,
    )


def cmd_parity(args: argparse.Namespace) -> Outcome:
    ids = PARITY_IDS if args.id == "all" else [SequenceId.parse(args.id)]
    load_sequences(args.n_max, force_refresh=args.force_refresh)
    reports = [parity_check(sid, args.n_max) for sid in ids]

    text = []
    for report in reports:
        if report.passed:
            line = "pass: odd exactly at powers of two"
        else:
            n = report.counterexample
            line = f"fail: {report.id} breaks the power-of-two parity law at n={n}"
        text.append(f"{report.id}: {line}" if len(reports) > 1 else line)

    return Outcome(
        command="parity",
        params={"id": args.id, "n_max": args.n_max},
        results=[r.model_dump(mode="json") for r in reports],
        text=text,
        frame=pd.DataFrame([r.model_dump(mode="json") for r in reports]),
        exit_code=0 if all(r.passed for r in reports) else 1,
    )


# ====================
#  Output
# ====================
def emit(outcome: Outcome, output_format: str, verbose: bool = False) -> None:
    if output_format == "json":
        payload = {
            "command": outcome.command,
            "params": outcome.params,
            "results": outcome.results,
            "warnings": outcome.warnings,
        }
        print(json.dumps(payload, indent=2, ensure_ascii=False))
        return

    for message in outcome.warnings:
        warn(message)
    if output_format == "csv":
        frame = outcome.frame if outcome.frame is not None else pd.DataFrame()
        sys.stdout.write(frame.to_csv(index=False, lineterminator="\n"))
    else:
        if verbose:
            print(f"implication-census {config.VERSION}")
        for line in outcome.text:
            print(line)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=["text", "csv", "json"],
        default="text",
        help="Output format (default: text)",
    )
    common.add_argument(
        "--verbose",
        default=False,
        action="store_true",
        help="Print the version line and extra detail in text mode",
    )

    parser = argparse.ArgumentParser(
        description="Count and classify the truth-table rows of bracketed implications",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    p = subparsers.add_parser("enumerate", parents=[common], help="List every bracketing of n variables")
    p.add_argument("-n", type=int, required=True, help="Number of variables")
    p.add_argument("-c", "--connective", type=parse_connective, default=Connective.IMP)
    p.add_argument("--glyphs", choices=["ascii", "unicode"], default=None, help="Connective symbols")
    p.add_argument("--tree", default=False, action="store_true", help="Draw each bracketing as a tree")
    p.set_defaults(handler=cmd_enumerate)

    p = subparsers.add_parser("census", parents=[common], help="Count rows by case by brute force")
    p.add_argument("-n", type=int, required=True, help="Number of variables")
    p.add_argument("-c", "--connective", type=parse_connective, default=Connective.IMP)
    p.add_argument("--glyphs", choices=["ascii", "unicode"], default=None)
    p.add_argument("--per-formula", default=False, action="store_true", help="One census per bracketing")
    p.add_argument("--table", default=False, action="store_true", help="Print the merged truth table")
    p.add_argument(
        "--max-rows-override",
        default=False,
        action="store_true",
        help=f"Allow censuses up to n={config.CENSUS_HARD_CAP}",
    )
    p.add_argument(
        "--workers",
        type=int,
        default=config.MAX_CONCURRENT_WORKERS,
        help=f"Worker processes (default: {config.MAX_CONCURRENT_WORKERS})",
    )
    p.add_argument("--progress", default=False, action="store_true", help="Show a progress bar")
    p.set_defaults(handler=cmd_census)

    p = subparsers.add_parser("seq", parents=[common], help="Sequence values from the recurrences")
    p.add_argument("id", type=parse_sequence_id, help="Sequence id, e.g. f, t1, y, k3")
    p.add_argument("n_max", type=int, help="Number of terms")
    p.add_argument("--check-identities", default=False, action="store_true")
    p.add_argument("--oracle", type=int, default=None, metavar="N", help="Diff against censuses up to N")
    p.add_argument("--force-refresh", default=False, action="store_true", help="Ignore the sequence cache")
    p.set_defaults(handler=cmd_seq)

    p = subparsers.add_parser("gf", parents=[common], help="Coefficients of a closed-form generating function")
    p.add_argument("id", type=parse_sequence_id, help="Sequence id")
    p.add_argument("order", type=int, help="Truncation order N (coefficients of x^1..x^(N-1))")
    p.add_argument("--diff-recurrence", default=False, action="store_true")
    p.add_argument("--check-identities", default=False, action="store_true")
    p.set_defaults(handler=cmd_gf)

    p = subparsers.add_parser("asymp", parents=[common], help="Ratios and their limits")
    p.add_argument("target", type=parse_target, nargs="?", help="Sequence id or a ratio such as t3/t2")
    p.add_argument("--probes", type=int, nargs="+", default=None, help="Values of n to evaluate")
    p.add_argument("--digits", type=int, default=config.DEFAULT_RATIO_DIGITS)
    p.add_argument("--check", default=False, action="store_true", help="Check monotone convergence")
    p.add_argument("--list-constants", default=False, action="store_true")
    p.set_defaults(handler=cmd_asymp)

    p = subparsers.add_parser("parity", parents=[common], help="Check the power-of-two parity law")
    p.add_argument("id", type=str, help="Sequence id, or 'all'")
    p.add_argument("n_max", type=int)
    p.add_argument("--force-refresh", default=False, action="store_true", help="Ignore the sequence cache")
    p.set_defaults(handler=cmd_parity)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        outcome = args.handler(args)
    except ValueError as e:
        parser.error(str(e))
    emit(outcome, args.format, args.verbose)
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
