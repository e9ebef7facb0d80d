import argparse
import threading
from enum import StrEnum
from math import comb
from operator import mul
from typing import Self

from pydantic import BaseModel, model_validator

import config
from formulas.model import Connective, RowCase
from utils import did_you_mean, file_cache, warn


class SequenceId(StrEnum):
    G = "g"
    CAT = "cat"
    F = "f"
    T1 = "t1"
    T2 = "t2"
    T3 = "t3"
    Y = "y"
    D1 = "d1"
    D2 = "d2"
    D3 = "d3"
    H = "h"
    K1 = "k1"
    K2 = "k2"
    K3 = "k3"

    @classmethod
    def parse(cls, value: str) -> Self:
        try:
            return cls(value.lower())
        except ValueError:
            choices = [member.value for member in cls]
            raise ValueError(
                f"Unknown sequence id '{value}'{did_you_mean(value.lower(), choices)}"
            ) from None


# Census case -> sequence counting it. Type-3 rows follow ordinary implication.
CASE_SEQUENCES: dict[Connective, dict[RowCase, SequenceId]] = {
    Connective.IMP: {
        RowCase.CASE1: SequenceId.T1,
        RowCase.CASE2: SequenceId.T2,
        RowCase.CASE3: SequenceId.T3,
        RowCase.CASE4: SequenceId.F,
    },
    Connective.MIMP1: {
        RowCase.CASE1: SequenceId.D1,
        RowCase.CASE2: SequenceId.D2,
        RowCase.CASE3: SequenceId.D3,
        RowCase.CASE4: SequenceId.Y,
    },
    Connective.MIMP2: {
        RowCase.CASE1: SequenceId.K1,
        RowCase.CASE2: SequenceId.K2,
        RowCase.CASE3: SequenceId.K3,
        RowCase.CASE4: SequenceId.H,
    },
}
CASE_SEQUENCES[Connective.MIMP3] = CASE_SEQUENCES[Connective.IMP]

# Ids whose n=1 value is 0: their sequences really start at n=2.
STARTS_AT_TWO = frozenset(
    {
        SequenceId.T1, SequenceId.T2, SequenceId.T3,
        SequenceId.D1, SequenceId.D2, SequenceId.D3,
        SequenceId.K1, SequenceId.K2, SequenceId.K3,
    }
)

_BASE_VALUES = {
    SequenceId.G: 2,
    SequenceId.CAT: 1,
    SequenceId.F: 1,
    SequenceId.Y: 1,
    SequenceId.H: 1,
}


class SequenceTable(BaseModel):
    id: SequenceId
    values: list[int]

    @model_validator(mode="after")
    def _check_values(self) -> Self:
        if any(v < 0 for v in self.values):
            raise ValueError(f"Sequence {self.id} has a negative value")
        if self.values and self.values[0] != _BASE_VALUES.get(self.id, 0):
            raise ValueError(f"Sequence {self.id} has base value {self.values[0]} at n=1")
        return self

    @property
    def n_max(self) -> int:
        return len(self.values)

    def value(self, n: int) -> int:
        if not 1 <= n <= self.n_max:
            raise IndexError(f"n={n} is outside the table for {self.id} (1..{self.n_max})")
        return self.values[n - 1]


class SequenceSnapshot(BaseModel):
    """Every sequence up to n_max; the unit the disk cache stores."""

    n_max: int
    values: dict[SequenceId, list[int]]

    def table(self, id: SequenceId, n_max: int | None = None) -> SequenceTable:
        n_max = self.n_max if n_max is None else n_max
        return SequenceTable(id=id, values=self.values[id][:n_max])


class IdentityReport(BaseModel):
    n_max: int
    passed: bool
    checked: list[str]
    counterexample: str | None = None


# ====================
#  Closed Forms
# ====================
def catalan(n: int) -> int:
    """C_1 = C_2 = 1, C_3 = 2, ...; C_0 is 0 by convention."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        return 0
    return comb(2 * n - 2, n - 1) // n


def total_rows(n: int) -> int:
    """g_n: rows over every truth table of every bracketing of n variables."""
    return 2**n * catalan(n)


# ====================
#  Recurrences
# ====================
def _convolve(a: list[int], b: list[int], n: int) -> int:
    # sum_{i=1}^{n-1} a_i * b_{n-i}
    return sum(map(mul, a[1:n], b[n - 1 : 0 : -1]))


class SequenceBook:
    """
    Bottom-up tables for every sequence, extended on demand. Index 0 holds a
    placeholder 0 so lists are indexed by n directly. The totals t, d and k
    (rows that are true) are kept alongside the named sequences.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._tables: dict[str, list[int]] = {
            key: [0] for key in [*(s.value for s in SequenceId), "t", "d", "k"]
        }

    @property
    def n_max(self) -> int:
        return len(self._tables["g"]) - 1

    def extend(self, n_max: int) -> None:
        with self._lock:
            s = self._tables
            for n in range(self.n_max + 1, n_max + 1):
                if n == 1:
                    row = {sid.value: _BASE_VALUES.get(sid, 0) for sid in SequenceId}
                else:
                    t, d, k = s["t"], s["d"], s["k"]
                    f, y, h = s["f"], s["y"], s["h"]
                    row = {
                        "g": _convolve(s["g"], s["g"], n),
                        "cat": _convolve(s["cat"], s["cat"], n),
                        "f": _convolve(t, f, n),
                        "t1": _convolve(t, t, n),
                        "t2": _convolve(f, t, n),
                        "t3": _convolve(f, f, n),
                        "y": _convolve(d, d, n),
                        "d1": _convolve(y, y, n),
                        "d2": _convolve(y, d, n),
                        "d3": _convolve(d, y, n),
                        "h": _convolve(h, h, n),
                        "k1": _convolve(k, k, n),
                        "k2": _convolve(k, h, n),
                        "k3": _convolve(h, k, n),
                    }
                row["t"] = row["g"] - row["f"]
                row["d"] = row["g"] - row["y"]
                row["k"] = row["g"] - row["h"]
                for key, value in row.items():
                    s[key].append(value)

    def absorb(self, snapshot: SequenceSnapshot) -> None:
        """Adopt a (cached) snapshot when it reaches further than the book."""
        problems = snapshot_problems(snapshot)
        if problems:
            raise ValueError(f"Inconsistent sequence snapshot at n_max={snapshot.n_max}: {problems[0]}")
        with self._lock:
            if snapshot.n_max <= self.n_max:
                return
            tables = {sid.value: [0, *snapshot.values[sid]] for sid in SequenceId}
            g = tables["g"]
            tables["t"] = [a - b for a, b in zip(g, tables["f"])]
            tables["d"] = [a - b for a, b in zip(g, tables["y"])]
            tables["k"] = [a - b for a, b in zip(g, tables["h"])]
            self._tables = tables

    def values(self, id: SequenceId, n_max: int) -> list[int]:
        if n_max > self.n_max:
            self.extend(n_max)
        return self._tables[id.value][1 : n_max + 1]

    def snapshot(self, n_max: int) -> SequenceSnapshot:
        return SequenceSnapshot(
            n_max=n_max, values={sid: self.values(sid, n_max) for sid in SequenceId}
        )


_BOOK = SequenceBook()


def snapshot_problems(snapshot: SequenceSnapshot) -> list[str]:
    """
    Cheap consistency checks for a snapshot read from disk: lengths, base
    values, the closed forms of g and Cat, and that each connective's three
    true-row cases add up to g minus its false rows.
    """
    n_max = snapshot.n_max
    problems = []
    missing = [sid.value for sid in SequenceId if len(snapshot.values.get(sid, [])) != n_max]
    if missing:
        return [f"expected {n_max} values for {', '.join(missing)}"]

    v = {sid: [0, *snapshot.values[sid]] for sid in SequenceId}
    for sid in SequenceId:
        if v[sid][1] != _BASE_VALUES.get(sid, 0):
            problems.append(f"{sid} has base value {v[sid][1]}")
    S = SequenceId
    families = [
        (S.F, (S.T1, S.T2, S.T3)),
        (S.Y, (S.D1, S.D2, S.D3)),
        (S.H, (S.K1, S.K2, S.K3)),
    ]
    for n in range(1, n_max + 1):
        if v[S.G][n] != total_rows(n):
            problems.append(f"g disagrees with 2^n * catalan(n) at n={n}")
        if v[S.CAT][n] != catalan(n) or v[S.H][n] != catalan(n):
            problems.append(f"cat or h disagrees with catalan(n) at n={n}")
        if n == 1:
            continue
        for false_id, cases in families:
            if sum(v[sid][n] for sid in cases) != v[S.G][n] - v[false_id][n]:
                problems.append(f"{', '.join(cases)} do not add up to g - {false_id} at n={n}")
    return problems


@file_cache(config.SEQUENCES_CACHE_TEMPLATE)
def sequence_snapshot(n_max: int) -> SequenceSnapshot:
    return _BOOK.snapshot(n_max)


def snapshot_size(n_max: int) -> int:
    """Cached snapshots come in power-of-two sizes, so few files cover every n_max."""
    return max(config.SNAPSHOT_MIN_N, 1 << (n_max - 1).bit_length())


def load_sequences(n_max: int, force_refresh: bool = False) -> SequenceSnapshot:
    """
    Fill the in-memory book to at least n_max from the disk cache. A cached
    snapshot that fails `snapshot_problems` is discarded and rebuilt.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be at least 1, got {n_max}")
    size = snapshot_size(n_max)
    snapshot = sequence_snapshot(size, force_refresh=force_refresh)
    try:
        _BOOK.absorb(snapshot)
    except ValueError as e:
        warn(f"Discarding cached sequences: {e}")
        snapshot = sequence_snapshot(size, force_refresh=True)
        _BOOK.absorb(snapshot)
    return snapshot


def compute(id: SequenceId, n_max: int) -> SequenceTable:
    if n_max < 1:
        raise ValueError(f"n_max must be at least 1, got {n_max}")
    id = SequenceId(id)
    return SequenceTable(id=id, values=_BOOK.values(id, n_max))


def value(id: SequenceId, n: int) -> int:
    return compute(id, n).values[-1]


# ====================
#  Identities
# ====================
def verify_identities(n_max: int) -> IdentityReport:
    """Check the case identities and the three partitions of g_n for 2 <= n <= n_max."""
    if n_max < 2:
        raise ValueError(f"n_max must be at least 2, got {n_max}")

    v = {sid: [0, *compute(sid, n_max).values] for sid in SequenceId}
    S = SequenceId
    identities = {
        "t2 = f": lambda n: v[S.T2][n] == v[S.F][n],
        "d2 = d3": lambda n: v[S.D2][n] == v[S.D3][n],
        "k2 = k3": lambda n: v[S.K2][n] == v[S.K3][n],
        "f + t1 + t2 + t3 = g": lambda n: (
            v[S.F][n] + v[S.T1][n] + v[S.T2][n] + v[S.T3][n] == v[S.G][n]
        ),
        "y + d1 + d2 + d3 = g": lambda n: (
            v[S.Y][n] + v[S.D1][n] + v[S.D2][n] + v[S.D3][n] == v[S.G][n]
        ),
        "h + k1 + k2 + k3 = g": lambda n: (
            v[S.H][n] + v[S.K1][n] + v[S.K2][n] + v[S.K3][n] == v[S.G][n]
        ),
        "h = catalan": lambda n: v[S.H][n] == catalan(n),
        "g = 2^n * catalan": lambda n: v[S.G][n] == total_rows(n),
    }

    for n in range(2, n_max + 1):
        for name, holds in identities.items():
            if not holds(n):
                return IdentityReport(
                    n_max=n_max,
                    passed=False,
                    checked=list(identities),
                    counterexample=f"{name} fails at n={n}",
                )
    return IdentityReport(n_max=n_max, passed=True, checked=list(identities))


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Print a sequence computed by its recurrence")
    parser.add_argument("id", type=str, help="Sequence id, e.g. f, t1, k3")
    parser.add_argument("n_max", type=int, help="Number of terms")
    args = parser.parse_args()

    table = compute(SequenceId.parse(args.id), args.n_max)
    print(" ".join(str(x) for x in table.values))
