from collections.abc import Iterator
from dataclasses import dataclass, field
from enum import IntEnum, StrEnum

import config


class Connective(StrEnum):
    """
    One of the four binary row semantics a bracketing can be evaluated under.

    Each connective is false on exactly one (left, right) combination:
    - imp:   ψ → φ,     false only on (1, 0)
    - mimp1: ψ → ¬φ,    false only on (1, 1)
    - mimp2: ¬ψ → φ,    false only on (0, 0)
    - mimp3: ¬ψ → ¬φ,   false only on (0, 1)
    """

    IMP = "imp"
    MIMP1 = "mimp1"
    MIMP2 = "mimp2"
    MIMP3 = "mimp3"

    @property
    def false_pair(self) -> tuple[int, int]:
        return _FALSE_PAIRS[self]

    def apply(self, left: int, right: int) -> int:
        return 0 if (left, right) == self.false_pair else 1

    def glyph(self, style: str | None = None) -> str:
        style = style or config.GLYPHS
        if style not in _GLYPHS:
            raise ValueError(f"Unknown glyph style '{style}', expected one of {sorted(_GLYPHS)}")
        return _GLYPHS[style][self]

    def case_of(self, left: int, right: int) -> "RowCase":
        return CASE_TABLE[self][(left, right)]

    def combine_columns(self, left: int, right: int, full: int) -> int:
        """
        Bit-parallel evaluation: `left` and `right` are truth columns (bit r set
        when the subformula is true on row r) and `full` has every row bit set.
        """
        fl, fr = self.false_pair
        left_sel = left if fl else full ^ left
        right_sel = right if fr else full ^ right
        return full ^ (left_sel & right_sel)


class RowCase(IntEnum):
    """Classification of a row by the values of the two top-level subformulas."""

    CASE1 = 1
    CASE2 = 2
    CASE3 = 3
    CASE4 = 4


_FALSE_PAIRS = {
    Connective.IMP: (1, 0),
    Connective.MIMP1: (1, 1),
    Connective.MIMP2: (0, 0),
    Connective.MIMP3: (0, 1),
}

_GLYPHS = {
    "ascii": {
        Connective.IMP: "->",
        Connective.MIMP1: "-.",
        Connective.MIMP2: ".-",
        Connective.MIMP3: "..",
    },
    "unicode": {
        Connective.IMP: "→",
        Connective.MIMP1: "⇀",
        Connective.MIMP2: "↽",
        Connective.MIMP3: "⇌",
    },
}

# (value of left subformula, value of right subformula) -> case.
# Case 4 is always the connective's false combination.
CASE_TABLE: dict[Connective, dict[tuple[int, int], RowCase]] = {
    Connective.IMP: {
        (1, 1): RowCase.CASE1,
        (0, 1): RowCase.CASE2,
        (0, 0): RowCase.CASE3,
        (1, 0): RowCase.CASE4,
    },
    Connective.MIMP1: {
        (0, 0): RowCase.CASE1,
        (0, 1): RowCase.CASE2,
        (1, 0): RowCase.CASE3,
        (1, 1): RowCase.CASE4,
    },
    Connective.MIMP2: {
        (1, 1): RowCase.CASE1,
        (1, 0): RowCase.CASE2,
        (0, 1): RowCase.CASE3,
        (0, 0): RowCase.CASE4,
    },
    Connective.MIMP3: {
        (1, 1): RowCase.CASE1,
        (1, 0): RowCase.CASE2,
        (0, 0): RowCase.CASE3,
        (0, 1): RowCase.CASE4,
    },
}


# ====================
#  Formula Trees
# ====================
@dataclass(frozen=True, slots=True)
class Leaf:
    index: int

    @property
    def lo(self) -> int:
        return self.index

    @property
    def hi(self) -> int:
        return self.index

    @property
    def size(self) -> int:
        return 1


@dataclass(frozen=True, slots=True)
class Node:
    left: "Formula"
    right: "Formula"
    lo: int = field(init=False)
    hi: int = field(init=False)

    def __post_init__(self):
        if self.left.hi + 1 != self.right.lo:
            raise ValueError(
                f"Subformulas must cover adjacent variables, got p{self.left.lo}..p{self.left.hi} "
                f"and p{self.right.lo}..p{self.right.hi}"
            )
        object.__setattr__(self, "lo", self.left.lo)
        object.__setattr__(self, "hi", self.right.hi)

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1


Formula = Leaf | Node
Valuation = tuple[int, ...]


def enumerate_bracketings(n: int) -> list[Formula]:
    """
    All bracketings of p1 ∘ ... ∘ pn, in split-point order: the top split
    runs over i = 1..n-1 and, for each split, left bracketings form the outer
    loop. Subtrees are shared between results.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if n > config.ENUMERATION_CAP:
        raise ValueError(
            f"Full enumeration is limited to n <= {config.ENUMERATION_CAP}, got {n}; "
            "use the sequence routes for larger n"
        )
    return list(_bracketings(1, n, {}))


def bracketings_over(lo: int, hi: int) -> list[Formula]:
    """Bracketings of p_lo ∘ ... ∘ p_hi, in the same order as enumerate_bracketings."""
    if not 1 <= lo <= hi:
        raise ValueError(f"Invalid variable range p{lo}..p{hi}")
    return list(_bracketings(lo, hi, {}))


def _bracketings(lo: int, hi: int, memo: dict) -> list[Formula]:
    key = (lo, hi)
    if key in memo:
        return memo[key]
    if lo == hi:
        result = [Leaf(lo)]
    else:
        result = []
        for split in range(lo, hi):
            rights = _bracketings(split + 1, hi, memo)
            for left in _bracketings(lo, split, memo):
                for right in rights:
                    result.append(Node(left, right))
    memo[key] = result
    return result


# ====================
#  Evaluation
# ====================
def evaluate(f: Formula, c: Connective, v: Valuation) -> int:
    """`v[k]` is the value of the k-th variable of `f`, counting from its leftmost leaf."""
    if len(v) != f.size:
        raise ValueError(f"Valuation has {len(v)} values but the formula has {f.size} variables")
    return _value(f, c, v, f.lo)


def _value(f: Formula, c: Connective, v: Valuation, offset: int) -> int:
    if isinstance(f, Leaf):
        return v[f.index - offset]
    return c.apply(_value(f.left, c, v, offset), _value(f.right, c, v, offset))


def top_split_case(f: Formula, c: Connective, v: Valuation) -> RowCase:
    if isinstance(f, Leaf):
        raise ValueError("A single variable has no top-level split; its rows are uncased")
    if len(v) != f.size:
        raise ValueError(f"Valuation has {len(v)} values but the formula has {f.size} variables")
    cut = f.left.size
    left_value = evaluate(f.left, c, v[:cut])
    right_value = evaluate(f.right, c, v[cut:])
    return c.case_of(left_value, right_value)


def render(f: Formula, c: Connective, style: str | None = None) -> str:
    glyph = c.glyph(style)

    def walk(node: Formula, outer: bool) -> str:
        if isinstance(node, Leaf):
            return f"p{node.index}"
        text = f"{walk(node.left, False)}{glyph}{walk(node.right, False)}"
        return text if outer else f"({text})"

    return walk(f, True)


# ====================
#  Truth Columns
# ====================
def valuations(n: int) -> Iterator[Valuation]:
    """Rows in descending binary order: (1, ..., 1) first, (0, ..., 0) last."""
    for m in range((1 << n) - 1, -1, -1):
        yield tuple((m >> (n - i)) & 1 for i in range(1, n + 1))


class TruthColumns:
    """
    Truth columns of formulas over p_first..p_(first+n-1) as integers: bit r
    is the value on row r of `valuations(n)`. Columns of shared subtrees are
    computed once.
    """

    def __init__(self, n: int, c: Connective, first: int = 1):
        self.n = n
        self.first = first
        self.connective = c
        self.rows = 1 << n
        self.full = (1 << self.rows) - 1
        self._leaves = [self._leaf_column(i) for i in range(1, n + 1)]
        self._memo: dict[int, tuple[Formula, int]] = {}

    def _leaf_column(self, i: int) -> int:
        column = 0
        for r in range(self.rows):
            m = self.rows - 1 - r
            if (m >> (self.n - i)) & 1:
                column |= 1 << r
        return column

    def column(self, f: Formula) -> int:
        if isinstance(f, Leaf):
            return self._leaves[f.index - self.first]
        cached = self._memo.get(id(f))
        if cached is not None and cached[0] is f:
            return cached[1]
        result = self.connective.combine_columns(
            self.column(f.left), self.column(f.right), self.full
        )
        self._memo[id(f)] = (f, result)
        return result

    def row_value(self, column: int, r: int) -> int:
        return (column >> r) & 1
