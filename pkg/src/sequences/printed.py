"""
Published values of the sequences, kept exactly as they were printed
(including corrupted digit strings), so computed output can be checked
against them and every disagreement reported.
"""

from pydantic import BaseModel

from sequences.recurrences import SequenceId, compute


class PrintedList(BaseModel):
    id: SequenceId
    source: str
    start: int
    values: list[str]

    @property
    def stop(self) -> int:
        return self.start + len(self.values) - 1

    def printed(self, n: int) -> str | None:
        if self.start <= n <= self.stop:
            return self.values[n - self.start]
        return None


class Discrepancy(BaseModel):
    id: SequenceId
    n: int
    printed: str
    computed: int
    source: str

    def describe(self) -> str:
        return (
            f"{self.id} at n={self.n}: computed {self.computed}, "
            f"but the {self.source} prints {self.printed}"
        )


def _split(text: str) -> list[str]:
    return text.replace("\n", " ").split()


S = SequenceId
_SUMMARY = "summary table of the implication sequences"
_CONVERGENCE = "convergence table"

PRINTED: list[PrintedList] = [
    PrintedList(
        id=S.G,
        source="table of g_n",
        start=1,
        values=_split("2 4 16 80 448 2688 16896 109824 732160 4978688 34398208 240787456"),
    ),
    PrintedList(
        id=S.CAT,
        source=_SUMMARY,
        start=1,
        values=_split("1 1 2 5 14 42 132 429 1430 4862 16796"),
    ),
    PrintedList(
        id=S.G,
        source=_SUMMARY,
        start=1,
        values=_split("2 4 16 80 448 2688 16896 109824 732160 4978688 34398208"),
    ),
    PrintedList(
        id=S.F,
        source=_SUMMARY,
        start=1,
        values=_split("1 1 4 19 104 614 3816 24595 162896 1101922 7580904"),
    ),
    PrintedList(
        id=S.T1,
        source=_SUMMARY,
        start=1,
        values=_split("0 1 6 33 194 1198 7676 50581 340682 2335186 16237284"),
    ),
    PrintedList(
        id=S.T2,
        source=_SUMMARY,
        start=1,
        values=_split("0 1 4 19 104 614 3816 24595 162896 1101922 7580904"),
    ),
    PrintedList(
        id=S.T3,
        source=_SUMMARY,
        start=1,
        values=_split("0 1 2 9 46 262 1588 10053 65686 439658 2999116"),
    ),
    PrintedList(
        id=S.F,
        source="list of the first ten f_n",
        start=1,
        values=_split("1 1 4 19 104 614 3816 24595 162896 1101922"),
    ),
    PrintedList(
        id=S.T3,
        source="list of t#3_n",
        start=2,
        values=_split(
            """1 2 9 46 262 1588 10053 65686 439658 2999116
            20774154 145726348 1033125004 7390626280 53281906861
            386732675046 2823690230850 20725376703324
            152833785130398 1131770853856100 8412813651862868"""
        ),
    ),
    PrintedList(
        id=S.T1,
        source="list of t#1_n",
        start=2,
        values=_split(
            """1 6 33 194 1198 7676 50581 340682 2335186 16237284
            114255994 812107412 5822171548 42052209400 305714145869
            2235262899418 16426616425002 121265916776148
            898878250833358 6687497426512700 49920590244564484"""
        ),
    ),
    PrintedList(
        id=S.Y,
        source="list of the first ten y_n",
        start=1,
        values=_split("1 1 6 29 162 978 6156 40061 267338 819238"),
    ),
    PrintedList(
        id=S.D3,
        source="list of d#3_n",
        start=2,
        values=_split(
            """1 4 19 108 646 4056 26355 175628 1193906 8246856
            57716798 408391736 13+2916689516 20997741104 152218453443
            1110202813836 8140864778810 59981252880360 443834410644618
            3296876425605992 24575508928455572 183773880824034512
            1378248141659861486 10364040821146016568"""
        ),
    ),
    PrintedList(
        id=S.D1,
        source="list of d#1_n",
        start=2,
        values=_split(
            """1 2 13 70 418 2628 17053 113566 771638 5327804 37274482 263669500
            1882630692 13550468360 98212733277 716195167502 5250931034798
            8683418448780 286206574421222 2125766544922612 15844332066531484
            3118472460044221368 888436633672089842 6680306733514013388"""
        ),
    ),
    PrintedList(
        id=S.K3,
        source="list of k#3_n",
        start=2,
        values=_split(
            """1 4 19 100 566 3384 21107 136084 900674 6087496
            41850366 291766952 2057964492 14659421040 105305580483 761981900724
            5548736343434 0632122219688 299017702596554 2210275626304248
            16403005547059508 122169144755555088 912887876722311406 684174390763667239"""
        ),
    ),
    PrintedList(
        id=S.K1,
        source="list of k#1_n",
        start=2,
        values=_split(
            """1 6 37 234 514 9996 67181 458562 3172478 22206420
            157027938 1120292388 8055001716 58314533400 424740506109 3110401363122
            22888001498102 169155516667524 1255072594261142 9345400450314924
            69812926066668044 523072984217339304 3929809142578361938 29598511892723647860"""
        ),
    ),
    PrintedList(
        id=S.F,
        source=_CONVERGENCE,
        start=1,
        values=_split("1 2 4 19 104 614 3816 424595 162896 1101922"),
    ),
    PrintedList(
        id=S.G,
        source=_CONVERGENCE,
        start=1,
        values=_split("2 4 16 80 428 2688 16896 109824 732160 4978688"),
    ),
    PrintedList(
        id=S.T1,
        source=_CONVERGENCE,
        start=2,
        values=_split("1 6 33 194 1198 7676 50581 340682 2335186"),
    ),
    PrintedList(
        id=S.T3,
        source=_CONVERGENCE,
        start=2,
        values=_split("1 2 9 46 262 1588 10053 65686 439658"),
    ),
]

# Published decimals of value/g_n at n=100, 9 significant digits.
PRINTED_RATIOS_AT_100: dict[SequenceId, str] = {
    S.T2: "0.212290865",
    S.T1: "0.497093847",
    S.T3: "0.0783244229",
}


def printed_lists(id: SequenceId) -> list[PrintedList]:
    return [entry for entry in PRINTED if entry.id == id]


def discrepancies(id: SequenceId, values: list[int], start: int = 1) -> list[Discrepancy]:
    """
    Compare computed `values` (values[0] is term `start`) with every published
    list for `id`; each mismatching digit string is reported.
    """
    found = []
    for entry in printed_lists(id):
        for offset, computed in enumerate(values):
            n = start + offset
            printed = entry.printed(n)
            if printed is not None and printed != str(computed):
                found.append(
                    Discrepancy(id=id, n=n, printed=printed, computed=computed, source=entry.source)
                )
    return sorted(found, key=lambda d: (d.n, d.source))


def all_discrepancies() -> list[Discrepancy]:
    """Every published value that disagrees with its recurrence value."""
    found = []
    for id in SequenceId:
        n_max = max((entry.stop for entry in printed_lists(id)), default=0)
        if n_max:
            found.extend(discrepancies(id, compute(id, n_max).values))
    return found


if __name__ == "__main__":
    for discrepancy in all_discrepancies():
        print(discrepancy.describe())
