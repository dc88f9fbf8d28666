"""Parabolic classification: the basic reducedness count and the 59-entry table.

A parabolic whose grading has at most one non-reduced positive weight is
weakly ample outright; the bundled table lists the E7/E8 colourings with
two or more, which are exactly the ones needing deformation arguments.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

from .grading import Grading, diagram, compute_grading
from .rootsys import RootSystem
from .walkdiag import CaseDataError, data_path


@dataclass(frozen=True)
class TableEntry:
    index: int
    group: str  # E7 or E8
    black: tuple[int, ...]


def load_table(path: Path | None = None) -> list[TableEntry]:
    path = path or data_path("table.txt")
    entries = []
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            _, idx, group, _black, verts = line.split()
            entries.append(TableEntry(int(idx), group, tuple(int(x) for x in verts.split(","))))
        except Exception as exc:
            raise CaseDataError(f"{path}:{lineno}: {exc}") from exc
    if len(entries) != 59:
        raise CaseDataError(f"{path}: expected 59 entries, found {len(entries)}")
    return entries


def weakly_ample_by_basic_lemma(g: Grading) -> bool:
    """True when at most one positive weight is non-reduced."""
    return len(g.positive_nonreduced_weights()) <= 1


@dataclass(frozen=True)
class ScanRecord:
    black: tuple[int, ...]
    nonreduced: int

    @property
    def basic_lemma_weakly_ample(self) -> bool:
        return self.nonreduced <= 1


def scan_parabolics(rs: RootSystem) -> list[ScanRecord]:
    """Non-reduced weight counts for all 2^rank - 1 proper colourings."""
    records = []
    vertices = range(1, rs.rank + 1)
    for k in range(rs.rank):
        for black in combinations(vertices, k):
            g = compute_grading(diagram(rs.name, black))
            records.append(ScanRecord(black, len(g.positive_nonreduced_weights())))
    return records


@dataclass
class TableReport:
    counts: dict[int, int]

    @property
    def passed(self) -> bool:
        return all(c >= 2 for c in self.counts.values())

    def failures(self) -> list[int]:
        return [i for i, c in self.counts.items() if c < 2]


def check_table(entries: list[TableEntry] | None = None) -> TableReport:
    """Every table entry must have >= 2 non-reduced positive weights."""
    entries = entries or load_table()
    counts = {}
    for e in entries:
        g = compute_grading(diagram(e.group, e.black))
        counts[e.index] = len(g.positive_nonreduced_weights())
    return TableReport(counts)


def match_table_entry(group: str, black, entries: list[TableEntry] | None = None) -> int | None:
    """Table entry whose colouring equals the given one, if any."""
    entries = entries or load_table()
    black = tuple(sorted(black))
    for e in entries:
        if e.group == group and tuple(sorted(e.black)) == black:
            return e.index
    return None


# ------------------------------------------------------------ ample facts
#
# Full weak-ampleness classification relies on an external list of ample
# Levi-module shapes.  Only facts established by this package's own
# constructions are shipped; the registry is pluggable so such a list can
# be supplied without touching the classifier.


@dataclass(frozen=True)
class AmpleFact:
    shape: str
    ample: bool
    source: str


DEFAULT_AMPLE_FACTS: tuple[AmpleFact, ...] = (
    AmpleFact("reduced weight component", True,
              "basic reducedness criterion (g_{2chi} = 0)"),
    AmpleFact("gl block Hom(V_i, V_j)", True,
              "Moore-Penrose characteristic construction"),
    AmpleFact("so/sp component g_{lambda_i} = Hom(U_i^-, W)", True,
              "explicit B-from-A solution of the characteristic equations"),
    AmpleFact("open orbit with codimension-1 complement", True,
              "recorded criterion on the module shape; not computed here"),
)


class AmpleFactsRegistry:
    def __init__(self, facts: tuple[AmpleFact, ...] = DEFAULT_AMPLE_FACTS):
        self._facts = {f.shape: f for f in facts}

    def register(self, fact: AmpleFact) -> None:
        self._facts[fact.shape] = fact

    def lookup(self, shape: str) -> AmpleFact | None:
        return self._facts.get(shape)

    def shapes(self) -> list[str]:
        return sorted(self._facts)
