"""Ground-truth retrograde engine and Sprague-Grundy values.

This module never consults the triangular-number classification.  It
classifies positions straight from the defining recursion -- a position
is P exactly when every follower is N -- and computes Grundy values by
the standard mex recursion.  ``exhaustive_agreement`` then pits the
closed-form classifier and move constructor against this engine over a
bounded state space.

Tables are built by an explicit work list ordered by total token count
(every move strictly shrinks the total), which sidesteps recursion
depth limits and makes warm and cold queries trivially identical.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import IO, Iterable

from .core import Position, _is_p_heaps
from .errors import ResourceLimitError
from .strategy import analyze, apply, _followers_heaps

# Bounds that keep a full table build interactive on desk hardware.
DEFAULT_BOUNDS = {3: 15, 4: 10}
FALLBACK_BOUND = 6

CSV_VERSION = 1


def mex(values: Iterable[int]) -> int:
    """Least nonnegative integer not in ``values``."""
    present = set(values)
    g = 0
    while g in present:
        g += 1
    return g


def _as_heaps(p: Position | tuple[int, ...]) -> tuple[int, ...]:
    return p.heaps if isinstance(p, Position) else tuple(p)


class GrundyTable:
    """P/N verdicts and Grundy values for all positions within a bound.

    The two tables are filled by independent recursions over the shared
    follower sets: the verdict table by the P/N recursion, the Grundy
    table by mex.  ``g == 0`` coinciding with verdict P is therefore a
    meaningful internal consistency check, not a tautology.

    Single-writer: share a built table freely across threads, but do not
    build or extend one concurrently.
    """

    def __init__(self, k: int, bound: int, _build: bool = True):
        if k < 3:
            raise ValueError("the game needs k >= 3 heaps")
        if bound < 0:
            raise ValueError("bound must be nonnegative")
        self.k = k
        self.bound = bound
        self._grundy: dict[tuple[int, ...], int] = {}
        self._pn: dict[tuple[int, ...], bool] = {}  # True = P
        if _build:
            self._build()

    def _build(self) -> None:
        positions = sorted(
            combinations_with_replacement(range(self.bound + 1), self.k), key=sum
        )
        for heaps in positions:
            fs = _followers_heaps(heaps)
            self._pn[heaps] = not any(self._pn[q] for q in fs)
            self._grundy[heaps] = mex(self._grundy[q] for q in fs)

    def _lookup_key(self, p: Position | tuple[int, ...]) -> tuple[int, ...]:
        heaps = _as_heaps(p)
        if len(heaps) != self.k or (heaps and heaps[-1] > self.bound):
            raise ResourceLimitError(
                f"position {heaps} outside the tabled space "
                f"(k={self.k}, heap bound {self.bound})"
            )
        return heaps

    def classify(self, p: Position | tuple[int, ...]) -> str:
        """P/N verdict from the defining recursion."""
        return "P" if self._pn[self._lookup_key(p)] else "N"

    def grundy(self, p: Position | tuple[int, ...]) -> int:
        return self._grundy[self._lookup_key(p)]

    def positions(self) -> list[tuple[int, ...]]:
        """All tabled canonical positions in lexicographic order."""
        return sorted(self._grundy)

    def write_csv(self, stream: IO[str]) -> None:
        """Versioned header (k, bound), then one ``h_0,...,h_(k-1),g``
        row per position in lexicographic order."""
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["k", "bound", "version"])
        writer.writerow([self.k, self.bound, CSV_VERSION])
        for heaps in self.positions():
            writer.writerow([*heaps, self._grundy[heaps]])

    @classmethod
    def read_csv(cls, stream: IO[str]) -> "GrundyTable":
        reader = csv.reader(stream)
        header = next(reader, None)
        if header is None or header[:2] != ["k", "bound"]:
            raise ValueError("not a grundy table file: bad header")
        values = next(reader, None)
        if values is None:
            raise ValueError("not a grundy table file: missing header values")
        k, bound = int(values[0]), int(values[1])
        table = cls(k, bound, _build=False)
        for row in reader:
            if not row:
                continue
            heaps = tuple(int(x) for x in row[:-1])
            table._grundy[heaps] = int(row[-1])
            table._pn[heaps] = table._grundy[heaps] == 0
        return table


_TABLE_CACHE: dict[tuple[int, int], GrundyTable] = {}


def _table_for(p: Position | tuple[int, ...], bound: int | None) -> GrundyTable:
    heaps = _as_heaps(p)
    k = len(heaps)
    if bound is None:
        bound = max(DEFAULT_BOUNDS.get(k, FALLBACK_BOUND), heaps[-1] if heaps else 0)
    key = (k, bound)
    if key not in _TABLE_CACHE:
        _TABLE_CACHE[key] = GrundyTable(k, bound)
    return _TABLE_CACHE[key]


def oracle_classify(p: Position | tuple[int, ...], bound: int | None = None) -> str:
    """P/N verdict for ``p`` by memoized retrograde recursion."""
    return _table_for(p, bound).classify(p)


def grundy(p: Position | tuple[int, ...], bound: int | None = None) -> int:
    """Sprague-Grundy value of ``p`` (mex over follower values)."""
    return _table_for(p, bound).grundy(p)


@dataclass
class AgreementReport:
    """Outcome of an exhaustive classifier-vs-recursion sweep."""

    k: int
    bound: int
    positions_checked: int = 0
    p_count: int = 0
    n_count: int = 0
    # (heaps, classifier verdict, recursion verdict)
    classifier_mismatches: list[tuple[tuple[int, ...], str, str]] = field(
        default_factory=list
    )
    # (heaps, reason)
    move_failures: list[tuple[tuple[int, ...], str]] = field(default_factory=list)
    # (heaps, offending follower)
    p_follower_leaks: list[tuple[tuple[int, ...], tuple[int, ...]]] = field(
        default_factory=list
    )

    @property
    def ok(self) -> bool:
        return not (
            self.classifier_mismatches or self.move_failures or self.p_follower_leaks
        )

    def summary(self) -> str:
        issues = (
            len(self.classifier_mismatches)
            + len(self.move_failures)
            + len(self.p_follower_leaks)
        )
        return (
            f"checked {self.positions_checked} positions "
            f"(k={self.k}, heaps <= {self.bound}): "
            f"{self.p_count} P, {self.n_count} N, {issues} disagreements"
        )


def exhaustive_agreement(k: int, bound: int, table: GrundyTable | None = None) -> AgreementReport:
    """Sweep every canonical position with heaps <= bound.

    Reports (a) verdict disagreements between the closed-form classifier
    and the retrograde recursion, (b) N-positions where the constructed
    winning move is illegal or fails to land on a classifier-P position,
    and (c) P-positions with a follower the classifier also calls P.
    """
    table = table or GrundyTable(k, bound)
    report = AgreementReport(k=k, bound=bound)
    for heaps in combinations_with_replacement(range(bound + 1), k):
        report.positions_checked += 1
        recursion_p = table.classify(heaps) == "P"
        classifier_p = _is_p_heaps(heaps)
        if recursion_p != classifier_p:
            report.classifier_mismatches.append(
                (heaps, "P" if classifier_p else "N", "P" if recursion_p else "N")
            )
            continue
        if classifier_p:
            report.p_count += 1
            for q in _followers_heaps(heaps):
                if _is_p_heaps(q):
                    report.p_follower_leaks.append((heaps, q))
        else:
            report.n_count += 1
            position = Position(heaps)
            analysis = analyze(position)
            if analysis.winning_move is None:
                report.move_failures.append((heaps, "no move produced"))
                continue
            try:
                result = apply(position, analysis.winning_move)
            except Exception as exc:  # illegal move is a strategy bug
                report.move_failures.append((heaps, f"illegal move: {exc}"))
                continue
            if not _is_p_heaps(result.heaps):
                report.move_failures.append(
                    (heaps, f"move lands on N-position {result.heaps}")
                )
    return report
