"""Classical two-heap Wythoff game: cold pairs by mex recurrence and by
the golden-ratio Beatty formula.

The k >= 3 game in the rest of this package does not specialize to two
heaps, so the two-heap case is handled here on its own: remove any
positive number of tokens from one heap, or the same positive number
from both.  The losing-to-move pairs are (A_n, B_n) with

    A_n = mex{A_i, B_i : 0 <= i < n},    B_n = A_n + n,

equivalently A_n = floor(n*phi), B_n = floor(n*phi^2) with phi the
golden section.  Floors are computed with exact integer square roots;
double precision gets floor(n*phi) wrong once n is large.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .core import U64_MAX
from .errors import ArithmeticRangeError


@dataclass(frozen=True)
class WythoffPair:
    """The n-th cold pair (A_n, B_n), with B_n = A_n + n."""

    n: int
    a: int
    b: int

    def __post_init__(self):
        if self.b != self.a + self.n:
            raise ValueError("pair gap must equal its index")


def wythoff_pairs_mex(count: int) -> list[WythoffPair]:
    """First ``count`` cold pairs by the mex recurrence."""
    if count < 1:
        raise ValueError("count must be positive")
    pairs: list[WythoffPair] = []
    seen: set[int] = set()
    next_a = 0
    for n in range(count):
        while next_a in seen:
            next_a += 1
        a = next_a
        pairs.append(WythoffPair(n=n, a=a, b=a + n))
        seen.add(a)
        seen.add(a + n)
    return pairs


def _beatty_a(n: int) -> int:
    # floor(n*(1+sqrt5)/2) = (n + floor(sqrt(5 n^2))) // 2, exactly.
    return (n + isqrt(5 * n * n)) // 2


def beatty_pair(n: int) -> WythoffPair:
    """The n-th cold pair from the Beatty floors, exact at any index
    whose pair still fits in 64 bits."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    a = _beatty_a(n)
    b = a + n
    if b > U64_MAX:
        raise ArithmeticRangeError(f"pair {n} exceeds the 64-bit range")
    return WythoffPair(n=n, a=a, b=b)


def wythoff_classify(x: int, y: int) -> str:
    """P/N verdict for the two-heap game at heaps (x, y)."""
    if x < 0 or y < 0:
        raise ValueError("heap sizes must be nonnegative")
    if x > y:
        x, y = y, x
    return "P" if _beatty_a(y - x) == x else "N"


def two_heap_table(bound: int) -> dict[tuple[int, int], str]:
    """Retrograde P/N table for all (x, y) with x <= y <= bound.

    Cross-check only: classifies straight from the move rules with no
    Beatty knowledge.
    """
    table: dict[tuple[int, int], str] = {}
    states = sorted(
        ((x, y) for x in range(bound + 1) for y in range(x, bound + 1)),
        key=lambda s: s[0] + s[1],
    )
    for x, y in states:
        cold = True
        for nx in range(x):  # reduce the smaller heap
            if table[tuple(sorted((nx, y)))] == "P":
                cold = False
                break
        if cold:
            for ny in range(y):  # reduce the larger heap
                if table[tuple(sorted((x, ny)))] == "P":
                    cold = False
                    break
        if cold:
            for t in range(1, x + 1):  # diagonal
                if table[(x - t, y - t)] == "P":
                    cold = False
                    break
        table[(x, y)] = "P" if cold else "N"
    return table
