"""Heap positions and exact triangular-number arithmetic.

The game is played on k >= 3 heaps of tokens.  A move removes a positive
number of tokens from up to k-1 heaps, or the same positive number from
all k heaps; taking the last token wins.

The positions that are lost for the player to move (P-positions) have a
rigid shape: the smallest heap holds a triangular number T_n = n(n+1)/2
and the other k-1 heaps partition (k-1)*T_n + n into parts of size at
least T_n.  This module provides the position type, the triangular
helpers, the P-position test, and enumeration of the class P_n for each
n.

All arithmetic is exact integer arithmetic.  Inputs are confined to the
unsigned 64-bit range at API boundaries; a float sqrt would start
misclassifying triangular indices near 2**53, so the inverse uses
``math.isqrt``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterator, Sequence

from .errors import ArithmeticRangeError

U64_MAX = 2**64 - 1

# Enumeration and follower generation grow combinatorially with the heap
# count; reject absurd k early.
MAX_HEAP_COUNT = 64


def _tri(n: int) -> int:
    return n * (n + 1) // 2


def triangular(n: int) -> int:
    """Return the n-th triangular number n(n+1)/2.

    Raises ArithmeticRangeError if the value does not fit in 64 bits.
    """
    if n < 0:
        raise ValueError("triangular index must be nonnegative")
    value = _tri(n)
    if value > U64_MAX:
        raise ArithmeticRangeError(f"T_{n} exceeds the 64-bit range")
    return value


def triangular_floor_index(m: int) -> int:
    """Return the unique n with T_n <= m < T_(n+1)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    n = (isqrt(8 * m + 1) - 1) // 2
    # isqrt is exact, so the guards below never iterate; they exist to
    # keep the interval contract independent of the sqrt implementation.
    while _tri(n + 1) <= m:
        n += 1
    while n > 0 and _tri(n) > m:
        n -= 1
    return n


def exact_triangular_index(m: int) -> int | None:
    """Return n if m equals T_n, else None."""
    n = triangular_floor_index(m)
    return n if _tri(n) == m else None


@dataclass(frozen=True)
class Position:
    """A game state: k heap sizes in canonical nondecreasing order.

    Construction validates the canonical form.  Use :func:`normalize` to
    build a position from heaps in arbitrary order and keep the
    permutation needed to report moves against the caller's labeling.
    """

    heaps: tuple[int, ...]

    def __post_init__(self):
        heaps = tuple(self.heaps)
        object.__setattr__(self, "heaps", heaps)
        k = len(heaps)
        if k < 3:
            raise ValueError(
                "positions need at least 3 heaps; the two-heap game lives in "
                "the wythoff module"
            )
        if k > MAX_HEAP_COUNT:
            raise ValueError(f"at most {MAX_HEAP_COUNT} heaps supported")
        total = 0
        prev = 0
        for h in heaps:
            if not isinstance(h, int) or isinstance(h, bool):
                raise ValueError("heap sizes must be integers")
            if h < 0:
                raise ValueError("heap sizes must be nonnegative")
            if h > U64_MAX:
                raise ArithmeticRangeError("heap size exceeds the 64-bit range")
            if h < prev:
                raise ValueError(
                    "heaps must be nondecreasing; use normalize() for raw input"
                )
            prev = h
            total += h
        if total > U64_MAX:
            raise ArithmeticRangeError("total token count exceeds the 64-bit range")

    @property
    def k(self) -> int:
        return len(self.heaps)

    def total(self) -> int:
        return sum(self.heaps)

    def is_terminal(self) -> bool:
        return self.heaps[-1] == 0

    def __str__(self) -> str:
        return "(" + ",".join(str(h) for h in self.heaps) + ")"


@dataclass(frozen=True)
class PClass:
    """The class P_n for a given heap count: all P-positions whose
    smallest heap is T_n."""

    n: int
    k: int
    members: tuple[Position, ...]

    def __iter__(self) -> Iterator[Position]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def normalize(raw_heaps: Sequence[int]) -> tuple[Position, tuple[int, ...]]:
    """Sort heaps into canonical order.

    Returns ``(position, perm)`` where ``perm[i]`` is the caller's index
    of canonical heap i.  The sort is stable, so equal heaps keep their
    original relative order and move reports stay predictable.
    """
    raw = list(raw_heaps)
    if len(raw) < 3:
        raise ValueError(
            "fewer than 3 heaps: use the wythoff module for the two-heap game"
        )
    perm = sorted(range(len(raw)), key=lambda i: raw[i])
    position = Position(tuple(raw[i] for i in perm))
    return position, tuple(perm)


def _is_p_heaps(heaps: Sequence[int]) -> bool:
    """P-position test on a canonical (sorted) heap tuple."""
    n = exact_triangular_index(heaps[0])
    if n is None:
        return False
    return sum(heaps[1:]) == (len(heaps) - 1) * _tri(n) + n


def is_p_position(p: Position) -> bool:
    """True iff the player to move loses ``p`` under perfect play.

    Holds exactly when heaps[0] = T_n for an integer n and the remaining
    heaps sum to (k-1)*T_n + n; parts >= T_n is then automatic from the
    canonical sort.
    """
    return _is_p_heaps(p.heaps)


def p_class_index(p: Position) -> int | None:
    """Return n with p in P_n, or None when p is an N-position."""
    if not _is_p_heaps(p.heaps):
        return None
    return exact_triangular_index(p.heaps[0])


def _ascending_parts(total: int, slots: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    """Yield nondecreasing ``slots``-tuples with entries in [lo, hi]
    summing to ``total``, in lexicographic order."""
    if slots == 0:
        if total == 0:
            yield ()
        return
    first = lo
    while first <= hi and first <= total:
        if first * slots > total:
            break
        for rest in _ascending_parts(total - first, slots - 1, first, hi):
            yield (first, *rest)
        first += 1


def enumerate_p_class(n: int, k: int) -> PClass:
    """Enumerate P_n for k heaps, members in lexicographic order.

    Every member starts with T_n; the remaining k-1 heaps run over the
    nondecreasing solutions of m_1 + ... + m_(k-1) = (k-1)*T_n + n with
    T_n <= m_i <= T_n + n.
    """
    if k < 3:
        raise ValueError("the game needs k >= 3 heaps")
    if k > MAX_HEAP_COUNT:
        raise ValueError(f"at most {MAX_HEAP_COUNT} heaps supported")
    if n < 0:
        raise ValueError("class index must be nonnegative")
    tn = triangular(n)
    if k * tn + n > U64_MAX:
        raise ArithmeticRangeError("P-class totals exceed the 64-bit range")
    members = tuple(
        Position((tn, *(tn + x for x in xs)))
        for xs in _ascending_parts(n, k - 1, 0, n)
    )
    return PClass(n=n, k=k, members=members)


def p_position_containing(t: int, k: int) -> Position:
    """Return a P-position that contains a heap of exactly ``t`` tokens.

    With n the triangular floor index of t and j = t - T_n, the returned
    member of P_n has parts T_n (k-3 times), T_n + n - j and T_n + j.
    Heap sizes in [T_n, T_(n+1)) occur in P_n and in no other class, so
    the class index is forced by t alone.
    """
    if t < 0:
        raise ValueError("heap size must be nonnegative")
    if k < 3:
        raise ValueError("the game needs k >= 3 heaps")
    n = triangular_floor_index(t)
    tn = _tri(n)
    j = t - tn
    rest = sorted([tn] * (k - 3) + [tn + n - j, tn + j])
    return Position((tn, *rest))
