"""Legal moves, follower generation, and the constructive winning move.

Move types:

* subset move: remove positive amounts from at most k-1 heaps;
* diagonal move: remove the same positive amount from every heap.

``analyze`` classifies a position and, for N-positions, constructs a
winning move in O(k) integer operations: the target class is read off
the smallest heap's triangular decomposition, after which either a
subset reduction trims the surplus or a diagonal drops the whole
position into a lower class.  No search is involved, so the cost does
not depend on the token counts beyond big-integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import Position, _is_p_heaps, _tri, triangular_floor_index
from .errors import IllegalMoveError, ResourceLimitError

# followers() materializes candidate states before deduplication; the
# cap keeps accidental calls on large positions from consuming the
# machine.  The oracle only ever needs small positions.
DEFAULT_FOLLOWER_CAP = 2_000_000


@dataclass(frozen=True)
class SubsetMove:
    """Remove ``amounts[i]`` tokens from heap i (canonical indexing).

    At least one amount is positive and at most k-1 are, and no amount
    exceeds its heap.
    """

    amounts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "amounts", tuple(self.amounts))


@dataclass(frozen=True)
class DiagonalMove:
    """Remove ``t`` tokens from every heap (t >= 1, t <= smallest heap)."""

    t: int


Move = SubsetMove | DiagonalMove


@dataclass(frozen=True)
class Derivation:
    """Scalars behind an N-verdict's winning move.

    n is the triangular floor index of the smallest heap, j the offset
    above T_n, L the sum of the other heaps, ``case`` the construction
    used.  For diagonal moves, m is the target class and t the amount
    removed from every heap (t = heaps[0] - T_m).
    """

    n: int
    j: int
    L: int
    case: str
    m: int | None = None
    t: int | None = None


@dataclass(frozen=True)
class Analysis:
    """Verdict plus, for N-positions, a winning move and its derivation."""

    verdict: str  # "P" or "N"
    class_index: int | None = None
    winning_move: Move | None = None
    derivation: Derivation | None = None


CASE_TRIM_REST = "trim_rest"
CASE_DIAGONAL = "diagonal"
CASE_RESTORE_MIN = "restore_min"
CASE_REANCHOR = "reanchor"


def violated_rule(p: Position, mv: Move) -> str | None:
    """Return the violated rule's description, or None for a legal move."""
    k = p.k
    if isinstance(mv, DiagonalMove):
        if mv.t < 1:
            return "a diagonal move must remove at least one token"
        if mv.t > p.heaps[0]:
            return "a diagonal move cannot remove more than the smallest heap"
        return None
    if isinstance(mv, SubsetMove):
        if len(mv.amounts) != k:
            return "a subset move needs one amount per heap"
        positive = 0
        for amount, heap in zip(mv.amounts, p.heaps):
            if amount < 0:
                return "removal amounts must be nonnegative"
            if amount > heap:
                return "cannot remove more tokens than a heap holds"
            if amount > 0:
                positive += 1
        if positive == 0:
            return "a move must remove at least one token"
        if positive > k - 1:
            return f"a subset move may touch at most k-1 heaps (k-1={k - 1})"
        return None
    return "unknown move type"


def is_legal(p: Position, mv: Move) -> bool:
    return violated_rule(p, mv) is None


def apply(p: Position, mv: Move) -> Position:
    """Apply a legal move and return the re-normalized position."""
    rule = violated_rule(p, mv)
    if rule is not None:
        raise IllegalMoveError(rule)
    if isinstance(mv, DiagonalMove):
        heaps = tuple(h - mv.t for h in p.heaps)
    else:
        heaps = tuple(sorted(h - a for h, a in zip(p.heaps, mv.amounts)))
    return Position(heaps)


def _follower_space(p: Position) -> int:
    size = 1
    for h in p.heaps:
        size *= h + 1
    return size + p.heaps[0]


def _followers_heaps(heaps: tuple[int, ...]) -> set[tuple[int, ...]]:
    """All positions reachable in one move, as canonical tuples.

    Subset results are exactly the componentwise-dominated tuples that
    leave at least one heap untouched; diagonals handle the rest.
    """
    out: set[tuple[int, ...]] = set()
    for q in product(*(range(h + 1) for h in heaps)):
        if q == heaps:
            continue
        if all(qi < hi for qi, hi in zip(q, heaps)):
            continue  # reduces all k heaps: only legal as a diagonal
        out.add(tuple(sorted(q)))
    for t in range(1, heaps[0] + 1):
        out.add(tuple(h - t for h in heaps))
    return out


def followers(p: Position, cap: int | None = None) -> set[Position]:
    """The exact follower set of ``p``, deduplicated after normalization."""
    cap = DEFAULT_FOLLOWER_CAP if cap is None else cap
    if _follower_space(p) > cap:
        raise ResourceLimitError(
            f"follower generation for {p} exceeds the cap of {cap} states"
        )
    return {Position(q) for q in _followers_heaps(p.heaps)}


def _greedy_trim(
    heaps: tuple[int, ...], floor: int, excess: int, start: int
) -> list[int]:
    """Removal amounts taking ``excess`` tokens from heaps[start:],
    largest heap first, never cutting a heap below ``floor``."""
    amounts = [0] * len(heaps)
    remaining = excess
    for i in range(len(heaps) - 1, start - 1, -1):
        if remaining == 0:
            break
        cut = min(remaining, heaps[i] - floor)
        amounts[i] = cut
        remaining -= cut
    assert remaining == 0, "trim target infeasible; classification is broken"
    return amounts


def analyze(p: Position) -> Analysis:
    """Classify ``p`` and construct a winning move when one exists.

    P-positions return the class index and no move.  For N-positions the
    returned move is legal and its result satisfies is_p_position; the
    choice is deterministic (subset trims cut the largest heaps first,
    and at the boundary where both a subset and a diagonal move win, the
    diagonal is preferred as it ends the game sooner).
    """
    heaps = p.heaps
    k = p.k
    m0 = heaps[0]
    n = triangular_floor_index(m0)
    tn = _tri(n)
    j = m0 - tn
    L = sum(heaps[1:])
    target = (k - 1) * tn + n

    if j == 0 and L == target:
        return Analysis(verdict="P", class_index=n)

    if j == 0:
        if L > target:
            amounts = _greedy_trim(heaps, floor=tn, excess=L - target, start=1)
            move: Move = SubsetMove(tuple(amounts))
            derivation = Derivation(n=n, j=j, L=L, case=CASE_TRIM_REST)
        else:
            # L - (k-1)*T_n lands in [0, n-1]; drop diagonally into that class.
            m = L - (k - 1) * m0
            t = m0 - _tri(m)
            move = DiagonalMove(t)
            derivation = Derivation(n=n, j=j, L=L, case=CASE_DIAGONAL, m=m, t=t)
    elif L > target + j:
        if heaps[1] < _tri(n + 1):
            # Bring the smallest heap back to T_n; heap 1 stays a valid
            # part, so trimming heaps 2.. to a rest-sum of target wins.
            amounts = _greedy_trim(heaps, floor=tn, excess=L - target, start=2)
            amounts[0] = j
            move = SubsetMove(tuple(amounts))
            derivation = Derivation(n=n, j=j, L=L, case=CASE_RESTORE_MIN)
        else:
            # Heap 1 is too large to be a part of the target class; cut
            # it down to T_n as the new smallest heap and keep heap 0.
            excess = (m0 + L - heaps[1]) - target
            amounts = _greedy_trim(heaps, floor=tn, excess=excess, start=2)
            amounts[1] = heaps[1] - tn
            move = SubsetMove(tuple(amounts))
            derivation = Derivation(n=n, j=j, L=L, case=CASE_REANCHOR)
    else:
        m = L - (k - 1) * m0
        t = m0 - _tri(m)
        move = DiagonalMove(t)
        derivation = Derivation(n=n, j=j, L=L, case=CASE_DIAGONAL, m=m, t=t)

    if isinstance(move, SubsetMove):
        assert sum(1 for a in move.amounts if a > 0) <= k - 1
    return Analysis(verdict="N", winning_move=move, derivation=derivation)


def all_winning_moves(p: Position, cap: int | None = None) -> set[Move]:
    """Every legal move landing on a P-position, by brute-force scan.

    Empty exactly when ``p`` itself is a P-position.  Raises
    ResourceLimitError when the move space exceeds ``cap``.
    """
    cap = DEFAULT_FOLLOWER_CAP if cap is None else cap
    if _follower_space(p) > cap:
        raise ResourceLimitError(
            f"move enumeration for {p} exceeds the cap of {cap} states"
        )
    k = p.k
    winning: set[Move] = set()
    for q in product(*(range(h + 1) for h in p.heaps)):
        positive = sum(1 for qi, hi in zip(q, p.heaps) if qi < hi)
        if positive == 0 or positive > k - 1:
            continue
        if _is_p_heaps(tuple(sorted(q))):
            winning.add(SubsetMove(tuple(h - qi for h, qi in zip(p.heaps, q))))
    for t in range(1, p.heaps[0] + 1):
        if _is_p_heaps(tuple(h - t for h in p.heaps)):
            winning.add(DiagonalMove(t))
    return winning


def engine_move(p: Position) -> tuple[Move, Derivation | None]:
    """The engine's reply at ``p``.

    From an N-position this is the winning move from :func:`analyze`.
    From a P-position no winning move exists; the engine stalls by
    removing a single token from the largest heap (the last canonical
    heap), a deterministic policy documented as arbitrary.
    """
    if p.is_terminal():
        raise ValueError("the game is over; no move to make")
    analysis = analyze(p)
    if analysis.verdict == "N":
        assert analysis.winning_move is not None
        return analysis.winning_move, analysis.derivation
    amounts = [0] * p.k
    amounts[-1] = 1
    return SubsetMove(tuple(amounts)), None
