"""Shared JSON field names and conversions for the CLI's machine output
and the HTTP service.

Moves cross the wire in the caller's original heap order; the library
works on canonical (sorted) positions.  ``perm`` below is always the
tuple from :func:`triheap.core.normalize`, mapping canonical index i to
the caller's index perm[i].

Schema (all field names fixed):

* move:      {"type": "subset", "amounts": [per-heap removals]}
             {"type": "diagonal", "t": tokens-removed-from-every-heap}
* derivation: {"n", "j", "L", "case", "m", "t"} (m, t null for subset cases)
* analysis:  {"verdict", "k", "heaps", "canonical", "class_index",
              "winning_move", "derivation", "result"}
"""

from __future__ import annotations

from typing import Any, Sequence

from .core import Position, normalize
from .strategy import Analysis, Derivation, DiagonalMove, Move, SubsetMove, analyze


def move_to_json(move: Move, perm: Sequence[int] | None = None) -> dict[str, Any]:
    """Serialize a move; with ``perm`` the amounts are rewritten from
    canonical indexing to the caller's heap order."""
    if isinstance(move, DiagonalMove):
        return {"type": "diagonal", "t": move.t}
    amounts = list(move.amounts)
    if perm is not None:
        original = [0] * len(amounts)
        for canonical_index, caller_index in enumerate(perm):
            original[caller_index] = amounts[canonical_index]
        amounts = original
    return {"type": "subset", "amounts": amounts}


def move_from_json(obj: Any, k: int) -> Move:
    """Parse a wire move (amounts in the caller's heap order).

    Raises ValueError with a user-facing message on malformed input.
    """
    if not isinstance(obj, dict):
        raise ValueError("move must be an object")
    kind = obj.get("type")
    if kind == "diagonal":
        t = obj.get("t")
        if not isinstance(t, int) or isinstance(t, bool):
            raise ValueError("diagonal move needs an integer 't'")
        return DiagonalMove(t)
    if kind == "subset":
        amounts = obj.get("amounts")
        if (
            not isinstance(amounts, list)
            or len(amounts) != k
            or any(not isinstance(a, int) or isinstance(a, bool) for a in amounts)
        ):
            raise ValueError(f"subset move needs an 'amounts' list of {k} integers")
        return SubsetMove(tuple(amounts))
    raise ValueError("move type must be 'subset' or 'diagonal'")


def move_to_canonical(move: Move, perm: Sequence[int]) -> Move:
    """Rewrite a caller-order subset move into canonical indexing."""
    if isinstance(move, DiagonalMove):
        return move
    return SubsetMove(tuple(move.amounts[caller] for caller in perm))


def derivation_to_json(derivation: Derivation | None) -> dict[str, Any] | None:
    if derivation is None:
        return None
    return {
        "n": derivation.n,
        "j": derivation.j,
        "L": derivation.L,
        "case": derivation.case,
        "m": derivation.m,
        "t": derivation.t,
    }


def apply_raw(heaps: Sequence[int], move: Move) -> list[int]:
    """Apply a caller-order move to caller-order heaps.

    Legality must have been checked already (against the normalized
    position); this is plain coordinate-wise subtraction.
    """
    if isinstance(move, DiagonalMove):
        return [h - move.t for h in heaps]
    return [h - a for h, a in zip(heaps, move.amounts)]


def analysis_to_json(
    heaps: Sequence[int],
    position: Position | None = None,
    perm: Sequence[int] | None = None,
    analysis: Analysis | None = None,
) -> dict[str, Any]:
    """Full analysis record for caller-order ``heaps``."""
    if position is None or perm is None:
        position, perm = normalize(heaps)
    if analysis is None:
        analysis = analyze(position)
    record: dict[str, Any] = {
        "verdict": analysis.verdict,
        "k": position.k,
        "heaps": list(heaps),
        "canonical": list(position.heaps),
        "class_index": analysis.class_index,
        "winning_move": None,
        "derivation": None,
        "result": None,
    }
    if analysis.winning_move is not None:
        move_json = move_to_json(analysis.winning_move, perm)
        record["winning_move"] = move_json
        record["derivation"] = derivation_to_json(analysis.derivation)
        record["result"] = apply_raw(heaps, move_from_json(move_json, position.k))
    return record
