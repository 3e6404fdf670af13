"""Command-line front door.

Commands: analyze, enumerate, verify, density, grundy, wythoff, play,
serve.  Exit codes: 0 ok, 1 usage error, 2 verification failure,
3 resource limit exceeded, 4 arithmetic range exceeded.

``--format json-lines`` switches every report to line-delimited JSON
records using the same field names as the HTTP service (see wire.py).
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from contextlib import contextmanager

from . import __version__
from .core import Position, enumerate_p_class, normalize
from .density import density_rows, write_density_csv
from .errors import ArithmeticRangeError, IllegalMoveError, ResourceLimitError
from .oracle import DEFAULT_BOUNDS, FALLBACK_BOUND, GrundyTable, exhaustive_agreement
from .strategy import DiagonalMove, SubsetMove, analyze, engine_move, violated_rule
from .wire import (
    analysis_to_json,
    apply_raw,
    move_from_json,
    move_to_canonical,
    move_to_json,
)
from .wythoff import beatty_pair, wythoff_classify, wythoff_pairs_mex

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2
EXIT_RESOURCE = 3
EXIT_RANGE = 4


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; this tool reserves 2 for
    # verification failures.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@contextmanager
def _out_stream(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _emit(record: dict, stream=None) -> None:
    print(json.dumps(record), file=stream or sys.stdout)


def _heaps_text(heaps) -> str:
    return "(" + ",".join(str(h) for h in heaps) + ")"


def _move_text(move_json: dict) -> str:
    if move_json["type"] == "diagonal":
        return f"diagonal -{move_json['t']}"
    clauses = [
        f"take {a} from heap {i}"
        for i, a in enumerate(move_json["amounts"])
        if a > 0
    ]
    return ", ".join(clauses)


def _derivation_text(derivation: dict) -> str:
    parts = [f"n={derivation['n']}", f"j={derivation['j']}", f"L={derivation['L']}"]
    parts.append(f"case={derivation['case']}")
    if derivation["m"] is not None:
        parts.append(f"m={derivation['m']}")
    if derivation["t"] is not None:
        parts.append(f"t={derivation['t']}")
    return " ".join(parts)


def cmd_analyze(args) -> int:
    if len(args.heaps) < 3:
        print(
            "analyze needs at least 3 heaps; for the two-heap game use "
            "`triheap wythoff --classify X Y`",
            file=sys.stderr,
        )
        return EXIT_USAGE
    record = analysis_to_json(args.heaps)
    if args.format == "json-lines":
        _emit(record)
    elif record["verdict"] == "P":
        print(f"P (n={record['class_index']})")
    else:
        print(
            f"N; move: {_move_text(record['winning_move'])} -> "
            f"{_heaps_text(record['result'])}"
        )
        print(f"derivation: {_derivation_text(record['derivation'])}")
    if args.all_moves:
        from .strategy import all_winning_moves

        position, perm = normalize(args.heaps)
        moves = sorted(
            (move_to_json(move, perm) for move in all_winning_moves(position, args.cap)),
            key=json.dumps,
        )
        for move_json in moves:
            if args.format == "json-lines":
                _emit({"winning_move": move_json})
            else:
                print(f"winning move: {_move_text(move_json)}")
        if args.format == "human":
            print(f"{len(moves)} winning move(s) in total")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    cls = enumerate_p_class(args.n, args.k)
    with _out_stream(args.out) as out:
        for member in cls:
            if args.format == "json-lines":
                _emit({"n": cls.n, "k": cls.k, "heaps": list(member.heaps)}, out)
            else:
                print(str(member), file=out)
    return EXIT_OK


def cmd_verify(args) -> int:
    bound = args.bound
    if bound is None:
        bound = DEFAULT_BOUNDS.get(args.k, FALLBACK_BOUND)
    report = exhaustive_agreement(args.k, bound)
    spot_failures = 0
    spot_checked = 0
    if args.spot_check:
        from .core import is_p_position
        from .strategy import apply as apply_move

        rng = random.Random(args.seed)
        for _ in range(args.spot_check):
            heaps = sorted(rng.randrange(10**9) for _ in range(args.k))
            position = Position(tuple(heaps))
            analysis = analyze(position)
            spot_checked += 1
            if analysis.verdict == "N":
                if not is_p_position(apply_move(position, analysis.winning_move)):
                    spot_failures += 1
    ok = report.ok and spot_failures == 0
    if args.format == "json-lines":
        _emit(
            {
                "k": report.k,
                "bound": report.bound,
                "positions_checked": report.positions_checked,
                "p_count": report.p_count,
                "n_count": report.n_count,
                "classifier_mismatches": len(report.classifier_mismatches),
                "move_failures": len(report.move_failures),
                "p_follower_leaks": len(report.p_follower_leaks),
                "spot_checked": spot_checked,
                "spot_failures": spot_failures,
                "ok": ok,
            }
        )
    else:
        print(report.summary())
        for heaps, classifier, recursion in report.classifier_mismatches[:20]:
            print(f"  mismatch at {heaps}: classifier={classifier} recursion={recursion}")
        for heaps, reason in report.move_failures[:20]:
            print(f"  bad move at {heaps}: {reason}")
        for heaps, follower in report.p_follower_leaks[:20]:
            print(f"  P-position {heaps} has P follower {follower}")
        if spot_checked:
            print(f"spot-checked {spot_checked} random positions, {spot_failures} failures")
    return EXIT_OK if ok else EXIT_VERIFICATION


def cmd_density(args) -> int:
    rows = density_rows(args.k, args.n_max)
    with _out_stream(args.out) as out:
        if args.format == "json-lines":
            for row in rows:
                _emit(
                    {
                        "N": row.N,
                        "k": row.k,
                        "pi_exact": row.pi_exact,
                        "nu_exact": row.nu_exact,
                        "pi_lower": float(row.pi_lower),
                        "pi_upper": float(row.pi_upper),
                        "nu_lower": float(row.nu_lower),
                        "nu_upper": float(row.nu_upper),
                        "ratio": float(row.ratio),
                    },
                    out,
                )
        else:
            write_density_csv(rows, out)
    if args.plot:
        from .plots import save_density_figure

        save_density_figure(rows, args.plot)
    return EXIT_OK


def cmd_grundy(args) -> int:
    bound = args.bound
    if bound is None:
        bound = DEFAULT_BOUNDS.get(args.k, FALLBACK_BOUND)
    table = GrundyTable(args.k, bound)
    with _out_stream(args.out) as out:
        if args.format == "json-lines":
            for heaps in table.positions():
                _emit({"heaps": list(heaps), "g": table.grundy(heaps)}, out)
        else:
            table.write_csv(out)
    if args.plot:
        from .plots import save_grundy_figure

        save_grundy_figure(table, args.plot)
    return EXIT_OK


def cmd_wythoff(args) -> int:
    if args.classify is not None:
        x, y = args.classify
        verdict = wythoff_classify(x, y)
        lo, hi = min(x, y), max(x, y)
        index = hi - lo if verdict == "P" else None
        if args.format == "json-lines":
            _emit({"verdict": verdict, "x": x, "y": y, "pair_index": index})
        elif verdict == "P":
            print(f"P (pair {index})")
        else:
            print("N")
        return EXIT_OK
    pairs = wythoff_pairs_mex(args.pairs)
    with _out_stream(args.out) as out:
        if args.format == "json-lines":
            for pair in pairs:
                _emit({"n": pair.n, "a": pair.a, "b": pair.b}, out)
        else:
            print("n,a,b", file=out)
            for pair in pairs:
                print(f"{pair.n},{pair.a},{pair.b}", file=out)
    if args.plot:
        from .plots import save_wythoff_figure

        save_wythoff_figure(pairs, args.plot)
    return EXIT_OK


_TAKE_CLAUSE = re.compile(r"(\d+)\s+from\s+heap\s+(\d+)")
_DIAGONAL = re.compile(r"^(?:d|diag|diagonal)\s+(\d+)$")


def parse_move_text(text: str, k: int):
    """Parse an interactive move line into a wire move dict.

    Accepted forms: ``diagonal 6`` (or ``d 6``) and ``take N from heap
    I``, with more clauses joined by ``and`` or commas.  Raises
    ValueError otherwise.
    """
    text = text.strip().lower()
    match = _DIAGONAL.match(text)
    if match:
        return {"type": "diagonal", "t": int(match.group(1))}
    clauses = _TAKE_CLAUSE.findall(text) if text.startswith("take") else []
    if not clauses:
        raise ValueError(
            "say e.g. 'take 2 from heap 0', 'take 1 from heap 0 and 3 from "
            "heap 2', or 'diagonal 2'"
        )
    amounts = [0] * k
    for amount, index in clauses:
        i = int(index)
        if i >= k:
            raise ValueError(f"heap {i} does not exist (heaps are 0..{k - 1})")
        amounts[i] += int(amount)
    return {"type": "subset", "amounts": amounts}


def cmd_play(args) -> int:
    if len(args.heaps) < 3:
        print("play needs at least 3 heaps", file=sys.stderr)
        return EXIT_USAGE
    heaps = list(args.heaps)
    k = len(heaps)
    if not any(heaps):
        print("the game is already over (all heaps empty)", file=sys.stderr)
        return EXIT_USAGE
    mover = "engine" if args.engine == "first" else "human"
    print(f"heaps: {heaps}  (heap indices 0..{k - 1}; engine moves {args.engine})")
    while any(heaps):
        position, perm = normalize(heaps)
        if mover == "engine":
            move, _ = engine_move(position)
            move_json = move_to_json(move, perm)
            heaps = apply_raw(heaps, move_from_json(move_json, k))
            print(f"engine: {_move_text(move_json)} -> {heaps}")
        else:
            try:
                line = input("your move> ")
            except EOFError:
                print("\naborted.")
                return EXIT_OK
            if line.strip().lower() in {"q", "quit", "exit"}:
                print("aborted.")
                return EXIT_OK
            try:
                move_json = parse_move_text(line, k)
                move = move_from_json(move_json, k)
            except ValueError as exc:
                print(f"  cannot parse that: {exc}")
                continue
            rule = violated_rule(position, move_to_canonical(move, perm))
            if rule is not None:
                print(f"  illegal move: {rule}")
                continue
            heaps = apply_raw(heaps, move)
            print(f"you: {_move_text(move_json)} -> {heaps}")
        if not any(heaps):
            break
        mover = "human" if mover == "engine" else "engine"
    print("engine wins." if mover == "engine" else "you win.")
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(session_ttl=args.ttl, assets_dir=args.assets)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return EXIT_OK


def make_parser() -> _Parser:
    parser = _Parser(prog="triheap", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=["human", "json-lines"],
        default="human",
        help="output format (default: human)",
    )

    p = sub.add_parser("analyze", parents=[common], help="classify a position")
    p.add_argument("heaps", nargs="+", type=int)
    p.add_argument(
        "--all-moves",
        action="store_true",
        help="also list every winning move (brute force, capped)",
    )
    p.add_argument(
        "--cap",
        type=int,
        default=None,
        help="state cap for --all-moves enumeration",
    )
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("enumerate", parents=[common], help="list the class P_n")
    p.add_argument("--n", type=int, required=True, help="class index")
    p.add_argument("--k", type=int, default=4, help="heap count (default 4)")
    p.add_argument("--out", help="write to this file instead of stdout")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser(
        "verify",
        parents=[common],
        help="exhaustively check the classifier and strategy against the "
        "brute-force recursion",
    )
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--bound", type=int, default=None, help="max heap size")
    p.add_argument(
        "--spot-check",
        type=int,
        default=0,
        metavar="N",
        help="additionally strategy-check N random large positions",
    )
    p.add_argument("--seed", type=int, default=0, help="spot-check RNG seed")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "density", parents=[common], help="P-position density report (CSV)"
    )
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--n-max", type=int, default=30, help="largest class index")
    p.add_argument("--out", help="write CSV to this file instead of stdout")
    p.add_argument("--plot", metavar="FILE", help="also render a figure to FILE")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser(
        "grundy", parents=[common], help="export the grundy table (CSV)"
    )
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--bound", type=int, default=None, help="max heap size")
    p.add_argument("--out", help="write CSV to this file instead of stdout")
    p.add_argument("--plot", metavar="FILE", help="also render a heatmap to FILE")
    p.set_defaults(func=cmd_grundy)

    p = sub.add_parser(
        "wythoff", parents=[common], help="two-heap baseline: cold pairs/classify"
    )
    p.add_argument("--pairs", type=int, default=11, help="emit the first N pairs")
    p.add_argument(
        "--classify", nargs=2, type=int, metavar=("X", "Y"), help="classify (x, y)"
    )
    p.add_argument("--out", help="write pair listing to this file")
    p.add_argument("--plot", metavar="FILE", help="also render the pair scatter")
    p.set_defaults(func=cmd_wythoff)

    p = sub.add_parser("play", parents=[common], help="play against the engine")
    p.add_argument("heaps", nargs="+", type=int)
    p.add_argument(
        "--engine",
        choices=["first", "second"],
        default="second",
        help="which player the engine is (default: second)",
    )
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("serve", parents=[common], help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--ttl", type=float, default=3600.0, help="session TTL seconds")
    p.add_argument("--assets", default=None, help="static web UI directory")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ArithmeticRangeError as exc:
        print(f"arithmetic range: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except IllegalMoveError as exc:
        print(f"illegal move: {exc.rule}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
