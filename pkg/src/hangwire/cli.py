"""Command-line interface.

Exit status: 0 success, 1 verification failure (or aborted search),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from hangwire.catalog import NAMES, catalog
from hangwire.construct import (
    balanced_k1,
    chain_expr,
    chain_updown_expr,
    demaine_split,
    length_table,
    report,
    wastlund_corank2,
)
from hangwire.render import render_svg
from hangwire.search import LongRunRefused, canonical_form, find_minimum, search_length
from hangwire.spec import Convention, Spec, parse_spec, solves
from hangwire.word import format_word, parse_word

METHODS = ("split", "wastlund", "chain", "updown", "balanced")


class UsageError(Exception):
    pass


def _puzzle(text: str, convention: str | None) -> Spec:
    try:
        return parse_spec(text, convention)
    except ValueError as exc:
        raise UsageError(f"--puzzle: {exc}") from None


def _word(text: str, flag: str = "--word"):
    try:
        return parse_word(text)
    except ValueError as exc:
        raise UsageError(f"{flag}: {exc}") from None


def _emit(args, record: dict, text: str) -> None:
    if args.json:
        print(json.dumps(record, sort_keys=True))
    else:
        print(text)


def cmd_construct(args) -> int:
    f = _puzzle(args.puzzle, args.convention)
    k, n = f.k, f.n
    verify = None if args.verify == "none" else args.verify
    if verify == "full" and n > 20:
        raise UsageError("--verify full is limited to 20 nails")
    if n > 64:
        raise UsageError("--puzzle: constructions are limited to 64 nails")
    if args.method == "split":
        if k < 1:
            raise UsageError("--puzzle: split needs k >= 1")
        rep = demaine_split(k, n, verify)
    elif args.method == "wastlund":
        if n & (n - 1) or n < 2 or k != n - 2:
            raise UsageError("--method wastlund needs (n-2)-of-n with n a power of two")
        rep = wastlund_corank2(n, verify)
    elif args.method == "chain":
        if k != n:
            raise UsageError("--method chain needs n-of-n")
        rep = report("chain", chain_expr(n), k, n, verify)
    elif args.method == "updown":
        if k != n - 1 or n < 2:
            raise UsageError("--method updown needs (n-1)-of-n")
        rep = report("updown", chain_updown_expr(n), k, n, verify)
    else:
        if k != 1:
            raise UsageError("--method balanced needs 1-of-n")
        rep = report("balanced", balanced_k1(n), k, n, verify)
    record = rep.to_record()
    record["puzzle"] = f"{k}-of-{n}"
    verdict = "unchecked" if rep.verdict is None else str(rep.verdict)
    _emit(
        args,
        record,
        f"{rep.method} {k}-of-{n}: length {rep.reduced} (unreduced {rep.unreduced}), {verdict}\n{format_word(rep.word)}",
    )
    return 0 if rep.verdict is None or rep.verdict.ok else 1


def _check_one(word, f: Spec, mode: str, args) -> int:
    if mode == "full" and f.n > 20:
        raise UsageError("--mode full is limited to 20 nails")
    try:
        verdict = solves(word, f, mode)
    except ValueError as exc:
        raise UsageError(f"--word: {exc}") from None
    record = {"word": format_word(word), "puzzle": f"{f.k}-of-{f.n}", "mode": mode, "verdict": verdict.to_record()}
    _emit(args, record, str(verdict))
    return 0 if verdict.ok else 1


def cmd_check(args) -> int:
    if args.from_json:
        if args.word is not None:
            raise UsageError("--from-json and --word are mutually exclusive")
        stream = sys.stdin if args.from_json == "-" else open(args.from_json, encoding="utf-8")
        status = 0
        with stream:
            for line in stream:
                if not line.strip():
                    continue
                try:
                    rec = json.loads(line)
                    word = parse_word(rec["word"])
                    f = parse_spec(rec["puzzle"]) if "puzzle" in rec else Spec.threshold(rec["k"], rec["n"])
                except (ValueError, KeyError) as exc:
                    raise UsageError(f"--from-json: bad record: {exc}") from None
                status = max(status, _check_one(word, f, args.mode, args))
        return status
    if args.word is None or args.puzzle is None:
        raise UsageError("check needs --word and --puzzle (or --from-json)")
    return _check_one(_word(args.word), _puzzle(args.puzzle, args.convention), args.mode, args)


def cmd_canon(args) -> int:
    w = _word(args.word)
    if not w:
        raise UsageError("--word: the zero word has no canonical form")
    c = canonical_form(w)
    _emit(args, {"word": format_word(w), "canonical": format_word(c)}, format_word(c))
    return 0


def cmd_search(args) -> int:
    f = _puzzle(args.puzzle, args.convention)
    if (args.exact_len is None) == (args.max_len is None):
        raise UsageError("give exactly one of --exact-len and --max-len")
    if args.shard_id is not None and not 0 <= args.shard_id < args.shards:
        raise UsageError(f"--shard-id must be in 0..{args.shards - 1}")
    if f.n > 6:
        raise UsageError("--puzzle: search is limited to 6 nails")
    kwargs = dict(
        shards=args.shards,
        shard_id=args.shard_id,
        workers=args.workers,
        max_nodes=args.max_nodes,
        allow_long=args.allow_long,
    )
    try:
        if args.exact_len is not None:
            outcomes = [search_length(f, args.exact_len, **kwargs)]
        else:
            outcomes = find_minimum(f, args.max_len, **kwargs).outcomes
    except LongRunRefused as exc:
        raise UsageError(f"{exc} (use --allow-long)") from None
    for o in outcomes:
        record = o.to_record()
        if not args.timing:
            record.pop("seconds")
        lines = [f"{f.k}-of-{f.n} length {o.length}: {len(o.solutions)} canonical solution(s), {o.nodes} nodes"]
        if args.timing:
            lines[0] += f", {o.seconds:.2f} s"
        if o.aborted:
            lines[0] += f" [aborted: {o.reason}]"
        lines.extend(f"  {format_word(w)}" for w in o.solutions)
        _emit(args, record, "\n".join(lines))
    return 1 if outcomes[-1].aborted else 0


def cmd_table(args) -> int:
    if args.k < 1 or args.max_i < 0:
        raise UsageError("--k must be >= 1 and --max-i >= 0")
    for row in length_table(args.k, args.max_i):
        ratio = "" if row.ratio is None else f"{row.ratio:.6f}"
        record = {"k": args.k, "i": row.i, "n": row.n, "length": row.length, "ratio": row.ratio}
        _emit(args, record, f"{row.i}\t{row.n}\t{row.length}\t{ratio}")
    return 0


def cmd_catalog(args) -> int:
    names = [args.name] if args.name else list(NAMES)
    status = 0
    for name in names:
        if name not in NAMES:
            raise UsageError(f"unknown catalog entry {name!r}; known: {', '.join(NAMES)}")
        rep = catalog(name)
        record = rep.to_record()
        _emit(args, record, f"{name}\tunreduced {rep.unreduced}\treduced {rep.reduced}\t{rep.verdict}\t{format_word(rep.word)}")
        if not rep.verdict.ok:
            status = 1
    return status


def cmd_render(args) -> int:
    if (args.word is None) == (args.catalog is None):
        raise UsageError("give exactly one of --word and --catalog")
    if args.catalog is not None:
        if args.catalog not in NAMES:
            raise UsageError(f"--catalog: unknown entry {args.catalog!r}")
        w = catalog(args.catalog, verify=None).word
    else:
        w = _word(args.word)
    try:
        svg = render_svg(w)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.out == "-":
        sys.stdout.write(svg)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hangwire", description="Picture-hanging puzzles as free-group words.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log search progress")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, puzzle=True):
        if puzzle:
            p.add_argument("--convention", choices=[c.value for c in Convention], default=None,
                           help="how to read K in --puzzle when it has no @suffix (default demaine)")
        p.add_argument("--json", action="store_true", help="one JSON record per line")

    p = sub.add_parser("construct", help="build a solution")
    p.add_argument("--puzzle", required=True, help="K-of-N[@demaine|@wastlund]")
    p.add_argument("--method", choices=METHODS, default="split")
    p.add_argument("--verify", choices=("essential", "full", "none"), default="essential")
    common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="check a word against a puzzle")
    p.add_argument("--word")
    p.add_argument("--puzzle")
    p.add_argument("--from-json", metavar="FILE", help="read construct --json records ('-' for stdin)")
    p.add_argument("--mode", choices=("essential", "full"), default="essential")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("canon", help="canonical form under relabel, sign flip, reversal, rotation")
    p.add_argument("--word", required=True)
    common(p, puzzle=False)
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("search", help="exhaustive search for canonical solutions")
    p.add_argument("--puzzle", required=True)
    p.add_argument("--exact-len", type=int)
    p.add_argument("--max-len", type=int)
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--shard-id", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--max-nodes", type=int)
    p.add_argument("--allow-long", action="store_true", help="permit long runs such as 2-of-4 at length 14")
    p.add_argument("--timing", action="store_true", help="report wall-clock seconds (output no longer byte-stable)")
    common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("table", help="unreduced lengths L_k(2^i) of the splitting construction")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-i", type=int, required=True)
    common(p, puzzle=False)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("catalog", help="concrete 2-of-4 solutions")
    p.add_argument("name", nargs="?")
    common(p, puzzle=False)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("render", help="write an SVG wire diagram")
    p.add_argument("--word")
    p.add_argument("--catalog")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_render, json=False)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")
    if getattr(args, "shards", 1) < 1:
        parser.error("--shards must be at least 1")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.exit(2, f"{parser.prog} {args.command}: error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
