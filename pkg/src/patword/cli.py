"""Command-line interface: ``patword {count,series,gf} ...``.

Exit status is 0 on success, 2 on a usage error and 3 when a size guard
(oracle length, transfer-state cap, window width) is exceeded.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import avoid123, avoid1234, genfunc
from .errors import DataError, InputError, InvariantViolation, ResourceLimitError
from .oracle import DEFAULT_GUARD, brute_count, parse_pattern

log = logging.getLogger("patword")

FAMILIES = ("123", "1234", "brute")
EXIT_USAGE = 2
EXIT_RESOURCE = 3


class UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", choices=FAMILIES, required=True)
    common.add_argument("--r", type=int, default=1, help="copies of each letter (default 1)")
    common.add_argument("--k", type=int, default=None,
                        help="length of the pattern 1k(k-1)...2 (required except for brute)")
    common.add_argument("--format", choices=("plain", "json"), default="plain")
    common.add_argument("--patterns", default=None,
                        help="brute family only: comma-separated digit strings, e.g. 123,132")
    common.add_argument("--guard", type=int, default=DEFAULT_GUARD,
                        help="brute family only: longest word the oracle will enumerate")
    common.add_argument("--cache", default=None, metavar="PATH",
                        help="1234 family only: memo file to load before and save after")
    common.add_argument("--jobs", type=int, default=1,
                        help="series only: compute terms in this many processes")
    common.add_argument("--debug-invariants", action="store_true",
                        help="check state bounds on every visited state")

    p = argparse.ArgumentParser(prog="patword", description=(
        "Count words on [n]^r avoiding {123, 1k(k-1)...2} or {1234, 1k(k-1)...2}."))
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", parents=[common], help="count for one alphabet size")
    c.add_argument("--n", type=_nonneg, required=True)

    s = sub.add_parser("series", parents=[common], help="counts for alphabet sizes 0..N")
    s.add_argument("--terms", type=_nonneg, required=True, metavar="N")

    g = sub.add_parser("gf", parents=[common], help="rational generating function")
    g.add_argument("--mode", choices=("rigorous", "conjecture"), default="rigorous")
    g.add_argument("--terms", type=_nonneg, default=20, metavar="N",
                   help="conjecture mode: fit on alphabet sizes 0..N (default 20)")
    return p


def _validate(args: argparse.Namespace) -> None:
    if args.r < 1:
        raise UsageError(f"--r must be at least 1, got {args.r}")
    if args.family == "brute":
        if not args.patterns:
            raise UsageError("--family brute requires --patterns")
        args.pattern_list = [parse_pattern(p) for p in args.patterns.split(",")]
    else:
        if args.patterns:
            raise UsageError("--patterns only applies to --family brute")
        if args.k is None:
            raise UsageError(f"--family {args.family} requires --k")
        if args.k < 3:
            raise UsageError(f"--k must be at least 3, got {args.k}")
    if args.cache and args.family != "1234":
        raise UsageError("--cache only applies to --family 1234")
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")


def _note(args: argparse.Namespace) -> str | None:
    if args.family == "1234" and args.k < 4:
        return f"k={args.k} < 4: the pattern 1k(k-1)...2 is shorter than 1234"
    return None


def _make_engine(family: str, r: int, k: int, debug: bool, cache: str | None = None):
    if family == "123":
        return avoid123.RevKEngine123(r, k, debug)
    engine = avoid1234.RevKEngine1234(r, k, debug)
    if cache and os.path.exists(cache):
        n = engine.load_cache(cache)
        log.info("loaded %d cached states from %s", n, cache)
    return engine


def _brute(n: int, r: int, patterns, guard: int) -> int:
    return brute_count([r] * n, patterns, guard)


def _timed(fn, *a) -> tuple[int, int]:
    t0 = time.perf_counter()
    v = fn(*a)
    return v, int((time.perf_counter() - t0) * 1000)


def _one_term(family: str, n: int, r: int, k: int | None, debug: bool,
              patterns=None, guard: int = DEFAULT_GUARD) -> tuple[int, int]:
    if family == "brute":
        return _timed(_brute, n, r, patterns, guard)
    return _timed(_make_engine(family, r, k, debug).count_words, n)


def _record(args: argparse.Namespace, n: int, count: int, ms: int) -> dict:
    rec = {"family": args.family, "n": n, "r": args.r,
           "k": None if args.family == "brute" else args.k,
           "count": str(count), "elapsed_ms": ms}
    if args.family == "brute":
        rec["patterns"] = args.patterns
    note = _note(args)
    if note:
        rec["note"] = note
    return rec


def _emit(args: argparse.Namespace, rec: dict) -> None:
    if args.format == "json":
        print(json.dumps(rec))
    else:
        fields = [f"{key}={'-' if val is None else val}" for key, val in rec.items() if key != "note"]
        line = " ".join(fields)
        if "note" in rec:
            line += f"  # {rec['note']}"
        print(line)


def _series_counts(args: argparse.Namespace, ns: Sequence[int]) -> list[tuple[int, int]]:
    patterns = getattr(args, "pattern_list", None)
    if args.jobs > 1 and len(ns) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            futs = [pool.submit(_one_term, args.family, n, args.r, args.k,
                                args.debug_invariants, patterns, args.guard) for n in ns]
            return [f.result() for f in futs]
    if args.family == "brute":
        return [_timed(_brute, n, args.r, patterns, args.guard) for n in ns]
    engine = _make_engine(args.family, args.r, args.k, args.debug_invariants, args.cache)
    out = [_timed(engine.count_words, n) for n in ns]
    if args.cache:
        engine.save_cache(args.cache)
    return out


def cmd_count(args: argparse.Namespace) -> None:
    [(count, ms)] = _series_counts(args, [args.n])
    _emit(args, _record(args, args.n, count, ms))


def cmd_series(args: argparse.Namespace) -> None:
    ns = list(range(args.terms + 1))
    for n, (count, ms) in zip(ns, _series_counts(args, ns)):
        _emit(args, _record(args, n, count, ms))


def cmd_gf(args: argparse.Namespace) -> None:
    if args.family == "brute":
        raise UsageError("generating functions need --family 123 or 1234")
    if args.mode == "rigorous":
        if args.family != "123":
            raise UsageError("rigorous mode is only available for --family 123")
        gf = genfunc.derive_gf_123(args.r, args.k)
        status = genfunc.RIGOROUS
    else:
        ns = list(range(args.terms + 1))
        series = [c for c, _ in _series_counts(args, ns)]
        gf = genfunc.conjecture_gf_1234(args.r, args.k, len(series), series)
        status = genfunc.CONJECTURAL
    if args.format == "json":
        print("null" if gf is None else gf.to_json(status))
    elif gf is None:
        print("none")
    else:
        print(f"{gf.to_text()}  [{status}; coefficient of x^n counts alphabet size n]")


COMMANDS = {"count": cmd_count, "series": cmd_series, "gf": cmd_gf}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING, format="patword: %(message)s")
    try:
        _validate(args)
        note = _note(args)
        if note:
            print(f"patword: warning: {note}", file=sys.stderr)
        COMMANDS[args.command](args)
    except (UsageError, InputError, DataError) as exc:
        print(f"patword: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"patword: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InvariantViolation as exc:
        print(f"patword: invariant violated: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
