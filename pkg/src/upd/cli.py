"""Command-line front end.

stdout carries deterministic JSON lines (or plain summary lines for
``oracle-check``); timings and diagnostics go to stderr as JSON objects with a
``kind`` field.

Exit codes: 0 ok, 1 oracle/consistency failure, 2 parse or usage error,
3 unit ideal, 4 cap exceeded, 5 k too small.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from pathlib import Path

from .decomposition import primary_decomposition
from .errors import CapExceeded, KTooSmall, ParseError, UnitIdealError
from .family import Box, FamilySpec, load_family, parse_ideal
from .suites import run_suites
from .theorems import (
    EMPTY_ROW,
    BoundedCertificate,
    battery,
    certify_family,
    scan_uniform_k,
    verify_h0_uniform,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_UNIT = 3
EXIT_CAP = 4
EXIT_K = 5


def _out(obj) -> None:
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _err(kind: str, **fields) -> None:
    sys.stderr.write(json.dumps({"kind": kind, **fields}, separators=(",", ":")) + "\n")


class _Usage(Exception):
    pass


@contextmanager
def _mapper(jobs: int):
    if jobs <= 1:
        yield map
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield lambda fn, items: pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs)))


def _load(args) -> tuple[FamilySpec, Box]:
    spec = load_family(args.family)
    try:
        box = Box.parse(args.box)
    except ValueError as exc:
        raise _Usage(f"--box: {exc}") from None
    if box.t != spec.t:
        raise _Usage(f"--box has {box.t} ranges but the family has {spec.t} parameters")
    return spec, box


def _read_inline(text: str) -> str:
    if text.startswith("@"):
        return Path(text[1:]).read_text()
    return text


# -- commands ----------------------------------------------------------------


def cmd_decompose(args) -> int:
    I = parse_ideal(_read_inline(args.ideal))
    try:
        dec = primary_decomposition(I)
    except UnitIdealError as exc:
        _err("unit_ideal", message=str(exc))
        return EXIT_UNIT
    _out(dec.as_dict())
    return EXIT_OK


def cmd_scan(args) -> int:
    spec, box = _load(args)
    t0 = time.perf_counter()
    try:
        with _mapper(args.jobs) as mapper:
            report = scan_uniform_k(spec, box, args.cap, mapper)
    except CapExceeded as exc:
        _err("cap_exceeded", n=list(exc.n) if exc.n else None, prime=exc.prime, cap=exc.cap, message=str(exc))
        return EXIT_CAP
    for row in report.rows:
        _out(row.as_dict())
    _out(report.aggregate())
    _err("timing", command="scan", ms=round((time.perf_counter() - t0) * 1000, 3))
    return EXIT_OK


def cmd_certify(args) -> int:
    spec, box = _load(args)
    t0 = time.perf_counter()
    with _mapper(args.jobs) as mapper:
        results = certify_family(spec, box, args.k, mapper)
    first_bad = None
    passed = 0
    for n, I, res in results:
        if isinstance(res, BoundedCertificate):
            row = res.as_dict()
            row["status"] = "pass" if res.checks.all_ok else "FAIL"
            passed += res.checks.all_ok
            if not res.checks.all_ok and first_bad is None:
                first_bad = (n, "certificate check failed")
        elif res == EMPTY_ROW:
            row = {"n": list(n), "ideal": I.rendered_gens(), "k": args.k, "status": EMPTY_ROW}
        else:
            row = {"n": list(n), "ideal": I.rendered_gens(), "k": args.k, "status": "KTooSmall", "reason": res.reason}
            if first_bad is None:
                first_bad = (n, res.reason)
        _out(row)
    _out({"aggregate": True, "k": args.k, "passed": passed, "points": len(results),
          "all_pass": first_bad is None, "guarantee": spec.mode.guarantee})
    _err("timing", command="certify", ms=round((time.perf_counter() - t0) * 1000, 3))
    if first_bad is not None:
        _err("k_too_small", n=list(first_bad[0]), k=args.k, message=first_bad[1])
        return EXIT_K
    return EXIT_OK


def cmd_h0(args) -> int:
    spec, box = _load(args)
    if args.battery:
        tests = battery(spec.ctx, random.Random(args.seed))
    elif args.ideal:
        tests = [parse_ideal(_read_inline(args.ideal), spec.ctx)]
        if tests[0].is_zero():
            raise _Usage("--ideal must be non-zero")
    else:
        raise _Usage("h0 needs --ideal or --battery")
    t0 = time.perf_counter()
    try:
        with _mapper(args.jobs) as mapper:
            report = verify_h0_uniform(spec, box, tests, args.cap, mapper)
    except CapExceeded as exc:
        _err("cap_exceeded", n=list(exc.n) if exc.n else None, prime=exc.prime, cap=exc.cap, message=str(exc))
        return EXIT_CAP
    for row in report.rows:
        _out(row.as_dict())
    _out(report.aggregate())
    _err("timing", command="h0", ms=round((time.perf_counter() - t0) * 1000, 3))
    if not (report.colon_ok and report.components_ok):
        _err("consistency_failure", message="colon or components cross-check failed")
        return EXIT_FAIL
    return EXIT_OK


def cmd_oracle_check(args) -> int:
    summary = run_suites(args.seed, args.cases)
    for line in summary.lines():
        sys.stdout.write(line + "\n")
    for f in summary.failures:
        _out(f.as_dict())
    return EXIT_OK if summary.ok else EXIT_FAIL


# -- parser ------------------------------------------------------------------


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("UPD_JOBS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="upd", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decompose", help="primary decomposition of one ideal")
    d.add_argument("--ideal", required=True, help='JSON like {"vars":["x","y"],"generators":[{"x":2}]} or @file')
    d.set_defaults(fn=cmd_decompose)

    def family_cmd(name, fn, help_):
        c = sub.add_parser(name, help=help_)
        c.add_argument("--family", required=True, help="path to a family JSON file")
        c.add_argument("--box", required=True, help="a..b[,c..d]..., one inclusive range per parameter")
        c.add_argument("--jobs", type=_positive, default=_default_jobs(), help="worker processes (env UPD_JOBS)")
        c.set_defaults(fn=fn)
        return c

    s = family_cmd("scan", cmd_scan, "per-n k_min and the uniform k")
    s.add_argument("--cap", type=_positive, default=None, help="search cap (default: 4 + summed max exponents)")

    c = family_cmd("certify", cmd_certify, "bounded primary decompositions with certificates")
    c.add_argument("--k", type=_positive, required=True)

    h = family_cmd("h0", cmd_h0, "uniform index for H^0 over test ideals")
    h.add_argument("--ideal", help="test ideal J as inline JSON (vars may be omitted) or @file")
    h.add_argument("--battery", action="store_true", help="all squarefree primes plus 25 seeded random ideals")
    h.add_argument("--seed", type=int, default=0)
    h.add_argument("--cap", type=_positive, default=None)

    o = sub.add_parser("oracle-check", help="randomized invariant suites against the staircase oracle")
    o.add_argument("--seed", type=int, default=0)
    o.add_argument("--cases", type=_positive, default=100)
    o.set_defaults(fn=cmd_oracle_check)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        _err("parse_error", line=exc.line, column=exc.column, message=exc.message)
        return EXIT_PARSE
    except (_Usage, OSError) as exc:
        _err("usage_error", message=str(exc))
        return EXIT_PARSE
    except KTooSmall as exc:
        _err("k_too_small", n=list(exc.n) if exc.n else None, k=exc.k, message=exc.reason)
        return EXIT_K


if __name__ == "__main__":
    sys.exit(main())
