"""Command-line front end.

Usage::

    deltak dims --k 0 --s-max 3 --d-max 12
    deltak ctable --s-max 4 --d-max 20
    deltak generators --k 1 --s-max 2 --d-max 10 --format json
    deltak certify --k 1 --s-max 3 --d-max 14 --out report.json
    deltak verify --suite ker-eq-im --s-max 4 --d-max 16
    deltak sq "[2,2]" 1
    deltak matrix 2 6 1

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from dataclasses import dataclass
from typing import List, Optional

from . import annihilated
from .algebra import ParseError, format_element, parse_element
from .annihilated import CACHE_ENV, BasisCache, delta_basis
from .checks import SUITES, run_suites
from .delta0 import c_table, enumerate_sigma, sigma
from .freeness import certify_free, minimal_generators
from .steenrod import sq, sq_matrix

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

log = logging.getLogger("deltak")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    k: int = 0
    s_max: int = 3
    d_max: int = 12
    fmt: str = "csv"
    cache_dir: Optional[str] = None
    out: Optional[str] = None
    verbosity: int = 0

    def validate(self) -> None:
        if self.k < 0 or self.s_max < 0 or self.d_max < 0:
            raise UsageError("--k, --s-max and --d-max must be nonnegative")
        if self.fmt not in ("csv", "json"):
            raise UsageError(f"unknown format {self.fmt!r}")


def _table_csv(table, s_max: int, d_max: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["s"] + list(range(d_max + 1)))
    for s in range(s_max + 1):
        w.writerow([s] + [table[s, d] for d in range(d_max + 1)])
    return buf.getvalue()


def _table_json(table, cfg: RunConfig, key: str) -> str:
    doc = {
        "k": cfg.k,
        "bounds": {"s_max": cfg.s_max, "d_max": cfg.d_max},
        key: [[table[s, d] for d in range(cfg.d_max + 1)] for s in range(cfg.s_max + 1)],
    }
    return json.dumps(doc, indent=2) + "\n"


def _emit(text: str, cfg: RunConfig) -> None:
    if cfg.out:
        try:
            with open(cfg.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {cfg.out}: {exc}") from exc
    else:
        sys.stdout.write(text)


def cmd_dims(cfg: RunConfig) -> int:
    table = {
        (s, d): delta_basis(cfg.k, s, d).dim
        for s in range(cfg.s_max + 1)
        for d in range(cfg.d_max + 1)
    }
    if cfg.fmt == "csv":
        _emit(_table_csv(table, cfg.s_max, cfg.d_max), cfg)
    else:
        _emit(_table_json(table, cfg, "dims"), cfg)
    return EXIT_OK


def cmd_ctable(cfg: RunConfig) -> int:
    table = c_table(cfg.s_max, cfg.d_max)
    if cfg.fmt == "csv":
        _emit(_table_csv(table, cfg.s_max, cfg.d_max), cfg)
    else:
        _emit(_table_json(table, cfg, "c"), cfg)
    return EXIT_OK


def _generator_rows(cfg: RunConfig) -> List[dict]:
    rows = []
    if cfg.k == 0:
        for s in range(1, cfg.s_max + 1):
            for d in range(cfg.d_max + 1):
                for ms in enumerate_sigma(s, d):
                    label = "sigma(" + ",".join(map(str, ms)) + ")"
                    rows.append({"s": s, "d": d, "generator": label, "element": format_element(sigma(ms))})
        return rows
    table = minimal_generators(cfg.k, cfg.s_max, cfg.d_max)
    for (s, d), cell in sorted(table.cells.items()):
        for i, rep in enumerate(cell.representatives):
            rows.append({"s": s, "d": d, "generator": f"g{s}_{d}_{i}", "element": format_element(rep)})
    return rows


def cmd_generators(cfg: RunConfig) -> int:
    rows = _generator_rows(cfg)
    if cfg.fmt == "json":
        _emit(json.dumps({"k": cfg.k, "generators": rows}, indent=2) + "\n", cfg)
        return EXIT_OK
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=["s", "d", "generator", "element"], lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    _emit(buf.getvalue(), cfg)
    return EXIT_OK


def cmd_certify(cfg: RunConfig) -> int:
    report = certify_free(cfg.k, cfg.s_max, cfg.d_max)
    if cfg.out:
        _emit(report.to_json() + "\n", cfg)
    elif cfg.fmt == "json":
        sys.stdout.write(report.to_json() + "\n")
    bounds = f"k={cfg.k} s<={cfg.s_max} d<={cfg.d_max}"
    bad = report.first_failure()
    if bad is None:
        print(f"PASS certify {bounds}: {len(report.cells)} cells, f == dim everywhere")
        return EXIT_OK
    print(
        f"FAIL certify {bounds}: first failing cell (s,d)=({bad.s},{bad.d}) "
        f"dim={bad.dim} f={bad.f} g={bad.g} dec={bad.dec}"
    )
    return EXIT_FAIL


def cmd_verify(cfg: RunConfig, suites: List[str]) -> int:
    names = suites or list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s): {', '.join(unknown)}; known: {', '.join(SUITES)}")
    results = run_suites(names, cfg.s_max, cfg.d_max)
    lines = "".join(r.line() + "\n" for r in results)
    if cfg.out:
        _emit(lines, cfg)
    sys.stdout.write(lines)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def cmd_sq(text: str, k: int) -> int:
    if k < 0:
        raise UsageError("square index must be nonnegative")
    try:
        a = parse_element(text)
    except ParseError as exc:
        raise UsageError(f"cannot parse element: {exc}") from exc
    print(format_element(sq(a, k)))
    return EXIT_OK


def cmd_matrix(cfg: RunConfig, s: int, d: int, k: int) -> int:
    if min(s, d) < 0 or k < 1:
        raise UsageError("need s, d >= 0 and k >= 1")
    _emit(sq_matrix(s, d, k).to_csv(), cfg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int, default=0, help="level: kernels of Sq^1, ..., Sq^(2^k)")
    common.add_argument("--s-max", type=int, default=3)
    common.add_argument("--d-max", type=int, default=12)
    common.add_argument("--format", dest="fmt", choices=["csv", "json"], default="csv")
    common.add_argument("--cache-dir", default=None, help=f"basis cache directory (default: ${CACHE_ENV})")
    common.add_argument("--out", default=None, help="write output to this file")
    common.add_argument("-v", "--verbose", action="count", default=0)

    p = argparse.ArgumentParser(prog="deltak", description="Partially annihilated subalgebras of the free algebra on g_1, g_2, ...")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("dims", parents=[common], help="dimension table of Delta(k)")
    sub.add_parser("ctable", parents=[common], help="ker Sq^1 dimensions from the recurrence")
    sub.add_parser("generators", parents=[common], help="list generators")
    sub.add_parser("certify", parents=[common], help="finite-range freeness certificate")
    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("--suite", action="append", default=[], help=f"one of: {', '.join(SUITES)} (repeatable; default all)")
    q = sub.add_parser("sq", parents=[common], help="apply Sq^k to an element")
    q.add_argument("element")
    q.add_argument("sqk", type=int, metavar="K")
    m = sub.add_parser("matrix", parents=[common], help="dump the matrix of Sq^K on bidegree (S, D) as CSV")
    m.add_argument("s", type=int, metavar="S")
    m.add_argument("d", type=int, metavar="D")
    m.add_argument("sqk", type=int, metavar="K")
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        k=args.k,
        s_max=args.s_max,
        d_max=args.d_max,
        fmt=args.fmt,
        cache_dir=args.cache_dir,
        out=args.out,
        verbosity=args.verbose,
    )
    logging.basicConfig(level=logging.WARNING - 10 * min(cfg.verbosity, 2), format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg.validate()
        cache_dir = cfg.cache_dir if cfg.cache_dir is not None else os.environ.get(CACHE_ENV)
        if cache_dir:
            try:
                annihilated.set_default_cache(BasisCache(cache_dir))
            except OSError as exc:
                raise UsageError(f"cannot use cache directory {cache_dir}: {exc}") from exc
        elif annihilated.default_cache().directory is not None:
            annihilated.set_default_cache(BasisCache())
        if cfg.command == "dims":
            return cmd_dims(cfg)
        if cfg.command == "ctable":
            return cmd_ctable(cfg)
        if cfg.command == "generators":
            return cmd_generators(cfg)
        if cfg.command == "certify":
            return cmd_certify(cfg)
        if cfg.command == "verify":
            return cmd_verify(cfg, args.suite)
        if cfg.command == "sq":
            return cmd_sq(args.element, args.sqk)
        if cfg.command == "matrix":
            return cmd_matrix(cfg, args.s, args.d, args.sqk)
    except UsageError as exc:
        print(f"deltak: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    raise AssertionError(f"unhandled command {cfg.command}")


if __name__ == "__main__":
    sys.exit(main())
