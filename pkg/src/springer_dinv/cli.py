"""Command-line front end.

Exit status: 0 on success (or all checks passing), 1 on a verification
mismatch, 2 on invalid input.  Output is deterministic for a given
configuration: JSON keys are sorted and partitions come in reverse-lex order.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence

from . import verify as verifier
from .affine_weyl import PElement
from .dinv import StatCtx, check_admissible, dinv_triple
from .springer import (
    cell_nonempty,
    cell_records,
    frobenius_cell,
    p_to_partition,
    parahoric_cells,
    partition_to_p,
)
from .symfunc import BASES, SymFunc, bigraded_dinv_series, dinv_series
from .tableaux import Tableau, TableauError

FORMATS = ("plain", "json", "csv")


class UsageError(Exception):
    """Invalid configuration; reported on stderr with exit status 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parts(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "0", "-"):
        return ()
    try:
        vals = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if any(v < 0 for v in vals):
        raise argparse.ArgumentTypeError(f"parts must be nonnegative: {text!r}")
    return vals


def _common() -> argparse.ArgumentParser:
    # SUPPRESS lets the flags appear before or after the subcommand
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--n", type=int, default=argparse.SUPPRESS, help="number of rows / strands")
    p.add_argument("--m", type=int, default=argparse.SUPPRESS, help="slope quotient")
    p.add_argument("--b", type=int, default=argparse.SUPPRESS, help="slope remainder, 1 <= b < n")
    p.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    p.add_argument("--out", default=argparse.SUPPRESS, help="write output here instead of stdout")
    p.add_argument("--jobs", type=int, default=argparse.SUPPRESS,
                   help="worker processes (default: available cores)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="springer-dinv", parents=[common],
                     description="dinv statistics, symmetric functions and cell dimensions")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("dinv", parents=[common], help="dinv, reduced dinv and its complement of a tableau")
    p.add_argument("tableau", nargs="?", default="-", help="tableau JSON file, '-' for stdin")

    p = sub.add_parser("dfunc", parents=[common], help="dinv generating function")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--lambda", dest="lam", type=_parts, help="inner shape, e.g. 3,1")
    g.add_argument("--big", action="store_true", help="sum over all shapes, t-graded by corank")
    p.add_argument("--basis", choices=BASES, default="schur")

    p = sub.add_parser("cells", parents=[common], help="nonempty cells with dimensions")
    p.add_argument("--mu", type=_parts, help="also list parahoric cells for this composition of n")
    p.add_argument("--corank", type=int, help="only cells of this corank")

    p = sub.add_parser("frobenius", parents=[common], help="Frobenius series of one cell's preimage")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--lambda", dest="lam", type=_parts, help="inner shape of the cell")
    g.add_argument("--p", dest="p", type=_parts, help="cell parameter a_1,...,a_{n-1}")
    p.add_argument("--basis", choices=BASES, default="schur")

    p = sub.add_parser("verify", parents=[common], help="check identities on a sweep")
    p.add_argument("--statement", default="all",
                   help="one of: " + ", ".join(verifier.STATEMENTS + ["all"]) + " (numeric aliases accepted)")
    p.add_argument("--sweep", action="store_true", help="use the standard sweep of contexts")
    p.add_argument("--max-entry", type=int, help="bound on a_i for lattice statements")
    return parser


# -- helpers -----------------------------------------------------------------


def _ctx(args, required=True) -> StatCtx | None:
    missing = [k for k in ("n", "m", "b") if getattr(args, k, None) is None]
    if missing:
        if not required:
            return None
        raise UsageError("missing " + ", ".join("--" + k for k in missing))
    try:
        return StatCtx(args.n, args.m, args.b)
    except ValueError as exc:
        raise UsageError(f"invalid context: {exc}")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _csv(header: Sequence[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _render_symfunc(f: SymFunc, fmt: str) -> str:
    if fmt == "json":
        return _dump(f.to_json())
    if fmt == "csv":
        return f.to_csv()
    return str(f) + "\n"


def _compact(v) -> str:
    return json.dumps(v, separators=(",", ":"))


# -- subcommands -------------------------------------------------------------


def cmd_dinv(args) -> tuple[str, int]:
    try:
        raw = sys.stdin.read() if args.tableau == "-" else open(args.tableau, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(f"cannot read tableau: {exc}")
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise UsageError(f"tableau is not valid JSON: {exc}")
    if not isinstance(data, dict):
        raise UsageError("tableau JSON must be an object with n, inner, sign, entries")
    if getattr(args, "n", None) is None and "n" in data:
        args.n = int(data["n"])
    ctx = _ctx(args)
    try:
        T = Tableau.from_json(data)
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed tableau JSON: {exc!r}")
    triple = dinv_triple(T, ctx)
    fmt = args.format
    if fmt == "json":
        return _dump(dict(zip(("dinv", "dinv_reduced", "dinv_complement"), triple))), 0
    if fmt == "csv":
        return _csv(("dinv", "dinv_reduced", "dinv_complement"), [triple]), 0
    return "dinv={} dinv'={} dinv''={}\n".format(*triple), 0


def cmd_dfunc(args) -> tuple[str, int]:
    ctx = _ctx(args)
    if args.big:
        f = bigraded_dinv_series(ctx)
    else:
        f = dinv_series(check_admissible(args.lam, ctx), ctx)
    return _render_symfunc(f.to(args.basis), args.format), 0


def cmd_cells(args) -> tuple[str, int]:
    ctx = _ctx(args)
    mu = None
    if args.mu is not None:
        if sum(args.mu) != ctx.n or 0 in args.mu:
            raise UsageError(f"--mu must be a composition of n={ctx.n} into positive parts")
        mu = args.mu
    records = [r for r in cell_records(ctx) if args.corank is None or r.corank == args.corank]
    detail = {r.p: parahoric_cells(r.p, mu, ctx) for r in records} if mu else {}
    fmt = args.format
    if fmt == "json":
        out = []
        for r in records:
            item = r.to_json()
            if mu:
                item["parahoric"] = {"mu": list(mu), "cells": [c.to_json() for c in detail[r.p]]}
            out.append(item)
        return _dump(out), 0
    header = ["p", "lambda", "dim", "corank", "m_lambda"]
    rows = [[_compact(r.p.to_json()), _compact(list(r.lam)), r.dim, r.corank, r.m_lambda] for r in records]
    if fmt == "csv":
        if mu:
            header += ["coset", "tableau", "parahoric_dim"]
            full = []
            for r, row in zip(records, rows):
                full.append(row + ["", "", ""])
                full += [row + [_compact(list(c.coset)), _compact(list(c.tableau.labels)), c.dim]
                         for c in detail[r.p]]
            rows = full
        return _csv(header, rows), 0
    lines = ["\t".join(header)]
    for r, row in zip(records, rows):
        lines.append("\t".join(str(v) for v in row))
        for c in detail.get(r.p, ()):
            lines.append(f"\tcoset={_compact(list(c.coset))}\ttableau={_compact(list(c.tableau.labels))}"
                         f"\tdim={c.dim}")
    return "\n".join(lines) + "\n", 0


def cmd_frobenius(args) -> tuple[str, int]:
    ctx = _ctx(args)
    if args.lam is not None:
        p = partition_to_p(check_admissible(args.lam, ctx), ctx)
    else:
        try:
            p = PElement(ctx.n, args.p)
        except ValueError as exc:
            raise UsageError(str(exc))
        if not cell_nonempty(p, ctx):
            raise UsageError(f"p={list(p.a)} indexes an empty cell")
        p_to_partition(p, ctx)
    return _render_symfunc(frobenius_cell(p, ctx).to(args.basis), args.format), 0


def cmd_verify(args) -> tuple[str, int]:
    try:
        verifier.resolve(args.statement)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.sweep:
        contexts = verifier.sweep_contexts()
    else:
        contexts = [_ctx(args)]
    if args.max_entry is not None and args.max_entry < 0:
        raise UsageError("--max-entry must be nonnegative")
    checks = verifier.run(args.statement, contexts, jobs=args.jobs, max_entry=args.max_entry)
    failed = sum(not c.passed for c in checks)
    status = 1 if failed else 0
    fmt = args.format
    if fmt == "json":
        return _dump([c.to_json() for c in checks]), status
    if fmt == "csv":
        rows = [[c.statement, c.instance, str(c.lhs), str(c.rhs), "PASS" if c.passed else "FAIL"] for c in checks]
        return _csv(("statement", "instance", "lhs", "rhs", "pass"), rows), status
    lines = [c.line() for c in checks]
    lines.append(f"{'FAIL' if failed else 'PASS'}: {len(checks) - failed}/{len(checks)} checks passed")
    return "\n".join(lines) + "\n", status


COMMANDS = {"dinv": cmd_dinv, "dfunc": cmd_dfunc, "cells": cmd_cells,
            "frobenius": cmd_frobenius, "verify": cmd_verify}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        for key, default in (("format", "plain"), ("out", None), ("jobs", os.cpu_count() or 1),
                             ("n", None), ("m", None), ("b", None)):
            if not hasattr(args, key):
                setattr(args, key, default)
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        text, status = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"springer-dinv: error: {exc}", file=sys.stderr)
        return 2
    except (TableauError, ValueError) as exc:
        print(f"springer-dinv: invalid input: {exc}", file=sys.stderr)
        return 2
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"springer-dinv: error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
