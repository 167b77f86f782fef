"""Command-line front end: ``overpartitions count|verify|series|mark|bijection``.

Exit codes: 0 success, 1 a verified identity failed, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from . import verify as verifier
from .bijections import chi, chi_inv, phi, phi_inv, psi, psi_inv
from .core import ClassParams, DomainError, Overpartition, gordon_mark, parse_overpartition
from .enumeration import count_table
from .qseries import (
    W_series, andrews_product_side, andrews_sum_side, overpartition_series, product_side_C, sum_side_F,
    sum_side_G, sum_side_main, sum_side_Q,
)


class UsageError(Exception):
    pass


def _params(args) -> ClassParams:
    return ClassParams(args.k, args.i)


def _dump(obj) -> str:
    return json.dumps(obj)


# -- count ----------------------------------------------------------------------

def cmd_count(args, out) -> int:
    p = _params(args)
    if args.n_max < 0:
        raise UsageError("--n-max must be nonnegative")
    table = count_table(args.cls, p, args.n_max)
    if args.by_length:
        rows = [(m, n, c) for (m, n), c in sorted(table.items(), key=lambda e: (e[0][1], e[0][0])) if c]
        if args.format == "json":
            out.write(_dump({"class": args.cls, "k": p.k, "i": p.i,
                             "counts": [{"m": m, "n": n, "count": c} for m, n, c in rows]}) + "\n")
        else:
            out.write("m\tn\tcount\n")
            out.writelines(f"{m}\t{n}\t{c}\n" for m, n, c in rows)
        return 0
    totals = [sum(c for (m, n_), c in table.items() if n_ == n) for n in range(args.n_max + 1)]
    if args.format == "json":
        out.write(_dump({"class": args.cls, "k": p.k, "i": p.i,
                         "counts": [{"n": n, "count": c} for n, c in enumerate(totals)]}) + "\n")
    else:
        out.write("n\tcount\n")
        out.writelines(f"{n}\t{c}\n" for n, c in enumerate(totals))
    return 0


# -- verify ---------------------------------------------------------------------

def cmd_verify(args, out) -> int:
    if args.n_max < 0 or args.k_max < 2:
        raise UsageError("--n-max must be >= 0 and --k-max >= 2")
    start = time.perf_counter()
    cells = failed = 0
    for cell in verifier.run(args.suite, args.k_max, args.n_max):
        cells += 1
        failed += cell["status"] != "pass"
        out.write(_dump(cell) + "\n")
        out.flush()
    out.write(_dump({"summary": args.suite, "k_max": args.k_max, "n_max": args.n_max, "cells": cells,
                     "failed": failed, "status": "pass" if failed == 0 else "fail"}) + "\n")
    print(f"wall time {time.perf_counter() - start:.2f}s", file=sys.stderr)
    return 0 if failed == 0 else 1


# -- series ---------------------------------------------------------------------

IDENTITIES = ("product_C", "sum_main", "sum_F", "sum_G", "W", "andrews_sum", "andrews_product",
              "sum_Q", "overpartitions")


def cmd_series(args, out) -> int:
    N = args.order
    if N < 0:
        raise UsageError("--order must be nonnegative")
    ident = args.identity
    if ident == "overpartitions":
        s = overpartition_series(N)
    elif ident == "product_C":
        s = product_side_C(_params(args), N)
    elif ident == "andrews_product":
        s = andrews_product_side(_params(args), N)
    elif ident == "sum_Q":
        if args.profile is None:
            raise UsageError("sum_Q needs --profile")
        s = sum_side_Q(tuple(int(v) for v in args.profile.split(",")), _params(args), N)
    else:
        M = N if args.x_order is None else args.x_order
        build = {"sum_main": sum_side_main, "sum_F": sum_side_F, "sum_G": sum_side_G,
                 "andrews_sum": andrews_sum_side, "W": lambda p, M_, N_: W_series(p, M_, N_)}[ident]
        s = build(_params(args), M, N)
        if args.x_equals_one:
            if M < N:
                raise UsageError("--x-equals-one needs --x-order >= --order")
            s = s.at_x_equals_one()
    if args.format == "json":
        out.write(_dump(s.to_json()) + "\n")
    else:
        out.write(s.to_tsv() + "\n")
    return 0


# -- mark -----------------------------------------------------------------------

def _read_overpartition(args, stdin) -> Overpartition:
    if args.input is not None:
        return parse_overpartition(args.input)
    raw = stdin.read()
    try:
        data = json.loads(raw)
    except json.JSONDecodeError:
        return parse_overpartition(raw)
    return _overpartition_from(data)


def _overpartition_from(data) -> Overpartition:
    if isinstance(data, dict):
        for key in ("overpartition", "alpha", "gamma", "mu", "lambda"):
            if key in data:
                return _overpartition_from(data[key])
        return Overpartition.from_json(data)
    if isinstance(data, str):
        return parse_overpartition(data)
    raise ValueError("expected an overpartition as JSON or text")


def cmd_mark(args, out, stdin) -> int:
    lam = _read_overpartition(args, stdin)
    marking = gordon_mark(lam)
    if args.format == "json":
        out.write(_dump(marking.to_json()) + "\n")
    else:
        out.write(marking.grid() + "\n")
    return 0


# -- bijection ------------------------------------------------------------------

def cmd_bijection(args, out, stdin) -> int:
    p = _params(args)
    aux = None
    if args.input is not None:
        lam = parse_overpartition(args.input)
    else:
        raw = stdin.read()
        data = json.loads(raw)
        lam = _overpartition_from(data)
        if isinstance(data, dict):
            for key in ("beta", "delta", "partition"):
                if key in data:
                    aux = [int(v) for v in data[key]]
    if args.aux is not None:
        aux = [int(v) for v in args.aux.replace(",", " ").split()]
    steps: list[dict] = []
    trace = (lambda label, x: steps.append({"step": label, **x.to_json()})) if args.trace else None
    result: dict
    if args.direction == "forward":
        if args.map == "phi":
            alpha, beta = phi(lam, p, trace)
            result = {"alpha": alpha.to_json(), "beta": list(beta.parts)}
        elif args.map == "psi":
            gamma, delta = psi(lam, p, trace)
            result = {"gamma": gamma.to_json(), "delta": list(delta.parts)}
        else:
            result = {"mu": chi(lam, p, trace).to_json()}
    else:
        if args.map == "phi":
            result = {"lambda": phi_inv(lam, aux or [], p, trace).to_json()}
        elif args.map == "psi":
            result = {"alpha": psi_inv(lam, aux or [], p, trace).to_json()}
        else:
            result = {"gamma": chi_inv(lam, p, trace).to_json()}
    if args.trace:
        result["trace"] = steps
    out.write(_dump(result) + "\n")
    return 0


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="overpartitions", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_ki(sp, required=True):
        sp.add_argument("--k", type=int, required=required)
        sp.add_argument("--i", type=int, required=required)

    sp = sub.add_parser("count", help="exact class counts by enumeration")
    sp.add_argument("--class", dest="cls", choices=("D", "C", "B", "F", "G"), required=True)
    add_ki(sp)
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--by-length", action="store_true")
    sp.add_argument("--format", choices=("tsv", "json"), default="tsv")

    sp = sub.add_parser("verify", help="check identities coefficient by coefficient")
    sp.add_argument("--suite", choices=("all",) + verifier.SUITES, default="all")
    sp.add_argument("--k-max", type=int, default=4)
    sp.add_argument("--n-max", type=int, default=12)

    sp = sub.add_parser("series", help="expand a series side")
    sp.add_argument("--identity", choices=IDENTITIES, required=True)
    add_ki(sp, required=False)
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--x-order", type=int)
    sp.add_argument("--x-equals-one", action="store_true")
    sp.add_argument("--profile", help="comma-separated N_1,...,N_{k-1} for sum_Q")
    sp.add_argument("--format", choices=("tsv", "json"), default="json")

    sp = sub.add_parser("mark", help="Gordon marking of an overpartition")
    sp.add_argument("--input", help='text such as "16,13,12,12,10~"; JSON on stdin otherwise')
    sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("bijection", help="run phi, psi or chi")
    sp.add_argument("--map", choices=("phi", "psi", "chi"), required=True)
    sp.add_argument("--direction", choices=("forward", "inverse"), default="forward")
    add_ki(sp)
    sp.add_argument("--input", help="overpartition as text; JSON on stdin otherwise")
    sp.add_argument("--aux", help="beta or delta for the inverse maps, e.g. 6,2,1")
    sp.add_argument("--trace", action="store_true")
    return parser


def main(argv: Sequence[str] | None = None, stdin=None, stdout=None) -> int:
    stdin = stdin or sys.stdin
    out = stdout or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    needs_ki = args.command in ("count", "bijection") or (
        args.command == "series" and args.identity != "overpartitions")
    try:
        if needs_ki and (args.k is None or args.i is None):
            raise UsageError("--k and --i are required")
        if args.command == "count":
            return cmd_count(args, out)
        if args.command == "verify":
            return cmd_verify(args, out)
        if args.command == "series":
            return cmd_series(args, out)
        if args.command == "mark":
            return cmd_mark(args, out, stdin)
        return cmd_bijection(args, out, stdin)
    except (UsageError, DomainError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
