"""Command line interface.

Subcommands: table, m, m0, enumerate, square, hilbert, gram, check,
conjecture.  Range flags accept a single value (--k 2) or an inclusive
range (--k 1..9).  Exit codes: 0 success, 1 verification failure or
budget exceeded, 2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import tables
from .errors import BudgetExceededError, InvalidInputError
from .macaulay import HilbertFunction
from .monomial import MonomialOrder, dim_component
from .qlinalg import (
    RationalSubspace,
    hilbert_function_rational,
    rational_subspace_from_json,
    square_rational,
)
from .search import (
    compute_m,
    compute_m0_monomial,
    table_cell,
)
from .stable import enumerate_strongly_stable
from .subspace import (
    MonomialSubspace,
    ideal_hilbert_function,
    square,
    subspace_from_json,
    subspace_from_text,
)
from .gram import face_gap, nonsingular_face_bound, singular_face_dim
from .suites import SUITES, SuiteOptions, conjecture_scan, run_suites


def _parse_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            a, b = int(lo), int(hi)
            if b < a:
                raise ValueError
            return list(range(a, b + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected an integer or a..b range, got {text!r}"
        ) from None


def _parse_order(text: str) -> MonomialOrder:
    try:
        return MonomialOrder.parse(text)
    except InvalidInputError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="stablesq",
        description="Exact computations with squares of subspaces of forms.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def add_common(p, *, ranges=("n", "d", "k"), budget=True, fmt=True):
        for name in ranges:
            p.add_argument(f"--{name}", type=_parse_range, required=True)
        if budget:
            p.add_argument("--budget", type=int, default=None)
        if fmt:
            p.add_argument(
                "--format", choices=("text", "csv", "json"), default="text"
            )

    p = sub.add_parser("table", help="recompute a grid of m(n, d, k) values")
    add_common(p)
    p.add_argument("--diff-paper", action="store_true",
                   help="compare against the bundled reference table")
    p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("m", help="max codim U^2 over strongly stable subspaces")
    add_common(p)
    p.add_argument("--witnesses", action="store_true")

    p = sub.add_parser("m0", help="max codim U^2 over base point free monomial subspaces")
    add_common(p)
    p.add_argument("--witnesses", action="store_true")

    p = sub.add_parser("enumerate", help="list strongly stable subspaces")
    add_common(p)
    p.add_argument("--order", type=_parse_order, default=MonomialOrder.lex())

    p = sub.add_parser("square", help="square a subspace read from a file")
    p.add_argument("file")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--order", type=_parse_order, default=MonomialOrder.lex())
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")

    p = sub.add_parser("hilbert", help="Hilbert function of the quotient by a subspace")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")

    p = sub.add_parser("gram", help="Gram spectrahedron face dimension bounds")
    add_common(p)

    p = sub.add_parser("check", help="run named verification suites")
    p.add_argument("--suite", action="append", default=None,
                   help=f"one of: {', '.join(sorted(SUITES))} (repeatable; default all)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--budget", type=int, default=None)

    p = sub.add_parser("conjecture", help="scan restrictions of power-free spans")
    add_common(p, budget=False, fmt=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=4)

    return top


# ---------------------------------------------------------------------------
# table


def _cell_worker(cell):
    n, d, k, budget = cell
    return (n, d, k), table_cell(n, d, k, budget=budget)


def _compute_cells(ns, ds, ks, budget, threads):
    jobs = [(n, d, k, budget) for n in ns for d in ds for k in ks]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return dict(pool.map(_cell_worker, jobs, chunksize=4))
    return dict(map(_cell_worker, jobs))


def _cmd_table(args) -> int:
    cells = _compute_cells(args.n, args.d, args.k, args.budget, args.threads)
    mismatches = []
    compared = 0
    if args.diff_paper:
        for (n, d, k), value in cells.items():
            if tables.covered(n, d, k):
                compared += 1
                expected = tables.published_value(n, d, k)
                if value != expected:
                    mismatches.append(((n, d, k), value, expected))

    if args.format == "json":
        payload = {
            "cells": [
                {"n": n, "d": d, "k": k, "value": v}
                for (n, d, k), v in sorted(cells.items())
            ]
        }
        if args.diff_paper:
            payload["compared"] = compared
            payload["mismatches"] = [
                {"n": n, "d": d, "k": k, "value": v, "published": e}
                for (n, d, k), v, e in mismatches
            ]
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        out = csv.writer(sys.stdout)
        header = ["n", "d", "k", "value"]
        if args.diff_paper:
            header += ["published", "match"]
        out.writerow(header)
        for (n, d, k), v in sorted(cells.items()):
            row = [n, d, k, "" if v is None else v]
            if args.diff_paper:
                if tables.covered(n, d, k):
                    e = tables.published_value(n, d, k)
                    row += ["" if e is None else e, v == e]
                else:
                    row += ["", ""]
            out.writerow(row)
    else:
        flagged = {cell for cell, _, _ in mismatches}
        for n in args.n:
            print(f"m(n={n}, d, k), rows d = {args.d[0]}..{args.d[-1]}:")
            print("      " + "".join(f"k={k:<5}" for k in args.k))
            for d in args.d:
                row = []
                for k in args.k:
                    v = cells[(n, d, k)]
                    mark = "*" if (n, d, k) in flagged else ""
                    row.append("-" if v is None else f"{v}{mark}")
                print(f"d={d:<4}" + "".join(f"{c:<7}" for c in row))
            print()
        if args.diff_paper:
            if mismatches:
                print(f"{len(mismatches)} of {compared} compared cells disagree:")
                for (n, d, k), v, e in mismatches:
                    print(f"  (n={n}, d={d}, k={k}): computed {v}, reference {e}")
            else:
                print(f"all {compared} compared cells match the reference table")
    return 1 if mismatches else 0


# ---------------------------------------------------------------------------
# m / m0


def _cmd_maximize(args, compute) -> int:
    records = []
    for n in args.n:
        for d in args.d:
            for k in args.k:
                r = compute(n, d, k, budget=args.budget)
                records.append(r)
    if args.format == "json":
        payload = []
        for r in records:
            item = {
                "n": r.n,
                "d": r.d,
                "k": r.k,
                "value": r.value,
                "witness_count": r.witness_count,
                "family": r.restricted_to,
            }
            if args.witnesses:
                item["witnesses"] = [
                    sorted(M.to_text() for M in w.complement) for w in r.witnesses
                ]
            payload.append(item)
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        out = csv.writer(sys.stdout)
        out.writerow(["n", "d", "k", "value", "witness_count", "family"])
        for r in records:
            out.writerow([r.n, r.d, r.k, r.value, r.witness_count, r.restricted_to])
    else:
        for r in records:
            print(
                f"max codim U^2 = {r.value} at n={r.n}, d={r.d}, k={r.k} "
                f"({r.witness_count} maximizer(s), family {r.restricted_to})"
            )
            if args.witnesses:
                for w in r.witnesses:
                    comp = ", ".join(M.to_text() for M in sorted(w.complement))
                    print(f"  complement {{{comp}}}")
    return 0


# ---------------------------------------------------------------------------
# enumerate


def _cmd_enumerate(args) -> int:
    records = []
    for n in args.n:
        for d in args.d:
            for k in args.k:
                if k > dim_component(n, d):
                    continue
                for U in enumerate_strongly_stable(n, d, k, budget=args.budget):
                    records.append(U)
    if args.format == "json":
        print(json.dumps([U.to_json() for U in records], indent=2))
    elif args.format == "csv":
        out = csv.writer(sys.stdout)
        out.writerow(["n", "d", "k", "complement"])
        for U in records:
            comp = " ".join(M.to_text() for M in U.sorted_complement(args.order))
            out.writerow([U.n, U.d, U.codim, comp])
    else:
        for U in records:
            comp = ", ".join(M.to_text() for M in U.sorted_complement(args.order))
            print(f"n={U.n} d={U.d} k={U.codim}: {{{comp}}}")
        print(f"{len(records)} subspaces")
    return 0


# ---------------------------------------------------------------------------
# square / hilbert (file input, monomial or rational)


def _load_subspace(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc}") from exc
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidInputError(f"{path}: invalid JSON: {exc}") from exc
        if "rows" in data:
            return rational_subspace_from_json(data)
        if "complement" in data:
            return subspace_from_json(data)
        raise InvalidInputError(
            f"{path}: JSON subspace needs a 'rows' or 'complement' field"
        )
    return subspace_from_text(text)


def _cmd_square(args) -> int:
    U = _load_subspace(args.file)
    if isinstance(U, RationalSubspace):
        sq = square_rational(U)
        record = {
            "kind": "rational",
            "n": sq.n,
            "d": sq.d,
            "dim": sq.dim,
            "codim": sq.codim,
        }
        missing = None
    else:
        sq = square(U, budget=args.budget)
        missing = [M.to_text() for M in sq.sorted_complement(args.order)]
        record = {
            "kind": "monomial",
            "n": sq.n,
            "d": sq.d,
            "dim": sq.dim,
            "codim": sq.codim,
            "complement": missing,
        }
    if args.format == "json":
        print(json.dumps(record, indent=2))
    elif args.format == "csv":
        out = csv.writer(sys.stdout)
        out.writerow(["n", "degree", "dim", "codim"])
        out.writerow([record["n"], record["d"], record["dim"], record["codim"]])
    else:
        print(
            f"U^2 in degree {record['d']}: dim = {record['dim']}, "
            f"codim = {record['codim']}"
        )
        if missing:
            print("missing monomials: " + ", ".join(missing))
    return 0


def _cmd_hilbert(args) -> int:
    U = _load_subspace(args.file)
    top = args.max_degree if args.max_degree is not None else 2 * U.d + 1
    if top < 0:
        raise InvalidInputError(f"--max-degree must be nonnegative, got {top}")
    if isinstance(U, RationalSubspace):
        hf: HilbertFunction = hilbert_function_rational(U, top)
    else:
        hf = ideal_hilbert_function(U, top)
    if args.format == "json":
        print(json.dumps({
            "values": list(hf.values),
            "generated_in_degree": hf.generated_in_degree,
        }, indent=2))
    elif args.format == "csv":
        out = csv.writer(sys.stdout)
        out.writerow(["degree", "value"])
        for i, v in enumerate(hf.values):
            out.writerow([i, v])
    else:
        print("h = (" + ", ".join(str(v) for v in hf.values) + ")")
    return 0


# ---------------------------------------------------------------------------
# gram


def _cmd_gram(args) -> int:
    rows = []
    for n in args.n:
        for d in args.d:
            for k in args.k:
                rows.append(
                    (
                        n,
                        d,
                        k,
                        nonsingular_face_bound(n, d, k),
                        singular_face_dim(n, d, k, budget=args.budget),
                        face_gap(n, d, k, budget=args.budget),
                    )
                )
    if args.format == "json":
        print(json.dumps([
            {
                "n": n,
                "d": d,
                "k": k,
                "nonsingular_bound": a,
                "singular_dim": b,
                "gap": g,
            }
            for n, d, k, a, b, g in rows
        ], indent=2))
    elif args.format == "csv":
        out = csv.writer(sys.stdout)
        out.writerow(["n", "d", "k", "nonsingular_bound", "singular_dim", "gap"])
        for row in rows:
            out.writerow(row)
    else:
        print("n    d    k    nonsingular<=   singular=   gap")
        for n, d, k, a, b, g in rows:
            print(f"{n:<5}{d:<5}{k:<5}{a:<16}{b:<12}{g}")
    return 0


# ---------------------------------------------------------------------------
# check / conjecture


def _print_results(results) -> int:
    failed = [r for r in results if not r.passed]
    for r in results:
        print(r.line())
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


def _cmd_check(args) -> int:
    names = []
    if args.suite:
        for item in args.suite:
            names.extend(s.strip() for s in item.split(",") if s.strip())
    else:
        names = list(SUITES)
    opts = SuiteOptions(seed=args.seed, trials=args.trials, budget=args.budget)
    return _print_results(run_suites(names, opts))


def _cmd_conjecture(args) -> int:
    results = conjecture_scan(
        args.n, args.d, args.k, trials=args.trials, seed=args.seed
    )
    if not results:
        raise InvalidInputError(
            "no cells to scan: need 1 <= k <= min(d-1, n-1, 2) and n >= 3"
        )
    return _print_results(results)


# ---------------------------------------------------------------------------


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "table":
            return _cmd_table(args)
        if args.command == "m":
            return _cmd_maximize(args, compute_m)
        if args.command == "m0":
            return _cmd_maximize(args, compute_m0_monomial)
        if args.command == "enumerate":
            return _cmd_enumerate(args)
        if args.command == "square":
            return _cmd_square(args)
        if args.command == "hilbert":
            return _cmd_hilbert(args)
        if args.command == "gram":
            return _cmd_gram(args)
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "conjecture":
            return _cmd_conjecture(args)
        raise InvalidInputError(f"unknown command {args.command!r}")
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
