"""Command-line front end: ``oddschur <command> ...``.

Exit codes: 0 success, 1 verification failure or method disagreement, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .diagrams import format_partition, parse_partition
from .lr import METHODS as LR_METHODS
from .lr import LRDisagreement, LRQuery, lr_coefficient, lr_table
from .oddsym import format_symfunction, kostka_matrix, symfunction_to_json
from .opol import format_polynomial
from .plactic import STRATEGIES, format_word, knuth_normalize, parse_word
from .polytopes import lattice_points, lr_hive, lr_triangle
from .schur import METHODS as SCHUR_METHODS
from .schur import pieri_horizontal, pieri_product, pieri_vertical, schur
from .tableaux import format_tableau
from .verification import SUITES, run_suite


class UsageError(Exception):
    pass


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err)) from None


def _word_arg(text: str):
    try:
        return parse_word(text)
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err)) from None


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _positive_int(text: str) -> int:
    value = _nonneg_int(text)
    if value == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(prog="oddschur", description="Odd Schur functions and odd LR coefficients.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schur", parents=[common], help="odd Schur polynomial in OPol_n")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--n", type=_positive_int, default=None, help="number of variables (default |lambda|)")
    p.add_argument("--method", choices=SCHUR_METHODS + ("all",), default="all")

    p = sub.add_parser("lr", parents=[common], help="odd Littlewood-Richardson coefficients")
    p.add_argument("--mu", type=_partition_arg, required=True)
    p.add_argument("--nu", type=_partition_arg, required=True)
    p.add_argument("--lambda", dest="lam", type=_partition_arg, default=None)
    p.add_argument("--method", choices=LR_METHODS + ("all",), default="direct")

    p = sub.add_parser("kostka", parents=[common], help="odd Kostka matrix")
    p.add_argument("--k", type=_nonneg_int, required=True)

    p = sub.add_parser("hive", parents=[common], help="LR triangle / hive lattice points")
    p.add_argument("--mu", type=_partition_arg, required=True)
    p.add_argument("--nu", type=_partition_arg, required=True)
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--emit", choices=("count", "signed", "points"), default="count")
    p.add_argument("--polytope", choices=("hive", "triangle"), default="hive")

    p = sub.add_parser("pieri", parents=[common], help="check a Pieri rule")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--kind", choices=("vertical", "horizontal"), default="vertical")
    p.add_argument("--method", choices=SCHUR_METHODS, default="kostka")

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--max-degree", type=_nonneg_int, default=5)
    p.add_argument("--deep", action="store_true", help="also run Schur coincidence in degree 6")
    p.add_argument("--jobs", type=_positive_int, default=1)
    p.add_argument("--verbose", action="store_true", help="list passing cases too")

    p = sub.add_parser("plactic", parents=[common], help="normalize a word in the odd plactic ring")
    p.add_argument("--word", type=_word_arg, required=True)
    p.add_argument("--strategy", choices=STRATEGIES, default="insertion")
    return parser


def _emit(args, payload, text: str, out) -> None:
    if args.format == "json":
        out.write(json.dumps(payload) + "\n")
    else:
        out.write(text + "\n")


def cmd_schur(args, out) -> int:
    lam = args.lam
    n = args.n if args.n is not None else max(sum(lam), 1)
    methods = SCHUR_METHODS if args.method == "all" else (args.method,)
    if "symmetrized" in methods and len(lam) > n:
        if args.method == "symmetrized":
            raise UsageError(f"{format_partition(lam)} has more than n={n} parts")
        methods = tuple(m for m in methods if m != "symmetrized")
    polys = {m: schur(lam, n, m) for m in methods}
    agree = len(set(map(format_polynomial, polys.values()))) == 1
    payload = {"lambda": list(lam), "n": n, "polynomials": {m: format_polynomial(f) for m, f in polys.items()}}
    lines = [f"{m}: {format_polynomial(f)}" for m, f in polys.items()]
    if args.method == "all":
        payload["verdict"] = "AGREE" if agree else "DISAGREE"
        lines.append(payload["verdict"])
    _emit(args, payload, "\n".join(lines), out)
    return 0 if agree else 1


def cmd_lr(args, out) -> int:
    mu, nu = args.mu, args.nu
    if args.lam is not None:
        q = LRQuery(mu, nu, args.lam)
        if args.method == "all":
            values = {m: lr_coefficient(q, method=m) for m in LR_METHODS if m != "even"}
            agree = len(set(values.values())) == 1
            coeff = values["direct"]
            payload = {"mu": list(mu), "nu": list(nu), "lambda": list(args.lam), "coeff": coeff,
                       "method": "all", "methods": values, "agree": agree}
            text = f"c = {coeff}\n" + "\n".join(f"  {m}: {v}" for m, v in values.items())
            text += "\nall methods agree" if agree else "\nMETHODS DISAGREE"
            _emit(args, payload, text, out)
            return 0 if agree else 1
        coeff = lr_coefficient(q, method=args.method)
        payload = {"mu": list(mu), "nu": list(nu), "lambda": list(args.lam), "coeff": coeff, "method": args.method}
        _emit(args, payload, f"c = {coeff}", out)
        return 0
    try:
        table = lr_table(mu, nu, args.method)
    except LRDisagreement as err:
        sys.stderr.write(str(err) + "\n")
        return 1
    payload = [{"mu": list(mu), "nu": list(nu), "lambda": list(lam), "coeff": c, "method": args.method}
               for lam, c in table.items()]
    text = "\n".join(f"{format_partition(lam)}: {c}" for lam, c in table.items()) or "(zero)"
    _emit(args, payload, text, out)
    return 0


def cmd_kostka(args, out) -> int:
    km = kostka_matrix(args.k)
    payload = {"k": args.k, "partitions": [list(p) for p in km.partitions],
               "entries": [list(r) for r in km.entries],
               "layout": "entries[i][j] = K(partitions[j], partitions[i])"}
    labels = [format_partition(p) for p in km.partitions]
    width = max([len(s) for s in labels] + [2])
    lines = ["rows: content mu; columns: shape lambda"]
    lines.append(" " * width + " " + " ".join(s.rjust(width) for s in labels))
    for label, row in zip(labels, km.entries):
        lines.append(label.rjust(width) + " " + " ".join(str(v).rjust(width) for v in row))
    _emit(args, payload, "\n".join(lines), out)
    return 0


def cmd_hive(args, out) -> int:
    q = LRQuery(args.mu, args.nu, args.lam)
    points = lattice_points(q, args.polytope)
    base = {"mu": list(q.mu), "nu": list(q.nu), "lambda": list(q.lam), "polytope": args.polytope}
    if args.emit == "count":
        payload = dict(base, count=len(points))
        text = str(len(points))
    elif args.emit == "signed":
        coeff = lr_hive(q) if args.polytope == "hive" else lr_triangle(q)
        payload = dict(base, coeff=coeff)
        text = str(coeff)
    else:
        rows = [[list(r) for r in p.rows] for p in points]
        payload = dict(base, points=rows)
        text = "\n".join(json.dumps(r) for r in rows)
    _emit(args, payload, text, out)
    return 0


def cmd_pieri(args, out) -> int:
    lam, k = args.lam, args.k
    expected = pieri_vertical(lam, k) if args.kind == "vertical" else pieri_horizontal(lam, k)
    got = pieri_product(lam, k, args.kind, args.method)
    ok = expected == got
    payload = {"lambda": list(lam), "k": k, "kind": args.kind, "method": args.method,
               "rule": symfunction_to_json(expected), "product": symfunction_to_json(got), "holds": ok}
    right = f"s[{','.join(['1'] * k)}]" if args.kind == "vertical" else f"s[{k}]"
    text = (f"s{format_partition(lam)} * {right} = {format_symfunction(got)}\n"
            f"rule: {format_symfunction(expected)}\n" + ("holds" if ok else "FAILS"))
    _emit(args, payload, text, out)
    return 0 if ok else 1


def cmd_verify(args, out) -> int:
    report = run_suite(args.suite, args.max_degree, args.deep, args.jobs)
    if args.format == "json":
        out.write(report.to_json() + "\n")
    else:
        out.write(report.format_text(args.verbose) + "\n")
    return 0 if report.ok else 1


def cmd_plactic(args, out) -> int:
    sign, t = knuth_normalize(args.word, args.strategy)
    payload = {"word": format_word(args.word), "sign": sign, "tableau": format_tableau(t),
               "shape": list(t.shape)}
    text = f"{'+' if sign > 0 else '-'}1 * {format_tableau(t)}"
    _emit(args, payload, text, out)
    return 0


COMMANDS = {
    "schur": cmd_schur,
    "lr": cmd_lr,
    "kostka": cmd_kostka,
    "hive": cmd_hive,
    "pieri": cmd_pieri,
    "verify": cmd_verify,
    "plactic": cmd_plactic,
}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, ValueError) as err:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"oddschur: error: {err}\n")
        return 2


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
