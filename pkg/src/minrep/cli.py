"""Command line interface.

Subcommands: analyze (one label), scan (grid atlas), qseries (operator
expressions applied to builtin series), selftest (verification sweeps).

Exit codes: 0 success, 1 selftest failure, 2 validation error, 64 usage
error, 65 expression parse error.  The MINREP_TRUNCATION environment
variable overrides the default truncation order 40 for qseries.
"""

import argparse
import json
import os
import re
import sys
from fractions import Fraction
from multiprocessing import Pool

from . import analysis, qseries, selftest
from .errors import (ExpressionError, InhomogeneousOperator, MinrepError,
                     OddWeight, WeightMismatch)
from .sweeps import canonical_labels, models

EXIT_OK = 0
EXIT_SELFTEST = 1
EXIT_VALIDATION = 2
EXIT_USAGE = 64
EXIT_EXPRESSION = 65


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; we need 64
    def error(self, message):
        raise _UsageError(message)


def build_parser():
    parser = _Parser(prog="minrep", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="analyze a single Kac label")
    pa.add_argument("--p", type=int, required=True)
    pa.add_argument("--q", type=int, required=True)
    pa.add_argument("--m", type=int, required=True)
    pa.add_argument("--n", type=int, required=True)
    pa.add_argument("--format", choices=["json", "table"], default="json")

    ps = sub.add_parser("scan", help="analyze every canonical label on a grid")
    ps.add_argument("--p-max", type=int, required=True)
    ps.add_argument("--q-max", type=int, required=True)
    ps.add_argument("--filter", default=None,
                    help="verdict=STATUS, dim=N or level=N")
    ps.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")
    ps.add_argument("--jobs", type=int, default=1)

    pq = sub.add_parser("qseries", help="apply an operator expression to a builtin series")
    pq.add_argument("--expr", required=True,
                    help="sums of terms coeff*G4^a*G6^b*D^n (each term multiplies "
                         "by the form after differentiating n times)")
    pq.add_argument("--apply", required=True, dest="target",
                    help="builtin series: eta^w or G<even k>")
    pq.add_argument("--order", type=int, default=None)

    pt = sub.add_parser("selftest", help="run the verification sweeps")
    pt.add_argument("--suite", choices=["all", "monic", "lemmas", "ratios", "qseries"],
                    default="all")
    pt.add_argument("--grid", type=int, default=None)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.command == "analyze":
            return cmd_analyze(args)
        if args.command == "scan":
            return cmd_scan(args, parser)
        if args.command == "qseries":
            return cmd_qseries(args)
        return cmd_selftest(args)
    except _UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except MinrepError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_VALIDATION


def entry():
    sys.exit(main())


def cmd_analyze(args):
    record = analysis.analyze(args.p, args.q, args.m, args.n)
    if args.format == "json":
        print(analysis.record_to_json(record))
    else:
        print(analysis.record_to_table(record))
    return EXIT_OK


def _scan_cell(cell):
    p, q, m, n = cell
    return analysis.analyze(p, q, m, n)


def _parse_filter(spec, parser):
    if spec is None:
        return lambda record: True
    match = re.fullmatch(r"(verdict|dim|level)=([a-z0-9]+)", spec)
    if match is None:
        raise _UsageError("bad filter %r; expected verdict=..., dim=N or level=N" % spec)
    key, value = match.groups()
    if key == "verdict":
        if value not in ("congruence", "noncongruence", "unknown"):
            raise _UsageError("unknown verdict %r" % value)
        return lambda r: "verdict" in r and r["verdict"]["status"] == value
    number = int(value)
    if key == "dim":
        return lambda r: r.get("s") == number
    return lambda r: r.get("level") == number


def cmd_scan(args, parser):
    if args.p_max < 2 or args.q_max < 2:
        raise _UsageError("scan bounds must be >= 2")
    keep = _parse_filter(args.filter, parser)
    cells = [
        (model.p, model.q, label.m, label.n)
        for model in models(args.p_max, args.q_max)
        for label in canonical_labels(model.p, model.q)
    ]
    if args.jobs > 1:
        with Pool(args.jobs) as pool:
            records = pool.map(_scan_cell, cells, chunksize=64)
    else:
        records = [_scan_cell(c) for c in cells]
    records = [r for r in records if keep(r)]
    if args.format == "jsonl":
        for record in records:
            print(analysis.record_to_json(record))
    else:
        sys.stdout.write(analysis.records_to_csv(records))
    return EXIT_OK


_FACTOR_RE = re.compile(r"(?:(\d+(?:/\d+)?)|(G4|G6|D)(?:\^(\d+))?)$")


def parse_operator(expr, order):
    """Parse sums of coeff*G4^a*G6^b*D^n into a ModularOperator."""
    text = expr.replace(" ", "")
    if not text:
        raise ExpressionError("empty expression")
    terms = re.findall(r"[+-]?[^+-]+", text)
    if "".join(terms) != text:
        raise ExpressionError("cannot parse %r" % expr)
    total = None
    for term in terms:
        sign = Fraction(1)
        if term[0] in "+-":
            if term[0] == "-":
                sign = Fraction(-1)
            term = term[1:]
        if not term:
            raise ExpressionError("empty term in %r" % expr)
        coeff = sign
        g4 = g6 = ndeg = 0
        for factor in term.split("*"):
            match = _FACTOR_RE.fullmatch(factor)
            if match is None:
                raise ExpressionError("bad factor %r" % factor)
            number, name, power = match.groups()
            if number is not None:
                try:
                    coeff *= Fraction(number)
                except ZeroDivisionError:
                    raise ExpressionError("zero denominator in %r" % factor) from None
            else:
                power = int(power) if power else 1
                if name == "G4":
                    g4 += power
                elif name == "G6":
                    g6 += power
                else:
                    ndeg += power
        form = qseries.ModularForm(
            Fraction(0), qseries.QSeries(0, (coeff,) + (Fraction(0),) * order)
        )
        if g4:
            form = form * _form_power(qseries.eisenstein(4, order), g4)
        if g6:
            form = form * _form_power(qseries.eisenstein(6, order), g6)
        op = qseries.ModularOperator((None,) * ndeg + (form,))
        total = op if total is None else total + op
    return total


def _form_power(form, exponent):
    out = form
    for _ in range(exponent - 1):
        out = out * form
    return out


_BUILTIN_RE = re.compile(r"eta(?:\^(\d+))?$|G(\d+)$")


def parse_builtin_series(name, order):
    match = _BUILTIN_RE.fullmatch(name.replace(" ", ""))
    if match is None:
        raise ExpressionError("unknown builtin series %r" % name)
    eta_pow, g_weight = match.groups()
    if g_weight is not None:
        k = int(g_weight)
        if k % 2 != 0 or k < 2:
            raise ExpressionError("Eisenstein weight must be even and >= 2")
        return qseries.eisenstein(k, order)
    w = int(eta_pow) if eta_pow else 1
    if w < 1:
        raise ExpressionError("eta power must be >= 1")
    return qseries.eta_power(w, order)


def cmd_qseries(args):
    order = args.order
    if order is None:
        env = os.environ.get("MINREP_TRUNCATION")
        try:
            order = int(env) if env else qseries.DEFAULT_ORDER
        except ValueError:
            raise _UsageError("MINREP_TRUNCATION must be an integer, got %r" % env) from None
    if order < 1:
        raise _UsageError("order must be >= 1")
    try:
        target = parse_builtin_series(args.target, order)
        operator = parse_operator(args.expr, order)
        result = qseries.apply_operator(operator, [target.series], target.weight)[0]
    except (ExpressionError, InhomogeneousOperator, OddWeight, WeightMismatch) as exc:
        print("expression error: %s" % exc, file=sys.stderr)
        return EXIT_EXPRESSION
    print(result.serialize())
    return EXIT_OK


def cmd_selftest(args):
    results = selftest.run_selftests(args.suite, args.grid)
    failed = 0
    for result in results:
        status = "ok" if result.ok else "FAIL"
        print("%s: %d checks, %d failures [%s]"
              % (result.name, result.checked, len(result.failures), status))
        for message in result.failures[:10]:
            print("  " + message)
        failed += len(result.failures)
    return EXIT_SELFTEST if failed else EXIT_OK


if __name__ == "__main__":
    entry()
